#include "gtw/stallings.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace gtw {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

CoreGraph CoreGraph::fold(const RawGraph& raw) {
  UnionFind uf(raw.vertex_count);
  // adj[root]: signed label -> neighbor (resolved through uf on read).
  // Identifications are driven by a worklist; clashing targets get united
  // with the smaller adjacency map merged into the larger one.
  std::vector<std::unordered_map<int, int>> slots(raw.vertex_count);
  std::queue<std::pair<int, int>> merges;

  auto attach = [&](int v, int label, int w) {
    auto [it, inserted] = slots[v].try_emplace(label, w);
    if (!inserted && uf.find(it->second) != uf.find(w)) merges.emplace(it->second, w);
  };
  for (const auto& e : raw.edges) {
    attach(uf.find(e.from), e.label, e.to);
    attach(uf.find(e.to), -e.label, e.from);
  }
  while (!merges.empty()) {
    auto [a, b] = merges.front();
    merges.pop();
    a = uf.find(a);
    b = uf.find(b);
    if (a == b) continue;
    if (slots[a].size() < slots[b].size()) std::swap(a, b);
    uf.parent[b] = a;  // keep the larger map's root
    for (auto [label, t] : slots[b]) attach(a, label, t);
    slots[b].clear();
  }

  // Deduplicated folded edge set over class representatives.
  std::set<LabeledEdge> folded;
  for (int v = 0; v < raw.vertex_count; ++v) {
    if (uf.find(v) != v) continue;
    for (auto [label, t] : slots[v])
      if (label > 0) folded.insert({v, label, uf.find(t)});
  }
  int base = uf.find(raw.basepoint);

  // Basepoint component.
  std::unordered_map<int, std::vector<std::pair<int, int>>> adj;  // v -> (other, label signed)
  for (const auto& e : folded) {
    adj[e.from].push_back({e.to, e.label});
    adj[e.to].push_back({e.from, -e.label});
  }
  std::unordered_set<int> comp = {base};
  std::queue<int> q;
  q.push(base);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (auto [w, l] : adj[v])
      if (comp.insert(w).second) q.push(w);
  }

  // Core-prune: drop non-basepoint vertices of total degree <= 1.
  std::unordered_map<int, int> degree;
  std::set<LabeledEdge> kept;
  for (const auto& e : folded)
    if (comp.count(e.from) && comp.count(e.to)) {
      kept.insert(e);
      degree[e.from]++;
      degree[e.to]++;
    }
  bool pruned = true;
  while (pruned) {
    pruned = false;
    for (auto it = kept.begin(); it != kept.end();) {
      bool drop = false;
      if (it->from != base && degree[it->from] <= 1) drop = true;
      if (it->to != base && degree[it->to] <= 1) drop = true;
      if (drop) {
        degree[it->from]--;
        degree[it->to]--;
        it = kept.erase(it);
        pruned = true;
      } else {
        ++it;
      }
    }
  }

  // Renumber, basepoint first.
  std::unordered_map<int, int> id;
  id[base] = 0;
  for (const auto& e : kept) {
    id.try_emplace(e.from, static_cast<int>(id.size()));
    id.try_emplace(e.to, static_cast<int>(id.size()));
  }

  CoreGraph g(raw.alphabet);
  int n = static_cast<int>(id.size());
  g.fwd_.assign(n, std::vector<int>(raw.alphabet.rank, -1));
  g.bwd_.assign(n, std::vector<int>(raw.alphabet.rank, -1));
  for (const auto& e : kept) {
    g.fwd_[id[e.from]][e.label - 1] = id[e.to];
    g.bwd_[id[e.to]][e.label - 1] = id[e.from];
  }
  g.edge_count_ = static_cast<int>(kept.size());
  return g;
}

CoreGraph CoreGraph::from_generators(Alphabet a, const std::vector<Word>& gens) {
  RawGraph raw{a, 1, 0, {}};
  for (const auto& w : gens) {
    if (w.alphabet().rank != a.rank) throw std::invalid_argument("alphabet mismatch");
    int prev = 0;
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size(); ++i) {
      int next = (i + 1 == ls.size()) ? 0 : raw.vertex_count++;
      Letter x = ls[i];
      if (x > 0)
        raw.edges.push_back({prev, x, next});
      else
        raw.edges.push_back({next, -x, prev});
      prev = next;
    }
  }
  return fold(raw);
}

CoreGraph CoreGraph::whole_group(Alphabet a) {
  RawGraph raw{a, 1, 0, {}};
  for (int l = 1; l <= a.rank; ++l) raw.edges.push_back({0, l, 0});
  return fold(raw);
}

int CoreGraph::step(int v, Letter x) const {
  return x > 0 ? fwd_[v][x - 1] : bwd_[v][-x - 1];
}

bool CoreGraph::contains(const Word& w) const {
  if (w.alphabet().rank != alphabet_.rank) throw std::invalid_argument("alphabet mismatch");
  int v = 0;
  for (Letter x : w.letters()) {
    v = step(v, x);
    if (v < 0) return false;
  }
  return v == 0;
}

std::optional<int> CoreGraph::index() const {
  for (int v = 0; v < vertex_count(); ++v)
    for (int l = 1; l <= alphabet_.rank; ++l)
      if (fwd_[v][l - 1] < 0 || bwd_[v][l - 1] < 0) return std::nullopt;
  return vertex_count();
}

std::string CoreGraph::canonical_form() const {
  int n = vertex_count();
  std::vector<int> order(n, -1);
  std::vector<int> bfs = {0};
  order[0] = 0;
  int assigned = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    int v = bfs[i];
    for (int k = 0; k < 2 * alphabet_.rank; ++k) {
      int w = step(v, letter_from_key(k));
      if (w >= 0 && order[w] < 0) {
        order[w] = assigned++;
        bfs.push_back(w);
      }
    }
  }
  std::string s = std::to_string(n) + "|";
  std::vector<int> inv(n);
  for (int v = 0; v < n; ++v) inv[order[v]] = v;
  for (int i = 0; i < n; ++i) {
    int v = inv[i];
    for (int l = 1; l <= alphabet_.rank; ++l) {
      int w = fwd_[v][l - 1];
      s += (w < 0 ? std::string("-") : std::to_string(order[w])) + ",";
    }
    s += ";";
  }
  return s;
}

std::vector<LabeledEdge> CoreGraph::edges() const {
  std::vector<LabeledEdge> out;
  for (int v = 0; v < vertex_count(); ++v)
    for (int l = 1; l <= alphabet_.rank; ++l)
      if (fwd_[v][l - 1] >= 0) out.push_back({v, l, fwd_[v][l - 1]});
  return out;
}

std::vector<Word> CoreGraph::generators() const {
  int n = vertex_count();
  std::vector<std::vector<Letter>> path(n);
  std::vector<bool> seen(n, false);
  std::set<LabeledEdge> tree;
  seen[0] = true;
  std::vector<int> bfs = {0};
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    int v = bfs[i];
    for (int k = 0; k < 2 * alphabet_.rank; ++k) {
      Letter x = letter_from_key(k);
      int w = step(v, x);
      if (w >= 0 && !seen[w]) {
        seen[w] = true;
        path[w] = path[v];
        path[w].push_back(x);
        tree.insert(x > 0 ? LabeledEdge{v, x, w} : LabeledEdge{w, -x, v});
        bfs.push_back(w);
      }
    }
  }
  std::vector<Word> gens;
  for (const auto& e : edges()) {
    if (tree.count(e)) continue;
    std::vector<Letter> raw = path[e.from];
    raw.push_back(e.label);
    for (auto it = path[e.to].rbegin(); it != path[e.to].rend(); ++it) raw.push_back(-*it);
    gens.push_back(Word(alphabet_, raw));
  }
  return gens;
}

int intersection_rank(const CoreGraph& h, const CoreGraph& k) {
  if (h.alphabet().rank != k.alphabet().rank) throw std::invalid_argument("alphabet mismatch");
  int nk = k.vertex_count();
  // BFS over the pullback component of (0,0); rank = E - V + 1 is invariant
  // under core-pruning, so no pruning is needed here.
  std::unordered_map<long long, int> id;
  std::vector<std::pair<int, int>> states;
  auto get = [&](int a, int b) {
    long long key = static_cast<long long>(a) * nk + b;
    auto [it, inserted] = id.try_emplace(key, static_cast<int>(states.size()));
    if (inserted) states.push_back({a, b});
    return inserted;
  };
  get(0, 0);
  int edge_count = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto [a, b] = states[i];
    for (int l = 1; l <= h.alphabet().rank; ++l) {
      int af = h.step(a, l), bf = k.step(b, l);
      if (af >= 0 && bf >= 0) {
        ++edge_count;
        get(af, bf);
      }
      int ab = h.step(a, -l), bb = k.step(b, -l);
      if (ab >= 0 && bb >= 0) get(ab, bb);
    }
  }
  return edge_count - static_cast<int>(states.size()) + 1;
}

CoreGraph intersect(const CoreGraph& h, const CoreGraph& k) {
  if (h.alphabet().rank != k.alphabet().rank) throw std::invalid_argument("alphabet mismatch");
  int nk = k.vertex_count();
  std::unordered_map<long long, int> id;
  std::vector<std::pair<int, int>> states;
  auto get = [&](int a, int b) {
    long long key = static_cast<long long>(a) * nk + b;
    auto [it, inserted] = id.try_emplace(key, static_cast<int>(states.size()));
    if (inserted) states.push_back({a, b});
    return it->second;
  };
  get(0, 0);
  RawGraph raw{h.alphabet(), 0, 0, {}};
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto [a, b] = states[i];
    for (int l = 1; l <= h.alphabet().rank; ++l) {
      int af = h.step(a, l), bf = k.step(b, l);
      if (af >= 0 && bf >= 0) raw.edges.push_back({static_cast<int>(i), l, get(af, bf)});
      int ab = h.step(a, -l), bb = k.step(b, -l);
      if (ab >= 0 && bb >= 0) get(ab, bb);
    }
  }
  raw.vertex_count = static_cast<int>(states.size());
  return CoreGraph::fold(raw);
}

CoreGraph join(const CoreGraph& h, const CoreGraph& k) {
  if (h.alphabet().rank != k.alphabet().rank) throw std::invalid_argument("alphabet mismatch");
  std::vector<Word> gens = h.generators();
  for (const auto& w : k.generators()) gens.push_back(w);
  return CoreGraph::from_generators(h.alphabet(), gens);
}

bool hanna_neumann_holds(const CoreGraph& h, const CoreGraph& k) {
  int lhs = std::max(intersection_rank(h, k) - 1, 0);
  int rhs = std::max(h.rank() - 1, 0) * std::max(k.rank() - 1, 0);
  return lhs <= rhs;
}

ProbeReport hanna_neumann_check(const CoreGraph& h, const CoreGraph& k) {
  ProbeReport report;
  report.candidates_tested = 1;
  if (!hanna_neumann_holds(h, k)) {
    report.passed = false;
    ProbeWitness w;
    for (const auto& g : k.generators()) w.subgroup_generators.push_back(g.str());
    w.subgroup_rank = k.rank();
    w.compared_rank = intersection_rank(h, k);
    report.witnesses.push_back(std::move(w));
  }
  return report;
}

namespace {

// All non-identity candidate subgroups generated by at most g of the given
// words, deduplicated by canonical form.
std::vector<CoreGraph> candidate_subgroups(Alphabet a, int max_gens, int max_len) {
  std::vector<Word> words = enumerate_words(a, max_len);
  words.erase(words.begin());  // drop identity
  std::vector<CoreGraph> out;
  std::unordered_set<std::string> seen;
  std::vector<int> pick;
  auto emit = [&](const std::vector<int>& idx) {
    std::vector<Word> gens;
    for (int i : idx) gens.push_back(words[i]);
    CoreGraph g = CoreGraph::from_generators(a, gens);
    if (g.rank() == 0) return;
    if (seen.insert(g.canonical_form()).second) out.push_back(std::move(g));
  };
  // combinations with repetition, sizes 1..max_gens
  std::function<void(int, int)> rec = [&](int start, int remaining) {
    if (!pick.empty()) emit(pick);
    if (remaining == 0) return;
    for (int i = start; i < static_cast<int>(words.size()); ++i) {
      pick.push_back(i);
      rec(i, remaining - 1);
      pick.pop_back();
    }
  };
  rec(0, max_gens);
  return out;
}

}  // namespace

ProbeReport probe_inert(const CoreGraph& h, ProbeBounds bounds) {
  if (bounds.max_generators < 1 || bounds.max_word_length < 1)
    throw std::invalid_argument("probe bounds must be >= 1");
  ProbeReport report;
  report.max_generator_count = bounds.max_generators;
  report.max_word_length = bounds.max_word_length;
  for (const auto& k : candidate_subgroups(h.alphabet(), bounds.max_generators,
                                           bounds.max_word_length)) {
    ++report.candidates_tested;
    int ri = intersection_rank(h, k);
    if (ri > k.rank()) {
      report.passed = false;
      ProbeWitness w;
      for (const auto& g : k.generators()) w.subgroup_generators.push_back(g.str());
      w.subgroup_rank = k.rank();
      w.compared_rank = ri;
      report.witnesses.push_back(std::move(w));
    }
  }
  std::sort(report.witnesses.begin(), report.witnesses.end(),
            [](const ProbeWitness& a, const ProbeWitness& b) {
              return a.subgroup_generators < b.subgroup_generators;
            });
  return report;
}

ProbeReport probe_compressed(const CoreGraph& h, ProbeBounds bounds) {
  if (bounds.max_generators < 1 || bounds.max_word_length < 1)
    throw std::invalid_argument("probe bounds must be >= 1");
  ProbeReport report;
  report.max_generator_count = bounds.max_generators;
  report.max_word_length = bounds.max_word_length;
  std::vector<Word> words = enumerate_words(h.alphabet(), bounds.max_word_length);
  words.erase(words.begin());

  std::unordered_set<std::string> seen = {h.canonical_form()};
  std::vector<CoreGraph> frontier = {h};
  std::vector<Word> base = h.generators();
  for (int round = 0; round < bounds.max_generators; ++round) {
    std::vector<CoreGraph> next;
    for (const auto& g : frontier) {
      for (const auto& w : words) {
        if (g.contains(w)) continue;
        std::vector<Word> gens = g.generators();
        gens.push_back(w);
        CoreGraph k = CoreGraph::from_generators(h.alphabet(), gens);
        if (!seen.insert(k.canonical_form()).second) continue;
        ++report.candidates_tested;
        if (h.rank() > k.rank()) {
          report.passed = false;
          ProbeWitness pw;
          for (const auto& kg : k.generators()) pw.subgroup_generators.push_back(kg.str());
          pw.subgroup_rank = k.rank();
          pw.compared_rank = h.rank();
          report.witnesses.push_back(std::move(pw));
        }
        next.push_back(std::move(k));
      }
    }
    frontier = std::move(next);
  }
  std::sort(report.witnesses.begin(), report.witnesses.end(),
            [](const ProbeWitness& a, const ProbeWitness& b) {
              return a.subgroup_generators < b.subgroup_generators;
            });
  return report;
}

}  // namespace gtw
