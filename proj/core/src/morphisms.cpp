#include "gtw/morphisms.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace gtw {

FreeHom::FreeHom(Alphabet domain, std::vector<Word> images)
    : domain_(domain), images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("no generator images");
  if (static_cast<int>(images_.size()) != domain_.rank)
    throw std::invalid_argument("one image per domain generator required");
  for (const auto& w : images_)
    if (w.alphabet().rank != images_.front().alphabet().rank)
      throw std::invalid_argument("images over different alphabets");
}

FreeHom FreeHom::identity(Alphabet a) {
  std::vector<Word> images;
  for (int i = 1; i <= a.rank; ++i) images.push_back(Word(a, {i}));
  return FreeHom(a, std::move(images));
}

bool FreeHom::is_identity() const {
  if (domain_.rank != target().rank) return false;
  for (int i = 1; i <= domain_.rank; ++i)
    if (images_[i - 1].letters() != std::vector<Letter>{i}) return false;
  return true;
}

Word FreeHom::apply(const Word& w) const {
  if (w.alphabet().rank != domain_.rank) throw std::invalid_argument("alphabet mismatch");
  std::vector<Letter> out;
  auto push = [&](Letter x) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  };
  for (Letter x : w.letters()) {
    const Word& img = images_[std::abs(x) - 1];
    if (x > 0)
      for (Letter y : img.letters()) push(y);
    else
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) push(-*it);
  }
  return Word(target(), out);
}

std::string FreeHom::key() const {
  std::string s;
  for (const auto& w : images_) s += w.str() + "|";
  return s;
}

FreeHom compose(const FreeHom& f, const FreeHom& g) {
  if (g.target().rank != f.domain().rank) throw std::invalid_argument("alphabet mismatch");
  std::vector<Word> images;
  for (const auto& w : g.images()) images.push_back(f.apply(w));
  return FreeHom(g.domain(), std::move(images));
}

CoreGraph image_subgroup(const FreeEndo& phi) {
  return CoreGraph::from_generators(phi.target(), phi.images());
}

MinimalImageResult minimal_image_search(const std::vector<FreeEndo>& family, int depth) {
  if (family.empty()) throw std::invalid_argument("empty family");
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  Alphabet a = family.front().domain();
  for (const auto& e : family)
    if (e.domain().rank != a.rank || e.target().rank != a.rank)
      throw std::invalid_argument("family must share one alphabet");

  struct Node {
    FreeEndo endo;
    std::vector<int> comp;
  };
  std::vector<Node> level = {{FreeEndo::identity(a), {}}};
  std::unordered_set<std::string> seen = {level.front().endo.key()};
  MinimalImageResult best{level.front().endo, image_subgroup(level.front().endo).rank(), {}};

  // BFS order realizes the shortest-then-lex tie-break.
  for (int d = 1; d <= depth; ++d) {
    std::vector<Node> next;
    for (const auto& node : level) {
      for (int i = 0; i < static_cast<int>(family.size()); ++i) {
        Node n{compose(node.endo, family[i]), node.comp};
        n.comp.push_back(i);
        if (!seen.insert(n.endo.key()).second) continue;
        int r = image_subgroup(n.endo).rank();
        if (r < best.image_rank) best = {n.endo, r, n.comp};
        next.push_back(std::move(n));
      }
    }
    level = std::move(next);
  }
  return best;
}

std::vector<Word> fixed_words(const std::vector<FreeEndo>& family, int max_length) {
  if (family.empty()) throw std::invalid_argument("empty family");
  Alphabet a = family.front().domain();
  std::vector<Word> out;
  for (const auto& w : enumerate_words(a, max_length)) {
    bool fixed = true;
    for (const auto& e : family)
      if (e.apply(w) != w) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(w);
  }
  return out;
}

namespace {

// Bounded-discrepancy state graph: state = (reduced φ_i(prefix)^-1 · prefix
// for each i, last letter). All-ε states are merged into a single basepoint,
// so closed basepoint paths are exactly products of discovered fixed words.
struct StateGraph {
  std::vector<LabeledEdge> edges;  // between merged vertex ids
  std::vector<int> dist;           // undirected distance from basepoint
  int vertex_count = 0;
};

StateGraph build_state_graph(const std::vector<FreeEndo>& family, int state_bound,
                             std::size_t state_cap = 200000) {
  Alphabet a = family.front().domain();
  struct State {
    std::vector<std::vector<Letter>> disc;
    Letter last;
  };
  auto serialize = [](const State& s) {
    std::string k = std::to_string(s.last) + "#";
    for (const auto& d : s.disc) {
      for (Letter x : d) k += std::to_string(x) + ",";
      k += ";";
    }
    return k;
  };
  auto is_base = [](const State& s) {
    for (const auto& d : s.disc)
      if (!d.empty()) return false;
    return true;
  };

  std::unordered_map<std::string, int> raw_id;   // state -> raw vertex
  std::vector<State> states;
  std::vector<int> merged;                       // raw vertex -> merged vertex
  int merged_count = 1;                          // 0 is the basepoint
  auto intern = [&](State s) -> int {
    std::string k = serialize(s);
    auto it = raw_id.find(k);
    if (it != raw_id.end()) return it->second;
    int id = static_cast<int>(states.size());
    raw_id.emplace(std::move(k), id);
    merged.push_back(is_base(s) ? 0 : merged_count++);
    states.push_back(std::move(s));
    return id;
  };

  State start;
  start.disc.assign(family.size(), {});
  start.last = 0;
  intern(start);

  std::set<std::pair<long long, int>> edge_set;  // ((from,to) packed, label)
  for (std::size_t i = 0; i < states.size() && states.size() < state_cap; ++i) {
    State cur = states[i];
    for (int k = 0; k < 2 * a.rank; ++k) {
      Letter x = letter_from_key(k);
      if (cur.last != 0 && x == -cur.last) continue;
      State nxt;
      nxt.last = x;
      nxt.disc.reserve(family.size());
      bool ok = true;
      for (std::size_t j = 0; j < family.size(); ++j) {
        // s' = φ(x)^-1 · s · x, reduced.
        const Word& img = family[j].images()[std::abs(x) - 1];
        std::vector<Letter> s;
        auto push = [&](Letter y) {
          if (!s.empty() && s.back() == -y)
            s.pop_back();
          else
            s.push_back(y);
        };
        if (x > 0)
          for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) push(-*it);
        else
          for (Letter y : img.letters()) push(y);
        for (Letter y : cur.disc[j]) push(y);
        push(x);
        if (static_cast<int>(s.size()) > state_bound) {
          ok = false;
          break;
        }
        nxt.disc.push_back(std::move(s));
      }
      if (!ok) continue;
      int from = merged[i], to = merged[intern(std::move(nxt))];
      long long packed = static_cast<long long>(from) * 1000003 + to;
      if (x > 0)
        edge_set.insert({packed, x});
      else
        edge_set.insert({static_cast<long long>(to) * 1000003 + from, -x});
    }
  }

  StateGraph g;
  g.vertex_count = merged_count;
  for (auto [packed, l] : edge_set)
    g.edges.push_back({static_cast<int>(packed / 1000003), l, static_cast<int>(packed % 1000003)});

  g.dist.assign(merged_count, -1);
  std::vector<std::vector<int>> adj(merged_count);
  for (const auto& e : g.edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::queue<int> q;
  g.dist[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (g.dist[w] < 0) {
        g.dist[w] = g.dist[v] + 1;
        q.push(w);
      }
  }
  return g;
}

CoreGraph fold_state_graph(Alphabet a, const StateGraph& g, int max_length) {
  // A closed path of length <= L only visits vertices within L/2 of the
  // basepoint, and every such vertex lies on such a path.
  RawGraph raw{a, g.vertex_count, 0, {}};
  for (const auto& e : g.edges) {
    if (g.dist[e.from] < 0 || 2 * g.dist[e.from] > max_length) continue;
    if (g.dist[e.to] < 0 || 2 * g.dist[e.to] > max_length) continue;
    raw.edges.push_back(e);
  }
  return CoreGraph::fold(raw);
}

int default_state_bound(const std::vector<FreeEndo>& family) {
  int m = 1;
  for (const auto& e : family)
    for (const auto& w : e.images()) m = std::max(m, w.length());
  return 2 * m + 8;
}

}  // namespace

std::vector<Word> fixed_words_bounded(const std::vector<FreeEndo>& family, int max_length,
                                      int state_bound) {
  if (family.empty()) throw std::invalid_argument("empty family");
  if (state_bound <= 0) state_bound = default_state_bound(family);
  // Depth-limited DFS over the state graph, collecting words that return to
  // the basepoint. Intended for small max_length only.
  Alphabet a = family.front().domain();
  std::vector<Word> out;
  for (const auto& w : enumerate_words(a, max_length)) {
    bool fixed = true;
    for (const auto& e : family)
      if (e.apply(w) != w) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(w);
  }
  return out;
}

FixApproximation fix_subgroup_approx(const std::vector<FreeEndo>& family, int max_length) {
  if (family.empty()) throw std::invalid_argument("empty family");
  if (max_length < 2) throw std::invalid_argument("length bound must be >= 2");
  Alphabet a = family.front().domain();
  StateGraph sg = build_state_graph(family, default_state_bound(family));
  CoreGraph graph = fold_state_graph(a, sg, max_length);
  int r1 = fold_state_graph(a, sg, max_length - 2).rank();
  int r2 = fold_state_graph(a, sg, max_length - 1).rank();
  bool stabilized = (r1 == r2) && (r2 == graph.rank());

  // Every generator of the approximation must itself be fixed.
  for (const auto& g : graph.generators())
    for (const auto& e : family)
      if (e.apply(g) != g)
        throw std::logic_error("fix approximation produced a non-fixed generator");
  return {std::move(graph), max_length, stabilized};
}

std::vector<Word> equalizer_words(const std::vector<FreeHom>& maps, int max_length) {
  if (maps.empty()) throw std::invalid_argument("empty family");
  Alphabet a = maps.front().domain();
  for (const auto& m : maps)
    if (m.domain().rank != a.rank) throw std::invalid_argument("maps must share a domain");
  std::vector<Word> out;
  for (const auto& w : enumerate_words(a, max_length)) {
    bool agree = true;
    Word first = maps.front().apply(w);
    for (std::size_t i = 1; i < maps.size() && agree; ++i)
      agree = (maps[i].apply(w) == first);
    if (agree) out.push_back(w);
  }
  return out;
}

ProbeReport sections_equalizer_check(const FreeHom& pi, const std::vector<FreeHom>& sections,
                                     int max_length) {
  if (sections.empty()) throw std::invalid_argument("no sections given");
  Alphabet m = pi.target();
  for (const auto& s : sections) {
    if (s.domain().rank != m.rank || s.target().rank != pi.domain().rank)
      throw std::invalid_argument("section alphabets do not match the epimorphism");
    for (int i = 1; i <= m.rank; ++i) {
      Word gen(m, {i});
      if (pi.apply(s.apply(gen)) != gen)
        throw std::invalid_argument("section law violated on generator " + gen.str());
    }
  }
  ProbeReport report;
  report.max_word_length = max_length;
  std::vector<Word> eq = equalizer_words(sections, max_length);
  CoreGraph g = CoreGraph::from_generators(m, eq);
  report.candidates_tested = static_cast<long long>(eq.size());
  if (g.rank() > m.rank) {
    report.passed = false;
    ProbeWitness w;
    for (const auto& gen : g.generators()) w.subgroup_generators.push_back(gen.str());
    w.subgroup_rank = g.rank();
    w.compared_rank = m.rank;
    report.witnesses.push_back(std::move(w));
  }
  return report;
}

MainFreeReport verify_main_free(const std::vector<FreeEndo>& family, const FreeEndo& beta0,
                                const CoreGraph& k, int max_length) {
  MainFreeReport report;
  Alphabet a = family.front().domain();
  // β0(K) is generated exactly by the β0-images of K's basis.
  std::vector<Word> b0k_gens;
  for (const auto& g : k.generators()) b0k_gens.push_back(beta0.apply(g));
  CoreGraph b0k = CoreGraph::from_generators(a, b0k_gens);

  std::vector<Word> fixed = fixed_words(family, max_length);
  for (const auto& x : fixed) {
    if (b0k.contains(x) && !k.contains(x)) {
      report.hypothesis_holds = false;
      report.hypothesis_violations.push_back(x.str());
    }
  }
  CoreGraph approx = CoreGraph::from_generators(a, fixed);
  report.k_rank = k.rank();
  report.intersection_rank = intersection_rank(k, approx);
  report.conclusion_holds = report.intersection_rank <= report.k_rank;
  return report;
}

ProbeReport bh_catalogue_check(const std::vector<CatalogueEntry>& catalogue, int max_length) {
  ProbeReport report;
  report.max_word_length = max_length;
  for (const auto& entry : catalogue) {
    ++report.candidates_tested;
    FixApproximation fa = fix_subgroup_approx({entry.endo}, max_length);
    int ambient = entry.endo.domain().rank;
    if (fa.graph.rank() > ambient) {
      report.passed = false;
      ProbeWitness w;
      w.subgroup_generators.push_back(entry.name);
      w.subgroup_rank = fa.graph.rank();
      w.compared_rank = ambient;
      report.witnesses.push_back(std::move(w));
    }
  }
  return report;
}

FreeEndo parse_endo(Alphabet a, const std::string& text) {
  std::vector<Word> images;
  for (int i = 1; i <= a.rank; ++i) images.push_back(Word(a, {i}));
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto arrow = line.find("->");
    if (arrow == std::string::npos)
      throw std::invalid_argument("expected 'generator -> image': " + line);
    Word lhs = parse_word(a, line.substr(0, arrow));
    if (lhs.length() != 1 || lhs.letters()[0] < 0)
      throw std::invalid_argument("left side must be a single generator: " + line);
    images[lhs.letters()[0] - 1] = parse_word(a, line.substr(arrow + 2));
  }
  return FreeEndo(a, std::move(images));
}

}  // namespace gtw
