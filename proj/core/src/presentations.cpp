#include "gtw/presentations.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gtw {

Presentation::Presentation(Alphabet a, std::vector<Word> rels) : alphabet(a) {
  for (auto& r : rels) {
    Word core = cyclic_reduce(r).core;
    if (!core.empty()) relators.push_back(std::move(core));
  }
}

Presentation Presentation::orientable_surface(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  Alphabet a(2 * genus);
  std::vector<Letter> rel;
  for (int g = 0; g < genus; ++g) {
    Letter x = 2 * g + 1, y = 2 * g + 2;
    rel.insert(rel.end(), {x, y, -x, -y});
  }
  return Presentation(a, {Word(a, rel)});
}

Presentation Presentation::nonorientable_surface(int crosscaps) {
  if (crosscaps < 1) throw std::invalid_argument("crosscaps must be >= 1");
  Alphabet a(crosscaps);
  std::vector<Letter> rel;
  for (int i = 1; i <= crosscaps; ++i) rel.insert(rel.end(), {i, i});
  return Presentation(a, {Word(a, rel)});
}

Presentation Presentation::free_group(int rank) {
  return Presentation(Alphabet(rank), {});
}

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty presentation");
  std::istringstream head(line);
  int rank = 0;
  std::string tok;
  while (head >> tok) ++rank;
  if (rank == 0) throw std::invalid_argument("no generators");
  Alphabet a(rank);
  std::vector<Word> rels;
  while (std::getline(in, line)) {
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (blank) continue;
    rels.push_back(parse_word(a, line));
  }
  return Presentation(a, std::move(rels));
}

int CosetTable::index() const {
  if (!complete()) throw std::logic_error("incomplete coset table");
  return static_cast<int>(table_.size());
}

int CosetTable::act(int coset, Letter x) const {
  if (!complete()) throw std::logic_error("incomplete coset table");
  return table_[coset - 1][letter_key(x)];
}

namespace {

struct Overflow {};

/// Mutable coset table with union-find coincidence tracking. Rows are
/// 0-based; entries are coset ids that must be resolved through find().
struct Enumerator {
  int ncols;
  int cap;
  std::vector<std::vector<int>> tab;
  std::vector<int> parent;
  std::deque<std::pair<int, int>> pending;

  Enumerator(int rank, int max_cosets) : ncols(2 * rank), cap(max_cosets) {
    fresh();
  }

  int fresh() {
    if (static_cast<int>(tab.size()) >= cap) throw Overflow{};
    tab.emplace_back(ncols, -1);
    parent.push_back(static_cast<int>(parent.size()));
    return static_cast<int>(tab.size()) - 1;
  }

  int find(int c) {
    while (parent[c] != c) {
      parent[c] = parent[parent[c]];
      c = parent[c];
    }
    return c;
  }

  bool alive(int c) { return find(c) == c; }

  int get(int c, Letter x) {
    int t = tab[find(c)][letter_key(x)];
    return t < 0 ? -1 : find(t);
  }

  void set(int c, Letter x, int d) {
    c = find(c);
    d = find(d);
    int k = letter_key(x), ki = letter_key(-x);
    int ex = tab[c][k] < 0 ? -1 : find(tab[c][k]);
    if (ex >= 0 && ex != d) {
      pending.emplace_back(ex, d);
    } else {
      tab[c][k] = d;
    }
    int rex = tab[d][ki] < 0 ? -1 : find(tab[d][ki]);
    if (rex >= 0 && rex != c) {
      pending.emplace_back(rex, c);
    } else {
      tab[d][ki] = c;
    }
    drain();
  }

  void drain() {
    while (!pending.empty()) {
      auto [a, b] = pending.front();
      pending.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (a > b) std::swap(a, b);  // keep the smaller id
      parent[b] = a;
      for (int k = 0; k < ncols; ++k) {
        if (tab[b][k] < 0) continue;
        int d = find(tab[b][k]);
        if (tab[a][k] < 0)
          tab[a][k] = d;
        else if (find(tab[a][k]) != d)
          pending.emplace_back(find(tab[a][k]), d);
      }
    }
  }

  /// HLT scan of w based at c, defining new cosets to close the gap.
  void scan_and_fill(int c, const Word& w) {
    const auto& ls = w.letters();
    int n = w.length();
    int i = 0, f = find(c);
    while (i < n) {
      int t = get(f, ls[i]);
      if (t < 0) break;
      f = t;
      ++i;
    }
    if (i == n) {
      if (f != find(c)) {
        pending.emplace_back(f, find(c));
        drain();
      }
      return;
    }
    int j = n, b = find(c);
    while (j > i + 1) {
      int t = get(b, -ls[j - 1]);
      if (t < 0) break;
      b = t;
      --j;
    }
    while (j > i + 1) {
      int d = fresh();
      set(f, ls[i], d);
      f = find(d);
      ++i;
    }
    set(f, ls[i], b);
  }
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_generators,
                        int max_cosets) {
  CosetTable out;
  out.rank_ = p.alphabet.rank;
  try {
    Enumerator e(p.alphabet.rank, max_cosets);
    for (const Word& g : subgroup_generators) e.scan_and_fill(0, g);
    for (int c = 0; c < static_cast<int>(e.tab.size()); ++c) {
      if (!e.alive(c)) continue;
      for (const Word& r : p.relators) {
        e.scan_and_fill(c, r);
        if (!e.alive(c)) break;
      }
      if (!e.alive(c)) continue;
      for (int k = 0; k < e.ncols; ++k) {
        if (e.tab[c][k] >= 0) continue;
        int d = e.fresh();
        e.set(c, letter_from_key(k), d);
        if (!e.alive(c)) break;
      }
    }

    // Renumber live cosets: the subgroup coset first, then by old id.
    std::vector<int> live;
    int base = e.find(0);
    live.push_back(base);
    for (int c = 0; c < static_cast<int>(e.tab.size()); ++c)
      if (e.alive(c) && c != base) live.push_back(c);
    std::vector<int> new_id(e.tab.size(), -1);
    for (int i = 0; i < static_cast<int>(live.size()); ++i) new_id[live[i]] = i + 1;

    out.table_.assign(live.size(), std::vector<int>(e.ncols, -1));
    for (int i = 0; i < static_cast<int>(live.size()); ++i)
      for (int k = 0; k < e.ncols; ++k) {
        int t = e.tab[live[i]][k];
        if (t < 0) throw std::logic_error("hole in finished coset table");
        out.table_[i][k] = new_id[e.find(t)];
      }
    out.status_ = CosetTable::Status::Complete;
  } catch (const Overflow&) {
    out.status_ = CosetTable::Status::Overflow;
  }
  return out;
}

Presentation reidemeister_schreier(const Presentation& p, const CosetTable& table) {
  if (!table.complete()) throw std::invalid_argument("coset table is incomplete");
  int n = table.index();
  int r = p.alphabet.rank;

  // Schreier transversal via BFS; tree edges marked as (coset, positive letter).
  std::set<std::pair<int, int>> tree;
  std::vector<bool> seen(n + 1, false);
  std::deque<int> queue{1};
  seen[1] = true;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int k = 0; k < 2 * r; ++k) {
      Letter x = letter_from_key(k);
      int d = table.act(c, x);
      if (seen[d]) continue;
      seen[d] = true;
      tree.insert(x > 0 ? std::make_pair(c, static_cast<int>(x))
                        : std::make_pair(d, static_cast<int>(-x)));
      queue.push_back(d);
    }
  }

  std::map<std::pair<int, int>, int> gen_index;  // (coset, positive letter) -> 1..m
  for (int c = 1; c <= n; ++c)
    for (int l = 1; l <= r; ++l)
      if (!tree.count({c, l})) {
        int next = static_cast<int>(gen_index.size()) + 1;
        gen_index[{c, l}] = next;
      }
  int m = static_cast<int>(gen_index.size());
  if (m == 0) return Presentation(Alphabet(1), {Word(Alphabet(1), {1})});  // trivial group

  Alphabet sub(m);
  auto rewrite = [&](const Word& w, int start) {
    std::vector<Letter> out;
    int cur = start;
    for (Letter x : w.letters()) {
      if (x > 0) {
        auto it = gen_index.find({cur, x});
        if (it != gen_index.end()) out.push_back(it->second);
        cur = table.act(cur, x);
      } else {
        int next = table.act(cur, x);
        auto it = gen_index.find({next, -x});
        if (it != gen_index.end()) out.push_back(-it->second);
        cur = next;
      }
    }
    return Word(sub, out);
  };

  std::vector<Word> rels;
  for (int c = 1; c <= n; ++c)
    for (const Word& rel : p.relators) rels.push_back(rewrite(rel, c));
  return Presentation(sub, std::move(rels));
}

AbelianInvariants abelianization(const Presentation& p) {
  IntMatrix mat;
  for (const Word& r : p.relators) {
    std::vector<BigInt> row;
    for (int i = 1; i <= p.alphabet.rank; ++i) row.emplace_back(exponent_sum(r, i));
    mat.push_back(std::move(row));
  }
  return abelian_invariants(mat, p.alphabet.rank);
}

int cover_rank(const SurfaceDescriptor& desc, int index) {
  if (index < 1) throw std::invalid_argument("index must be >= 1");
  return 2 - index * desc.euler_characteristic();
}

namespace {

std::vector<Word> symmetrized_shifts(const Presentation& p) {
  std::set<std::vector<Letter>> seen;
  std::vector<Word> shifts;
  for (const Word& rel : p.relators)
    for (const Word& base : {rel, invert(rel)}) {
      const auto& ls = base.letters();
      int n = base.length();
      for (int s = 0; s < n; ++s) {
        std::vector<Letter> rot(ls.begin() + s, ls.end());
        rot.insert(rot.end(), ls.begin(), ls.begin() + s);
        if (seen.insert(rot).second) shifts.emplace_back(base.alphabet(), rot);
      }
    }
  return shifts;
}

int common_prefix(const Word& u, const Word& v) {
  int n = std::min(u.length(), v.length());
  int i = 0;
  while (i < n && u.letters()[i] == v.letters()[i]) ++i;
  return i;
}

}  // namespace

PieceReport piece_check(const Presentation& p) {
  if (p.relators.size() != 1) throw std::invalid_argument("expected a single relator");
  PieceReport rep;
  rep.relator_length = p.relators[0].length();
  std::vector<Word> shifts = symmetrized_shifts(p);
  for (std::size_t i = 0; i < shifts.size(); ++i)
    for (std::size_t j = i + 1; j < shifts.size(); ++j)
      rep.max_piece_length = std::max(rep.max_piece_length, common_prefix(shifts[i], shifts[j]));
  rep.satisfies_c6 = 6 * rep.max_piece_length < rep.relator_length;
  return rep;
}

bool dehn_is_trivial(const Presentation& p, const Word& w) {
  PieceReport rep = piece_check(p);
  if (!rep.satisfies_c6) throw std::invalid_argument("presentation is not C'(1/6)");
  std::vector<Word> shifts = symmetrized_shifts(p);

  Word cur = cyclic_reduce(w).core;
  while (!cur.empty()) {
    // Best match over rotations of cur: longest subword that is more than
    // half of some relator shift; ties favor the earliest rotation/position.
    int best_len = 0;
    Word best_replaced(cur.alphabet());
    const auto& ls = cur.letters();
    int n = cur.length();
    for (int rot = 0; rot < n && best_len == 0; ++rot) {
      std::vector<Letter> rl(ls.begin() + rot, ls.end());
      rl.insert(rl.end(), ls.begin(), ls.begin() + rot);
      int cand_len = 0, cand_pos = -1;
      const Word* cand_shift = nullptr;
      for (int pos = 0; pos < n; ++pos) {
        std::vector<Letter> tail(rl.begin() + pos, rl.end());
        Word tw(cur.alphabet(), tail);
        for (const Word& s : shifts) {
          int lcp = common_prefix(tw, s);
          if (2 * lcp > s.length() && lcp > cand_len) {
            cand_len = lcp;
            cand_pos = pos;
            cand_shift = &s;
          }
        }
      }
      if (cand_len > 0) {
        // s = u v with u the match; replace u by v^-1.
        std::vector<Letter> repl;
        repl.insert(repl.end(), rl.begin(), rl.begin() + cand_pos);
        const auto& sl = cand_shift->letters();
        for (int i = cand_shift->length() - 1; i >= cand_len; --i) repl.push_back(-sl[i]);
        repl.insert(repl.end(), rl.begin() + cand_pos + cand_len, rl.end());
        best_replaced = Word(cur.alphabet(), repl);
        best_len = cand_len;
      }
    }
    if (best_len == 0) return false;  // Greendlinger: no long subword, not trivial
    cur = cyclic_reduce(best_replaced).core;
  }
  return true;
}

bool relator_deletion_trivial(const Presentation& p, const Word& w, int max_steps) {
  std::vector<Word> shifts = symmetrized_shifts(p);
  Word cur = cyclic_reduce(w).core;
  for (int step = 0; step < max_steps && !cur.empty(); ++step) {
    const auto& ls = cur.letters();
    int n = cur.length();
    bool deleted = false;
    for (int rot = 0; rot < n && !deleted; ++rot) {
      std::vector<Letter> rl(ls.begin() + rot, ls.end());
      rl.insert(rl.end(), ls.begin(), ls.begin() + rot);
      for (const Word& s : shifts) {
        int m = s.length();
        if (m > n) continue;
        for (int i = 0; i + m <= n && !deleted; ++i) {
          if (std::equal(s.letters().begin(), s.letters().end(), rl.begin() + i)) {
            std::vector<Letter> rest(rl.begin(), rl.begin() + i);
            rest.insert(rest.end(), rl.begin() + i + m, rl.end());
            cur = cyclic_reduce(Word(cur.alphabet(), rest)).core;
            deleted = true;
          }
        }
        if (deleted) break;
      }
    }
    if (!deleted) return false;
  }
  return cur.empty();
}

KleinNormalForm klein_normal_form(const Word& w) {
  if (w.alphabet().rank != 2) throw std::invalid_argument("expected a word on two generators");
  KleinNormalForm nf;
  for (Letter x : w.letters()) {
    switch (x) {
      case 1: ++nf.a_exp; nf.b_exp = -nf.b_exp; break;
      case -1: --nf.a_exp; nf.b_exp = -nf.b_exp; break;
      case 2: ++nf.b_exp; break;
      case -2: --nf.b_exp; break;
    }
  }
  return nf;
}

KleinNormalForm klein_multiply(KleinNormalForm x, KleinNormalForm y) {
  long long sign = (y.a_exp % 2 == 0) ? 1 : -1;
  return {x.a_exp + y.a_exp, x.b_exp * sign + y.b_exp};
}

KleinNormalForm klein_invert(KleinNormalForm x) {
  long long sign = (x.a_exp % 2 == 0) ? 1 : -1;
  return {-x.a_exp, -x.b_exp * sign};
}

namespace {

KleinNormalForm klein_power(KleinNormalForm x, long long k) {
  if (x.a_exp % 2 == 0) return {x.a_exp * k, x.b_exp * k};
  // odd a-exponent: squares kill the b part
  if (k % 2 == 0) return {x.a_exp * k, 0};
  return {x.a_exp * k, x.b_exp};
}

}  // namespace

KleinFixReport ns2_fix_classify(KleinNormalForm image_a, KleinNormalForm image_b, int box) {
  KleinNormalForm rel = klein_multiply(
      klein_multiply(image_a, image_b), klein_multiply(klein_invert(image_a), image_b));
  if (!(rel == KleinNormalForm{}))
    throw std::invalid_argument("images do not satisfy the defining relation");

  if (image_a == KleinNormalForm{1, 0} && image_b == KleinNormalForm{0, 1})
    return {KleinFixClass::Whole, {{1, 0}, {0, 1}}};

  auto fixed = [&](long long m, long long n) {
    return klein_multiply(klein_power(image_a, m), klein_power(image_b, n)) ==
           KleinNormalForm{m, n};
  };

  std::vector<KleinNormalForm> sols;
  for (long long m = -box; m <= box; ++m)
    for (long long n = -box; n <= box; ++n)
      if ((m != 0 || n != 0) && fixed(m, n)) sols.push_back({m, n});
  if (sols.empty()) return {KleinFixClass::Trivial, {}};

  auto abs_ll = [](long long v) { return v < 0 ? -v : v; };
  std::vector<KleinNormalForm> odd;
  for (const auto& s : sols)
    if (s.a_exp % 2 != 0) odd.push_back(s);
  if (!odd.empty()) {
    // A fixed element with odd a-exponent forces a cyclic fixed subgroup.
    KleinNormalForm g = odd[0];
    for (const auto& s : odd) {
      auto better = std::make_tuple(abs_ll(s.a_exp), abs_ll(s.b_exp), -s.a_exp, -s.b_exp) <
                    std::make_tuple(abs_ll(g.a_exp), abs_ll(g.b_exp), -g.a_exp, -g.b_exp);
      if (better) g = s;
    }
    if (g.a_exp < 0) g = klein_invert(g);
    for (const auto& s : sols) {
      bool is_power = false;
      for (long long k = -2 * box; k <= 2 * box && !is_power; ++k)
        if (klein_power(g, k) == s) is_power = true;
      if (!is_power) throw std::logic_error("fixed set is not cyclic as expected");
    }
    return {KleinFixClass::Z, {g}};
  }

  // All solutions have even a-exponent: a sublattice of the Z x Z part.
  IntMatrix mat;
  for (const auto& s : sols) mat.push_back({BigInt(s.a_exp), BigInt(s.b_exp)});
  int lrank = 0;
  for (const auto& d : smith_diagonal(mat))
    if (d != 0) ++lrank;

  if (lrank == 1) {
    KleinNormalForm g = sols[0];
    for (const auto& s : sols) {
      auto better = std::make_tuple(abs_ll(s.a_exp) + abs_ll(s.b_exp), -s.a_exp, -s.b_exp) <
                    std::make_tuple(abs_ll(g.a_exp) + abs_ll(g.b_exp), -g.a_exp, -g.b_exp);
      if (better) g = s;
    }
    if (g.a_exp < 0 || (g.a_exp == 0 && g.b_exp < 0)) g = klein_invert(g);
    return {KleinFixClass::Z, {g}};
  }

  // Rank two: Hermite-style basis (A, B), (0, C) from the boxed solutions.
  long long amin = 0;
  for (const auto& s : sols)
    if (s.a_exp > 0 && (amin == 0 || s.a_exp < amin)) amin = s.a_exp;
  KleinNormalForm v1{0, 0}, v2{0, 0};
  for (const auto& s : sols)
    if (s.a_exp == amin && (v1.a_exp == 0 || abs_ll(s.b_exp) < abs_ll(v1.b_exp))) v1 = s;
  for (const auto& s : sols)
    if (s.a_exp == 0 && s.b_exp > 0 && (v2.b_exp == 0 || s.b_exp < v2.b_exp)) v2 = s;
  if (v1.a_exp == 0 || v2.b_exp == 0)
    throw std::logic_error("rank-two fixed lattice without a boxed basis");
  return {KleinFixClass::ZxZ, {v1, v2}};
}

GroupContext GroupContext::free_group(int rank) { return GroupContext(Kind::Free, rank); }

GroupContext GroupContext::abelian(std::vector<int> orders) {
  GroupContext ctx(Kind::Abelian, static_cast<int>(orders.size()));
  ctx.orders_ = std::move(orders);
  return ctx;
}

GroupContext GroupContext::klein_bottle() { return GroupContext(Kind::Klein, 2); }

GroupContext GroupContext::small_cancellation(Presentation p) {
  if (!piece_check(p).satisfies_c6)
    throw std::invalid_argument("presentation is not C'(1/6)");
  GroupContext ctx(Kind::SmallCancellation, p.alphabet.rank);
  ctx.pres_ = std::move(p);
  return ctx;
}

GroupContext GroupContext::presented(Presentation p) {
  GroupContext ctx(Kind::Presented, p.alphabet.rank);
  ctx.pres_ = std::move(p);
  return ctx;
}

int GroupContext::rank() const { return rank_; }

Word GroupContext::identity_word() const { return Word(Alphabet(std::max(rank_, 1))); }

Verdict GroupContext::equal(const Word& u, const Word& v) const {
  switch (kind_) {
    case Kind::Free:
      return u.letters() == v.letters() ? Verdict::Equal : Verdict::NotEqual;
    case Kind::Abelian: {
      for (int i = 1; i <= rank_; ++i) {
        long long e = exponent_sum(u, i) - exponent_sum(v, i);
        int ord = orders_[i - 1];
        if (ord == 0 ? e != 0 : e % ord != 0) return Verdict::NotEqual;
      }
      return Verdict::Equal;
    }
    case Kind::Klein:
      return klein_normal_form(u) == klein_normal_form(v) ? Verdict::Equal : Verdict::NotEqual;
    case Kind::SmallCancellation: {
      Word d = concat(u, invert(v));
      if (d.empty()) return Verdict::Equal;
      // Abelianization first: it settles most unequal pairs without Dehn.
      IntMatrix mat;
      for (const Word& r : pres_->relators) {
        std::vector<BigInt> row;
        for (int i = 1; i <= rank_; ++i) row.emplace_back(exponent_sum(r, i));
        mat.push_back(std::move(row));
      }
      std::vector<BigInt> target;
      for (int i = 1; i <= rank_; ++i) target.emplace_back(exponent_sum(d, i));
      if (!in_row_lattice(mat, target)) return Verdict::NotEqual;
      return dehn_is_trivial(*pres_, d) ? Verdict::Equal : Verdict::NotEqual;
    }
    case Kind::Presented: {
      Word d = concat(u, invert(v));
      if (d.empty()) return Verdict::Equal;
      IntMatrix mat;
      for (const Word& r : pres_->relators) {
        std::vector<BigInt> row;
        for (int i = 1; i <= rank_; ++i) row.emplace_back(exponent_sum(r, i));
        mat.push_back(std::move(row));
      }
      std::vector<BigInt> target;
      for (int i = 1; i <= rank_; ++i) target.emplace_back(exponent_sum(d, i));
      if (!in_row_lattice(mat, target)) return Verdict::NotEqual;
      if (relator_deletion_trivial(*pres_, d)) return Verdict::Equal;
      return Verdict::Unknown;
    }
  }
  return Verdict::Unknown;
}

}  // namespace gtw
