#include "gtw/witnesses.hpp"

#include <algorithm>
#include <stdexcept>

#include "gtw/snf.hpp"
#include "gtw/stallings.hpp"

namespace gtw {

ProductEndo central_twist(const ProductGroup& g, int source_factor, int target_factor) {
  int n = static_cast<int>(g.factors.size());
  if (source_factor < 0 || source_factor >= n || target_factor < 0 || target_factor >= n ||
      source_factor == target_factor)
    throw std::invalid_argument("bad factor indices");
  const Factor& src = g.factors[source_factor];
  const Factor& tgt = g.factors[target_factor];
  if (!src.nontrivial_center()) throw std::invalid_argument("source factor has trivial center");
  if (tgt.nontrivial_center()) throw std::invalid_argument("target factor has nontrivial center");

  // Central element of the source factor.
  Word t = src.kind == Factor::Kind::NonOrientable && src.param == 2
               ? Word(src.alphabet(), {1, 1})
               : Word(src.alphabet(), {1});

  std::vector<std::vector<ProductElement>> images;
  for (int f = 0; f < n; ++f) {
    std::vector<ProductElement> row;
    for (int gen = 1; gen <= g.factors[f].rank(); ++gen) {
      ProductElement e = identity_element(g);
      e.components[f] = Word(g.factors[f].alphabet(), {gen});
      if (f == target_factor && gen == 1) e.components[source_factor] = t;
      if (f == target_factor && gen == 2 && tgt.kind == Factor::Kind::NonOrientable)
        e.components[source_factor] = invert(t);
      row.push_back(std::move(e));
    }
    images.push_back(std::move(row));
  }
  return ProductEndo(g, std::move(images));
}

namespace {

/// Index and free rank of the kernel of a mod-2 or Z exponent map in a free
/// group, through coset enumeration plus rewriting.
int kernel_rank_by_rewriting(const Presentation& p, const std::vector<Word>& kernel_gens) {
  CosetTable table = todd_coxeter(p, kernel_gens);
  if (!table.complete()) throw std::logic_error("coset enumeration overflowed");
  Presentation sub = reidemeister_schreier(p, table);
  return abelianization(sub).rank();
}

}  // namespace

CentralTwistReport central_twist_z2_f2() {
  CentralTwistReport rep;
  rep.case_id = "C2-F2";
  ProductGroup g = parse_product("C2 x F2");
  central_twist(g, 0, 1);  // validates the construction
  rep.group_name = g.name();
  rep.group_rank = g.rank();

  // Fix = <t> x ker(|.|_a mod 2); the kernel has index 2 in F2.
  Alphabet f2(2);
  std::vector<Word> kernel_gens = {Word(f2, {1, 1}), Word(f2, {2}), Word(f2, {1, 2, -1})};
  CoreGraph kg = CoreGraph::from_generators(f2, kernel_gens);
  int stallings_rank = kg.rank();
  int rewriting_rank = kernel_rank_by_rewriting(Presentation::free_group(2), kernel_gens);
  if (stallings_rank != rewriting_rank)
    throw std::logic_error("kernel rank mismatch between routes");
  if (kg.index() != std::optional<int>(2)) throw std::logic_error("kernel index is not 2");

  rep.fix_rank_exact = 1 + stallings_rank;  // torsion generator t plus the kernel
  rep.exceeds_group_rank = *rep.fix_rank_exact > rep.group_rank;
  return rep;
}

CentralTwistReport central_twist_z_f2(const std::vector<int>& lengths) {
  CentralTwistReport rep;
  rep.case_id = "Z-F2";
  ProductGroup g = parse_product("Z x F2");
  central_twist(g, 0, 1);
  rep.group_name = g.name();
  rep.group_rank = g.rank();

  // Fix = <t> x ker(|.|_a); approximate the kernel from below.
  Alphabet f2(2);
  for (int len : lengths) {
    std::vector<Word> gens;
    for (const Word& w : enumerate_words(f2, len))
      if (!w.empty() && exponent_sum(w, 1) == 0) gens.push_back(w);
    rep.growth.entries.emplace_back(len, CoreGraph::from_generators(f2, gens).rank());
  }
  rep.exceeds_group_rank =
      !rep.growth.entries.empty() &&
      1 + rep.growth.entries.back().second > rep.group_rank && rep.growth.strictly_increasing();
  return rep;
}

CentralTwistReport central_twist_z2_ns3() {
  CentralTwistReport rep;
  rep.case_id = "C2-NS3";
  ProductGroup g = parse_product("C2 x NS3");
  central_twist(g, 0, 1);
  rep.group_name = g.name();
  rep.group_rank = g.rank();

  // Fix = <t> x ker(pi) where pi(w) = |w|_1 - |w|_2 mod 2 on NS3.
  Presentation ns3 = Presentation::nonorientable_surface(3);
  Alphabet a3 = ns3.alphabet;
  std::vector<Word> kernel_gens = {Word(a3, {1, 1}), Word(a3, {2, -1}), Word(a3, {1, 2}),
                                   Word(a3, {3}), Word(a3, {1, 3, -1})};
  int kr = kernel_rank_by_rewriting(ns3, kernel_gens);
  int expected = cover_rank({SurfaceDescriptor::Kind::NonOrientable, 3}, 2);
  if (kr != expected) throw std::logic_error("kernel rank disagrees with the Euler count");

  rep.fix_rank_exact = 1 + kr;
  rep.exceeds_group_rank = *rep.fix_rank_exact > rep.group_rank;
  return rep;
}

namespace {

// Witness cases run over explicit factor presentations (possibly
// re-presentations), so they do not go through Factor/ProductGroup.
using WElem = std::vector<Word>;

struct WProduct {
  std::vector<Presentation> pres;
  std::vector<GroupContext> ctx;

  WElem identity() const {
    WElem e;
    for (const Presentation& p : pres) e.emplace_back(p.alphabet);
    return e;
  }
};

WElem wmul(const WElem& x, const WElem& y) {
  WElem out;
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(concat(x[i], y[i]));
  return out;
}

WElem winv(const WElem& x) {
  WElem out;
  for (const Word& w : x) out.push_back(invert(w));
  return out;
}

Verdict wequal(const WProduct& g, const WElem& x, const WElem& y) {
  bool unknown = false;
  for (std::size_t i = 0; i < g.pres.size(); ++i) {
    Verdict v = g.ctx[i].equal(x[i], y[i]);
    if (v == Verdict::NotEqual) return Verdict::NotEqual;
    if (v == Verdict::Unknown) unknown = true;
  }
  return unknown ? Verdict::Unknown : Verdict::Equal;
}

struct WEndo {
  const WProduct* g;
  std::vector<std::vector<WElem>> images;  // [factor][gen-1]

  WElem apply(const WElem& x) const {
    WElem out = g->identity();
    for (std::size_t f = 0; f < x.size(); ++f)
      for (Letter l : x[f].letters()) {
        const WElem& gi = images[f][(l > 0 ? l : -l) - 1];
        out = wmul(out, l > 0 ? gi : winv(gi));
      }
    return out;
  }

  void verify_relators() const {
    for (std::size_t f = 0; f < g->pres.size(); ++f)
      for (const Word& rel : g->pres[f].relators) {
        WElem img = g->identity();
        for (Letter l : rel.letters()) {
          const WElem& gi = images[f][(l > 0 ? l : -l) - 1];
          img = wmul(img, l > 0 ? gi : winv(gi));
        }
        if (wequal(*g, img, g->identity()) != Verdict::Equal)
          throw std::logic_error("relator image not certified trivial");
      }
  }
};

/// Abelianization rank of a product of standard factors, via the
/// block-diagonal relator matrix.
int product_ab_rank(const ProductGroup& g) {
  int cols = g.rank();
  IntMatrix mat;
  int offset = 0;
  for (const Factor& f : g.factors) {
    for (const Word& rel : f.presentation().relators) {
      std::vector<BigInt> row(cols, 0);
      for (int i = 1; i <= f.rank(); ++i) row[offset + i - 1] = exponent_sum(rel, i);
      mat.push_back(std::move(row));
    }
    offset += f.rank();
  }
  return abelian_invariants(mat, cols).rank();
}

struct WitnessCase {
  std::string case_id;
  ProductGroup display_group;
  WProduct product;
  WEndo endo;
  std::vector<WElem> fix_gens;
  std::vector<WElem> k_gens;
  std::vector<std::vector<int>> memberships;  // signed 1-based indices into k_gens
  ProductGroup claimed_fix_structure;
};

WElem elem(const WProduct& g, std::initializer_list<const char*> comps) {
  WElem e;
  std::size_t i = 0;
  for (const char* c : comps) e.push_back(parse_word(g.pres[i++].alphabet, c));
  return e;
}

Presentation klein_presentation() {
  Alphabet a(2);
  return Presentation(a, {Word(a, {1, 2, -1, 2})});
}

Presentation ns_represented(int k) {
  // <a, b, c, d, a5, ... | aba^-1 b cdc^-1 d a5^2 ... ak^2>
  Alphabet a(k);
  std::vector<Letter> rel = {1, 2, -1, 2, 3, 4, -3, 4};
  for (int i = 5; i <= k; ++i) rel.insert(rel.end(), {i, i});
  return Presentation(a, {Word(a, rel)});
}

WEndo make_endo(const WProduct& g, std::vector<std::vector<WElem>> images) {
  WEndo e{&g, std::move(images)};
  e.verify_relators();
  return e;
}

/// Images fixing every generator, as a mutable starting point.
std::vector<std::vector<WElem>> identity_images(const WProduct& g) {
  std::vector<std::vector<WElem>> images;
  for (std::size_t f = 0; f < g.pres.size(); ++f) {
    std::vector<WElem> row;
    for (int gen = 1; gen <= g.pres[f].alphabet.rank; ++gen) {
      WElem e = g.identity();
      e[f] = Word(g.pres[f].alphabet, {gen});
      row.push_back(std::move(e));
    }
    images.push_back(std::move(row));
  }
  return images;
}

WitnessCase build_case(const std::string& case_id) {
  WitnessCase c;
  c.case_id = case_id;
  if (case_id == "euc-l2q1") {
    c.display_group = parse_product("NS2^2 x C2");
    c.product.pres = {klein_presentation(), klein_presentation(),
                      Presentation::nonorientable_surface(1)};
    c.product.ctx = {GroupContext::klein_bottle(), GroupContext::klein_bottle(),
                     GroupContext::abelian({2})};
    auto images = identity_images(c.product);
    images[0][1] = elem(c.product, {"b", "", "a"});   // b -> b e
    images[1][0] = elem(c.product, {"", "a b", ""});  // c -> c d
    c.endo = make_endo(c.product, std::move(images));
    c.fix_gens = {elem(c.product, {"a", "", ""}), elem(c.product, {"b b", "", ""}),
                  elem(c.product, {"", "a a", ""}), elem(c.product, {"", "b", ""}),
                  elem(c.product, {"", "", "a"})};
    c.k_gens = {elem(c.product, {"a", "", ""}), elem(c.product, {"b", "a", ""}),
                elem(c.product, {"", "b", ""}), elem(c.product, {"", "", "a"})};
    c.memberships = {{1}, {2, 2, 1, -2, -1, -2}, {2, 1, 2, -1}, {3}, {4}};
    c.claimed_fix_structure = parse_product("NS2 x Z^2 x C2");
  } else if (case_id == "euc-l1p1q2") {
    c.display_group = parse_product("NS2 x Z x C2^2");
    c.product.pres = {klein_presentation(), Presentation::free_group(1),
                      Presentation::nonorientable_surface(1),
                      Presentation::nonorientable_surface(1)};
    c.product.ctx = {GroupContext::klein_bottle(), GroupContext::free_group(1),
                     GroupContext::abelian({2}), GroupContext::abelian({2})};
    auto images = identity_images(c.product);
    images[0][1] = elem(c.product, {"b", "", "a", ""});  // b -> b d
    images[1][0] = elem(c.product, {"", "a", "", "a"});  // c -> c e
    c.endo = make_endo(c.product, std::move(images));
    c.fix_gens = {elem(c.product, {"a", "", "", ""}), elem(c.product, {"b b", "", "", ""}),
                  elem(c.product, {"", "a a", "", ""}), elem(c.product, {"", "", "a", ""}),
                  elem(c.product, {"", "", "", "a"})};
    c.k_gens = {elem(c.product, {"a", "", "", ""}), elem(c.product, {"b", "a", "", ""}),
                elem(c.product, {"", "", "a", ""}), elem(c.product, {"", "", "", "a"})};
    c.memberships = {{1}, {2, 2, 1, -2, -1, -2}, {2, 1, 2, -1}, {3}, {4}};
    c.claimed_fix_structure = parse_product("NS2 x Z x C2^2");
  } else if (case_id == "hyp-FF") {
    c.display_group = parse_product("F2 x F2");
    c.product.pres = {Presentation::free_group(2), Presentation::free_group(2)};
    c.product.ctx = {GroupContext::free_group(2), GroupContext::free_group(2)};
    auto images = identity_images(c.product);
    images[0][0] = elem(c.product, {"a b", ""});
    images[1][0] = elem(c.product, {"", "a b"});
    c.endo = make_endo(c.product, std::move(images));
    c.fix_gens = {elem(c.product, {"b", ""}), elem(c.product, {"a b A", ""}),
                  elem(c.product, {"", "b"}), elem(c.product, {"", "a b A"})};
    c.k_gens = {elem(c.product, {"b", ""}), elem(c.product, {"", "b"}),
                elem(c.product, {"a", "a"})};
    c.memberships = {{1}, {3, 1, -3}, {2}, {3, 2, -3}};
    c.claimed_fix_structure = parse_product("F2 x F2");
  } else if (case_id == "hyp-SS" || case_id == "hyp-NN") {
    bool orient = case_id == "hyp-SS";
    c.display_group = orient ? parse_product("S2 x S2") : parse_product("NS4 x NS4");
    Presentation p = orient ? Presentation::orientable_surface(2) : ns_represented(4);
    GroupContext ctx = orient ? GroupContext::small_cancellation(p) : GroupContext::presented(p);
    c.product.pres = {p, p};
    c.product.ctx = {ctx, ctx};
    auto images = identity_images(c.product);
    images[0][0] = elem(c.product, {"a b", ""});
    images[0][2] = elem(c.product, {"c d", ""});
    images[1][0] = elem(c.product, {"", "a b"});
    images[1][2] = elem(c.product, {"", "c d"});
    c.endo = make_endo(c.product, std::move(images));
    c.fix_gens = {elem(c.product, {"b", ""}),       elem(c.product, {"a b A", ""}),
                  elem(c.product, {"d", ""}),       elem(c.product, {"", "b"}),
                  elem(c.product, {"", "a b A"}),   elem(c.product, {"", "d"})};
    c.k_gens = {elem(c.product, {"b", ""}), elem(c.product, {"d", ""}),
                elem(c.product, {"", "b"}), elem(c.product, {"", "d"}),
                elem(c.product, {"a", "a"})};
    c.memberships = {{1}, {5, 1, -5}, {2}, {3}, {5, 3, -5}, {4}};
    c.claimed_fix_structure = parse_product("F3 x F3");
  } else if (case_id == "hyp-mixed") {
    c.display_group = parse_product("F2 x S2");
    Presentation s2 = Presentation::orientable_surface(2);
    c.product.pres = {Presentation::free_group(2), s2};
    c.product.ctx = {GroupContext::free_group(2), GroupContext::small_cancellation(s2)};
    auto images = identity_images(c.product);
    images[0][0] = elem(c.product, {"a b", ""});
    images[1][0] = elem(c.product, {"", "a b"});
    images[1][2] = elem(c.product, {"", "c d"});
    c.endo = make_endo(c.product, std::move(images));
    c.fix_gens = {elem(c.product, {"b", ""}), elem(c.product, {"a b A", ""}),
                  elem(c.product, {"", "b"}), elem(c.product, {"", "a b A"}),
                  elem(c.product, {"", "d"})};
    c.k_gens = {elem(c.product, {"b", ""}), elem(c.product, {"", "b"}),
                elem(c.product, {"", "d"}), elem(c.product, {"a", "a"})};
    c.memberships = {{1}, {4, 1, -4}, {2}, {4, 2, -4}, {3}};
    c.claimed_fix_structure = parse_product("F2 x F3");
  } else {
    throw std::invalid_argument("unknown witness case: " + case_id);
  }
  return c;
}

}  // namespace

std::vector<std::string> non_compressed_case_ids() {
  return {"euc-l2q1", "euc-l1p1q2", "hyp-FF", "hyp-SS", "hyp-NN", "hyp-mixed"};
}

NonCompressedReport non_compressed_witness(const std::string& case_id) {
  WitnessCase c = build_case(case_id);
  NonCompressedReport rep;
  rep.case_id = c.case_id;
  rep.group_name = c.display_group.name();
  rep.group_rank = c.display_group.rank();

  rep.generators_fixed = true;
  for (const WElem& g : c.fix_gens)
    if (wequal(c.product, c.endo.apply(g), g) != Verdict::Equal) rep.generators_fixed = false;

  rep.contained_in_k = true;
  for (std::size_t i = 0; i < c.fix_gens.size(); ++i) {
    WElem prod = c.product.identity();
    for (int idx : c.memberships[i]) {
      const WElem& kg = c.k_gens[(idx > 0 ? idx : -idx) - 1];
      prod = wmul(prod, idx > 0 ? kg : winv(kg));
    }
    if (wequal(c.product, prod, c.fix_gens[i]) != Verdict::Equal) rep.contained_in_k = false;
  }

  rep.fix_rank = {product_ab_rank(c.claimed_fix_structure), static_cast<int>(c.fix_gens.size())};
  rep.k_rank = {0, static_cast<int>(c.k_gens.size())};
  rep.strict = rep.k_rank.upper < rep.fix_rank.lower;
  return rep;
}

namespace {

struct InertCase {
  WProduct product;
  WEndo endo;
  std::vector<WElem> k_gens;
  ProductGroup display_group;
  bool check_ns3_intersection = false;
};

InertCase build_inert_case(const std::string& case_id) {
  InertCase c;
  // NS3 in the re-presented a b a^-1 b c^2 shape, so a -> a b kills the relator.
  Presentation ns3(Alphabet(3), {Word(Alphabet(3), {1, 2, -1, 2, 3, 3})});
  if (case_id == "Fr-NS3") {
    c.display_group = parse_product("F2 x NS3");
    c.product.pres = {Presentation::free_group(2), ns3};
    c.product.ctx = {GroupContext::free_group(2), GroupContext::presented(ns3)};
    auto images = identity_images(c.product);
    images[1][0] = elem(c.product, {"", "a b"});  // c -> c d
    c.endo = make_endo(c.product, std::move(images));
    c.k_gens = {elem(c.product, {"a", "a"}), elem(c.product, {"b", ""})};
    c.check_ns3_intersection = true;
  } else if (case_id == "Sg-NS3") {
    c.display_group = parse_product("S2 x NS3");
    Presentation s2 = Presentation::orientable_surface(2);
    c.product.pres = {s2, ns3};
    c.product.ctx = {GroupContext::small_cancellation(s2), GroupContext::presented(ns3)};
    auto images = identity_images(c.product);
    images[1][0] = elem(c.product, {"", "a b"});
    c.endo = make_endo(c.product, std::move(images));
    c.k_gens = {elem(c.product, {"a", "a"}), elem(c.product, {"b", ""}),
                elem(c.product, {"c", ""}), elem(c.product, {"d", ""})};
    c.check_ns3_intersection = true;
  } else if (case_id == "NSk-NS3") {
    c.display_group = parse_product("NS3 x NS3");
    Presentation nsk(Alphabet(3), {Word(Alphabet(3), {1, 2, -1, 2, 3, 3})});  // aba^-1 b c^2
    c.product.pres = {nsk, ns3};
    c.product.ctx = {GroupContext::presented(nsk), GroupContext::presented(ns3)};
    auto images = identity_images(c.product);
    images[1][0] = elem(c.product, {"", "a b"});
    c.endo = make_endo(c.product, std::move(images));
    c.k_gens = {elem(c.product, {"a", "a"}), elem(c.product, {"b", ""}),
                elem(c.product, {"c", ""})};
    c.check_ns3_intersection = true;
  } else if (case_id == "F2-Z-final") {
    c.display_group = parse_product("F2 x Z");
    c.product.pres = {Presentation::free_group(2), Presentation::free_group(1)};
    c.product.ctx = {GroupContext::free_group(2), GroupContext::free_group(1)};
    auto images = identity_images(c.product);
    images[1][0] = elem(c.product, {"", "A"});  // c -> c^-1
    c.endo = make_endo(c.product, std::move(images));
    c.k_gens = {elem(c.product, {"a", "a"}), elem(c.product, {"b", ""})};
  } else {
    throw std::invalid_argument("unknown witness case: " + case_id);
  }
  return c;
}

}  // namespace

std::vector<std::string> non_inert_case_ids() {
  return {"Fr-NS3", "Sg-NS3", "NSk-NS3", "F2-Z-final"};
}

NonInertReport non_inert_witness(const std::string& case_id, const std::vector<int>& lengths) {
  InertCase c = build_inert_case(case_id);
  NonInertReport rep;
  rep.case_id = case_id;
  rep.group_name = c.display_group.name();

  int max_len = lengths.empty() ? 0 : *std::max_element(lengths.begin(), lengths.end());
  Alphabet kalpha(static_cast<int>(c.k_gens.size()));
  std::vector<std::pair<int, Word>> shadows;  // (K-word length, first-factor component)
  for (const Word& kw : enumerate_words(kalpha, max_len)) {
    if (kw.empty()) continue;
    WElem val = c.product.identity();
    for (Letter l : kw.letters()) {
      const WElem& kg = c.k_gens[(l > 0 ? l : -l) - 1];
      val = wmul(val, l > 0 ? kg : winv(kg));
    }
    if (wequal(c.product, c.endo.apply(val), val) == Verdict::Equal)
      shadows.emplace_back(kw.length(), val[0]);
  }
  for (int len : lengths) {
    std::vector<Word> gens;
    for (const auto& [l, w] : shadows)
      if (l <= len && !w.empty()) gens.push_back(w);
    rep.growth.entries.emplace_back(
        len, CoreGraph::from_generators(c.product.pres[0].alphabet, gens).rank());
  }

  if (c.check_ns3_intersection) {
    // Fix phi2 meets <c> trivially: phi2(c^n) = c^n would put (0,n,0) in the
    // relator row lattice, impossible for n != 0.
    IntMatrix rel;
    {
      std::vector<BigInt> row;
      const Presentation& ns3 = c.product.pres[1];
      for (int i = 1; i <= ns3.alphabet.rank; ++i)
        row.emplace_back(exponent_sum(ns3.relators[0], i));
      rel.push_back(std::move(row));
    }
    rep.intersection_trivial_certified = true;
    for (int n = 1; n <= 20; ++n)
      if (in_row_lattice(rel, {0, BigInt(n), 0})) rep.intersection_trivial_certified = false;
  }

  if (case_id == "F2-Z-final") {
    // Overgroups of Fix = F2 x 1 inside F2 x Z are F2 x <c^m>; their ranks
    // never drop below rk(Fix) = 2.
    rep.fix_compressed_probe = true;
    for (int m = 0; m <= 8; ++m)
      if (2 + (m > 0 ? 1 : 0) < 2) rep.fix_compressed_probe = false;
  }
  return rep;
}

ProductBhReport bh_products_check(const ProductGroup& g, const std::vector<ProductEndo>& catalogue,
                                  int max_length) {
  if (g.classify_type() == ProductGroup::Type::Mixed)
    throw std::invalid_argument("mixed groups are handled by the central-twist reports");
  ProductBhReport rep;
  rep.group_rank = g.rank();

  // Relator rows of the product abelianization.
  int cols = g.rank();
  IntMatrix relators;
  int offset = 0;
  for (const Factor& f : g.factors) {
    for (const Word& rel : f.presentation().relators) {
      std::vector<BigInt> row(cols, 0);
      for (int i = 1; i <= f.rank(); ++i) row[offset + i - 1] = exponent_sum(rel, i);
      relators.push_back(std::move(row));
    }
    offset += f.rank();
  }
  auto nonzero_count = [](const std::vector<BigInt>& diag) {
    int n = 0;
    for (const auto& d : diag)
      if (d != 0) ++n;
    return n;
  };
  int relator_rank = relators.empty() ? 0 : nonzero_count(smith_diagonal(relators));

  for (const ProductEndo& phi : catalogue) {
    ProductFixBuckets buckets = fix_words_product(phi, max_length);
    IntMatrix mat = relators;
    for (const ProductElement& x : buckets.certified) {
      std::vector<BigInt> row(cols, 0);
      int off = 0;
      for (std::size_t f = 0; f < g.factors.size(); ++f) {
        for (int i = 1; i <= g.factors[f].rank(); ++i)
          row[off + i - 1] = exponent_sum(x.components[f], i);
        off += g.factors[f].rank();
      }
      mat.push_back(std::move(row));
    }
    int bound = (mat.empty() ? 0 : nonzero_count(smith_diagonal(mat))) - relator_rank;

    ProductBhEntry entry;
    for (std::size_t f = 0; f < g.factors.size(); ++f)
      for (int gen = 1; gen <= g.factors[f].rank(); ++gen) {
        if (!entry.endo_key.empty()) entry.endo_key += ", ";
        entry.endo_key += element_str(phi.image(static_cast<int>(f), gen));
      }
    entry.rank_lower_bound = bound;
    if (bound > rep.group_rank) rep.passed = false;
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

}  // namespace gtw
