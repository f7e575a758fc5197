#include "gtw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "gtw/morphisms.hpp"
#include "gtw/presentations.hpp"
#include "gtw/products.hpp"
#include "gtw/snf.hpp"
#include "gtw/stallings.hpp"
#include "gtw/witnesses.hpp"
#include "gtw/words.hpp"

namespace gtw {

VerifyProfile profile_from_name(const std::string& name) {
  if (name == "quick") return {"quick", 8, 3};
  if (name == "default") return {"default", 12, 4};
  if (name == "deep") return {"deep", 16, 5};
  throw std::invalid_argument("unknown profile: " + name);
}

namespace {

void note(CheckResult& r, const std::string& key, long long value) {
  r.numbers.emplace_back(key, value);
}

void fail(CheckResult& r, const std::string& why) {
  r.status = CheckStatus::Fail;
  if (!r.detail.empty()) r.detail += "; ";
  r.detail += why;
}

// 1. Index-2 kernels in F_r, r = 2..5: Stallings and coset-table routes
// agree on index 2 and rank 2r-1.
CheckResult check_schreier_index(const VerifyProfile&) {
  CheckResult r{"schreier-index", CheckStatus::Pass};
  for (int rank = 2; rank <= 5; ++rank) {
    Alphabet a(rank);
    std::vector<Word> gens = {Word(a, {1, 1})};
    for (int j = 2; j <= rank; ++j) {
      gens.push_back(Word(a, {j}));
      gens.push_back(Word(a, {1, j, -1}));
    }
    int expected = 2 * rank - 1;

    CoreGraph g = CoreGraph::from_generators(a, gens);
    if (g.index() != std::optional<int>(2)) fail(r, "stallings index != 2 at r=" + std::to_string(rank));
    if (g.rank() != expected) fail(r, "stallings rank != 2r-1 at r=" + std::to_string(rank));

    CosetTable table = todd_coxeter(Presentation::free_group(rank), gens);
    if (!table.complete() || table.index() != 2)
      fail(r, "coset enumeration index != 2 at r=" + std::to_string(rank));
    else {
      Presentation sub = reidemeister_schreier(Presentation::free_group(rank), table);
      if (sub.alphabet.rank != expected || !sub.relators.empty())
        fail(r, "rewriting rank != 2r-1 at r=" + std::to_string(rank));
    }
    note(r, "rank_r" + std::to_string(rank), expected);
  }
  return r;
}

// 2. Strengthened Hanna Neumann inequality over all subgroups of F2
// generated by <= 2 words of length <= 4.
CheckResult check_hanna_neumann_sweep(const VerifyProfile&) {
  CheckResult r{"hanna-neumann-sweep", CheckStatus::Pass};
  Alphabet a(2);
  std::vector<Word> words;
  for (const Word& w : enumerate_words(a, 4))
    if (!w.empty()) words.push_back(w);

  std::unordered_set<std::string> seen;
  std::vector<CoreGraph> graphs;       // distinct, rank >= 2
  long long cyclic_or_trivial = 0;
  auto add = [&](const CoreGraph& g) {
    if (!seen.insert(g.canonical_form()).second) return;
    if (g.rank() >= 2)
      graphs.push_back(g);
    else
      ++cyclic_or_trivial;
  };
  for (std::size_t i = 0; i < words.size(); ++i) {
    add(CoreGraph::from_generators(a, {words[i]}));
    for (std::size_t j = i; j < words.size(); ++j)
      add(CoreGraph::from_generators(a, {words[i], words[j]}));
  }

  long long violations = 0, pairs = 0;
  for (std::size_t i = 0; i < graphs.size() && violations == 0; ++i)
    for (std::size_t j = i; j < graphs.size(); ++j) {
      ++pairs;
      int lhs = std::max(intersection_rank(graphs[i], graphs[j]) - 1, 0);
      int rhs = (graphs[i].rank() - 1) * (graphs[j].rank() - 1);
      if (lhs > rhs) {
        ++violations;
        fail(r, "violated by pair #" + std::to_string(i) + "," + std::to_string(j));
        break;
      }
    }
  // Pairs with a cyclic or trivial side satisfy the bound since their
  // intersection is cyclic; spot-check a sample anyway.
  std::mt19937 rng(7);
  for (int t = 0; t < 1000 && !graphs.empty(); ++t) {
    CoreGraph h = CoreGraph::from_generators(a, {words[rng() % words.size()]});
    const CoreGraph& k = graphs[rng() % graphs.size()];
    if (!hanna_neumann_holds(h, k)) fail(r, "cyclic-side spot check violated");
  }
  note(r, "distinct_rank2_subgroups", static_cast<long long>(graphs.size()));
  note(r, "cyclic_or_trivial_subgroups", cyclic_or_trivial);
  note(r, "pairs_checked", pairs);
  note(r, "violations", violations);
  return r;
}

std::vector<FreeEndo> nielsen_family(int rank) {
  Alphabet a(rank);
  auto gen = [&](int i) { return Word(a, {i}); };
  auto ident = [&]() {
    std::vector<Word> im;
    for (int i = 1; i <= rank; ++i) im.push_back(gen(i));
    return im;
  };
  std::vector<FreeEndo> out;
  {
    auto im = ident();          // swap first two
    std::swap(im[0], im[1]);
    out.emplace_back(a, im);
  }
  {
    auto im = ident();          // invert first
    im[0] = Word(a, {-1});
    out.emplace_back(a, im);
  }
  {
    auto im = ident();          // right multiplication
    im[0] = Word(a, {1, 2});
    out.emplace_back(a, im);
  }
  if (rank >= 3) {
    auto im = ident();          // cycle
    for (int i = 0; i < rank; ++i) im[i] = gen(i % rank + 1);
    out.emplace_back(a, im);
  }
  return out;
}

// 3. Fixed-subgroup approximations of >= 20 automorphisms stay within the
// ambient rank (the approximation is from below, so any excess is a bug).
CheckResult check_fixed_rank_catalogue(const VerifyProfile& profile) {
  CheckResult r{"fixed-rank-catalogue", CheckStatus::Pass};
  std::vector<CatalogueEntry> catalogue;
  std::mt19937 rng(12345);
  for (int rank : {2, 3}) {
    std::vector<FreeEndo> base = nielsen_family(rank);
    for (std::size_t i = 0; i < base.size(); ++i)
      catalogue.push_back({"F" + std::to_string(rank) + "-nielsen-" + std::to_string(i), base[i]});
    for (int t = 0; t < 8; ++t) {
      FreeEndo e = base[rng() % base.size()];
      int depth = 2 + static_cast<int>(rng() % std::max(profile.depth - 1, 1));
      for (int d = 1; d < depth; ++d) e = compose(base[rng() % base.size()], e);
      catalogue.push_back({"F" + std::to_string(rank) + "-composite-" + std::to_string(t), e});
    }
  }
  ProbeReport report = bh_catalogue_check(catalogue, profile.max_length);
  if (!report.passed) fail(r, "an approximation exceeded the ambient rank");
  if (catalogue.size() < 20) fail(r, "catalogue too small");
  note(r, "catalogue_size", static_cast<long long>(catalogue.size()));
  note(r, "length_bound", profile.max_length);
  return r;
}

// 4. For a -> ab, b -> b the approximation at L identifies <b, aba^-1>,
// which also passes the bounded inertia probe.
CheckResult check_fix_identification(const VerifyProfile& profile) {
  CheckResult r{"fix-identification", CheckStatus::Pass};
  Alphabet a(2);
  FreeEndo phi(a, {Word(a, {1, 2}), Word(a, {2})});
  FixApproximation approx = fix_subgroup_approx({phi}, profile.max_length);
  CoreGraph expected = CoreGraph::from_generators(a, {Word(a, {2}), Word(a, {1, 2, -1})});
  if (!(approx.graph == expected)) fail(r, "approximation differs from <b, aba^-1>");
  if (!approx.stabilized) fail(r, "approximation did not stabilize");
  ProbeReport probe = probe_inert(expected, {2, 4});
  if (!probe.passed) fail(r, "inertia probe failed");
  note(r, "fix_rank", expected.rank());
  note(r, "probe_candidates", probe.candidates_tested);
  return r;
}

// 5. Index-2 subgroup of the genus-2 surface group: abelianized free rank 6
// matches the Euler-characteristic count.
CheckResult check_surface_cover_rank(const VerifyProfile&) {
  CheckResult r{"surface-cover-rank", CheckStatus::Pass};
  Presentation s2 = Presentation::orientable_surface(2);
  Alphabet a = s2.alphabet;
  std::vector<Word> gens = {Word(a, {1, 1})};
  for (int j = 2; j <= 4; ++j) {
    gens.push_back(Word(a, {j}));
    gens.push_back(Word(a, {1, j, -1}));
  }
  CosetTable table = todd_coxeter(s2, gens);
  if (!table.complete() || table.index() != 2) {
    fail(r, "coset enumeration did not give index 2");
    return r;
  }
  Presentation sub = reidemeister_schreier(s2, table);
  AbelianInvariants inv = abelianization(sub);
  int expected = cover_rank({SurfaceDescriptor::Kind::Orientable, 2}, 2);
  if (inv.free_rank != expected || !inv.torsion.empty())
    fail(r, "abelianization disagrees with the Euler count");
  note(r, "free_rank", inv.free_rank);
  note(r, "euler_rank", expected);
  return r;
}

// 6. Piece bounds and Dehn reduction behaviour on surface relators.
CheckResult check_small_cancellation_gate(const VerifyProfile&) {
  CheckResult r{"small-cancellation-gate", CheckStatus::Pass};
  Presentation s2 = Presentation::orientable_surface(2);
  if (!piece_check(s2).satisfies_c6) fail(r, "genus-2 relator rejected");
  if (!piece_check(Presentation::nonorientable_surface(4)).satisfies_c6)
    fail(r, "4-crosscap relator rejected");
  if (piece_check(Presentation::nonorientable_surface(3)).satisfies_c6)
    fail(r, "3-crosscap relator accepted");

  Alphabet a = s2.alphabet;
  const Word& rel = s2.relators[0];
  std::mt19937 rng(99);
  auto random_word = [&](int len) {
    std::vector<Letter> ls;
    for (int i = 0; i < len; ++i) {
      int k = static_cast<int>(rng() % (2 * a.rank));
      ls.push_back(letter_from_key(k));
    }
    return Word(a, ls);
  };
  for (int t = 0; t < 50; ++t) {
    Word w(a);
    int count = 1 + static_cast<int>(rng() % 10);
    for (int i = 0; i < count; ++i) {
      Word u = random_word(static_cast<int>(rng() % 4));
      Word piece = concat(concat(u, rng() % 2 ? rel : invert(rel)), invert(u));
      w = concat(w, piece);
    }
    if (!dehn_is_trivial(s2, w)) fail(r, "trivial conjugate product survived");
  }
  for (int t = 0; t < 50; ++t) {
    Word w(a);
    do {
      w = random_word(8 + static_cast<int>(rng() % 7));
    } while (exponent_sum(w, 1) == 0 && exponent_sum(w, 2) == 0 && exponent_sum(w, 3) == 0 &&
             exponent_sum(w, 4) == 0);
    if (dehn_is_trivial(s2, w)) fail(r, "word with nonzero abelianized image killed");
  }
  note(r, "trivial_products", 50);
  note(r, "nontrivial_words", 50);
  return r;
}

// 7. Klein bottle endomorphism sweep: every non-identity fixed subgroup
// classifies as Z x Z, Z, or trivial.
CheckResult check_klein_endo_classification(const VerifyProfile&) {
  CheckResult r{"klein-endo-classification", CheckStatus::Pass};
  long long endos = 0, zz = 0, z = 0, trivial = 0, whole = 0;
  for (long long p = -3; p <= 3; ++p)
    for (long long q = -3; q <= 3; ++q)
      for (long long s = -3; s <= 3; ++s)
        for (long long t = -3; t <= 3; ++t) {
          KleinNormalForm ia{p, q}, ib{s, t};
          KleinNormalForm rel = klein_multiply(klein_multiply(ia, ib),
                                               klein_multiply(klein_invert(ia), ib));
          if (!(rel == KleinNormalForm{})) continue;
          ++endos;
          try {
            KleinFixReport rep = ns2_fix_classify(ia, ib, 6);
            bool identity = ia == KleinNormalForm{1, 0} && ib == KleinNormalForm{0, 1};
            switch (rep.cls) {
              case KleinFixClass::Whole:
                ++whole;
                if (!identity) fail(r, "non-identity endomorphism classified Whole");
                break;
              case KleinFixClass::ZxZ: ++zz; break;
              case KleinFixClass::Z: ++z; break;
              case KleinFixClass::Trivial: ++trivial; break;
            }
          } catch (const std::logic_error& e) {
            fail(r, std::string("unclassified: ") + e.what());
          }
        }
  note(r, "endomorphisms", endos);
  note(r, "class_whole", whole);
  note(r, "class_zxz", zz);
  note(r, "class_z", z);
  note(r, "class_trivial", trivial);
  return r;
}

// 8. Product ranks and euclidean/hyperbolic/mixed classification.
CheckResult check_product_rank_type(const VerifyProfile&) {
  CheckResult r{"product-rank-type", CheckStatus::Pass};
  struct Sample {
    const char* spec;
    int rank;
    ProductGroup::Type type;
  };
  const Sample samples[] = {
      {"F2 x Z", 3, ProductGroup::Type::Mixed},
      {"NS2^2 x C2", 5, ProductGroup::Type::Euclidean},
      {"F2 x NS3", 5, ProductGroup::Type::Hyperbolic},
      {"Z", 1, ProductGroup::Type::Euclidean},
      {"C2", 1, ProductGroup::Type::Euclidean},
      {"NS2 x Z^2 x C2", 5, ProductGroup::Type::Euclidean},
      {"F2 x F2", 4, ProductGroup::Type::Hyperbolic},
      {"S2", 4, ProductGroup::Type::Hyperbolic},
      {"NS2", 2, ProductGroup::Type::Euclidean},
      {"S1 x F2", 4, ProductGroup::Type::Mixed},
  };
  for (const Sample& s : samples) {
    ProductGroup g = parse_product(s.spec);
    if (g.rank() != s.rank) fail(r, std::string("rank mismatch for ") + s.spec);
    if (g.classify_type() != s.type) fail(r, std::string("type mismatch for ") + s.spec);
    ProductGroup rev = g;
    std::reverse(rev.factors.begin(), rev.factors.end());
    if (rev.classify_type() != s.type) fail(r, std::string("type not reorder-invariant: ") + s.spec);
  }
  note(r, "samples", static_cast<long long>(std::size(samples)));
  return r;
}

// 9. Central twists: exact rank excess for torsion sources, growth
// evidence for the infinite-order source.
CheckResult check_central_twist_rank(const VerifyProfile&) {
  CheckResult r{"central-twist-rank", CheckStatus::Evidence};
  CentralTwistReport z2f2 = central_twist_z2_f2();
  if (z2f2.fix_rank_exact != std::optional<int>(4) || !z2f2.exceeds_group_rank)
    fail(r, "C2 x F2 twist rank is not 4 > 3");
  CentralTwistReport z2ns3 = central_twist_z2_ns3();
  if (z2ns3.fix_rank_exact != std::optional<int>(5) || !z2ns3.exceeds_group_rank)
    fail(r, "C2 x NS3 twist rank is not 5 > 4");
  CentralTwistReport zf2 = central_twist_z_f2({4, 6, 8});
  if (!zf2.growth.strictly_increasing()) fail(r, "Z x F2 kernel ranks did not grow");
  note(r, "c2_f2_fix_rank", z2f2.fix_rank_exact.value_or(-1));
  note(r, "c2_ns3_fix_rank", z2ns3.fix_rank_exact.value_or(-1));
  for (auto [len, rank] : zf2.growth.entries)
    note(r, "z_f2_rank_L" + std::to_string(len), rank);
  return r;
}

// 10. Non-compressed fixed subgroups: five-generator Fix inside a
// four-generator overgroup, and the hyperbolic analogues.
CheckResult check_non_compressed_witnesses(const VerifyProfile&) {
  CheckResult r{"non-compressed-witnesses", CheckStatus::Pass};
  struct Expect {
    const char* id;
    int fix;
    int k;
  };
  const Expect expects[] = {{"euc-l2q1", 5, 4},   {"euc-l1p1q2", 5, 4}, {"hyp-FF", 4, 3},
                            {"hyp-SS", 6, 5},     {"hyp-NN", 6, 5},     {"hyp-mixed", 5, 4}};
  for (const Expect& e : expects) {
    NonCompressedReport rep = non_compressed_witness(e.id);
    if (!rep.generators_fixed) fail(r, std::string(e.id) + ": a generator is not fixed");
    if (!rep.contained_in_k) fail(r, std::string(e.id) + ": containment uncertified");
    if (!rep.fix_rank.exact() || rep.fix_rank.lower != e.fix)
      fail(r, std::string(e.id) + ": fix rank certificate mismatch");
    if (rep.k_rank.upper != e.k || !rep.strict)
      fail(r, std::string(e.id) + ": overgroup rank bound mismatch");
    note(r, std::string(e.id) + "_fix_rank", rep.fix_rank.lower);
  }
  return r;
}

// 11. Non-inert fixed subgroups: growth of the intersection with the
// skewed overgroup, plus the certified trivial intersection with <c>.
CheckResult check_non_inert_witnesses(const VerifyProfile&) {
  CheckResult r{"non-inert-witnesses", CheckStatus::Evidence};
  NonInertReport final_case = non_inert_witness("F2-Z-final", {4, 6, 8, 10});
  if (!final_case.growth.strictly_increasing()) fail(r, "F2 x Z intersection ranks did not grow");
  if (!final_case.fix_compressed_probe) fail(r, "F2 x Z compression probe failed");
  for (auto [len, rank] : final_case.growth.entries)
    note(r, "f2_z_rank_L" + std::to_string(len), rank);

  NonInertReport fr = non_inert_witness("Fr-NS3", {4, 6, 8});
  if (!fr.intersection_trivial_certified) fail(r, "Fix meets <c> nontrivially in F2 x NS3");
  if (!fr.growth.strictly_increasing()) fail(r, "F2 x NS3 intersection ranks did not grow");
  for (auto [len, rank] : fr.growth.entries)
    note(r, "f2_ns3_rank_L" + std::to_string(len), rank);

  for (const char* id : {"Sg-NS3", "NSk-NS3"}) {
    NonInertReport rep = non_inert_witness(id, {2, 4, 6});
    if (!rep.growth.strictly_increasing())
      fail(r, std::string(id) + ": intersection ranks did not grow");
    if (!rep.intersection_trivial_certified)
      fail(r, std::string(id) + ": <c> intersection uncertified");
  }
  return r;
}

// 12. Randomized soundness cross-checks of the equality oracles against
// independent normal forms.
CheckResult check_oracle_soundness(const VerifyProfile&) {
  CheckResult r{"oracle-soundness", CheckStatus::Pass};
  std::mt19937 rng(2024);
  long long checks = 0, discrepancies = 0;

  Alphabet f2(2);
  auto random_word = [&](Alphabet a, int len) {
    std::vector<Letter> ls;
    for (int i = 0; i < len; ++i) ls.push_back(letter_from_key(static_cast<int>(rng() % (2 * a.rank))));
    return Word(a, ls);
  };

  GroupContext free_ctx = GroupContext::free_group(2);
  GroupContext ab_ctx = GroupContext::abelian({0, 4});
  GroupContext klein_ctx = GroupContext::klein_bottle();

  for (int t = 0; t < 10000; ++t) {
    int mode = static_cast<int>(rng() % 3);
    Word u = random_word(f2, static_cast<int>(rng() % 9));
    Word v = random_word(f2, static_cast<int>(rng() % 9));
    if (rng() % 2) {
      // Known-equal pair: v = u with a cancelling pair spliced in.
      std::vector<Letter> ls = u.letters();
      Letter x = letter_from_key(static_cast<int>(rng() % 4));
      std::size_t pos = ls.empty() ? 0 : rng() % (ls.size() + 1);
      ls.insert(ls.begin() + pos, {x, -x});
      Word u2(f2, ls);
      if (mode == 2) {
        // splice a Klein relator occurrence instead
        std::vector<Letter> ks = u.letters();
        std::size_t kp = ks.empty() ? 0 : rng() % (ks.size() + 1);
        ks.insert(ks.begin() + kp, {1, 2, -1, 2});
        u2 = Word(f2, ks);
      }
      v = u2;
    }
    ++checks;
    if (mode == 0) {
      bool truth = u.letters() == v.letters();
      Verdict verdict = free_ctx.equal(u, v);
      if (verdict == Verdict::Unknown || (verdict == Verdict::Equal) != truth) ++discrepancies;
    } else if (mode == 1) {
      long long e1 = exponent_sum(u, 1) - exponent_sum(v, 1);
      long long e2 = exponent_sum(u, 2) - exponent_sum(v, 2);
      bool truth = e1 == 0 && ((e2 % 4) + 4) % 4 == 0;
      Verdict verdict = ab_ctx.equal(u, v);
      if (verdict == Verdict::Unknown || (verdict == Verdict::Equal) != truth) ++discrepancies;
    } else {
      bool truth = klein_normal_form(u) == klein_normal_form(v);
      Verdict verdict = klein_ctx.equal(u, v);
      if (verdict == Verdict::Unknown || (verdict == Verdict::Equal) != truth) ++discrepancies;
    }
  }
  if (discrepancies != 0) fail(r, "oracle disagreed with a normal form");
  note(r, "checks", checks);
  note(r, "discrepancies", discrepancies);
  return r;
}

using CheckFn = CheckResult (*)(const VerifyProfile&);

struct NamedCheck {
  const char* id;
  CheckFn fn;
};

const NamedCheck kChecks[] = {
    {"schreier-index", check_schreier_index},
    {"hanna-neumann-sweep", check_hanna_neumann_sweep},
    {"fixed-rank-catalogue", check_fixed_rank_catalogue},
    {"fix-identification", check_fix_identification},
    {"surface-cover-rank", check_surface_cover_rank},
    {"small-cancellation-gate", check_small_cancellation_gate},
    {"klein-endo-classification", check_klein_endo_classification},
    {"product-rank-type", check_product_rank_type},
    {"central-twist-rank", check_central_twist_rank},
    {"non-compressed-witnesses", check_non_compressed_witnesses},
    {"non-inert-witnesses", check_non_inert_witnesses},
    {"oracle-soundness", check_oracle_soundness},
};

}  // namespace

std::vector<std::string> all_check_ids() {
  std::vector<std::string> ids;
  for (const NamedCheck& c : kChecks) ids.emplace_back(c.id);
  return ids;
}

std::vector<CheckResult> run_checks(const VerifyProfile& profile,
                                    const std::vector<std::string>& selection) {
  for (const std::string& id : selection) {
    bool known = std::any_of(std::begin(kChecks), std::end(kChecks),
                             [&](const NamedCheck& c) { return id == c.id; });
    if (!known) throw std::invalid_argument("unknown check id: " + id);
  }
  std::vector<CheckResult> results;
  for (const NamedCheck& c : kChecks) {
    if (!selection.empty() &&
        std::find(selection.begin(), selection.end(), c.id) == selection.end())
      continue;
    auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = c.fn(profile);
    } catch (const std::exception& e) {
      r.id = c.id;
      r.status = CheckStatus::Fail;
      r.detail = std::string("exception: ") + e.what();
    }
    r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace gtw
