#include "doctest.h"
#include "gtw/morphisms.hpp"

using namespace gtw;

namespace {
Word w(const std::string& s, int rank = 2) { return parse_word(Alphabet(rank), s); }
}

TEST_CASE("apply and compose") {
  Alphabet a(2);
  FreeEndo phi(a, {w("ab"), w("b")});
  CHECK(phi.apply(w("aB")) == w("a"));
  CHECK(compose(phi, phi).apply(w("a")) == w("abb"));
  CHECK(FreeEndo::identity(a).is_identity());
  CHECK(compose(phi, FreeEndo::identity(a)) == phi);
}

TEST_CASE("parse_endo") {
  Alphabet a(2);
  FreeEndo phi = parse_endo(a, "a -> a b\nb -> b\n");
  CHECK(phi.images()[0] == w("ab"));
  CHECK(phi.images()[1] == w("b"));
}

TEST_CASE("image subgroup") {
  Alphabet a(2);
  CHECK(image_subgroup(FreeEndo::identity(a)).index() == 1);
  FreeEndo drop(a, {w("a"), w("a")});
  CHECK(image_subgroup(drop).rank() == 1);
}

TEST_CASE("fixed words of a -> ab, b -> b fold to <b, a b A>") {
  Alphabet a(2);
  FreeEndo phi(a, {w("ab"), w("b")});
  auto approx = fix_subgroup_approx({phi}, 10);
  CHECK(approx.stabilized);
  CoreGraph expected = CoreGraph::from_generators(a, {w("b"), w("abA")});
  CHECK(approx.graph == expected);
  for (const Word& g : approx.graph.generators()) CHECK(phi.apply(g) == g);
}

TEST_CASE("fixed words equal the equalizer with the identity") {
  Alphabet a(2);
  FreeEndo phi(a, {w("ab"), w("b")});
  CHECK(fixed_words({phi}, 6) == equalizer_words({phi, FreeHom::identity(a)}, 6));
}

TEST_CASE("bounded fixed-word search is sound and finds everything here") {
  Alphabet a(2);
  FreeEndo phi(a, {w("ab"), w("b")});
  CHECK(fixed_words_bounded({phi}, 8) == fixed_words({phi}, 8));
}

TEST_CASE("minimal image search finds a rank-collapsing composite") {
  Alphabet a(2);
  FreeEndo collapse(a, {w("a"), w("a")});
  FreeEndo swap(a, {w("b"), w("a")});
  auto res = minimal_image_search({swap, collapse}, 2);
  CHECK(res.image_rank == 1);
  auto res_id = minimal_image_search({swap}, 3);
  CHECK(res_id.image_rank == 2);
}

TEST_CASE("catalogue rank bound holds for automorphisms and a collapse") {
  Alphabet a(2);
  std::vector<CatalogueEntry> cat = {
      {"id", FreeEndo::identity(a)},
      {"transvection", FreeEndo(a, {w("ab"), w("b")})},
      {"swap", FreeEndo(a, {w("b"), w("a")})},
      {"collapse", FreeEndo(a, {w("a"), w("a")})},
  };
  auto rep = bh_catalogue_check(cat, 8);
  CHECK(rep.passed);
}

TEST_CASE("sections equalizer check") {
  Alphabet big(2), small(1);
  FreeHom pi(big, {Word(small, {1}), Word(small)});  // a -> a, b -> 1
  FreeHom s1(small, {Word(big, {1})});               // a -> a
  FreeHom s2(small, {parse_word(big, "b a")});       // a -> b a
  auto rep = sections_equalizer_check(pi, {s1, s2}, 8);
  CHECK(rep.passed);
}

TEST_CASE("main inequality holds on a desk-scale instance") {
  Alphabet a(2);
  FreeEndo phi(a, {w("ab"), w("b")});
  CoreGraph k = CoreGraph::from_generators(a, {w("b"), w("abA")});
  auto rep = verify_main_free({phi}, phi, k, 10);
  CHECK(rep.hypothesis_holds);
  CHECK(rep.conclusion_holds);
  CHECK(rep.intersection_rank <= rep.k_rank);
}
