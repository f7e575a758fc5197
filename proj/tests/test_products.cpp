#include <stdexcept>

#include "doctest.h"
#include "gtw/products.hpp"

using namespace gtw;

TEST_CASE("parsing, ranks, names") {
  ProductGroup g = parse_product("F2 x NS3");
  REQUIRE(g.factors.size() == 2);
  CHECK(g.rank() == 5);
  CHECK(g.name() == "F2 x NS3");
  CHECK(g.classify_type() == ProductGroup::Type::Hyperbolic);
  CHECK(parse_product("F2 x Z").classify_type() == ProductGroup::Type::Mixed);

  ProductGroup e = parse_product("NS2^2 x C2");
  CHECK(e.factors.size() == 3);
  CHECK(e.rank() == 5);
  CHECK(e.classify_type() == ProductGroup::Type::Euclidean);
  CHECK(e.name() == "NS2^2 x C2");

  CHECK(parse_product("S2 x S2").classify_type() == ProductGroup::Type::Hyperbolic);
  CHECK(parse_product("Z").rank() == 1);
  CHECK(parse_product("Z x Z").classify_type() == ProductGroup::Type::Euclidean);
  CHECK_THROWS_AS(parse_product("Q8"), std::invalid_argument);
}

TEST_CASE("factor properties") {
  Factor z{Factor::Kind::Free, 1};
  CHECK(z.abelian());
  CHECK(z.nontrivial_center());
  CHECK(z.name() == "Z");

  Factor ns2{Factor::Kind::NonOrientable, 2};
  CHECK(!ns2.abelian());
  CHECK(ns2.nontrivial_center());

  Factor s2{Factor::Kind::Orientable, 2};
  CHECK(s2.rank() == 4);
  CHECK(!s2.nontrivial_center());
  CHECK(s2.context().decides());

  Factor ns3{Factor::Kind::NonOrientable, 3};
  CHECK(!ns3.context().decides());
}

TEST_CASE("element arithmetic and parsing") {
  ProductGroup g = parse_product("F2 x NS2");
  ProductElement x = parse_product_element(g, "(a b ; a)");
  ProductElement y = parse_product_element(g, "(B ; b)");
  ProductElement xy = multiply(x, y);
  CHECK(xy.components[0] == parse_word(Alphabet(2), "a"));
  CHECK(element_trivial(g, multiply(x, invert(x))) == Verdict::Equal);
  CHECK(parse_product_element(g, element_str(x)) == x);
  // Klein component comparison goes through the normal form.
  ProductElement u = parse_product_element(g, "( ; a b A b)");
  CHECK(element_trivial(g, u) == Verdict::Equal);
}

TEST_CASE("endomorphism construction verifies relator images") {
  ProductGroup g = parse_product("NS2");
  auto mk = [&](const std::string& ia, const std::string& ib) {
    return std::vector<std::vector<ProductElement>>{
        {parse_product_element(g, ia), parse_product_element(g, ib)}};
  };
  CHECK_NOTHROW(ProductEndo(g, mk("(a)", "(b)")));
  CHECK_NOTHROW(ProductEndo(g, mk("(a)", "(B)")));
  // a -> b does not kill a b a^-1 b.
  CHECK_THROWS_AS(ProductEndo(g, mk("(b)", "(b)")), std::invalid_argument);
}

TEST_CASE("certified fixed elements of the coordinate swap on Z x Z") {
  ProductGroup g = parse_product("Z x Z");
  std::vector<std::vector<ProductElement>> images = {
      {parse_product_element(g, "( ; a)")}, {parse_product_element(g, "(a ; )")}};
  ProductEndo swap(g, images);
  auto buckets = fix_words_product(swap, 4);
  CHECK(buckets.uncertain.empty());
  ProductElement diag = parse_product_element(g, "(a ; a)");
  ProductElement off = parse_product_element(g, "(a ; )");
  auto found = [&](const ProductElement& e) {
    for (const auto& c : buckets.certified)
      if (c == e) return true;
    return false;
  };
  CHECK(found(diag));
  CHECK(!found(off));
}

TEST_CASE("center and centralizer descriptions") {
  CHECK(center(parse_product("F2 x F2")).rank() == 0);
  CHECK(center(parse_product("Z x F2")).free_rank == 1);
  auto euc = center(parse_product("NS2^2 x C2"));
  CHECK(euc.free_rank == 2);
  CHECK(euc.torsion_orders == std::vector<int>{2});

  ProductGroup g = parse_product("F2 x F2");
  auto c = centralizer(g, parse_product_element(g, "(a ; )"));
  CHECK(c.free_rank == 3);
  CHECK(centralizer(g, identity_element(g)).whole);
}

TEST_CASE("isomorphism of hyperbolic products is multiset equality of factors") {
  CHECK(isomorphic(parse_product("F2 x S2"), parse_product("S2 x F2")));
  CHECK(!isomorphic(parse_product("F2 x F2"), parse_product("F2 x F3")));
  CHECK_THROWS_AS(isomorphic(parse_product("Z x Z"), parse_product("Z x Z")),
                  std::invalid_argument);
}

TEST_CASE("rectangular decomposition of the swap and a mixing witness") {
  ProductGroup g = parse_product("F2 x F2");
  Alphabet a(2);
  auto elem = [&](int coord, const std::string& text) {
    ProductElement e = identity_element(g);
    e.components[coord] = parse_word(a, text);
    return e;
  };
  std::vector<std::vector<ProductElement>> swap_images = {
      {elem(1, "a"), elem(1, "b")}, {elem(0, "a"), elem(0, "b")}};
  ProductEndo swap(g, swap_images);
  auto res = rectangular_decompose(swap);
  REQUIRE(res.decomposition.has_value());
  CHECK(res.decomposition->target == std::vector<int>{1, 0});
  CHECK(recomposition_matches(swap, *res.decomposition));

  ProductElement mix = identity_element(g);
  mix.components[0] = parse_word(a, "a");
  mix.components[1] = parse_word(a, "a");
  std::vector<std::vector<ProductElement>> mix_images = {
      {mix, elem(0, "b")}, {elem(1, "a"), elem(1, "b")}};
  ProductEndo mixing(g, mix_images);
  auto res2 = rectangular_decompose(mixing);
  CHECK(!res2.decomposition.has_value());
  REQUIRE(res2.witness.has_value());
  CHECK(res2.witness->first == 0);
  CHECK(res2.witness->second == 1);
}

TEST_CASE("fixed subgroup of a twisted cycle is the twisted diagonal") {
  Alphabet a(2);
  FreeEndo id = FreeEndo::identity(a);
  auto rep = fix_of_cycle({id, id}, 8);
  CHECK(rep.rank == 2);
  FreeEndo phi(a, {parse_word(a, "ab"), parse_word(a, "b")});
  auto rep2 = fix_of_cycle({phi, id}, 10);
  CHECK(rep2.rank == 2);
  CHECK(rep2.composite.apply(parse_word(a, "a")) == parse_word(a, "ab"));
}
