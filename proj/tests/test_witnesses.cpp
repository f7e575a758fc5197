#include <stdexcept>

#include "doctest.h"
#include "gtw/witnesses.hpp"

using namespace gtw;

TEST_CASE("central twist on (Z/2) x F2 fixes a rank-4 subgroup of a rank-3 group") {
  auto rep = central_twist_z2_f2();
  CHECK(rep.group_rank == 3);
  REQUIRE(rep.fix_rank_exact.has_value());
  CHECK(*rep.fix_rank_exact == 4);
  CHECK(rep.exceeds_group_rank);
}

TEST_CASE("central twist on Z x F2 has strictly growing approximations") {
  auto rep = central_twist_z_f2({4, 6, 8});
  CHECK(rep.growth.strictly_increasing());
  CHECK(rep.exceeds_group_rank);
}

TEST_CASE("the F2 x F2 witness is fixed but not compressed") {
  auto rep = non_compressed_witness("hyp-FF");
  CHECK(rep.generators_fixed);
  CHECK(rep.contained_in_k);
  CHECK(rep.fix_rank.exact());
  CHECK(rep.fix_rank.lower == 4);
  CHECK(rep.k_rank.upper == 3);
  CHECK(rep.ok());
}

TEST_CASE("the euclidean witness on NS2^2 x C2 is fixed but not compressed") {
  auto rep = non_compressed_witness("euc-l2q1");
  CHECK(rep.ok());
  CHECK(rep.fix_rank.lower == 5);
  CHECK(rep.k_rank.upper == 4);
  CHECK_THROWS_AS(non_compressed_witness("no-such-case"), std::invalid_argument);
}

TEST_CASE("the final F2 x Z witness has growing intersection rank") {
  auto rep = non_inert_witness("F2-Z-final", {4, 6});
  CHECK(rep.growth.strictly_increasing());
  CHECK(rep.fix_compressed_probe);
}

TEST_CASE("product catalogue bound on a euclidean group") {
  ProductGroup g = parse_product("Z x Z");
  std::vector<std::vector<ProductElement>> images = {
      {parse_product_element(g, "( ; a)")}, {parse_product_element(g, "(a ; )")}};
  ProductEndo swap(g, images);
  auto rep = bh_products_check(g, {swap}, 6);
  CHECK(rep.passed);
  CHECK(rep.group_rank == 2);
  CHECK_THROWS_AS(bh_products_check(parse_product("F2 x Z"), {}, 4), std::invalid_argument);
}
