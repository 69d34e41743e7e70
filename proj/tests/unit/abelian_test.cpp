#include "doctest.h"

#include "commprob/abelian.hpp"
#include "commprob/constructions.hpp"

#include <stdexcept>
#include <vector>

using namespace commprob;

TEST_CASE("invariant factors form a divisor chain and match known groups") {
  CHECK(abelian_structure(cyclic(12)).invariant_factors == std::vector<int>{12});
  CHECK(abelian_structure(cyclic(1)).invariant_factors == std::vector<int>{});

  const Group klein = direct_product(cyclic(2), cyclic(2));
  CHECK(abelian_structure(klein).invariant_factors == std::vector<int>{2, 2});

  // C2 x C6 is already in invariant-factor form
  const Group c2c6 = direct_product(cyclic(2), cyclic(6));
  CHECK(abelian_structure(c2c6).invariant_factors == std::vector<int>{2, 6});

  // C2 x C3 is C6 in disguise
  const Group c2c3 = direct_product(cyclic(2), cyclic(3));
  CHECK(abelian_structure(c2c3).invariant_factors == std::vector<int>{6});

  const Group e8 = direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2));
  CHECK(abelian_structure(e8).invariant_factors == std::vector<int>{2, 2, 2});
}

TEST_CASE("coordinate maps are mutually inverse group isomorphisms") {
  const Group g = direct_product(cyclic(4), cyclic(6));
  const AbelianStructure st = abelian_structure(g);
  CHECK(st.order == 24);
  REQUIRE(st.coordinates.size() == 24);
  REQUIRE(st.element_at.size() == 24);
  for (Elem x = 0; x < g.order(); ++x) {
    CHECK(st.element_of(st.coordinates[x]) == x);
    for (Elem y = 0; y < g.order(); ++y) {
      std::vector<int> sum(st.invariant_factors.size());
      for (std::size_t j = 0; j < sum.size(); ++j)
        sum[j] = (st.coordinates[x][j] + st.coordinates[y][j]) % st.invariant_factors[j];
      CHECK(st.element_of(sum) == g.mul(x, y));
    }
  }
}

TEST_CASE("element_at enumerates by mixed radix, least significant factor first") {
  const Group klein = direct_product(cyclic(2), cyclic(2));
  const AbelianStructure st = abelian_structure(klein);
  CHECK(st.element_at[0] == 0);
  // ranks 1 and 2 differ in exactly the first/second factor coordinate
  CHECK(st.coordinates[st.element_at[1]] == std::vector<int>{1, 0});
  CHECK(st.coordinates[st.element_at[2]] == std::vector<int>{0, 1});
}

TEST_CASE("subgroup lattices of small abelian groups have the known size") {
  // C12: one subgroup per divisor of 12
  CHECK(subgroups_of_abelian(cyclic(12)).size() == 6);
  // Klein group: trivial, three C2, full
  CHECK(subgroups_of_abelian(direct_product(cyclic(2), cyclic(2))).size() == 5);
  // C2 x C4: 8 subgroups
  CHECK(subgroups_of_abelian(direct_product(cyclic(2), cyclic(4))).size() == 8);
  // C2 x C2 x C2: 1 + 7 + 7 + 1
  const Group e8 = direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2));
  const auto subs = subgroups_of_abelian(e8);
  CHECK(subs.size() == 16);
  for (const Subgroup& h : subs) CHECK(e8.order() % h.order() == 0);
}

TEST_CASE("abelian helpers reject nonabelian groups and oversized inputs") {
  CHECK_THROWS_AS(abelian_structure(dihedral(4)), std::invalid_argument);
  CHECK_THROWS_AS(subgroups_of_abelian(dihedral(4)), std::invalid_argument);
  Limits tight;
  tight.abelian_cap = 8;
  CHECK_THROWS_AS(abelian_structure(cyclic(9), tight), std::length_error);
  CHECK_NOTHROW(abelian_structure(cyclic(8), tight));
}
