#include "doctest.h"

#include "commprob/constructions.hpp"
#include "commprob/descriptor.hpp"
#include "commprob/probability.hpp"
#include "commprob/spectrum.hpp"

#include <stdexcept>

using namespace commprob;

TEST_CASE("frozen commuting probabilities of standard groups") {
  CHECK(commuting_probability(dihedral(4)) == Rational(5, 8));
  CHECK(commuting_probability(dihedral(3)) == Rational(1, 2));
  CHECK(commuting_probability(dihedral(9)) == Rational(1, 3));
  CHECK(commuting_probability(symmetric(3)) == Rational(1, 2));
  CHECK(commuting_probability(symmetric(4)) == Rational(5, 24));
  CHECK(commuting_probability(extraspecial(2, 1)) == Rational(5, 8));
  CHECK(commuting_probability(extraspecial(2, 2)) == Rational(17, 32));
  CHECK(commuting_probability(extraspecial(3, 1)) == Rational(11, 27));
  CHECK(commuting_probability(cyclic(60)) == Rational(1));
  CHECK(commuting_probability(parse_descriptor("D3xD3")) == Rational(1, 4));
  CHECK(commuting_probability(parse_descriptor("D4xD4")) == Rational(25, 64));
}

TEST_CASE("odd dihedral groups follow the closed form (m+3)/(4m)") {
  for (int m = 3; m <= 31; m += 2) {
    CHECK(commuting_probability(dihedral(m)) == Rational(m + 3, 4 * m));
    CHECK(dihedral_probability(m) == Rational(m + 3, 4 * m));
  }
  // even m gains a central reflection class: (m+6)/(4m)
  for (int m = 4; m <= 16; m += 2) {
    CHECK(commuting_probability(dihedral(m)) == Rational(m + 6, 4 * m));
  }
}

TEST_CASE("three independent routes agree on every corpus group up to order 100") {
  for (const SpectrumEntry& e : corpus(100)) {
    const Group g = parse_descriptor(e.witness);
    const Rational by_classes = commuting_probability(g);
    CHECK(by_classes == e.value);
    CHECK(by_classes == commuting_probability_by_pairs(g));
    CHECK(centralizer_order_sum(g) == static_cast<long long>(class_count(g)) * g.order());
  }
}

TEST_CASE("coset pair table for D4 over its rotation subgroup") {
  const Group d4 = dihedral(4);
  const Elem rot[] = {1};
  const CosetPairTable t = coset_pair_table(d4, subgroup_generated(d4, rot));
  REQUIRE(t.quotient_order == 2);
  CHECK(t.term(0, 0) == Rational(1));
  CHECK(t.term(0, 1) == Rational(1, 2));
  CHECK(t.term(1, 0) == Rational(1, 2));
  CHECK(t.term(1, 1) == Rational(1, 2));
  CHECK(t.average == Rational(5, 8));
  CHECK(t.representatives[0] == 0);
}

TEST_CASE("coset pair table for D9 over C9 shows the 1/9 pattern") {
  const Group d9 = dihedral(9);
  const Elem rot[] = {1};
  const CosetPairTable t = coset_pair_table(d9, subgroup_generated(d9, rot));
  REQUIRE(t.quotient_order == 2);
  CHECK(t.term(0, 0) == Rational(1));
  CHECK(t.term(0, 1) == Rational(1, 9));
  CHECK(t.term(1, 1) == Rational(1, 9));
  CHECK(t.average == Rational(1, 3));
}

TEST_CASE("coset table averages recover P(G) for mixed normal subgroups") {
  const Group e22 = extraspecial(2, 2);
  const CosetPairTable t = coset_pair_table(e22, center(e22));
  CHECK(t.quotient_order == 16);
  CHECK(t.average == Rational(17, 32));

  const Group s4 = symmetric(4);
  const CosetPairTable ts4 = coset_pair_table(s4, commutator_subgroup(s4));
  CHECK(ts4.quotient_order == 2);
  CHECK(ts4.average == Rational(5, 24));
}

TEST_CASE("twisted-pair identity reproduces each coset term") {
  const Group g = parse_descriptor("E(2,1)xC2");
  const Subgroup z = center(g);  // C2 x C2, quotient of order 4
  const CosetPairTable t = coset_pair_table(g, z);
  for (int c = 0; c < t.quotient_order; ++c)
    for (int d = 0; d < t.quotient_order; ++d)
      CHECK(coset_term_by_twists(g, z, t.representatives[c], t.representatives[d]) == t.term(c, d));

  const Group d6 = dihedral(6);
  const Elem rot[] = {1};
  const Subgroup c6 = subgroup_generated(d6, rot);
  const CosetPairTable td = coset_pair_table(d6, c6);
  for (int c = 0; c < td.quotient_order; ++c)
    for (int d = 0; d < td.quotient_order; ++d)
      CHECK(coset_term_by_twists(d6, c6, td.representatives[c], td.representatives[d]) ==
            td.term(c, d));
}

TEST_CASE("quotient bound P(G) >= P(G/N)/|N| with known exact values") {
  const Group d4 = dihedral(4);
  const QuotientBound qb = quotient_bound(d4, center(d4));
  CHECK(qb.probability == Rational(5, 8));
  CHECK(qb.bound == Rational(1, 2));  // P(Klein)/2
  CHECK(qb.probability >= qb.bound);

  const Group e31 = extraspecial(3, 1);
  const QuotientBound qe = quotient_bound(e31, center(e31));
  CHECK(qe.probability == Rational(11, 27));
  CHECK(qe.bound == Rational(1, 3));

  const Group s4 = symmetric(4);
  const QuotientBound qs = quotient_bound(s4, commutator_subgroup(s4));
  CHECK(qs.probability == Rational(5, 24));
  CHECK(qs.bound == Rational(1, 12));  // P(C2)/12
}

TEST_CASE("quotient_commuting_probability matches a direct quotient build") {
  const Group d12 = dihedral(12);
  const Subgroup z = center(d12);
  CHECK(quotient_commuting_probability(d12, z) == commuting_probability(quotient(d12, z)));
}

TEST_CASE("pair-based routes respect the pair cap") {
  Limits tight;
  tight.pair_cap = 16;
  CHECK_THROWS_AS(commuting_pair_count(dihedral(9), tight), std::length_error);
  CHECK_THROWS_AS(commuting_probability_by_pairs(dihedral(9), tight), std::length_error);
  CHECK_NOTHROW(commuting_pair_count(dihedral(8), tight));
}

TEST_CASE("coset table rejects non-normal subgroups") {
  const Group d3 = dihedral(3);
  const Elem refl[] = {3};
  CHECK_THROWS_AS(coset_pair_table(d3, subgroup_generated(d3, refl)), std::invalid_argument);
}
