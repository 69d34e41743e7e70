#include "doctest.h"

#include "commprob/descriptor.hpp"
#include "commprob/constructions.hpp"
#include "commprob/probability.hpp"

#include <stdexcept>

using namespace commprob;

TEST_CASE("atoms parse to the expected groups") {
  CHECK(parse_descriptor("C6").order() == 6);
  CHECK(parse_descriptor("D4").order() == 8);
  CHECK(parse_descriptor("S4").order() == 24);
  CHECK(parse_descriptor("E(2,2)").order() == 32);
  CHECK(parse_descriptor("E(3,1)").order() == 27);
  CHECK(same_table(parse_descriptor("D4"), dihedral(4)));
  CHECK(same_table(parse_descriptor("C1"), cyclic(1)));
}

TEST_CASE("products and quotients compose left to right") {
  const Group g = parse_descriptor("D3xD3");
  CHECK(g.order() == 36);
  CHECK(g.descriptor() == "D3xD3");
  CHECK(same_table(g, direct_product(dihedral(3), dihedral(3))));

  const Group q = parse_descriptor("D4/Z");
  CHECK(q.order() == 4);
  CHECK(q.abelian());

  const Group qq = parse_descriptor("D4/G'");
  CHECK(qq.order() == 4);

  // left-associative: (E(2,1)xE(2,1))/Z, centre C2 x C2
  const Group big = parse_descriptor("E(2,1)xE(2,1)/Z");
  CHECK(big.order() == 64 / 4);

  const Group triple = parse_descriptor("C2xC2xC2");
  CHECK(triple.order() == 8);
  CHECK(triple.abelian());
}

TEST_CASE("parsed groups compute the same probabilities as built ones") {
  CHECK(commuting_probability(parse_descriptor("D4")) == Rational(5, 8));
  CHECK(commuting_probability(parse_descriptor("D3xD3")) == Rational(1, 4));
  CHECK(commuting_probability(parse_descriptor("S4/G'")) == Rational(1));
}

TEST_CASE("errors carry the byte offset of the failure") {
  auto offset_of = [](const std::string& text) -> std::size_t {
    try {
      parse_descriptor(text);
    } catch (const DescriptorError& e) {
      return e.offset();
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(offset_of("Q8") == 0);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("D") == 1);
  CHECK(offset_of("D4x") == 3);
  CHECK(offset_of("E(2") == 3);
  CHECK(offset_of("D4/X") == 3);
  CHECK(offset_of("D4 ") == 2);
  CHECK(offset_of("E(4,1)") != static_cast<std::size_t>(-1));  // 4 is not prime
  CHECK_THROWS_AS(parse_descriptor("S9"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("C0"), std::invalid_argument);
}

TEST_CASE("descriptor respects the order cap") {
  Limits tight;
  tight.order_cap = 100;
  CHECK_THROWS_AS(parse_descriptor("C101", tight), std::length_error);
  CHECK_THROWS_AS(parse_descriptor("D4xD4xD4", tight), std::length_error);
  CHECK_NOTHROW(parse_descriptor("C100", tight));
}
