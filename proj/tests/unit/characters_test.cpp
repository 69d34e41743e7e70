#include "doctest.h"

#include "commprob/characters.hpp"
#include "commprob/constructions.hpp"

#include <cmath>
#include <complex>
#include <vector>

using namespace commprob;

TEST_CASE("C4 characters are multiplicative with exact quarter-turn values") {
  const Group c4 = cyclic(4);
  const auto chars = characters(c4);
  REQUIRE(chars.size() == 4);
  CHECK(chars[0].trivial());
  for (const Character& chi : chars) {
    for (Elem a = 0; a < 4; ++a) {
      for (Elem b = 0; b < 4; ++b) {
        const auto lhs = chi.value(c4.mul(a, b));
        const auto rhs = chi.value(a) * chi.value(b);
        CHECK(std::abs(lhs - rhs) < 1e-12);
      }
    }
  }
  // the faithful character sends the generator to exactly +-i
  bool found_i = false;
  for (const Character& chi : chars) {
    if (chi.order() == 4 && chi.value(1) == std::complex<double>(0.0, 1.0)) found_i = true;
  }
  CHECK(found_i);
}

TEST_CASE("character order and kernel agree") {
  const Group c4 = cyclic(4);
  for (const Character& chi : characters(c4)) {
    if (chi.order() == 2) {
      CHECK(chi.kernel() == std::vector<Elem>{0, 2});
      CHECK(chi.value(1) == std::complex<double>(-1.0, 0.0));
    }
    if (chi.trivial()) CHECK(chi.kernel().size() == 4);
  }
}

TEST_CASE("Klein group characters are real") {
  const Group klein = direct_product(cyclic(2), cyclic(2));
  int nontrivial = 0;
  for (const Character& chi : characters(klein)) {
    for (Elem a = 0; a < 4; ++a) {
      const Rational ph = chi.phase(a);
      CHECK((ph == Rational(0) || ph == Rational(1, 2)));
    }
    if (!chi.trivial()) ++nontrivial;
  }
  CHECK(nontrivial == 3);
}

TEST_CASE("exact orthogonality by kernel fibre counting") {
  // sum_a chi(a) vanishes for nontrivial chi: each value of chi is hit by
  // exactly |ker chi| elements, and the image is the full group of order()-th
  // roots of unity, which sums to zero. Verify the fibre counts exactly.
  for (const Group& g : {cyclic(12), direct_product(cyclic(2), cyclic(4)),
                         direct_product(cyclic(6), cyclic(6))}) {
    for (const Character& chi : characters(g)) {
      const int ord = chi.order();
      std::vector<int> fibre(ord, 0);
      for (Elem a = 0; a < g.order(); ++a) {
        const Rational ph = chi.phase(a);  // k/ord as a fraction of a turn
        const Rational scaled = ph * ord;
        REQUIRE(denominator(scaled) == 1);
        fibre[numerator(scaled).convert_to<int>()]++;
      }
      for (int k = 0; k < ord; ++k) CHECK(fibre[k] == g.order() / ord);
    }
  }
}

TEST_CASE("numeric orthogonality as a cross check") {
  const Group g = direct_product(cyclic(3), cyclic(4));
  const auto chars = characters(g);
  for (std::size_t i = 0; i < chars.size(); ++i) {
    for (std::size_t j = 0; j < chars.size(); ++j) {
      std::complex<double> sum = 0;
      for (Elem a = 0; a < g.order(); ++a) sum += chars[i].value(a) * std::conj(chars[j].value(a));
      const double want = (i == j) ? g.order() : 0.0;
      CHECK(std::abs(sum - want) < 1e-9);
    }
  }
}

TEST_CASE("unit_phase is exact on quarter turns") {
  CHECK(unit_phase(Rational(0)) == std::complex<double>(1, 0));
  CHECK(unit_phase(Rational(1, 2)) == std::complex<double>(-1, 0));
  CHECK(unit_phase(Rational(1, 4)) == std::complex<double>(0, 1));
  CHECK(unit_phase(Rational(3, 4)) == std::complex<double>(0, -1));
  CHECK(std::abs(unit_phase(Rational(1, 3)) - std::polar(1.0, 2.0943951023931953)) < 1e-12);
}
