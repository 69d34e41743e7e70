#include "commprob/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace commprob {

Character::Character(std::shared_ptr<const AbelianStructure> structure, std::vector<int> exponents)
    : structure_(std::move(structure)), exponents_(std::move(exponents)) {
  if (exponents_.size() != structure_->invariant_factors.size())
    throw std::invalid_argument("exponent tuple has wrong length");
  for (std::size_t j = 0; j < exponents_.size(); ++j)
    if (exponents_[j] < 0 || exponents_[j] >= structure_->invariant_factors[j])
      throw std::invalid_argument("character exponent out of range");
}

Rational Character::phase(Elem a) const {
  const auto& coords = structure_->coordinates.at(a);
  Rational t(0);
  for (std::size_t j = 0; j < exponents_.size(); ++j)
    t += Rational(static_cast<long long>(exponents_[j]) * coords[j], structure_->invariant_factors[j]);
  // Reduce modulo one full turn.
  const BigInt whole = numerator(t) / denominator(t);
  t -= Rational(whole);
  if (t < 0) t += 1;
  return t;
}

std::complex<double> unit_phase(const Rational& phase) {
  if (denominator(phase) == 1) return {1.0, 0.0};
  if (denominator(phase) == 2) return {-1.0, 0.0};
  if (denominator(phase) == 4) return numerator(phase) == 1 ? std::complex<double>{0.0, 1.0}
                                                            : std::complex<double>{0.0, -1.0};
  const double t = rational_double(phase);
  return {std::cos(2 * std::numbers::pi * t), std::sin(2 * std::numbers::pi * t)};
}

std::complex<double> Character::value(Elem a) const { return unit_phase(phase(a)); }

bool Character::trivial() const {
  for (int e : exponents_)
    if (e != 0) return false;
  return true;
}

int Character::order() const {
  long long o = 1;
  for (std::size_t j = 0; j < exponents_.size(); ++j) {
    const int d = structure_->invariant_factors[j];
    o = std::lcm(o, static_cast<long long>(d / std::gcd(exponents_[j], d)));
  }
  return static_cast<int>(o);
}

std::vector<Elem> Character::kernel() const {
  std::vector<Elem> ker;
  for (int a = 0; a < structure_->order; ++a)
    if (phase(static_cast<Elem>(a)) == 0) ker.push_back(static_cast<Elem>(a));
  return ker;
}

std::vector<Character> characters(const Group& a, const Limits& lim) {
  auto structure = std::make_shared<const AbelianStructure>(abelian_structure(a, lim));
  const auto& d = structure->invariant_factors;
  std::vector<Character> chars;
  chars.reserve(a.order());
  std::vector<int> e(d.size(), 0);
  for (int count = 0; count < a.order(); ++count) {
    chars.emplace_back(structure, e);
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (++e[j] < d[j]) break;
      e[j] = 0;
    }
  }
  return chars;
}

}  // namespace commprob
