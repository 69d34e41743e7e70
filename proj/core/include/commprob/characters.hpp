#pragma once

#include "commprob/abelian.hpp"
#include "commprob/rational.hpp"

#include <complex>
#include <memory>

namespace commprob {

// Complex character of a finite abelian group, stored as an exponent tuple
// against the invariant-factor decomposition. Values are kept as exact
// rational phases (fractions of a full turn); floating point enters only when
// a complex number is requested.
class Character {
 public:
  Character(std::shared_ptr<const AbelianStructure> structure, std::vector<int> exponents);

  // Phase of the value at element a, in [0, 1).
  Rational phase(Elem a) const;
  std::complex<double> value(Elem a) const;

  bool trivial() const;
  // Multiplicative order of the character: lcm_j d_j / gcd(e_j, d_j).
  int order() const;
  // Sorted elements with value 1.
  std::vector<Elem> kernel() const;

  const std::vector<int>& exponents() const noexcept { return exponents_; }
  const AbelianStructure& structure() const noexcept { return *structure_; }

 private:
  std::shared_ptr<const AbelianStructure> structure_;
  std::vector<int> exponents_;
};

// exp(2*pi*i*phase) with exact results on quarter turns.
std::complex<double> unit_phase(const Rational& phase);

// All |A| characters of an abelian group, the trivial character first, in
// mixed-radix order of the exponent tuples (least significant factor first).
std::vector<Character> characters(const Group& a, const Limits& lim = {});

}  // namespace commprob
