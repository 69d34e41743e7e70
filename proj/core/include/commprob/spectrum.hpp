#pragma once

#include "commprob/group.hpp"
#include "commprob/rational.hpp"

#include <optional>

namespace commprob {

// One observed commuting-probability value with a witness group.
struct SpectrumEntry {
  Rational value;
  std::string witness;  // descriptor, re-parseable
  int order = 1;
};

// Deterministic survey of P over small groups: cyclic, dihedral,
// extraspecial, and symmetric (n <= 5) groups within the order bound, all
// pairwise direct products of those that stay within the bound, and the
// central quotient of every group listed. Sorted by value descending, then
// order ascending, then witness. max_order <= 2048.
std::vector<SpectrumEntry> corpus(int max_order);

// (1 + 4^-n) / 2: the decreasing sequence 1, 5/8, 17/32, 65/128, ...
// attained by the extraspecial-2 groups; n >= 0.
Rational joseph_value(int n);

// Classification of the entries with value >= 7/16: above that threshold the
// only possible values are 7/16, 1/2, 1, and the joseph_value sequence.
struct RusinReport {
  struct Violation {
    SpectrumEntry entry;
  };
  int conforming = 0;
  std::vector<Violation> violations;
};
RusinReport rusin_interval_check(const std::vector<SpectrumEntry>& entries);

// Search bounds for dihedral_product_search.
struct SearchBounds {
  int max_factors = 8;
  int max_m = 100000;
};

// The lexicographically smallest nondecreasing tuple of odd m_i >= 3 with
//   prod_i (m_i + 3) / (4 m_i) = 1 / n,
// i.e. P(D_{m_1} x ... x D_{m_k}) = 1/n. Empty tuple for n = 1. Returns
// nullopt when the bounded search exhausts (reported, never silent).
std::optional<std::vector<int>> dihedral_product_search(int n, const SearchBounds& bounds = {});

// P(D_m) = (m + 3) / (4m).
Rational dihedral_probability(int m);

// Finite subsets of [0, 1], sorted ascending, duplicates removed.
class RationalSet {
 public:
  RationalSet() = default;
  explicit RationalSet(std::vector<Rational> values);  // validates range
  const std::vector<Rational>& values() const noexcept { return values_; }
  bool contains(const Rational& v) const;
  std::optional<Rational> max() const;

 private:
  std::vector<Rational> values_;
};

// union over primes p of (1/p) X  — one derived-set step.
RationalSet derived_step(const RationalSet& x, const std::vector<int>& primes);

// union over k <= k_bound with exactly n prime factors (with multiplicity)
// of (1/k) X. n = 0 gives X itself.
RationalSet omega_layer(const RationalSet& x, int n, int k_bound);

// Cluster of corpus values near a candidate limit point.
struct LimitCluster {
  Rational limit;
  std::vector<SpectrumEntry> members;  // entries with |value - limit| <= epsilon
  int at_limit = 0;                    // members equal to the limit
  int above = 0;                       // members strictly above
  bool one_sided = true;               // no member below the limit
};

// Candidates are v / k for every distinct entry value v and 1 <= k <=
// max_divisor; clusters with at least two members are reported, sorted by
// limit descending.
std::vector<LimitCluster> limit_membership_scan(const std::vector<SpectrumEntry>& entries,
                                                const Rational& epsilon, int max_divisor = 16);

}  // namespace commprob
