#pragma once

#include "commprob/group.hpp"
#include "commprob/rational.hpp"

namespace commprob {

// P(G) = (number of commuting ordered pairs) / |G|^2, computed exactly as
// (number of conjugacy classes) / |G|.
Rational commuting_probability(const Group& g);

// Independent routes used to cross-check the class-count computation.
// Direct enumeration of ordered pairs; requires |G| <= lim.pair_cap.
long long commuting_pair_count(const Group& g, const Limits& lim = {});
Rational commuting_probability_by_pairs(const Group& g, const Limits& lim = {});
// Sum of centralizer orders (equals class_count * |G|); same guard.
long long centralizer_order_sum(const Group& g, const Limits& lim = {});

// P(G) restricted to a pair of cosets of a normal subgroup K: entry (C, D) is
// |{(g, h) in C x D : gh = hg}| / |K|^2. Averaging the q^2 entries over the
// quotient of order q recovers P(G).
struct CosetPairTable {
  int quotient_order = 0;
  std::vector<Elem> representatives;       // smallest element of each coset
  std::vector<Rational> terms;             // row-major q x q
  std::vector<std::uint8_t> commutes_mod_kprime;  // per (C, D): [rep_C, rep_D] in [K,K]?
  Rational average;                        // equals P(G)

  const Rational& term(int c, int d) const { return terms[static_cast<std::size_t>(c) * quotient_order + d]; }
};

CosetPairTable coset_pair_table(const Group& g, const Subgroup& k, const Limits& lim = {});

// The same coset term computed through the twisted-pair identity: for coset
// representatives g, h, the pair (g k, h l) commutes iff
//   (k^h k^-1) [k, l] (l^g l^-1)^-1 = h^-1 g^-1 h g,
// so the term counts solutions (k, l) in K^2. An independent route used to
// validate coset_pair_table.
Rational coset_term_by_twists(const Group& g, const Subgroup& k, Elem rep_c, Elem rep_d);

// (P(G), P(G/N) / |N|); the first component is always >= the second.
struct QuotientBound {
  Rational probability;
  Rational bound;
};
QuotientBound quotient_bound(const Group& g, const Subgroup& n, const Limits& lim = {});

// P(G/N).
Rational quotient_commuting_probability(const Group& g, const Subgroup& n, const Limits& lim = {});

// Nonabelian groups satisfy P(G) <= 5/8.
inline Rational gustafson_bound() { return Rational(5, 8); }

}  // namespace commprob
