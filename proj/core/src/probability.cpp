#include "commprob/probability.hpp"

#include <stdexcept>

namespace commprob {

namespace {

void check_pair_cap(const Group& g, const Limits& lim, const char* what) {
  if (g.order() > lim.pair_cap)
    throw std::length_error(std::string("pair enumeration guard exceeded by ") + what + " (order " +
                            std::to_string(g.order()) + ", cap " + std::to_string(lim.pair_cap) + ")");
}

}  // namespace

Rational commuting_probability(const Group& g) {
  return Rational(class_count(g), g.order());
}

long long commuting_pair_count(const Group& g, const Limits& lim) {
  check_pair_cap(g, lim, "pair count");
  const int n = g.order();
  long long count = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(static_cast<Elem>(a), static_cast<Elem>(b)) ==
          g.mul(static_cast<Elem>(b), static_cast<Elem>(a)))
        ++count;
  return count;
}

Rational commuting_probability_by_pairs(const Group& g, const Limits& lim) {
  return Rational(commuting_pair_count(g, lim),
                  static_cast<long long>(g.order()) * g.order());
}

long long centralizer_order_sum(const Group& g, const Limits& lim) {
  check_pair_cap(g, lim, "centralizer sum");
  const int n = g.order();
  long long sum = 0;
  for (int a = 0; a < n; ++a) {
    long long c = 0;
    for (int b = 0; b < n; ++b)
      if (g.mul(static_cast<Elem>(a), static_cast<Elem>(b)) ==
          g.mul(static_cast<Elem>(b), static_cast<Elem>(a)))
        ++c;
    sum += c;
  }
  return sum;
}

CosetPairTable coset_pair_table(const Group& g, const Subgroup& k, const Limits& lim) {
  check_pair_cap(g, lim, "coset pair table");
  std::pair<Elem, Elem> w;
  if (!is_normal(g, k, &w))
    throw std::invalid_argument("coset decomposition needs a normal subgroup");
  std::vector<Elem> coset_of;
  const Group q = quotient(g, k, &coset_of, "", Limits{.order_cap = 1 << 16});
  const int qn = q.order();

  CosetPairTable t;
  t.quotient_order = qn;
  t.representatives.assign(qn, 0);
  {
    std::vector<std::uint8_t> seen(qn, 0);
    for (int x = 0; x < g.order(); ++x) {
      const Elem c = coset_of[x];
      if (!seen[c]) { seen[c] = 1; t.representatives[c] = static_cast<Elem>(x); }
    }
  }
  std::vector<long long> counts(static_cast<std::size_t>(qn) * qn, 0);
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (g.mul(static_cast<Elem>(a), static_cast<Elem>(b)) ==
          g.mul(static_cast<Elem>(b), static_cast<Elem>(a)))
        ++counts[static_cast<std::size_t>(coset_of[a]) * qn + coset_of[b]];
  const long long k2 = static_cast<long long>(k.order()) * k.order();
  t.terms.reserve(counts.size());
  for (long long c : counts) t.terms.emplace_back(c, k2);

  const Subgroup kgrp_comm = [&] {
    const Group kg = subgroup_as_group(g, k);
    const Subgroup kp = commutator_subgroup(kg);
    std::vector<Elem> elems;
    elems.reserve(kp.elements.size());
    for (Elem x : kp.elements) elems.push_back(k.elements[x]);
    return make_subgroup_unchecked(g, std::move(elems));
  }();
  t.commutes_mod_kprime.reserve(counts.size());
  for (int c = 0; c < qn; ++c)
    for (int d = 0; d < qn; ++d)
      t.commutes_mod_kprime.push_back(
          kgrp_comm.contains(g.commutator(t.representatives[c], t.representatives[d])) ? 1 : 0);

  Rational sum(0);
  for (const Rational& term : t.terms) sum += term;
  t.average = sum / (static_cast<long long>(qn) * qn);
  return t;
}

Rational coset_term_by_twists(const Group& g, const Subgroup& k, Elem rep_c, Elem rep_d) {
  const Elem gc = rep_c, hd = rep_d;
  // h^-1 g^-1 h g
  const Elem target = g.mul(g.mul(g.inv(hd), g.inv(gc)), g.mul(hd, gc));
  long long count = 0;
  for (Elem kk : k.elements) {
    // k^h k^-1
    const Elem tk = g.mul(g.conjugate(kk, hd), g.inv(kk));
    for (Elem ll : k.elements) {
      const Elem tl = g.mul(g.conjugate(ll, gc), g.inv(ll));  // l^g l^-1
      const Elem lhs = g.mul(g.mul(tk, g.commutator(kk, ll)), g.inv(tl));
      if (lhs == target) ++count;
    }
  }
  return Rational(count, static_cast<long long>(k.order()) * k.order());
}

QuotientBound quotient_bound(const Group& g, const Subgroup& n, const Limits& lim) {
  QuotientBound r;
  r.probability = commuting_probability(g);
  r.bound = quotient_commuting_probability(g, n, lim) / n.order();
  return r;
}

Rational quotient_commuting_probability(const Group& g, const Subgroup& n, const Limits& lim) {
  return commuting_probability(quotient(g, n, nullptr, "", lim));
}

}  // namespace commprob
