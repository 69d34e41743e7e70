#include "commprob/spectrum.hpp"

#include "commprob/constructions.hpp"
#include "commprob/probability.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace commprob {

std::vector<SpectrumEntry> corpus(int max_order) {
  if (max_order < 1 || max_order > 2048)
    throw std::invalid_argument("corpus supports 1 <= max_order <= 2048");
  const Limits lim{.order_cap = max_order};
  std::vector<Group> base;
  for (int n = 1; n <= max_order; ++n) base.push_back(cyclic(n, lim));
  // Degenerate series members (D1, D2, S1, S2) alias cyclic groups and are
  // left out so small corpora stay free of duplicate witnesses.
  for (int m = 3; 2 * m <= max_order; ++m) base.push_back(dihedral(m, lim));
  for (int p = 2; p * p * p <= max_order; ++p) {
    if (!([](int q) {
          for (int d = 2; d * d <= q; ++d)
            if (q % d == 0) return false;
          return q >= 2;
        })(p))
      continue;
    long long order = static_cast<long long>(p) * p * p;
    for (int n = 1; order <= max_order; ++n, order *= static_cast<long long>(p) * p)
      base.push_back(extraspecial(p, n, lim));
  }
  for (int n = 3; n <= 5; ++n) {
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    if (fact <= max_order) base.push_back(symmetric(n, lim));
  }

  std::vector<Group> groups = base;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (base[i].order() == 1) continue;  // C1 x A duplicates A
    for (std::size_t j = i; j < base.size(); ++j) {
      if (base[j].order() == 1) continue;
      const long long order = static_cast<long long>(base[i].order()) * base[j].order();
      if (order <= max_order) groups.push_back(direct_product(base[i], base[j], lim));
    }
  }
  const std::size_t with_products = groups.size();
  for (std::size_t i = 0; i < with_products; ++i) {
    // Central quotients, skipping the degenerate ends (trivial centre gives
    // the group back; abelian groups collapse to C1).
    const Subgroup z = center(groups[i]);
    if (z.order() > 1 && z.order() < groups[i].order())
      groups.push_back(quotient(groups[i], z, nullptr, "/Z", lim));
  }

  std::vector<SpectrumEntry> entries;
  entries.reserve(groups.size());
  for (const Group& g : groups)
    entries.push_back(SpectrumEntry{commuting_probability(g), g.descriptor(), g.order()});
  std::sort(entries.begin(), entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.order != b.order) return a.order < b.order;
    return a.witness < b.witness;
  });
  return entries;
}

Rational joseph_value(int n) {
  if (n < 0) throw std::invalid_argument("joseph_value needs n >= 0");
  return (Rational(1) + rational_pow(Rational(1, 4), static_cast<unsigned>(n))) / 2;
}

RusinReport rusin_interval_check(const std::vector<SpectrumEntry>& entries) {
  RusinReport report;
  const Rational threshold(7, 16);
  for (const SpectrumEntry& e : entries) {
    if (e.value < threshold) continue;
    bool ok = e.value == threshold || e.value == Rational(1, 2) || e.value == Rational(1);
    if (!ok && e.value > Rational(1, 2)) {
      // joseph_value(n) decreases to 1/2; scan until it drops below.
      for (int n = 1;; ++n) {
        const Rational jv = joseph_value(n);
        if (jv == e.value) { ok = true; break; }
        if (jv < e.value) break;
      }
    }
    if (ok) ++report.conforming;
    else report.violations.push_back({e});
  }
  return report;
}

Rational dihedral_probability(int m) {
  if (m < 1) throw std::invalid_argument("dihedral_probability needs m >= 1");
  return Rational(m + 3, 4 * m);
}

namespace {

struct EgyptianSearch {
  SearchBounds bounds;
  // Failure cache: smallest already-failed m_min per (residual, depth);
  // failing from m_min fails from anything larger.
  std::map<std::pair<Rational, int>, int> failed_from;

  bool run(const Rational& residual, int depth_left, int m_min, std::vector<int>& tuple) {
    if (residual == 1) return true;
    if (depth_left == 0 || residual > Rational(1, 2)) return false;
    if (residual <= rational_pow(Rational(1, 4), static_cast<unsigned>(depth_left))) return false;
    const auto key = std::make_pair(residual, depth_left);
    if (auto it = failed_from.find(key); it != failed_from.end() && m_min >= it->second)
      return false;
    if (depth_left == 1) {
      // (m + 3) / (4m) = residual solves to m = 3 / (4 residual - 1).
      const Rational denom = 4 * residual - 1;
      bool ok = false;
      if (denom > 0) {
        const Rational m_exact = 3 / denom;
        if (denominator(m_exact) == 1) {
          const BigInt m = numerator(m_exact);
          ok = m >= m_min && m % 2 == 1 && m >= 3 && m <= bounds.max_m;
          if (ok) tuple.push_back(static_cast<int>(m.convert_to<long long>()));
        }
      }
      if (!ok) remember_failure(key, m_min);
      return ok;
    }
    // Every factor exceeds 1/4, so k factors overshoot any residual <= 4^-k;
    // the residual therefore needs at least k_min factors.
    int k_min = 1;
    for (Rational low(1, 4); !(low < residual); low /= 4) ++k_min;
    for (int m = std::max(3, m_min); m <= bounds.max_m; m += 2) {
      const Rational t = dihedral_probability(m);
      // With >= k_min factors each <= t the product tops out at t^k_min; once
      // that drops below the residual, larger m cannot help either.
      if (rational_pow(t, static_cast<unsigned>(k_min)) < residual) break;
      tuple.push_back(m);
      if (run(residual / t, depth_left - 1, m, tuple)) return true;
      tuple.pop_back();
    }
    remember_failure(key, m_min);
    return false;
  }

  void remember_failure(const std::pair<Rational, int>& key, int m_min) {
    auto [it, inserted] = failed_from.emplace(key, m_min);
    if (!inserted && m_min < it->second) it->second = m_min;
  }
};

}  // namespace

std::optional<std::vector<int>> dihedral_product_search(int n, const SearchBounds& bounds) {
  if (n < 1) throw std::invalid_argument("dihedral_product_search needs n >= 1");
  EgyptianSearch search{bounds, {}};
  std::vector<int> tuple;
  if (!search.run(Rational(1, n), bounds.max_factors, 3, tuple)) return std::nullopt;
  return tuple;
}

RationalSet::RationalSet(std::vector<Rational> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  for (const Rational& v : values_)
    if (v < 0 || v > 1) throw std::invalid_argument("rational set element outside [0, 1]: " +
                                                    rational_str(v));
}

bool RationalSet::contains(const Rational& v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

std::optional<Rational> RationalSet::max() const {
  if (values_.empty()) return std::nullopt;
  return values_.back();
}

RationalSet derived_step(const RationalSet& x, const std::vector<int>& primes) {
  if (primes.empty()) throw std::invalid_argument("derived_step needs at least one prime");
  for (int p : primes) {
    bool prime = p >= 2;
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) throw std::invalid_argument("derived_step: " + std::to_string(p) + " is not prime");
  }
  std::vector<Rational> out;
  out.reserve(x.values().size() * primes.size());
  for (int p : primes)
    for (const Rational& v : x.values()) out.push_back(v / p);
  return RationalSet(std::move(out));
}

RationalSet omega_layer(const RationalSet& x, int n, int k_bound) {
  if (n < 0 || k_bound < 1) throw std::invalid_argument("omega_layer needs n >= 0 and k_bound >= 1");
  std::vector<Rational> out;
  for (int k = 1; k <= k_bound; ++k) {
    int omega = 0, v = k;
    for (int d = 2; d * d <= v; ++d)
      while (v % d == 0) { v /= d; ++omega; }
    if (v > 1) ++omega;
    if (omega != n) continue;
    for (const Rational& val : x.values()) out.push_back(val / k);
  }
  return RationalSet(std::move(out));
}

std::vector<LimitCluster> limit_membership_scan(const std::vector<SpectrumEntry>& entries,
                                                const Rational& epsilon, int max_divisor) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  if (max_divisor < 1) throw std::invalid_argument("max_divisor must be >= 1");
  std::vector<Rational> candidates;
  {
    std::vector<Rational> values;
    values.reserve(entries.size());
    for (const SpectrumEntry& e : entries) values.push_back(e.value);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (const Rational& v : values)
      for (int k = 1; k <= max_divisor; ++k) candidates.push_back(v / k);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Entries sorted ascending by value for windowed lookups.
  std::vector<const SpectrumEntry*> sorted;
  sorted.reserve(entries.size());
  for (const SpectrumEntry& e : entries) sorted.push_back(&e);
  std::sort(sorted.begin(), sorted.end(),
            [](const SpectrumEntry* a, const SpectrumEntry* b) { return a->value < b->value; });

  std::vector<LimitCluster> clusters;
  for (const Rational& limit : candidates) {
    const Rational lo = limit - epsilon, hi = limit + epsilon;
    auto first = std::lower_bound(sorted.begin(), sorted.end(), lo,
                                  [](const SpectrumEntry* e, const Rational& v) { return e->value < v; });
    LimitCluster c;
    c.limit = limit;
    for (auto it = first; it != sorted.end() && (*it)->value <= hi; ++it) {
      const SpectrumEntry& e = **it;
      c.members.push_back(e);
      if (e.value == limit) ++c.at_limit;
      else if (e.value < limit) c.one_sided = false;
      else ++c.above;
    }
    if (c.members.size() >= 2) clusters.push_back(std::move(c));
  }
  std::sort(clusters.begin(), clusters.end(),
            [](const LimitCluster& a, const LimitCluster& b) { return a.limit > b.limit; });
  return clusters;
}

}  // namespace commprob
