#include "commprob/abelian.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace commprob {

namespace {

int element_order(const Group& g, Elem x) {
  int n = 1;
  Elem p = x;
  while (p != 0) { p = g.mul(p, x); ++n; }
  return n;
}

std::vector<Elem> cyclic_elements(const Group& g, Elem x) {
  std::vector<Elem> elems{0};
  Elem p = x;
  while (p != 0) { elems.push_back(p); p = g.mul(p, x); }
  std::sort(elems.begin(), elems.end());
  return elems;
}

// Product set H * <x> as a sorted element list (a subgroup, since the parent
// is abelian).
std::vector<Elem> extend(const Group& g, const std::vector<Elem>& h, Elem x) {
  std::vector<std::uint8_t> in(g.order(), 0);
  std::vector<Elem> out;
  const std::vector<Elem> cyc = cyclic_elements(g, x);
  for (Elem a : h)
    for (Elem c : cyc) {
      Elem p = g.mul(a, c);
      if (!in[p]) { in[p] = 1; out.push_back(p); }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Elem AbelianStructure::element_of(const std::vector<int>& coords) const {
  if (coords.size() != invariant_factors.size())
    throw std::invalid_argument("coordinate tuple has wrong length");
  long long rank = 0, scale = 1;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j] < 0 || coords[j] >= invariant_factors[j])
      throw std::invalid_argument("coordinate out of range");
    rank += coords[j] * scale;
    scale *= invariant_factors[j];
  }
  return element_at[rank];
}

AbelianStructure abelian_structure(const Group& a, const Limits& lim) {
  if (!a.abelian()) throw std::invalid_argument("abelian_structure needs an abelian group");
  if (a.order() > lim.abelian_cap)
    throw std::length_error("abelian structure guard exceeded (order " +
                            std::to_string(a.order()) + ")");
  // Peel off maximal-order cyclic factors; the factors arrive largest first,
  // each dividing the previous (the exponent of the complement divides the
  // maximal order), so reversing gives d_1 | ... | d_r.
  std::vector<int> factors_desc;
  std::vector<std::vector<Elem>> gens_powers;  // per factor: elements 0, g, g^2, ... in order
  std::vector<Elem> carrier(a.order());
  for (int i = 0; i < a.order(); ++i) carrier[i] = static_cast<Elem>(i);
  // Work on shrinking subgroups of `a`, tracked as element lists.
  std::vector<Elem> current = carrier;
  while (current.size() > 1) {
    Elem best = 0;
    int best_order = 1;
    for (Elem x : current) {
      const int o = element_order(a, x);
      if (o > best_order) { best_order = o; best = x; }
    }
    std::vector<Elem> powers{0};
    {
      Elem p = best;
      while (p != 0) { powers.push_back(p); p = a.mul(p, best); }
    }
    std::vector<std::uint8_t> in_cyc(a.order(), 0);
    for (Elem x : powers) in_cyc[x] = 1;
    const long long target = static_cast<long long>(current.size()) / best_order;
    std::vector<Elem> complement{0}, found;
    if (target == 1) {
      found = {0};
    } else {
      // The search must stay inside `current`; mask everything else by
      // building over the subgroup-as-set. Elements outside `current` can
      // never appear because extend() only multiplies members of `current`.
      std::vector<std::uint8_t> in_cur(a.order(), 0);
      for (Elem x : current) in_cur[x] = 1;
      bool ok = false;
      // Restrict candidate seeds to `current` by a wrapped search.
      struct Searcher {
        const Group& g;
        const std::vector<std::uint8_t>& in_cyc;
        const std::vector<std::uint8_t>& in_cur;
        long long target;
        bool run(std::vector<Elem>& cur, int next, std::vector<Elem>* out) {
          if (static_cast<long long>(cur.size()) == target) { *out = cur; return true; }
          for (int x = next; x < g.order(); ++x) {
            const Elem e = static_cast<Elem>(x);
            if (!in_cur[e] || std::binary_search(cur.begin(), cur.end(), e)) continue;
            std::vector<Elem> bigger = extend(g, cur, e);
            if (target % bigger.size() != 0) continue;
            bool meets = false;
            for (Elem b : bigger)
              if (b != 0 && in_cyc[b]) { meets = true; break; }
            if (meets) continue;
            std::vector<Elem> saved = std::move(cur);
            cur = std::move(bigger);
            if (run(cur, x + 1, out)) return true;
            cur = std::move(saved);
          }
          return false;
        }
      } searcher{a, in_cyc, in_cur, target};
      ok = searcher.run(complement, 1, &found);
      if (!ok) throw std::logic_error("no complement found in abelian group");
    }
    factors_desc.push_back(best_order);
    gens_powers.push_back(std::move(powers));
    current = std::move(found);
  }

  AbelianStructure s;
  s.order = a.order();
  s.invariant_factors.assign(factors_desc.rbegin(), factors_desc.rend());
  std::reverse(gens_powers.begin(), gens_powers.end());
  const std::size_t r = s.invariant_factors.size();
  s.coordinates.assign(a.order(), std::vector<int>(r, 0));
  s.element_at.assign(a.order(), 0);
  // Enumerate all coordinate tuples; the products must exhaust the group.
  std::vector<int> tuple(r, 0);
  std::vector<std::uint8_t> hit(a.order(), 0);
  for (long long rank = 0; rank < a.order(); ++rank) {
    Elem prod = 0;
    for (std::size_t j = 0; j < r; ++j) prod = a.mul(prod, gens_powers[j][tuple[j]]);
    if (hit[prod]) throw std::logic_error("abelian decomposition is not a bijection");
    hit[prod] = 1;
    s.coordinates[prod] = tuple;
    s.element_at[rank] = prod;
    for (std::size_t j = 0; j < r; ++j) {
      if (++tuple[j] < s.invariant_factors[j]) break;
      tuple[j] = 0;
    }
  }
  return s;
}

std::vector<Subgroup> subgroups_of_abelian(const Group& a, const Limits& lim) {
  if (!a.abelian()) throw std::invalid_argument("subgroups_of_abelian needs an abelian group");
  if (a.order() > lim.abelian_cap)
    throw std::length_error("subgroup enumeration guard exceeded (order " +
                            std::to_string(a.order()) + ")");
  std::map<std::vector<Elem>, bool> known;  // element list -> processed
  known[{0}] = false;
  std::vector<std::vector<Elem>> cyclics;
  for (int x = 1; x < a.order(); ++x) cyclics.push_back(cyclic_elements(a, static_cast<Elem>(x)));
  for (auto& c : cyclics) known.emplace(c, false);
  // Join-close: in an abelian group the join of two subgroups is their
  // product set, so joining with every cyclic subgroup reaches everything.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = known.begin(); it != known.end(); ++it) {
      if (it->second) continue;
      it->second = true;
      for (int x = 1; x < a.order(); ++x) {
        if (std::binary_search(it->first.begin(), it->first.end(), static_cast<Elem>(x))) continue;
        std::vector<Elem> joined = extend(a, it->first, static_cast<Elem>(x));
        if (known.emplace(std::move(joined), false).second) changed = true;
      }
    }
  }
  std::vector<Subgroup> subs;
  subs.reserve(known.size());
  for (const auto& [elems, done] : known) subs.push_back(make_subgroup_unchecked(a, elems));
  std::sort(subs.begin(), subs.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.elements < y.elements;
  });
  return subs;
}

}  // namespace commprob
