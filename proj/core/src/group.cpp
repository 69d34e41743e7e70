#include "commprob/group.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>

namespace commprob {

namespace {

std::string elem_name(const Group& g, Elem x) {
  if (g.has_labels()) return g.label(x);
  return "#" + std::to_string(x);
}

}  // namespace

Group Group::from_table(int order, std::vector<Elem> table, std::string descriptor,
                        std::vector<std::string> labels, std::vector<Elem> generators) {
  if (order < 1) throw std::invalid_argument("group order must be positive");
  if (table.size() != static_cast<std::size_t>(order) * order)
    throw std::invalid_argument("multiplication table has wrong size");
  for (Elem v : table)
    if (v >= order) throw std::invalid_argument("multiplication table entry out of range");
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(order))
    throw std::invalid_argument("label list has wrong size");
  Group g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.descriptor_ = std::move(descriptor);
  g.labels_ = std::move(labels);
  g.generators_ = std::move(generators);
  for (int a = 0; a < order; ++a) {
    if (g.table_[static_cast<std::size_t>(a) * order] != a || g.table_[a] != a)
      throw std::invalid_argument("element 0 is not a two-sided identity");
  }
  g.finalize();
  return g;
}

void Group::finalize() {
  inv_.assign(order_, 0);
  std::vector<std::uint8_t> seen(order_, 0);
  if (!table_.empty()) {
    for (int a = 0; a < order_; ++a) {
      bool found = false;
      for (int b = 0; b < order_; ++b) {
        if (table_[static_cast<std::size_t>(a) * order_ + b] == 0) {
          if (table_[static_cast<std::size_t>(b) * order_ + a] != 0)
            throw std::invalid_argument("one-sided inverse at element " + std::to_string(a));
          inv_[a] = static_cast<Elem>(b);
          found = true;
          break;
        }
      }
      if (!found) throw std::invalid_argument("element without inverse: " + std::to_string(a));
      seen[inv_[a]] = 1;
    }
  } else {
    const int rn = right_->order();
    for (int a = 0; a < order_; ++a)
      inv_[a] = static_cast<Elem>(left_->inv(static_cast<Elem>(a / rn)) * rn +
                                  right_->inv(static_cast<Elem>(a % rn)));
  }
  if (!generators_.empty()) {
    abelian_ = true;
    for (Elem x : generators_)
      for (Elem y : generators_)
        if (mul(x, y) != mul(y, x)) { abelian_ = false; break; }
  } else if (!table_.empty()) {
    abelian_ = true;
    for (int a = 0; a < order_ && abelian_; ++a)
      for (int b = a + 1; b < order_; ++b)
        if (table_[static_cast<std::size_t>(a) * order_ + b] !=
            table_[static_cast<std::size_t>(b) * order_ + a]) { abelian_ = false; break; }
  } else {
    abelian_ = left_->abelian() && right_->abelian();
  }
}

Subgroup make_subgroup_unchecked(const Group& g, std::vector<Elem> sorted_elements) {
  Subgroup h;
  h.parent_order = g.order();
  h.member.assign(g.order(), 0);
  for (Elem x : sorted_elements) h.member[x] = 1;
  h.elements = std::move(sorted_elements);
  return h;
}

Subgroup make_subgroup(const Group& g, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (Elem x : elements)
    if (x >= g.order()) throw std::invalid_argument("subgroup element out of range");
  if (elements.empty() || elements[0] != 0)
    throw std::invalid_argument("subgroup must contain the identity");
  Subgroup h = make_subgroup_unchecked(g, std::move(elements));
  for (Elem x : h.elements)
    for (Elem y : h.elements) {
      if (!h.contains(g.mul(x, y)))
        throw std::invalid_argument("set not closed under multiplication: " + elem_name(g, x) +
                                    " * " + elem_name(g, y));
    }
  return h;
}

Subgroup trivial_subgroup(const Group& g) { return make_subgroup_unchecked(g, {0}); }

Subgroup full_subgroup(const Group& g) {
  std::vector<Elem> all(g.order());
  for (int i = 0; i < g.order(); ++i) all[i] = static_cast<Elem>(i);
  return make_subgroup_unchecked(g, std::move(all));
}

Subgroup subgroup_generated(const Group& g, std::span<const Elem> seeds) {
  std::vector<std::uint8_t> in(g.order(), 0);
  std::vector<Elem> elems;
  std::queue<Elem> work;
  auto add = [&](Elem x) {
    if (!in[x]) { in[x] = 1; elems.push_back(x); work.push(x); }
  };
  add(0);
  for (Elem s : seeds) {
    if (s >= g.order()) throw std::invalid_argument("generator out of range");
    add(s);
  }
  // In a finite group the set of words over the seeds is already closed under
  // inversion, so right-multiplying by seeds reaches the whole subgroup.
  while (!work.empty()) {
    Elem x = work.front();
    work.pop();
    for (Elem s : seeds) add(g.mul(x, s));
  }
  std::sort(elems.begin(), elems.end());
  return make_subgroup_unchecked(g, std::move(elems));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (a.parent_order != b.parent_order) throw std::invalid_argument("subgroups of different groups");
  Subgroup h;
  h.parent_order = a.parent_order;
  h.member.assign(a.parent_order, 0);
  for (Elem x : a.elements)
    if (b.contains(x)) { h.member[x] = 1; h.elements.push_back(x); }
  return h;
}

Subgroup center(const Group& g) {
  const auto gens = g.generators();
  std::vector<Elem> elems;
  if (!gens.empty()) {
    // Commuting with a generating set is commuting with everything.
    for (int x = 0; x < g.order(); ++x) {
      bool central = true;
      for (Elem s : gens)
        if (g.mul(static_cast<Elem>(x), s) != g.mul(s, static_cast<Elem>(x))) { central = false; break; }
      if (central) elems.push_back(static_cast<Elem>(x));
    }
  } else {
    for (int x = 0; x < g.order(); ++x) {
      bool central = true;
      for (int y = 0; y < g.order(); ++y)
        if (g.mul(static_cast<Elem>(x), static_cast<Elem>(y)) !=
            g.mul(static_cast<Elem>(y), static_cast<Elem>(x))) { central = false; break; }
      if (central) elems.push_back(static_cast<Elem>(x));
    }
  }
  return make_subgroup_unchecked(g, std::move(elems));
}

Subgroup commutator_subgroup(const Group& g) {
  const auto gens = g.generators();
  if (gens.empty()) {
    std::vector<std::uint8_t> in(g.order(), 0);
    std::vector<Elem> comms;
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) {
        Elem c = g.commutator(static_cast<Elem>(a), static_cast<Elem>(b));
        if (!in[c]) { in[c] = 1; comms.push_back(c); }
      }
    return subgroup_generated(g, comms);
  }
  // Normal closure of the commutators of the generators.
  std::vector<Elem> seeds;
  for (Elem a : gens)
    for (Elem b : gens) seeds.push_back(g.commutator(a, b));
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  for (;;) {
    Subgroup h = subgroup_generated(g, seeds);
    bool grew = false;
    for (Elem x : h.elements) {
      for (Elem s : gens) {
        Elem c = g.conjugate(x, s);
        if (!h.contains(c)) { seeds.push_back(c); grew = true; }
      }
    }
    if (!grew) return h;
  }
}

Subgroup normal_core(const Group& g, const Subgroup& h) {
  if (h.parent_order != g.order()) throw std::invalid_argument("subgroup of a different group");
  std::vector<std::uint8_t> core(h.member);
  for (int x = 0; x < g.order(); ++x) {
    // Keep y iff every conjugate of y stays in h; equivalently intersect all
    // conjugate subgroups h^x.
    for (Elem y : h.elements)
      if (core[y] && !h.contains(g.conjugate(y, static_cast<Elem>(x)))) core[y] = 0;
  }
  std::vector<Elem> elems;
  for (Elem y : h.elements)
    if (core[y]) elems.push_back(y);
  return make_subgroup_unchecked(g, std::move(elems));
}

bool is_normal(const Group& g, const Subgroup& h, std::pair<Elem, Elem>* witness) {
  if (h.parent_order != g.order()) throw std::invalid_argument("subgroup of a different group");
  const auto gens = g.generators();
  if (!gens.empty()) {
    for (Elem x : gens)
      for (Elem y : h.elements)
        if (!h.contains(g.conjugate(y, x))) {
          if (witness) *witness = {x, y};
          return false;
        }
    return true;
  }
  for (int x = 0; x < g.order(); ++x)
    for (Elem y : h.elements)
      if (!h.contains(g.conjugate(y, static_cast<Elem>(x)))) {
        if (witness) *witness = {static_cast<Elem>(x), y};
        return false;
      }
  return true;
}

bool is_class_le2(const Group& g) {
  const Subgroup z = center(g);
  for (Elem c : commutator_subgroup(g).elements)
    if (!z.contains(c)) return false;
  return true;
}

std::vector<std::vector<Elem>> conjugacy_classes(const Group& g) {
  const auto gens = g.generators();
  std::vector<std::uint8_t> seen(g.order(), 0);
  std::vector<std::vector<Elem>> classes;
  std::vector<Elem> orbit;
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    orbit.clear();
    orbit.push_back(static_cast<Elem>(x));
    seen[x] = 1;
    // Orbit closure under conjugation; a generating set suffices.
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      Elem y = orbit[head];
      if (!gens.empty()) {
        for (Elem s : gens) {
          Elem c = g.conjugate(y, s);
          if (!seen[c]) { seen[c] = 1; orbit.push_back(c); }
        }
      } else {
        for (int s = 0; s < g.order(); ++s) {
          Elem c = g.conjugate(y, static_cast<Elem>(s));
          if (!seen[c]) { seen[c] = 1; orbit.push_back(c); }
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(orbit);
  }
  return classes;
}

int class_count(const Group& g) { return static_cast<int>(conjugacy_classes(g).size()); }

Group subgroup_as_group(const Group& g, const Subgroup& h, std::vector<Elem>* embed) {
  if (h.parent_order != g.order()) throw std::invalid_argument("subgroup of a different group");
  const int n = h.order();
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < n; ++i) pos[h.elements[i]] = i;
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elem p = g.mul(h.elements[i], h.elements[j]);
      if (pos[p] < 0) throw std::invalid_argument("subgroup not closed under multiplication");
      table[static_cast<std::size_t>(i) * n + j] = static_cast<Elem>(pos[p]);
    }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(n);
    for (Elem x : h.elements) labels.push_back(g.label(x));
  }
  std::ostringstream desc;
  desc << "sub[" << n << "]of(" << g.descriptor() << ")";
  if (embed) *embed = h.elements;
  return Group::from_table(n, std::move(table), desc.str(), std::move(labels));
}

Group quotient(const Group& g, const Subgroup& n, std::vector<Elem>* coset_of,
               const std::string& descriptor_suffix, const Limits& lim) {
  std::pair<Elem, Elem> w;
  if (!is_normal(g, n, &w))
    throw std::invalid_argument("subgroup is not normal: conjugating " + elem_name(g, w.second) +
                                " by " + elem_name(g, w.first) + " leaves the subgroup");
  const int q = static_cast<int>(g.order() / n.order());
  if (q > lim.order_cap) throw std::length_error("order cap exceeded by quotient");
  std::vector<int> coset(g.order(), -1);
  std::vector<Elem> rep;
  rep.reserve(q);
  // Scanning in index order makes each coset's representative its smallest
  // element and numbers cosets by representative; the identity coset is 0.
  for (int x = 0; x < g.order(); ++x) {
    if (coset[x] >= 0) continue;
    const int id = static_cast<int>(rep.size());
    rep.push_back(static_cast<Elem>(x));
    for (Elem m : n.elements) coset[g.mul(static_cast<Elem>(x), m)] = id;
  }
  std::vector<Elem> table(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[static_cast<std::size_t>(i) * q + j] = static_cast<Elem>(coset[g.mul(rep[i], rep[j])]);
  std::vector<std::string> labels;
  labels.reserve(q);
  for (Elem r : rep) labels.push_back("[" + elem_name(g, r) + "]");
  std::vector<Elem> gens;
  for (Elem s : g.generators()) {
    Elem c = static_cast<Elem>(coset[s]);
    if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
  }
  if (coset_of) {
    coset_of->assign(g.order(), 0);
    for (int x = 0; x < g.order(); ++x) (*coset_of)[x] = static_cast<Elem>(coset[x]);
  }
  const std::string suffix = descriptor_suffix.empty()
                                 ? "/sub[" + std::to_string(n.order()) + "]"
                                 : descriptor_suffix;
  return Group::from_table(q, std::move(table), g.descriptor() + suffix, std::move(labels),
                           std::move(gens));
}

bool same_table(const Group& a, const Group& b) {
  if (a.order() != b.order()) return false;
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (a.mul(static_cast<Elem>(x), static_cast<Elem>(y)) !=
          b.mul(static_cast<Elem>(x), static_cast<Elem>(y)))
        return false;
  return true;
}

std::string table_report(const Group& g, int exhaustive_cap, int sample_count, std::uint64_t seed) {
  const int n = g.order();
  std::ostringstream out;
  for (int a = 0; a < n; ++a) {
    if (g.mul(0, static_cast<Elem>(a)) != a || g.mul(static_cast<Elem>(a), 0) != a)
      return "identity law fails at element " + std::to_string(a);
    if (g.mul(static_cast<Elem>(a), g.inv(static_cast<Elem>(a))) != 0 ||
        g.mul(g.inv(static_cast<Elem>(a)), static_cast<Elem>(a)) != 0)
      return "inverse law fails at element " + std::to_string(a);
  }
  // Latin square: each row and column is a permutation.
  std::vector<std::uint8_t> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      Elem p = g.mul(static_cast<Elem>(a), static_cast<Elem>(b));
      if (seen[p]) return "row " + std::to_string(a) + " repeats value " + std::to_string(p);
      seen[p] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      Elem p = g.mul(static_cast<Elem>(b), static_cast<Elem>(a));
      if (seen[p]) return "column " + std::to_string(a) + " repeats value " + std::to_string(p);
      seen[p] = 1;
    }
  }
  auto assoc = [&](Elem a, Elem b, Elem c) {
    return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
  };
  if (n <= exhaustive_cap) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!assoc(static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c)))
            return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(c) + ")";
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < sample_count; ++i) {
      Elem a = static_cast<Elem>(pick(rng)), b = static_cast<Elem>(pick(rng)),
           c = static_cast<Elem>(pick(rng));
      if (!assoc(a, b, c))
        return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
               std::to_string(c) + ")";
    }
  }
  return "";
}

}  // namespace commprob
