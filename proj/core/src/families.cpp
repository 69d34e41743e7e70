#include "commprob/families.hpp"

#include "commprob/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace commprob {

namespace {

// Family members are curated: their ranges already bound every order, so the
// constructors run with caps wide enough for the whole series (the largest
// `mixed` member has order 16384 and lives on the composed product backend).
const Limits kFamilyLimits{.order_cap = 1 << 16, .pair_cap = 1 << 16, .abelian_cap = 64};

FamilyMember whole_group_member(Group g) {
  FamilyMember m;
  m.g = std::move(g);
  m.k_in_g = full_subgroup(m.g);
  m.k = m.g;
  m.k_embed = m.k_in_g.elements;
  m.ke = commutator_embedding(m.k);
  return m;
}

std::map<std::string, GroupFamily> make_builtins() {
  std::map<std::string, GroupFamily> fams;
  fams["extraspecial2"] = GroupFamily{
      "extraspecial2", 1, 6,
      [](int i) { return whole_group_member(extraspecial(2, i, kFamilyLimits)); }};
  fams["mixed"] = GroupFamily{
      "mixed", 1, 5, [](int i) {
        return whole_group_member(direct_product(extraspecial(2, i, kFamilyLimits),
                                                 extraspecial(2, 1, kFamilyLimits), kFamilyLimits));
      }};
  fams["dihedral_odd"] = GroupFamily{
      "dihedral_odd", 1, 2047, [](int i) {
        const int m = 2 * i + 1;  // the i-th odd integer >= 3
        FamilyMember member;
        member.g = dihedral(m, kFamilyLimits);
        std::vector<Elem> rotations(m);
        for (int k = 0; k < m; ++k) rotations[k] = static_cast<Elem>(k);
        member.k_in_g = make_subgroup_unchecked(member.g, std::move(rotations));
        member.k = subgroup_as_group(member.g, member.k_in_g, &member.k_embed);
        member.ke = commutator_embedding(member.k);
        return member;
      }};
  fams["abelian"] = GroupFamily{
      "abelian", 1, 13, [](int i) { return whole_group_member(cyclic(1 << i, kFamilyLimits)); }};
  return fams;
}

std::vector<int> checked_indices(const GroupFamily& family, std::vector<int> indices,
                                 std::size_t minimum) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (indices.size() < minimum)
    throw std::invalid_argument("need at least " + std::to_string(minimum) +
                                " distinct family indices");
  for (int i : indices)
    if (i < family.min_index || i > family.max_index)
      throw std::invalid_argument("index " + std::to_string(i) + " outside range of family " +
                                  family.name);
  return indices;
}

bool trend_bounded(const std::vector<long long>& values, long long bound) {
  const std::size_t n = values.size();
  return values[n - 1] <= bound && values[n - 1] == values[n - 2];
}

}  // namespace

const std::map<std::string, GroupFamily>& builtin_families() {
  static const std::map<std::string, GroupFamily> fams = make_builtins();
  return fams;
}

const Limits& family_limits() { return kFamilyLimits; }

FamilyMember make_family_member(const GroupFamily& family, int index) {
  if (index < family.min_index || index > family.max_index)
    throw std::invalid_argument("index " + std::to_string(index) + " outside range of family " +
                                family.name);
  FamilyMember m = family.make(index);
  std::pair<Elem, Elem> w;
  if (!is_normal(m.g, m.k_in_g, &w))
    throw std::logic_error("family subgroup is not normal in member " + std::to_string(index));
  return m;
}

SupportEstimate equidistribution_support(const GroupFamily& family, std::vector<int> indices,
                                         long long bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  SupportEstimate est;
  est.sampled = checked_indices(family, std::move(indices), 3);
  std::vector<FamilyMember> members;
  members.reserve(est.sampled.size());
  for (int i : est.sampled) members.push_back(make_family_member(family, i));
  const Group& kprime = members.front().ke.kprime;
  for (const auto& m : members)
    if (!same_table(m.ke.kprime, kprime))
      throw std::invalid_argument("commutator groups differ across family " + family.name);
  for (const auto& m : members)
    if (!is_class_le2(m.k))
      throw std::invalid_argument("family member outside class <= 2 in " + family.name);

  const std::vector<Subgroup> subs = subgroups_of_abelian(kprime, kFamilyLimits);
  for (const Subgroup& h : subs) {
    SubgroupTrend trend;
    trend.h = h;
    for (const auto& m : members) {
      std::vector<Elem> h_in_k;
      h_in_k.reserve(h.elements.size());
      for (Elem a : h.elements) h_in_k.push_back(m.ke.from_abstract[a]);
      std::sort(h_in_k.begin(), h_in_k.end());
      const Subgroup bz = center_preimage(m.k, make_subgroup_unchecked(m.k, std::move(h_in_k)));
      trend.indices.push_back(static_cast<long long>(m.k.order()) / bz.order());
    }
    trend.bounded = trend_bounded(trend.indices, bound);
    est.trends.push_back(std::move(trend));
  }

  Subgroup h0 = full_subgroup(kprime);
  bool any = false;
  for (const auto& t : est.trends)
    if (t.bounded) { h0 = any ? intersect(h0, t.h) : t.h; any = true; }
  if (!any) throw std::logic_error("no subgroup classified bounded (the full group always is)");
  est.h0 = std::move(h0);
  for (const auto& t : est.trends)
    if (t.h == est.h0 && !t.bounded)
      throw std::logic_error("bounded subgroups fail the filter property at this bound");
  return est;
}

BoundedTwistEstimate bounded_twist_subgroup(const GroupFamily& family, std::vector<int> indices,
                                            long long bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  BoundedTwistEstimate est;
  est.sampled = checked_indices(family, std::move(indices), 3);
  std::vector<FamilyMember> members;
  members.reserve(est.sampled.size());
  for (int i : est.sampled) members.push_back(make_family_member(family, i));

  bool first = true;
  std::vector<std::vector<long long>> sizes;  // per coset, per sample
  for (const auto& m : members) {
    std::vector<Elem> coset_of;
    const Group q = quotient(m.g, m.k_in_g, &coset_of, "", kFamilyLimits);
    if (first) {
      est.quotient = q;
      sizes.assign(q.order(), {});
      first = false;
    } else if (!same_table(q, est.quotient)) {
      throw std::invalid_argument("quotients differ across family " + family.name);
    }
    // Smallest representative of each coset.
    std::vector<int> rep(q.order(), -1);
    for (int x = 0; x < m.g.order(); ++x)
      if (rep[coset_of[x]] < 0) rep[coset_of[x]] = x;
    for (int c = 0; c < q.order(); ++c) {
      const TwistMap tw =
          conjugation_twist(m.g, m.k_in_g, static_cast<Elem>(rep[c]), kFamilyLimits);
      sizes[c].push_back(tw.image.order());
    }
  }
  std::vector<Elem> bounded_cosets;
  for (int c = 0; c < est.quotient.order(); ++c) {
    TwistTrend t;
    t.coset = static_cast<Elem>(c);
    t.image_sizes = sizes[c];
    t.bounded = trend_bounded(t.image_sizes, bound);
    if (t.bounded) bounded_cosets.push_back(t.coset);
    est.trends.push_back(std::move(t));
  }
  // The bounded cosets must form a subgroup; make_subgroup validates closure.
  est.q = make_subgroup(est.quotient, std::move(bounded_cosets));
  return est;
}

}  // namespace commprob
