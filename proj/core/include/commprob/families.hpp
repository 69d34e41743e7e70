#pragma once

#include "commprob/equidist.hpp"

#include <functional>
#include <map>

namespace commprob {

// One member of an indexed series: an ambient group G_i with a distinguished
// normal subgroup K_i, both materialized, plus the identification of [K, K]
// with a presentation shared across the series.
struct FamilyMember {
  Group g;                    // ambient group
  Subgroup k_in_g;            // K inside G
  Group k;                    // K as a group of its own
  std::vector<Elem> k_embed;  // K index -> G index
  CommutatorEmbedding ke;     // [K, K] and its abstract presentation
};

struct GroupFamily {
  std::string name;
  int min_index = 1;
  int max_index = 1;
  std::function<FamilyMember(int)> make;
};

// Built-in series, keyed by CLI name:
//   extraspecial2  G = K = E(2, i)                       (i = 1..6)
//   mixed          G = K = E(2, i) x E(2, 1)             (i = 1..5)
//   dihedral_odd   G = D_m, K = C_m, m the i-th odd >= 3 (i = 1..2047)
//   abelian        G = K = C_{2^i}                       (i = 1..13)
// Members are constructed with caps suited to the series' own ranges, which
// for `mixed` exceeds the default table cap; those members ride the composed
// product backend.
const std::map<std::string, GroupFamily>& builtin_families();

FamilyMember make_family_member(const GroupFamily& family, int index);

// The relaxed caps family members are built under; callers doing follow-up
// per-member computations (distributions, twists) want the same headroom.
const Limits& family_limits();

// Classification of each subgroup H <= [K, K] by the index sequence
// [K_i : center_preimage(K_i, H)] over the sampled family indices.
struct SubgroupTrend {
  Subgroup h;                      // subgroup of the shared commutator group
  std::vector<long long> indices;  // one entry per sampled family index
  bool bounded = false;
};

struct SupportEstimate {
  Subgroup h0;  // intersection of every subgroup classified bounded
  std::vector<SubgroupTrend> trends;
  std::vector<int> sampled;
  // The classification extrapolates from finitely many samples: a sequence
  // counts as bounded iff its last value is <= the bound and equals the
  // second-to-last (stabilized). Always true; recorded in serialized output.
  bool heuristic = true;
};

// Requires >= 3 distinct indices inside the family range, bound >= 1, and an
// identical commutator-group presentation across the samples. The returned
// h0 is itself verified to be classified bounded (the bounded subgroups form
// a filter); violations throw.
SupportEstimate equidistribution_support(const GroupFamily& family, std::vector<int> indices,
                                         long long bound);

// Classification of the cosets C of G_i/K_i by |image(conjugation twist by
// C)| across the sampled indices; requires the quotient presentation to be
// identical across samples. The bounded cosets are returned as a verified
// subgroup of the shared quotient.
struct TwistTrend {
  Elem coset = 0;
  std::vector<long long> image_sizes;
  bool bounded = false;
};

struct BoundedTwistEstimate {
  Group quotient;  // shared presentation of G/K
  Subgroup q;      // cosets with bounded twist image
  std::vector<TwistTrend> trends;
  std::vector<int> sampled;
  bool heuristic = true;
};

BoundedTwistEstimate bounded_twist_subgroup(const GroupFamily& family, std::vector<int> indices,
                                            long long bound);

}  // namespace commprob
