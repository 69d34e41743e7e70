#pragma once

#include "commprob/group.hpp"

namespace commprob {

// Decomposition of an abelian group as C_{d_1} x ... x C_{d_r} with
// d_1 | d_2 | ... | d_r and every d_j >= 2 (the trivial group has r = 0),
// together with an explicit coordinate isomorphism.
struct AbelianStructure {
  int order = 1;
  std::vector<int> invariant_factors;
  // coordinates[x][j] is the j-th coordinate of element x.
  std::vector<std::vector<int>> coordinates;
  // Inverse map: mixed-radix rank (least significant factor first) -> element.
  std::vector<Elem> element_at;

  Elem element_of(const std::vector<int>& coords) const;
};

// Requires an abelian group of order <= lim.abelian_cap. Splits off a cyclic
// subgroup of maximal order and a complement, recursively.
AbelianStructure abelian_structure(const Group& a, const Limits& lim = {});

// All subgroups of an abelian group of order <= lim.abelian_cap, ordered by
// size and then lexicographically by element list. Closes the cyclic
// subgroups under joins (in an abelian group the join of subgroups is their
// product set).
std::vector<Subgroup> subgroups_of_abelian(const Group& a, const Limits& lim = {});

}  // namespace commprob
