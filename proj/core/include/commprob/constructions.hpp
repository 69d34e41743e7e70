#pragma once

#include "commprob/group.hpp"

namespace commprob {

// C_n, elements g^k at index k; labels "e", "g", "g2", ...
Group cyclic(int n, const Limits& lim = {});

// D_m of order 2m: index k < m is the rotation r^k, index m+k the reflection
// s r^k; labels "e", "r", "r2", ..., "s", "sr", "sr2", ...
Group dihedral(int m, const Limits& lim = {});

// S_n on {0..n-1} in lexicographic one-line order (the identity is first).
// mul(a, b) applies b first: (a*b)(x) = a(b(x)). Requires n <= 7.
Group symmetric(int n, const Limits& lim = {});

// Extraspecial-type group E(p, n) of order p^(2n+1), p prime: tuples
// (x, y, z) in (Z/p)^n x (Z/p)^n x Z/p with
//   (x, y, z)(x', y', z') = (x + x', y + y', z + z' + x.y').
// Element index is z + p*(x as a little-endian base-p number) +
// p^(n+1)*(y likewise), so the centre {(0,0,z)} occupies indices 0..p-1.
Group extraspecial(int p, int n, const Limits& lim = {});

// A x B on index pairs (a, b) -> a*|B| + b. Small results get a dense table;
// above the table threshold the product composes its factors on the fly, so
// only the factors' tables are stored.
Group direct_product(const Group& a, const Group& b, const Limits& lim = {});

}  // namespace commprob
