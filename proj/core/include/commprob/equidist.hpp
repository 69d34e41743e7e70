#pragma once

#include "commprob/characters.hpp"
#include "commprob/group.hpp"
#include "commprob/rational.hpp"

#include <complex>

namespace commprob {

// Identification of the commutator subgroup [K, K] with a standalone group
// presentation of it, used as the value group of commutator distributions.
struct CommutatorEmbedding {
  Subgroup kprime_in_k;            // [K, K] inside K
  Group kprime;                    // reindexed presentation (identity at 0)
  std::vector<int> to_abstract;    // K element -> kprime index, -1 outside
  std::vector<Elem> from_abstract; // kprime index -> K element
};

CommutatorEmbedding commutator_embedding(const Group& k);

// Elements of K whose commutator with everything lands in H, i.e. the
// preimage in K of the centre of K/H. H must be a subgroup of K contained in
// [K, K] (so the quotient exists and centrality is well defined); K must have
// class <= 2, which makes x -> [x, -] a homomorphism and the result a
// subgroup containing Z(K).
Subgroup center_preimage(const Group& k, const Subgroup& h_in_k);

// A pair of homomorphisms K -> [K, K] stored as value tables over abstract
// commutator-group indices.
struct HomPair {
  std::vector<Elem> phi, psi;
};
HomPair trivial_homs(const Group& k, const CommutatorEmbedding& ke);

// Probability distribution on the abstract commutator group.
struct Distribution {
  Group support;                 // copy of the value group
  std::vector<Rational> mass;    // indexed by element; sums to exactly 1
};

// Distribution of a = phi(k) [k, l] psi(l) over uniform (k, l) in K^2.
// Requires class <= 2 (checked), |K| <= lim.pair_cap, and hom tables that are
// genuine homomorphisms (checked on generators, exhaustively when K carries
// no generating set). Runs in O(|K| * generators) by exploiting that
// l -> [k, l] psi(l) is a homomorphism for each fixed k, so its value is
// uniform on a coset of a subgroup of [K, K].
Distribution commutator_distribution(const Group& k, const CommutatorEmbedding& ke,
                                     const HomPair& homs, const Limits& lim = {});

// Literal quadratic pair scan with the same contract; retained as an
// independent oracle for the fast path.
Distribution commutator_distribution_naive(const Group& k, const CommutatorEmbedding& ke,
                                           const HomPair& homs, const Limits& lim = {});

// <f, chi> = (1/|A|) * sum_a f(a) * conj(chi(a)).
std::complex<double> fourier_coefficient(const Distribution& f, const Character& chi);

// Exact predicted magnitude of every Fourier coefficient of the trivial-homs
// commutator distribution:
//   |<chi, f>| = (1/|A|) * [K : center_preimage(K, ker chi)]^-1.
Rational predicted_fourier_magnitude(const Group& k, const CommutatorEmbedding& ke,
                                     const Character& chi);

// max_{a in h} |f(a) - mean_h(f)| where the mean runs over the subgroup h of
// the support group.
Rational equidistribution_deviation(const Distribution& f, const Subgroup& h);

// The endomorphism of K/[K,K] induced by conjugation with g (an element of
// the ambient group normalizing K): l -> (g^-1 l g) l^-1. Depends only on the
// coset g[K] when K is normal.
struct TwistMap {
  Group quotient;             // K/[K,K]
  std::vector<Elem> proj;     // K-as-group index -> quotient index
  std::vector<Elem> endo;     // quotient index -> quotient index
  Subgroup image;             // subgroup of `quotient`
};

TwistMap conjugation_twist(const Group& g, const Subgroup& k_in_g, Elem g_elem,
                           const Limits& lim = {});

}  // namespace commprob
