#include "commprob/equidist.hpp"

#include <algorithm>
#include <stdexcept>

namespace commprob {

CommutatorEmbedding commutator_embedding(const Group& k) {
  CommutatorEmbedding ke;
  ke.kprime_in_k = commutator_subgroup(k);
  ke.kprime = subgroup_as_group(k, ke.kprime_in_k, &ke.from_abstract);
  ke.to_abstract.assign(k.order(), -1);
  for (std::size_t i = 0; i < ke.from_abstract.size(); ++i)
    ke.to_abstract[ke.from_abstract[i]] = static_cast<int>(i);
  return ke;
}

namespace {

void require_class_le2(const Group& k, const char* what) {
  if (!is_class_le2(k))
    throw std::invalid_argument(std::string(what) + " needs a group of nilpotency class <= 2");
}

}  // namespace

Subgroup center_preimage(const Group& k, const Subgroup& h_in_k) {
  if (h_in_k.parent_order != k.order()) throw std::invalid_argument("subgroup of a different group");
  require_class_le2(k, "center_preimage");
  for (Elem x : h_in_k.elements)
    for (Elem y : h_in_k.elements)
      if (!h_in_k.contains(k.mul(x, y)))
        throw std::invalid_argument("center_preimage needs a subgroup");
  const Subgroup kp = commutator_subgroup(k);
  for (Elem x : h_in_k.elements)
    if (!kp.contains(x))
      throw std::invalid_argument("center_preimage needs H inside the commutator subgroup");
  const auto gens = k.generators();
  std::vector<Elem> elems;
  // In class <= 2, [x, l1 l2] = [x, l1][x, l2], so membership only needs to
  // be tested against a generating set.
  for (int x = 0; x < k.order(); ++x) {
    bool ok = true;
    if (!gens.empty()) {
      for (Elem l : gens)
        if (!h_in_k.contains(k.commutator(static_cast<Elem>(x), l))) { ok = false; break; }
    } else {
      for (int l = 0; l < k.order(); ++l)
        if (!h_in_k.contains(k.commutator(static_cast<Elem>(x), static_cast<Elem>(l)))) { ok = false; break; }
    }
    if (ok) elems.push_back(static_cast<Elem>(x));
  }
  return make_subgroup_unchecked(k, std::move(elems));
}

HomPair trivial_homs(const Group& k, const CommutatorEmbedding&) {
  HomPair h;
  h.phi.assign(k.order(), 0);
  h.psi.assign(k.order(), 0);
  return h;
}

namespace {

void check_hom(const Group& k, const CommutatorEmbedding& ke, const std::vector<Elem>& hom,
               const char* name) {
  if (hom.size() != static_cast<std::size_t>(k.order()))
    throw std::invalid_argument(std::string(name) + " table has wrong size");
  for (Elem v : hom)
    if (v >= ke.kprime.order()) throw std::invalid_argument(std::string(name) + " value out of range");
  if (hom[0] != 0) throw std::invalid_argument(std::string(name) + " does not fix the identity");
  const auto gens = k.generators();
  auto check_pair = [&](Elem a, Elem b) {
    if (hom[k.mul(a, b)] != ke.kprime.mul(hom[a], hom[b]))
      throw std::invalid_argument(std::string(name) + " is not a homomorphism at (" +
                                  std::to_string(a) + "," + std::to_string(b) + ")");
  };
  if (!gens.empty()) {
    // phi(ab) determined by generator values; verifying on gens x all
    // elements covers the defining relations cheaply.
    for (Elem a : gens)
      for (int b = 0; b < k.order(); ++b) check_pair(a, static_cast<Elem>(b));
    for (int a = 0; a < k.order(); ++a)
      for (Elem b : gens) check_pair(static_cast<Elem>(a), b);
  } else {
    for (int a = 0; a < k.order(); ++a)
      for (int b = 0; b < k.order(); ++b) check_pair(static_cast<Elem>(a), static_cast<Elem>(b));
  }
}

}  // namespace

namespace {

// A small generating set for k: the declared generators when present,
// otherwise a greedy sweep (adds every element not yet in the closure).
std::vector<Elem> generating_set(const Group& k) {
  auto declared = k.generators();
  if (!declared.empty()) return {declared.begin(), declared.end()};
  std::vector<Elem> gens;
  Subgroup closed = trivial_subgroup(k);
  for (int x = 1; x < k.order(); ++x) {
    if (closed.contains(static_cast<Elem>(x))) continue;
    gens.push_back(static_cast<Elem>(x));
    closed = subgroup_generated(k, gens);
    if (closed.order() == k.order()) break;
  }
  return gens;
}

Distribution distribution_from_counts(const CommutatorEmbedding& ke,
                                      const std::vector<long long>& counts, long long total) {
  Distribution f;
  f.support = ke.kprime;
  f.mass.reserve(counts.size());
  for (long long c : counts) f.mass.emplace_back(c, total);
  return f;
}

}  // namespace

Distribution commutator_distribution(const Group& k, const CommutatorEmbedding& ke,
                                     const HomPair& homs, const Limits& lim) {
  require_class_le2(k, "commutator_distribution");
  if (k.order() > lim.pair_cap)
    throw std::length_error("pair enumeration guard exceeded by commutator distribution (order " +
                            std::to_string(k.order()) + ")");
  check_hom(k, ke, homs.phi, "phi");
  check_hom(k, ke, homs.psi, "psi");
  const int n = k.order();
  // Class <= 2 makes l -> [a, l] a homomorphism for each fixed a, hence so is
  // l -> [a, l] psi(l) (the values commute).  Its fibers all have size
  // |K| / |image|, so one k-sweep computing the image subgroup from generator
  // values replaces the quadratic pair scan.
  const std::vector<Elem> gens = generating_set(k);
  std::vector<long long> counts(ke.kprime.order(), 0);
  std::vector<Elem> seed(gens.size());
  for (int a = 0; a < n; ++a) {
    const Elem ka = static_cast<Elem>(a);
    const Elem ka_inv = k.inv(ka);
    for (size_t i = 0; i < gens.size(); ++i) {
      const Elem s = gens[i];
      const Elem comm = k.mul(k.mul(ka, s), k.mul(ka_inv, k.inv(s)));
      seed[i] = ke.kprime.mul(static_cast<Elem>(ke.to_abstract[comm]), homs.psi[s]);
    }
    const Subgroup image = subgroup_generated(ke.kprime, seed);
    const long long fiber = static_cast<long long>(n) / image.order();
    const Elem shift = homs.phi[ka];
    for (Elem u : image.elements) counts[ke.kprime.mul(shift, u)] += fiber;
  }
  return distribution_from_counts(ke, counts, static_cast<long long>(n) * n);
}

Distribution commutator_distribution_naive(const Group& k, const CommutatorEmbedding& ke,
                                           const HomPair& homs, const Limits& lim) {
  require_class_le2(k, "commutator_distribution");
  if (k.order() > lim.pair_cap)
    throw std::length_error("pair enumeration guard exceeded by commutator distribution (order " +
                            std::to_string(k.order()) + ")");
  check_hom(k, ke, homs.phi, "phi");
  check_hom(k, ke, homs.psi, "psi");
  const int n = k.order();
  std::vector<long long> counts(ke.kprime.order(), 0);
  for (int a = 0; a < n; ++a) {
    const Elem ka = static_cast<Elem>(a);
    const Elem ka_inv = k.inv(ka);
    const Elem pa = homs.phi[ka];
    for (int b = 0; b < n; ++b) {
      const Elem lb = static_cast<Elem>(b);
      // [a, b] lies in [K, K]; translate to the abstract presentation.
      const Elem comm = k.mul(k.mul(ka, lb), k.mul(ka_inv, k.inv(lb)));
      const int c = ke.to_abstract[comm];
      const Elem value = ke.kprime.mul(ke.kprime.mul(pa, static_cast<Elem>(c)), homs.psi[lb]);
      ++counts[value];
    }
  }
  return distribution_from_counts(ke, counts, static_cast<long long>(n) * n);
}

std::complex<double> fourier_coefficient(const Distribution& f, const Character& chi) {
  if (chi.structure().order != f.support.order())
    throw std::invalid_argument("character of a different group");
  std::complex<double> sum(0.0, 0.0);
  for (int a = 0; a < f.support.order(); ++a)
    sum += rational_double(f.mass[a]) * std::conj(chi.value(static_cast<Elem>(a)));
  return sum / static_cast<double>(f.support.order());
}

Rational predicted_fourier_magnitude(const Group& k, const CommutatorEmbedding& ke,
                                     const Character& chi) {
  if (chi.structure().order != ke.kprime.order())
    throw std::invalid_argument("character of a different group");
  std::vector<Elem> ker_in_k;
  for (Elem a : chi.kernel()) ker_in_k.push_back(ke.from_abstract[a]);
  std::sort(ker_in_k.begin(), ker_in_k.end());
  const Subgroup ker = make_subgroup_unchecked(k, std::move(ker_in_k));
  const Subgroup bz = center_preimage(k, ker);
  return Rational(1, ke.kprime.order()) * Rational(bz.order(), k.order());
}

Rational equidistribution_deviation(const Distribution& f, const Subgroup& h) {
  if (h.parent_order != f.support.order())
    throw std::invalid_argument("subgroup of a different group");
  Rational mean(0);
  for (Elem a : h.elements) mean += f.mass[a];
  mean /= static_cast<long long>(h.order());
  Rational dev(0);
  for (Elem a : h.elements) {
    Rational d = f.mass[a] - mean;
    if (d < 0) d = -d;
    if (d > dev) dev = d;
  }
  return dev;
}

TwistMap conjugation_twist(const Group& g, const Subgroup& k_in_g, Elem g_elem,
                           const Limits& lim) {
  if (k_in_g.parent_order != g.order()) throw std::invalid_argument("subgroup of a different group");
  if (g_elem >= g.order()) throw std::invalid_argument("twisting element out of range");
  std::vector<Elem> embed;
  const Group kg = subgroup_as_group(g, k_in_g, &embed);
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < embed.size(); ++i) pos[embed[i]] = static_cast<int>(i);

  TwistMap t;
  const Subgroup kp = commutator_subgroup(kg);
  t.quotient = quotient(kg, kp, &t.proj, "", lim);
  const int qn = t.quotient.order();
  // Representative of each coset: smallest K-element projecting onto it.
  std::vector<int> rep(qn, -1);
  for (int i = 0; i < kg.order(); ++i)
    if (rep[t.proj[i]] < 0) rep[t.proj[i]] = i;
  t.endo.assign(qn, 0);
  for (int c = 0; c < qn; ++c) {
    const Elem l = embed[rep[c]];
    const Elem tw = g.mul(g.conjugate(l, g_elem), g.inv(l));  // (g^-1 l g) l^-1
    const int in_k = pos[tw];
    if (in_k < 0)
      throw std::invalid_argument("conjugation does not preserve the subgroup (element " +
                                  std::to_string(g_elem) + ")");
    t.endo[c] = t.proj[in_k];
  }
  std::vector<Elem> img(t.endo);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  t.image = make_subgroup(t.quotient, std::move(img));
  return t;
}

}  // namespace commprob
