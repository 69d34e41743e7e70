#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace commprob {

// Index of a group element. Index 0 is always the identity.
using Elem = std::uint16_t;

// Resource guards. Quadratic algorithms and dense multiplication tables are
// kept in check by these caps; callers that know what they are doing (the
// built-in family generators, the acceptance drivers) pass relaxed copies.
struct Limits {
  int order_cap = 8192;        // largest group order any constructor accepts
  long long pair_cap = 2048;   // largest order admitted to O(n^2) pair enumeration
  int abelian_cap = 64;        // largest order for structure/character/subgroup-lattice work
};

// Finite group on elements {0, ..., order-1} with 0 the identity.
//
// Two storage backends share one interface: small groups carry a dense
// row-major multiplication table; direct products above the table threshold
// compose factor groups on the fly, which keeps memory linear while leaving
// every algorithm untouched. Groups are immutable once built.
class Group {
 public:
  Group() = default;

  static Group from_table(int order, std::vector<Elem> table, std::string descriptor,
                          std::vector<std::string> labels = {}, std::vector<Elem> generators = {});

  int order() const noexcept { return order_; }

  Elem mul(Elem a, Elem b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
    const int rn = right_->order();
    return static_cast<Elem>(left_->mul(static_cast<Elem>(a / rn), static_cast<Elem>(b / rn)) * rn +
                             right_->mul(static_cast<Elem>(a % rn), static_cast<Elem>(b % rn)));
  }
  Elem inv(Elem a) const { return inv_[a]; }

  // x^g = g^-1 x g
  Elem conjugate(Elem x, Elem g) const { return mul(mul(inv(g), x), g); }
  // [a, b] = a b a^-1 b^-1
  Elem commutator(Elem a, Elem b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

  bool abelian() const noexcept { return abelian_; }
  bool table_backed() const noexcept { return !table_.empty(); }

  // Generating set recorded by the constructor; may be empty, in which case
  // algorithms fall back to scanning all elements.
  std::span<const Elem> generators() const noexcept { return generators_; }

  const std::string& descriptor() const noexcept { return descriptor_; }
  const std::string& label(Elem a) const { return labels_[a]; }
  bool has_labels() const noexcept { return !labels_.empty(); }

  friend Group direct_product(const Group& a, const Group& b, const Limits& lim);

 private:
  void finalize();  // computes inverses and the abelian flag

  int order_ = 0;
  std::vector<Elem> table_;  // empty for composed products
  std::shared_ptr<const Group> left_, right_;
  std::vector<Elem> inv_;
  std::vector<Elem> generators_;
  std::vector<std::string> labels_;
  std::string descriptor_;
  bool abelian_ = false;
};

// Subgroup of a group, stored as a sorted element list plus a membership mask.
// The parent is passed explicitly to every operation; parent_order guards
// against mixing subgroups across groups.
struct Subgroup {
  int parent_order = 0;
  std::vector<Elem> elements;        // sorted ascending; elements[0] == 0
  std::vector<std::uint8_t> member;  // size parent_order

  int order() const noexcept { return static_cast<int>(elements.size()); }
  bool contains(Elem x) const { return member[x] != 0; }
  long long index() const { return parent_order / order(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_order == b.parent_order && a.elements == b.elements;
  }
};

// Validates closure; throws std::invalid_argument with the offending pair.
Subgroup make_subgroup(const Group& g, std::vector<Elem> elements);
// Trusts the caller; used internally where closure is known.
Subgroup make_subgroup_unchecked(const Group& g, std::vector<Elem> sorted_elements);

Subgroup trivial_subgroup(const Group& g);
Subgroup full_subgroup(const Group& g);
Subgroup subgroup_generated(const Group& g, std::span<const Elem> seeds);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

Subgroup center(const Group& g);
Subgroup commutator_subgroup(const Group& g);
// Largest normal subgroup of g contained in h (the intersection of all
// conjugates of h).
Subgroup normal_core(const Group& g, const Subgroup& h);

bool is_normal(const Group& g, const Subgroup& h, std::pair<Elem, Elem>* witness = nullptr);
// Nilpotency class <= 2, i.e. [g, g] <= Z(g). Abelian groups qualify.
bool is_class_le2(const Group& g);

// Partition into conjugacy classes, each sorted, ordered by smallest member;
// the identity class {0} comes first.
std::vector<std::vector<Elem>> conjugacy_classes(const Group& g);
int class_count(const Group& g);

// The subgroup reindexed as a group of its own (elements renumbered in sorted
// order, so the identity stays at 0). If embed is non-null it receives the
// map from new indices back to parent indices.
Group subgroup_as_group(const Group& g, const Subgroup& h, std::vector<Elem>* embed = nullptr);

// G/N for normal N; throws std::invalid_argument naming a witness pair if N
// is not normal. Cosets are numbered by their smallest member, so the coset
// of the identity is 0. If coset_of is non-null it receives the element ->
// coset projection. descriptor_suffix extends the parent descriptor (e.g.
// "/Z"); when empty a generic suffix is used.
Group quotient(const Group& g, const Subgroup& n, std::vector<Elem>* coset_of = nullptr,
               const std::string& descriptor_suffix = "", const Limits& lim = {});

// True if both groups have identical orders and multiplication tables (not an
// isomorphism test).
bool same_table(const Group& a, const Group& b);

// Structural audit used by tests and the self-check command: identity laws,
// inverses, Latin-square rows/columns, and associativity (exhaustive up to
// exhaustive_cap, sampled with >= sample_count random triples above it).
// Returns an empty string when the table passes, else a diagnostic.
std::string table_report(const Group& g, int exhaustive_cap = 256, int sample_count = 100000,
                         std::uint64_t seed = 0x5eed);

}  // namespace commprob
