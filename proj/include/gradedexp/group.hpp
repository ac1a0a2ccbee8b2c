#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace gradedexp {

// Elements are dense indices 0..order-1; index 0 is always the identity.
using Element = std::uint32_t;
inline constexpr Element kIdentity = 0;

// Largest order accepted by Group::from_table. Associativity is checked
// exhaustively, so this also bounds construction cost.
inline constexpr std::size_t kMaxGroupOrder = 64;

/// A finite group stored as its Cayley table.
///
/// Tables are validated on construction: Latin square, identity at index 0,
/// associativity on every triple. Instances are immutable and shared through
/// GroupPtr.
class Group {
 public:
  // `table` is row-major, entry (a, b) holds a*b.
  static std::shared_ptr<const Group> from_table(std::size_t order,
                                                 std::vector<Element> table,
                                                 std::string name = {},
                                                 std::vector<std::string> labels = {});

  std::size_t order() const { return order_; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  // x^-1 h x
  Element conj(Element x, Element h) const { return mul(mul(inv(x), h), x); }
  bool is_abelian() const;
  bool contains(Element a) const { return a < order_; }

  const std::string& name() const { return name_; }
  // Human readable element name; falls back to the index.
  std::string label(Element a) const;
  std::span<const Element> table() const { return table_; }

 private:
  Group() = default;

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::string name_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const Group>;

// Catalog.
GroupPtr cyclic_group(std::size_t n);
// Order 2n; element r^k s^b has index b*n + k.
GroupPtr dihedral_group(std::size_t n);
// n <= 4. Elements are permutations of {0..n-1} in lexicographic order of
// their image lists; products compose left to right: (p*q)(x) = q(p(x)).
GroupPtr symmetric_group(std::size_t n);
GroupPtr klein_four_group();
// (a, b) has index a*|B| + b.
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
// Accepts "Z<n>", "D<n>", "S<n>", "V4", and products joined with 'x',
// e.g. "Z2xZ4".
GroupPtr catalog_group(const std::string& name);

// Index of a permutation (given by its image list) inside symmetric_group(n).
Element symmetric_element(const std::vector<std::size_t>& images);

/// Subset of a group closed under products and inverses.
class Subgroup {
 public:
  // Validates closure; elements may be given in any order.
  Subgroup(GroupPtr group, std::vector<Element> elements);

  static Subgroup trivial(const GroupPtr& group);
  static Subgroup whole(const GroupPtr& group);

  const GroupPtr& group() const { return group_; }
  const Group& parent() const { return *group_; }
  std::span<const Element> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Element a) const {
    return a < position_.size() && position_[a] >= 0;
  }
  // Position of `a` inside elements(); throws if absent.
  std::size_t position(Element a) const;
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.group_ == b.group_ && a.elements_ == b.elements_;
  }

 private:
  GroupPtr group_;
  std::vector<Element> elements_;
  std::vector<int> position_;
};

Subgroup subgroup_closure(const GroupPtr& group, std::span<const Element> generators);

// Left cosets gK ordered by their minimal element; each coset is sorted, so
// its first entry is the representative.
std::vector<std::vector<Element>> left_cosets(const Subgroup& k);

struct DoubleCosetPartition {
  std::vector<std::vector<Element>> classes;  // each sorted
  std::vector<Element> representatives;       // minimal element of each class
  std::vector<std::size_t> class_of;          // element -> class index
};

DoubleCosetPartition double_cosets(const Subgroup& h, const Subgroup& k);

// {x^-1 h x : h in H}
Subgroup conjugate_subgroup(Element x, const Subgroup& h);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool is_normal(const Subgroup& n);
std::size_t subgroup_index(const Subgroup& k);

// |H g K| as a set.
std::size_t double_coset_size(const Subgroup& h, Element g, const Subgroup& k);

struct QuotientGroup {
  GroupPtr group;
  std::vector<Element> projection;  // parent element -> coset index
};

// Throws InvalidArgument unless `n` is normal.
QuotientGroup quotient_group(const Subgroup& n);

// All subgroups, ordered by (size, elements).
std::vector<Subgroup> all_subgroups(const GroupPtr& group);

}  // namespace gradedexp
