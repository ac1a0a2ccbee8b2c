#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gradedexp/cyclotomic.hpp"
#include "gradedexp/group.hpp"
#include "gradedexp/rng.hpp"

namespace gradedexp {

// b_x * b_y = zeta_M^phase * b_index, M = GradedAlgebra::modulus().
struct BasisProduct {
  std::size_t index;
  int phase;

  friend bool operator==(const BasisProduct&, const BasisProduct&) = default;
};

/// A finite-dimensional G-graded algebra with a homogeneous monomial basis:
/// the product of two basis elements is zero or a root of unity times a basis
/// element. Every algebra in the library has this shape, which is what makes
/// nonzeroness of monomials decidable without linear algebra.
class GradedAlgebra {
 public:
  virtual ~GradedAlgebra() = default;

  virtual std::size_t dimension() const = 0;
  virtual const GroupPtr& grading_group() const = 0;
  virtual Element degree(std::size_t b) const = 0;
  virtual std::optional<BasisProduct> multiply_basis(std::size_t x, std::size_t y) const = 0;
  // Phases are exponents of a primitive modulus()-th root of unity.
  virtual int modulus() const = 0;
  virtual std::string basis_label(std::size_t b) const { return "b" + std::to_string(b); }

  const CyclotomicField& field() const { return cyclotomic_field(modulus()); }
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// Sparse vector over the algebra's scalar field. Zero coefficients are never
/// stored.
class AlgebraElement {
 public:
  explicit AlgebraElement(const GradedAlgebra& algebra) : algebra_(&algebra) {}
  static AlgebraElement basis(const GradedAlgebra& algebra, std::size_t b);

  const GradedAlgebra& algebra() const { return *algebra_; }
  const std::map<std::size_t, CycScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Adds c * b_index.
  void add_term(std::size_t index, const CycScalar& c);
  // Degree if the element is nonzero and homogeneous.
  std::optional<Element> homogeneous_degree() const;
  std::string to_string() const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  const GradedAlgebra* algebra_;
  std::map<std::size_t, CycScalar> terms_;
};

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(const CycScalar& c, const AlgebraElement& x);

// Product of a sequence of basis elements; nullopt when it vanishes.
std::optional<BasisProduct> multiply_chain(const GradedAlgebra& algebra,
                                           const std::vector<std::size_t>& factors);

/// Algebra given by an explicit product table. Used for small derived
/// algebras (envelopes, permuted copies, hand-written test algebras).
class TableAlgebra final : public GradedAlgebra {
 public:
  // table[x * dim + y] holds b_x * b_y.
  TableAlgebra(GroupPtr group, int modulus, std::vector<Element> degrees,
               std::vector<std::optional<BasisProduct>> table,
               std::vector<std::string> labels = {});

  static std::shared_ptr<TableAlgebra> materialize(const GradedAlgebra& source);

  std::size_t dimension() const override { return degrees_.size(); }
  const GroupPtr& grading_group() const override { return group_; }
  Element degree(std::size_t b) const override { return degrees_[b]; }
  std::optional<BasisProduct> multiply_basis(std::size_t x, std::size_t y) const override {
    return table_[x * degrees_.size() + y];
  }
  int modulus() const override { return modulus_; }
  std::string basis_label(std::size_t b) const override;

 private:
  GroupPtr group_;
  int modulus_;
  std::vector<Element> degrees_;
  std::vector<std::optional<BasisProduct>> table_;
  std::vector<std::string> labels_;
};

/// Span of a subset of basis elements closed under multiplication, e.g. the
/// subgroup component A_K. Index i of the view is parent basis element
/// embedding()[i].
class RestrictedAlgebra final : public GradedAlgebra {
 public:
  RestrictedAlgebra(AlgebraPtr parent, std::vector<std::size_t> embedding);

  std::size_t dimension() const override { return embedding_.size(); }
  const GroupPtr& grading_group() const override { return parent_->grading_group(); }
  Element degree(std::size_t b) const override { return parent_->degree(embedding_[b]); }
  std::optional<BasisProduct> multiply_basis(std::size_t x, std::size_t y) const override;
  int modulus() const override { return parent_->modulus(); }
  std::string basis_label(std::size_t b) const override {
    return parent_->basis_label(embedding_[b]);
  }

  const GradedAlgebra& parent() const { return *parent_; }
  const std::vector<std::size_t>& embedding() const { return embedding_; }
  // View index of a parent basis element, if it belongs to the view.
  std::optional<std::size_t> local_index(std::size_t parent_index) const;

 private:
  AlgebraPtr parent_;
  std::vector<std::size_t> embedding_;
  std::vector<std::int64_t> local_;
};

/// The same algebra with every degree pushed through a group map, e.g. the
/// projection G -> G/N.
class RegradedAlgebra final : public GradedAlgebra {
 public:
  RegradedAlgebra(AlgebraPtr parent, GroupPtr target, std::vector<Element> degree_map);

  std::size_t dimension() const override { return parent_->dimension(); }
  const GroupPtr& grading_group() const override { return target_; }
  Element degree(std::size_t b) const override { return map_[parent_->degree(b)]; }
  std::optional<BasisProduct> multiply_basis(std::size_t x, std::size_t y) const override {
    return parent_->multiply_basis(x, y);
  }
  int modulus() const override { return parent_->modulus(); }
  std::string basis_label(std::size_t b) const override { return parent_->basis_label(b); }

  const GradedAlgebra& parent() const { return *parent_; }

 private:
  AlgebraPtr parent_;
  GroupPtr target_;
  std::vector<Element> map_;
};

// Exhaustive below these sizes, random samples above.
struct StructureCheckLimits {
  std::size_t exhaustive_pairs_up_to = 512;   // dimension
  std::size_t exhaustive_triples_up_to = 64;  // dimension
  std::size_t sampled_pairs = 20000;
  std::size_t sampled_triples = 10000;
};

struct StructureReport {
  bool ok = true;
  bool pairs_exhaustive = false;
  bool triples_exhaustive = false;
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  std::string failure;
};

// Checks that every product index is in range, that deg(xy) = deg(x)deg(y)
// for nonzero products, and associativity (with phases) on triples.
StructureReport verify_structure(const GradedAlgebra& algebra, SplitMix64& rng,
                                 const StructureCheckLimits& limits = {});

// Basis indices of degree g.
std::vector<std::size_t> homogeneous_component(const GradedAlgebra& algebra, Element g);

// Dimension of the two-sided ideal A x A (A is assumed unital).
std::size_t ideal_dimension(const AlgebraElement& x);

}  // namespace gradedexp
