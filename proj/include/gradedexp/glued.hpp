#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gradedexp/algebra.hpp"
#include "gradedexp/graded_simple.hpp"

namespace gradedexp {

// An arrow of the radical quiver, carrying a G-degree.
struct QuiverEdge {
  std::size_t from;
  std::size_t to;
  Element degree;
};

// Decoded path basis element a_0 d_1 a_1 ... d_k a_k. factors[i] is a basis
// index of component (start, then edges[i-1].to).
struct PathElement {
  std::size_t start;
  std::vector<std::size_t> edges;
  std::vector<std::size_t> factors;
};

// Basis cap: GRADEDEXP_CAP when set to a positive integer, else 20000.
std::size_t default_basis_cap();

/// Graded-simple blocks glued by a truncated path radical.
///
/// Basis: paths of length k < N through the quiver whose vertices are the
/// components, with an arbitrary basis element of the visited component at
/// every vertex. Two paths multiply by concatenation when the first ends where
/// the second starts; the two junction elements are multiplied inside their
/// component. Length-0 paths span the semisimple part, the rest spans the
/// radical J, and J^N = 0.
class GluedAlgebra final : public GradedAlgebra {
 public:
  GluedAlgebra(GroupPtr group, std::vector<GradedSimplePtr> components,
               std::vector<QuiverEdge> edges, std::size_t truncation,
               std::size_t basis_cap = default_basis_cap());

  std::size_t dimension() const override { return dimension_; }
  const GroupPtr& grading_group() const override { return group_; }
  Element degree(std::size_t b) const override { return degrees_[b]; }
  std::optional<BasisProduct> multiply_basis(std::size_t x, std::size_t y) const override;
  int modulus() const override { return modulus_; }
  std::string basis_label(std::size_t b) const override;

  const std::vector<GradedSimplePtr>& components() const { return components_; }
  const GradedSimple& component(std::size_t t) const { return *components_[t]; }
  const std::vector<QuiverEdge>& edges() const { return edges_; }
  std::size_t truncation() const { return truncation_; }
  // M / n_t: factor applied to phases coming from component t.
  int phase_scale(std::size_t t) const { return modulus_ / components_[t]->modulus(); }

  PathElement decode(std::size_t b) const;
  // Inverse of decode; throws if the path is not a basis element.
  std::size_t encode(const PathElement& p) const;
  // Length-0 path holding basis element `local` of component t.
  std::size_t vertex_index(std::size_t t, std::size_t local) const;

  std::size_t path_length(std::size_t b) const { return shapes_[shape_of_[b]].edges.size(); }
  bool is_semisimple(std::size_t b) const { return path_length(b) == 0; }
  std::size_t source_component(std::size_t b) const { return shapes_[shape_of_[b]].start; }
  std::size_t target_component(std::size_t b) const { return shapes_[shape_of_[b]].end; }
  std::size_t source_row(std::size_t b) const;
  std::size_t target_col(std::size_t b) const;
  // Sum of component dimensions.
  std::size_t semisimple_dimension() const;

 private:
  struct Shape {
    std::size_t start;
    std::size_t end;
    std::vector<std::size_t> edges;
    std::size_t offset;
    std::size_t size;
  };

  std::size_t shape_index_of(std::size_t b) const { return shape_of_[b]; }
  void decode_factors(std::size_t b, std::size_t* out) const;

  GroupPtr group_;
  std::vector<GradedSimplePtr> components_;
  std::vector<QuiverEdge> edges_;
  std::size_t truncation_;
  int modulus_ = 1;
  std::size_t dimension_ = 0;
  std::vector<Shape> shapes_;
  std::vector<std::int32_t> extend_;  // shape * edges + edge -> shape or -1
  std::vector<std::uint32_t> shape_of_;
  std::vector<Element> degrees_;
};

using GluedAlgebraPtr = std::shared_ptr<const GluedAlgebra>;

// Builds the algebra and verifies grading, associativity and J^N = 0
// (exhaustively at small dimension, sampled otherwise). Throws
// InvariantViolation on failure.
GluedAlgebraPtr build_glued(GroupPtr group, std::vector<GradedSimplePtr> components,
                            std::vector<QuiverEdge> edges, std::size_t truncation,
                            std::size_t basis_cap = default_basis_cap());

/// A_K: the span of basis elements with degree in K, as a view of A.
struct SubgroupComponent {
  std::shared_ptr<const RestrictedAlgebra> algebra;
  std::vector<std::size_t> semisimple;  // view indices of length-0 paths
  std::vector<std::size_t> radical;     // view indices of longer paths
};

SubgroupComponent subgroup_component(const GluedAlgebraPtr& a, const Subgroup& k);

// A graded by G/N through the projection. Throws InvalidArgument unless N is
// normal.
std::shared_ptr<const RegradedAlgebra> regrade_quotient(const AlgebraPtr& a, const Subgroup& n);

}  // namespace gradedexp
