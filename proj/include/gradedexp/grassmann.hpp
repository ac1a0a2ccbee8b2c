#pragma once

#include <cstddef>
#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gradedexp/algebra.hpp"

namespace gradedexp {

inline constexpr std::size_t kMaxGrassmannGenerators = 12;

/// Exterior algebra on generators e_1..e_m, graded by Z2 through |S| mod 2.
/// Basis element S (a bitmask, bit i-1 for e_i) is the ordered product
/// e_{i_1} ... e_{i_k} with i_1 < ... < i_k. Modulus 2, so phase 1 is a sign.
class GrassmannAlgebra final : public GradedAlgebra {
 public:
  explicit GrassmannAlgebra(std::size_t generators);

  std::size_t generators() const { return m_; }
  std::size_t dimension() const override { return std::size_t{1} << m_; }
  const GroupPtr& grading_group() const override { return z2_; }
  Element degree(std::size_t b) const override { return static_cast<Element>(std::popcount(b) & 1); }
  std::optional<BasisProduct> multiply_basis(std::size_t x, std::size_t y) const override;
  int modulus() const override { return 2; }
  std::string basis_label(std::size_t b) const override;

 private:
  std::size_t m_;
  GroupPtr z2_;
};

// Parity of the number of pairs (i in x, j in y) with i > j: the sign of
// sorting the concatenation of the two ordered products.
int merge_sign_parity(std::uint32_t x, std::uint32_t y);

// Throws InvalidArgument unless 1 <= m <= 12. Verifies anticommutation on all
// generator pairs before returning.
std::shared_ptr<const GrassmannAlgebra> build_grassmann(std::size_t m);

// G' for a grading group named "Z2x<G'>", built from the catalog. Throws
// InvalidArgument if the name has no leading Z2 factor or the table does not
// match Z2 x G' with (a, b) at index a*|G'| + b.
GroupPtr split_z2_factor(const GroupPtr& group);

/// A* = A_0 (x) E_0 + A_1 (x) E_1 inside A (x) E, graded by G' through the
/// G'-part of the A factor. Basis: pairs (a, S) with Z2-part of deg a equal
/// to |S| mod 2, ordered by a then S.
class EnvelopeAlgebra final : public GradedAlgebra {
 public:
  EnvelopeAlgebra(AlgebraPtr source, std::size_t generators, std::size_t basis_cap);

  std::size_t dimension() const override { return pairs_.size(); }
  const GroupPtr& grading_group() const override { return tail_; }
  Element degree(std::size_t b) const override;
  std::optional<BasisProduct> multiply_basis(std::size_t x, std::size_t y) const override;
  int modulus() const override { return modulus_; }
  std::string basis_label(std::size_t b) const override;

  const GradedAlgebra& source() const { return *source_; }
  std::size_t generators() const { return m_; }
  // (source basis index, generator mask)
  const std::pair<std::size_t, std::uint32_t>& pair(std::size_t b) const { return pairs_[b]; }
  std::optional<std::size_t> index_of(std::size_t source_index, std::uint32_t mask) const;

 private:
  AlgebraPtr source_;
  GroupPtr tail_;
  std::size_t m_;
  int modulus_;
  std::vector<std::pair<std::size_t, std::uint32_t>> pairs_;
  std::vector<std::int64_t> lookup_;  // source index * 2^m + mask
};

// Throws InvalidArgument on a grading group without the Z2 factor and
// CapExceeded when dim A * 2^(m-1) exceeds the basis cap.
std::shared_ptr<const EnvelopeAlgebra> envelope(const AlgebraPtr& a, std::size_t m);

struct EnvelopeComponentReport {
  bool ok = true;
  std::size_t left_dimension = 0;   // envelope of A restricted to Z2 x {e}
  std::size_t right_dimension = 0;  // identity component of the full envelope
  std::size_t products_checked = 0;
  std::string failure;
};

// Builds (A_{Z2 x e})* and (A*)_e independently and compares them as sets of
// (a, S) pairs and through every product of basis pairs.
EnvelopeComponentReport check_envelope_e_component(const AlgebraPtr& a, std::size_t m);

}  // namespace gradedexp
