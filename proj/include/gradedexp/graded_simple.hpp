#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "gradedexp/algebra.hpp"
#include "gradedexp/cocycle.hpp"

namespace gradedexp {

// Matrix unit u_h (x) e_{row,col}; rows and columns are 0-based internally and
// printed 1-based.
struct SimpleBasisElement {
  std::size_t h_position;  // position of h inside H.elements()
  std::size_t row;
  std::size_t col;
};

/// F^f H (x) M_r(F) with deg(u_h (x) e_{i,j}) = g_i^-1 h g_j.
///
/// Basis index of u_h (x) e_{i,j} is (pos(h) * r + i) * r + j.
class GradedSimple final : public GradedAlgebra {
 public:
  // Validates the cocycle and the tuple; throws InvalidArgument.
  GradedSimple(TwoCocycle f, std::vector<Element> tuple);

  std::size_t dimension() const override { return h_size_ * r_ * r_; }
  const GroupPtr& grading_group() const override { return f_.subgroup().group(); }
  Element degree(std::size_t b) const override { return degrees_[b]; }
  std::optional<BasisProduct> multiply_basis(std::size_t x, std::size_t y) const override;
  int modulus() const override { return f_.modulus(); }
  std::string basis_label(std::size_t b) const override;

  const Group& group() const { return *grading_group(); }
  const Subgroup& subgroup() const { return f_.subgroup(); }
  const TwoCocycle& cocycle() const { return f_; }
  const std::vector<Element>& tuple() const { return tuple_; }
  std::size_t matrix_size() const { return r_; }

  std::size_t index(std::size_t h_position, std::size_t row, std::size_t col) const {
    return (h_position * r_ + row) * r_ + col;
  }
  std::size_t index_of(Element h, std::size_t row, std::size_t col) const {
    return index(subgroup().position(h), row, col);
  }
  SimpleBasisElement decode(std::size_t b) const {
    return {b / (r_ * r_), (b / r_) % r_, b % r_};
  }
  Element h_of(std::size_t b) const { return subgroup().elements()[b / (r_ * r_)]; }
  // 1 (x) e_{i,i}
  std::size_t idempotent(std::size_t i) const { return index(0, i, i); }

 private:
  TwoCocycle f_;
  std::vector<Element> tuple_;
  std::size_t h_size_;
  std::size_t r_;
  std::vector<Element> degrees_;
};

using GradedSimplePtr = std::shared_ptr<const GradedSimple>;

GradedSimplePtr build_bsz_simple(TwoCocycle f, std::vector<Element> tuple);

}  // namespace gradedexp
