#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gradedexp/cyclotomic.hpp"

namespace gradedexp {

using Vector = std::vector<CycScalar>;
using Matrix = std::vector<Vector>;  // row-major, rows of equal length
// Polynomial coefficients, lowest degree first, no trailing zeros.
using Poly = std::vector<CycScalar>;

Vector zero_vector(const CyclotomicField& field, std::size_t n);

/// Rank by fraction-free (Bareiss) elimination. Over a field every division
/// in the Bareiss update is exact; the point is to keep intermediate entries
/// as determinants of minors.
std::size_t rank_bareiss(Matrix m);

/// Incrementally grown row-echelon basis. Each stored row has a unit pivot and
/// vanishes at the pivots of all earlier rows.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t width) : width_(width) {}

  // Reduces v against the basis; returns true (and stores it) if v was
  // independent.
  bool insert(Vector v);
  // Reduced form of v (zero iff v lies in the span).
  Vector reduce(Vector v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  const std::vector<Vector>& rows() const { return rows_; }

 private:
  std::size_t width_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

// Basis of {x : m x = 0}; `columns` is needed when m has no rows.
std::vector<Vector> nullspace(const Matrix& m, std::size_t columns,
                              const CyclotomicField& field);

// Characteristic polynomial det(x I - m), monic, via Hessenberg reduction.
Poly characteristic_polynomial(Matrix m);

void poly_trim(Poly& p);
std::size_t poly_degree(const Poly& p);  // degree of the zero polynomial is 0
Poly poly_derivative(const Poly& p);
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_monic_gcd(Poly a, Poly b);

/// Squarefree decomposition f = prod a_i^i (Yun). Returns (i, deg a_i) for
/// every i with deg a_i > 0; i.e. how many distinct roots have multiplicity i.
std::vector<std::pair<std::size_t, std::size_t>> root_multiplicity_profile(const Poly& f);

}  // namespace gradedexp
