#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradedexp/algebra.hpp"
#include "gradedexp/glued.hpp"

namespace gradedexp {

struct CodimOptions {
  // Budget in basis multiplications: tuples * n! * (n - 1).
  std::size_t work_cap = 10'000'000;
  // Over the cap: draw random substitution tuples instead of throwing. The
  // result is then only a lower bound.
  bool allow_sampling = false;
  std::size_t samples = 20000;
  std::uint64_t sample_seed = 1;
  // Permute row and column enumeration (rank must not care).
  std::optional<std::uint64_t> shuffle_seed;
  // Use only the first k substitution tuples of the enumeration.
  std::optional<std::size_t> column_limit;
};

struct CodimResult {
  std::size_t value = 0;
  bool exact = true;             // false when sampled or column-limited
  std::size_t rows = 0;          // multilinear monomials considered
  std::size_t tuples_used = 0;
  std::size_t distinct_columns = 0;
};

// c_n(A): rank of the evaluation matrix with rows the n! monomials
// x_{s(1)}...x_{s(n)} and columns all basis substitutions times output
// coordinates. n >= 1. Throws CapExceeded over budget unless sampling is on.
CodimResult codimension_detail(const GradedAlgebra& a, std::size_t n, const CodimOptions& options = {});
std::size_t codimension(const GradedAlgebra& a, std::size_t n);

// c_n^G(A): rows are (monomial, degree assignment of x_1..x_n), substitutions
// must match the assigned degrees. The matrix is block diagonal by
// assignment; the blocks are ranked separately and summed.
CodimResult graded_codimension_detail(const GradedAlgebra& a, std::size_t n, const CodimOptions& options = {});
std::size_t graded_codimension(const GradedAlgebra& a, std::size_t n);

struct CodimRow {
  std::size_t n = 0;
  std::size_t c = 0;
  bool c_exact = true;
  std::optional<std::size_t> c_graded;
  bool c_graded_exact = true;
  std::optional<std::size_t> c_sub;  // c_n of A_K
  bool c_sub_exact = true;
  double root = 0;                   // c^(1/n), display only
};

/// Finite codimension table. Trend only: nothing here certifies a limit.
struct CodimReport {
  std::string algebra;
  std::vector<CodimRow> rows;
  std::size_t exp_conj = 0;
  std::optional<std::size_t> exp_conj_sub;
  std::optional<std::size_t> subgroup_index;
  std::string note;
};

CodimReport growth_report(const GluedAlgebraPtr& a, std::size_t n_max, const std::optional<Subgroup>& k = {},
                          bool graded = false, const CodimOptions& options = {});

}  // namespace gradedexp
