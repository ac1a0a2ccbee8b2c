#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gradedexp/glued.hpp"

namespace gradedexp {

// A K-simple block of the semisimple part of A_K: the K-degree part of
// component `component` supported on one class of matrix indices.
struct SubBlock {
  std::size_t component;
  std::vector<std::size_t> members;  // matrix indices, sorted
  std::size_t dimension;
};

struct ExpConjResult {
  std::size_t value = 0;
  std::vector<SubBlock> blocks;        // every block taking part in the search
  std::vector<std::size_t> sequence;   // witness: distinct blocks, lexicographically least
  // Concrete witness z_1 v_1 z_2 ... v_n z_{n+1} as glued basis indices; z's at
  // even positions, v's (radical paths of K-degree) at odd positions.
  std::vector<std::size_t> walk;
  std::size_t radical_length = 0;      // total path length of the v's
  bool certified = false;              // walk product re-checked nonzero
};

// Search limits. Blocks are combined by a bitmask search, so their number is
// bounded.
inline constexpr std::size_t kMaxSearchBlocks = 20;

// exp^Conj over G: maximal sum of dimensions of distinct graded-simple
// components appearing in a nonzero product S J S J ... S.
ExpConjResult exp_conj(const GluedAlgebra& a);

// exp^Conj_K(A_K) with the K-simple blocks of every component and radical
// elements restricted to K-degree.
ExpConjResult exp_conj_sub(const GluedAlgebra& a, const Subgroup& k);

// Independent brute force over the actual basis of A_K: enumerates ordered
// sequences of distinct blocks (blocks found by index connectivity) and
// propagates the set of reachable nonzero basis products. Throws CapExceeded
// above dimension 200.
inline constexpr std::size_t kOracleMaxDimension = 200;
std::size_t exp_conj_oracle(const GluedAlgebra& a);
std::size_t exp_conj_oracle(const GluedAlgebra& a, const Subgroup& k);

struct MainInequalityReport {
  std::size_t lhs = 0;       // exp^Conj_G(A)
  std::size_t k_value = 0;   // exp^Conj_K(A_K)
  std::size_t index = 0;     // [G:K]
  std::size_t rhs = 0;       // [G:K]^2 * k_value
  bool holds = false;
  ExpConjResult g_result;
  ExpConjResult k_result;
};

MainInequalityReport check_main_inequality(const GluedAlgebra& a, const Subgroup& k);

// Dimensions of the G/N-simple components of a graded-simple algebra graded by
// G/N, sorted decreasingly. Computed from the primitive idempotents of the
// degree-e part of the center.
std::vector<std::size_t> quotient_simple_dimensions(const GradedSimple& b, const Subgroup& n);

struct MonotonicityReport {
  std::size_t g_value = 0;         // exp^Conj_G(A)
  std::size_t quotient_value = 0;  // exp^Conj_{G/N}(A)
  std::vector<std::vector<std::size_t>> quotient_components;  // per component
  bool holds = false;              // g_value >= quotient_value
};

MonotonicityReport check_monotonicity(const GluedAlgebra& a, const Subgroup& n);

// Exp^Conj of A viewed with the given per-component lists of simple
// sub-block dimensions: maximum over quiver walks with fewer than N edges of
// the sum, for every vertex visited v times, of its v largest sub-blocks.
std::size_t walk_value(const GluedAlgebra& a, const std::vector<std::vector<std::size_t>>& sub_dims);

}  // namespace gradedexp
