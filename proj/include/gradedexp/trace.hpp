#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gradedexp/decomposition.hpp"
#include "gradedexp/expconj.hpp"

namespace gradedexp {

// Cells (row, col) of all r^2 matrix units, 0-based, forming a nonzero product
// equal to e_{i,i} and starting with e_{i,i}. An Eulerian circuit of the
// complete digraph with loops (Hierholzer, loop first then ascending targets),
// rotated to start at the loop at i.
std::vector<std::pair<std::size_t, std::size_t>> elementary_euler_monomial(std::size_t r, std::size_t i);

/// The enriched monomial b_1 b_2 ... b_d as glued basis elements.
struct TraceMonomial {
  const GluedAlgebra* algebra = nullptr;
  std::vector<std::size_t> factors;
  // prefix_degrees[l] = deg(b_1 ... b_{l+1})
  std::vector<Element> prefix_degrees;
  // Components in the order the monomial visits them (all distinct).
  std::vector<std::size_t> components;
  // Factor range [begin, end) of each visited component's expanded block,
  // including the radical factor that enters it.
  std::vector<std::pair<std::size_t, std::size_t>> component_ranges;
  BasisProduct product{0, 0};
  std::size_t value = 0;  // sum of the visited components' dimensions
};

// Builds the enriched monomial from a certified witness walk z_1 v_1 ... z_{n+1}.
// Throws InvalidArgument if the walk is malformed and InvariantViolation if a
// product that must be nonzero vanishes.
TraceMonomial build_lambda_hat(const GluedAlgebra& a, const ExpConjResult& witness);

struct OmegaData {
  std::vector<Element> omega;       // sorted
  std::vector<std::size_t> mu;      // per group element; 0 when absent, else 1-based length
  std::vector<std::vector<Element>> pi;  // left K-cosets meeting omega, sorted
  std::vector<Element> omega0;      // minimal-length representative of each coset in pi
};

OmegaData omega_sets(const TraceMonomial& l, const Subgroup& k);

struct FactorRange {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive
  std::size_t size() const { return end - begin; }
};

// Primitive idempotent 1 (x) e_{index,index} of `component` closing a block.
struct KStop {
  std::size_t position;   // 0-based factor index of the block's last factor
  std::size_t component;
  std::size_t index;      // matrix index
  std::size_t k_class;    // block of the component's K decomposition
  Element k_degree;       // degree of Sigma_1 ... Sigma_j (e for X_g itself)
};

struct GDecomposition {
  Element g = 0;
  FactorRange x;
  std::vector<FactorRange> sigma;
  FactorRange y;
  std::vector<KStop> stops;  // one for X_g, then one per Sigma block
};

// Per-component K decompositions, indexed like a.components().
std::vector<KDecomposition> component_decompositions(const GluedAlgebra& a, const Subgroup& k);

// Greedy parse X_g Sigma_1 ... Sigma_d Y(g). Throws InvalidArgument unless g
// is in omega0.
GDecomposition decompose_for(const TraceMonomial& l, const OmegaData& omega, const Subgroup& k,
                             const std::vector<KDecomposition>& blocks, Element g);

// Checks the three parse conditions directly on factor degrees.
bool decomposition_conditions_hold(const TraceMonomial& l, const Subgroup& k, const GDecomposition& d);

// Number of factorizations satisfying the three parse conditions for g, found
// by exhaustive search over cut positions (stops counting at `limit`).
std::size_t count_parses(const TraceMonomial& l, const Subgroup& k, Element g, std::size_t limit = 2);

struct VisitRow {
  std::size_t component;
  std::size_t k_class;
  std::vector<std::size_t> members;
  std::size_t observed = 0;  // elements of omega0 whose parse visits the class
  std::size_t expected = 0;  // |H g_i K| / |K|
};

struct VisitReport {
  std::vector<VisitRow> rows;
  bool ok = true;
};

VisitReport verify_visit_counts(const TraceMonomial& l, const Subgroup& k,
                                const std::vector<GDecomposition>& parses,
                                const std::vector<KDecomposition>& blocks);

struct LemmaChecks {
  bool omega0_bound = true;        // |omega0| <= [G:K]
  bool same_class_per_component = true;
  bool every_class_determined = true;
  bool coset_set_same_class = true;
  bool coset_set_represented = true;
  bool determining_inside_coset_set = true;
  bool aggregate = true;           // per-component counting inequality
  std::vector<std::string> failures;
  bool ok() const {
    return omega0_bound && same_class_per_component && every_class_determined && coset_set_same_class &&
           coset_set_represented && determining_inside_coset_set && aggregate;
  }
};

LemmaChecks check_visit_lemmas(const TraceMonomial& l, const Subgroup& k, const OmegaData& omega,
                               const std::vector<GDecomposition>& parses,
                               const std::vector<KDecomposition>& blocks);

/// Closing arithmetic for one graded-simple component.
struct FinalChainReport {
  std::vector<std::size_t> pi;  // per double coset, zeros included
  std::size_t m = 0;            // number of H-K double cosets
  std::size_t index = 0;        // [G:K]
  std::size_t h_order = 0;
  bool group_identity = true;   // (|HgK|/|K|) |g^-1Hg cap K| = |H| for every coset
  unsigned long long lhs_a = 0, rhs_a = 0;
  unsigned long long lhs_b = 0, rhs_b = 0;
  unsigned long long lhs_c = 0, rhs_c = 0;
  bool a = false, b = false, c = false;
  bool ok() const { return group_identity && a && b && c; }
};

FinalChainReport final_inequality_report(const GradedSimple& b, const Subgroup& k);

struct TraceReport {
  ExpConjResult witness;
  TraceMonomial monomial;
  OmegaData omega;
  std::vector<GDecomposition> parses;  // one per omega0 element, same order
  std::vector<bool> parse_conditions;
  std::vector<std::size_t> parse_counts;
  VisitReport visits;
  LemmaChecks lemmas;
  std::vector<FinalChainReport> chains;  // per visited component, same order as monomial.components
  bool ok() const;
};

// Runs the whole mechanized argument for A and K.
TraceReport run_trace(const GluedAlgebra& a, const Subgroup& k);

}  // namespace gradedexp
