#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gradedexp/graded_simple.hpp"

namespace gradedexp {

// Basis elements u_h (x) e_{i,j} with g_i^-1 h g_j in K.
std::vector<std::size_t> k_basis(const GradedSimple& b, const Subgroup& k);

// Partition of the matrix indices 0..r-1 by i ~ j iff H g_i K = H g_j K.
// Classes are sorted and ordered by their smallest member.
std::vector<std::vector<std::size_t>> index_classes(const GradedSimple& b, const Subgroup& k);

/// One H-K double coset and the K-simple block it carries. Blocks of double
/// cosets not met by the tuple are kept with pi = 0 and dimension 0.
struct KBlock {
  std::size_t double_coset;             // index into KDecomposition::cosets.classes
  std::vector<std::size_t> members;     // matrix indices i with g_i in the double coset
  std::size_t pi() const { return members.size(); }
  // members[0] for pi > 0, otherwise none.
  std::optional<std::size_t> representative;
  // g^-1 H g cap K for g = g_representative (or the double coset's minimal
  // element when pi = 0).
  Subgroup intersection;
  // Transported cocycle on `intersection`; present when pi > 0.
  std::optional<TwoCocycle> cocycle;
  // h_t per member: first h in H with g_i^-1 h g_t in K (h = e for t = i).
  std::vector<Element> translators;
  // Elementary K-grading tuple (e, g_i^-1 h_{j2} g_{j2}, ...).
  std::vector<Element> k_tuple;
  std::size_t dimension = 0;  // |intersection| * pi^2
};

struct KDecomposition {
  GradedSimplePtr algebra;
  Subgroup k;
  DoubleCosetPartition cosets;
  std::vector<KBlock> blocks;                // one per double coset, in coset order
  std::vector<std::size_t> block_of_index;   // matrix index -> block
  std::size_t k_dimension = 0;               // number of K-degree basis elements
};

// Throws InvariantViolation if the dimension bookkeeping does not add up.
KDecomposition k_simple_blocks(const GradedSimplePtr& b, const Subgroup& k);

struct BlockIsomorphism {
  // Abstract block F^{g(f)}(g^-1 H g cap K) (x) M_pi(F) with the elementary
  // K-grading by k_tuple, realized as a GradedSimple over the same group.
  GradedSimplePtr target;
  // K-degree basis elements of the source block and their images
  // (zeta^phase times a target basis element).
  std::vector<std::size_t> source;
  std::vector<BasisProduct> image;
  bool verified = false;
  std::size_t pairs_checked = 0;
  std::string failure;
};

// Explicit isomorphism of the block onto its abstract form, verified on all
// basis pairs (multiplicativity, bijectivity, degree preservation).
BlockIsomorphism build_block_isomorphism(const KDecomposition& d, std::size_t block);

}  // namespace gradedexp
