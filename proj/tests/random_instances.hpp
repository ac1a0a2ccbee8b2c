// Small random glued algebras for property tests.
#pragma once

#include <optional>
#include <vector>

#include "gradedexp/algebra.hpp"
#include "gradedexp/cocycle.hpp"
#include "gradedexp/error.hpp"
#include "gradedexp/glued.hpp"
#include "gradedexp/rng.hpp"

namespace testing_support {

using namespace gradedexp;

inline std::vector<GroupPtr> small_groups() {
  return {cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4),
          klein_four_group(), cyclic_group(5), cyclic_group(6), symmetric_group(3)};
}

inline TwoCocycle random_cocycle(const Subgroup& h, SplitMix64& rng) {
  if (is_klein_four(h) && rng.coin()) return klein_cocycle(h);
  if (h.size() > 1 && rng.coin()) {
    std::vector<int> lambda(h.size(), 0);
    for (std::size_t i = 1; i < lambda.size(); ++i) lambda[i] = static_cast<int>(rng.below(4));
    return TwoCocycle::coboundary(h, 4, lambda);
  }
  return TwoCocycle::trivial(h);
}

inline GradedSimplePtr random_simple(const GroupPtr& g, SplitMix64& rng, std::size_t max_r) {
  const auto subs = all_subgroups(g);
  const Subgroup h = subs[rng.below(subs.size())];
  const std::size_t r = 1 + rng.below(max_r);
  std::vector<Element> tuple(r);
  for (Element& x : tuple) x = static_cast<Element>(rng.below(g->order()));
  return build_bsz_simple(random_cocycle(h, rng), tuple);
}

// Retries until the algebra fits under `max_dim`.
inline GluedAlgebraPtr random_glued(const GroupPtr& g, SplitMix64& rng, std::size_t max_q,
                                    std::size_t max_n, std::size_t max_dim) {
  while (true) {
    const std::size_t q = 1 + rng.below(max_q);
    std::vector<GradedSimplePtr> comps;
    for (std::size_t t = 0; t < q; ++t) comps.push_back(random_simple(g, rng, 2));
    std::vector<QuiverEdge> edges;
    const std::size_t ne = rng.below(q + 2);
    for (std::size_t e = 0; e < ne; ++e)
      edges.push_back({rng.below(q), rng.below(q), static_cast<Element>(rng.below(g->order()))});
    const std::size_t n = 1 + rng.below(max_n);
    try {
      auto a = build_glued(g, comps, edges, n, max_dim);
      return a;
    } catch (const CapExceeded&) {
    }
  }
}

using Table = std::vector<std::optional<BasisProduct>>;

inline std::shared_ptr<TableAlgebra> field_algebra(const GroupPtr& g) {
  return std::make_shared<TableAlgebra>(g, 1, std::vector<Element>{kIdentity}, Table{BasisProduct{0, 0}});
}

inline std::shared_ptr<TableAlgebra> square_zero(const GroupPtr& g, std::size_t dim) {
  return std::make_shared<TableAlgebra>(g, 1, std::vector<Element>(dim, kIdentity), Table(dim * dim));
}

// Same algebra on the basis b'_i = b_{perm[i]}.
inline std::shared_ptr<TableAlgebra> permuted(const GradedAlgebra& a, const std::vector<std::size_t>& perm) {
  const std::size_t d = a.dimension();
  std::vector<std::size_t> inv(d);
  for (std::size_t i = 0; i < d; ++i) inv[perm[i]] = i;
  std::vector<Element> degrees(d);
  Table table(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    degrees[i] = a.degree(perm[i]);
    for (std::size_t j = 0; j < d; ++j)
      if (auto p = a.multiply_basis(perm[i], perm[j])) table[i * d + j] = BasisProduct{inv[p->index], p->phase};
  }
  return std::make_shared<TableAlgebra>(a.grading_group(), a.modulus(), std::move(degrees), std::move(table));
}

}  // namespace testing_support
