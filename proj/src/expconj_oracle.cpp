#include <algorithm>
#include <numeric>

#include "gradedexp/error.hpp"
#include "gradedexp/expconj.hpp"

namespace gradedexp {

namespace {

struct OracleBlock {
  std::vector<std::size_t> elements;  // glued basis indices
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::size_t exp_conj_oracle(const GluedAlgebra& a, const Subgroup& k) {
  if (k.group() != a.grading_group()) throw InvalidArgument("K is not a subgroup of the grading group");
  // the cap is on A_K, the part the search actually walks
  std::size_t k_dimension = 0;
  for (std::size_t b = 0; b < a.dimension(); ++b)
    if (k.contains(a.degree(b))) ++k_dimension;
  if (k_dimension > kOracleMaxDimension)
    throw CapExceeded("oracle limited to dimension " + std::to_string(kOracleMaxDimension));

  // Blocks: indices i, j of a component are linked whenever some K-degree
  // basis element sits at position (i, j).
  std::vector<OracleBlock> blocks;
  for (std::size_t t = 0; t < a.components().size(); ++t) {
    const GradedSimple& c = a.component(t);
    const std::size_t r = c.matrix_size();
    std::vector<std::size_t> parent(r);
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t x = 0; x < c.dimension(); ++x) {
      if (!k.contains(c.degree(x))) continue;
      const SimpleBasisElement e = c.decode(x);
      parent[find_root(parent, e.row)] = find_root(parent, e.col);
    }
    for (std::size_t root = 0; root < r; ++root) {
      if (find_root(parent, root) != root) continue;
      OracleBlock blk;
      for (std::size_t x = 0; x < c.dimension(); ++x) {
        const SimpleBasisElement e = c.decode(x);
        if (k.contains(c.degree(x)) && find_root(parent, e.row) == root && find_root(parent, e.col) == root)
          blk.elements.push_back(a.vertex_index(t, x));
      }
      blocks.push_back(std::move(blk));
    }
  }
  std::vector<std::size_t> radical;
  for (std::size_t b = 0; b < a.dimension(); ++b)
    if (!a.is_semisimple(b) && k.contains(a.degree(b))) radical.push_back(b);

  const std::size_t n = a.dimension();
  std::size_t best = 0;
  std::vector<char> used(blocks.size(), 0);
  // `reach` flags the basis elements that occur (up to scalar) as products
  // z_1 v_1 ... z_m for the current block sequence.
  auto dfs = [&](auto&& self, const std::vector<char>& reach, std::size_t sum) -> void {
    best = std::max(best, sum);
    std::vector<char> with_radical(n, 0);
    bool any = false;
    for (std::size_t p = 0; p < n; ++p) {
      if (!reach[p]) continue;
      for (std::size_t v : radical)
        if (auto prod = a.multiply_basis(p, v)) {
          with_radical[prod->index] = 1;
          any = true;
        }
    }
    if (!any) return;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (used[b]) continue;
      std::vector<char> next(n, 0);
      bool nonzero = false;
      for (std::size_t p = 0; p < n; ++p) {
        if (!with_radical[p]) continue;
        for (std::size_t z : blocks[b].elements)
          if (auto prod = a.multiply_basis(p, z)) {
            next[prod->index] = 1;
            nonzero = true;
          }
      }
      if (!nonzero) continue;
      used[b] = 1;
      self(self, next, sum + blocks[b].elements.size());
      used[b] = 0;
    }
  };
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::vector<char> reach(n, 0);
    for (std::size_t z : blocks[b].elements) reach[z] = 1;
    used[b] = 1;
    dfs(dfs, reach, blocks[b].elements.size());
    used[b] = 0;
  }
  return best;
}

std::size_t exp_conj_oracle(const GluedAlgebra& a) {
  return exp_conj_oracle(a, Subgroup::whole(a.grading_group()));
}

}  // namespace gradedexp
