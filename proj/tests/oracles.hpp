// Independent reference computations used by the tests. Nothing here calls
// into the library's algorithms beyond constructing inputs.
#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "gradedexp/graded_simple.hpp"
#include "gradedexp/group.hpp"

namespace oracle {

using Perm = std::vector<std::size_t>;

// Left-to-right composition: first p, then q.
inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = q[p[x]];
  return r;
}

inline Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = x;
  return r;
}

inline std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t n) {
  Perm id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  std::set<Perm> out{id};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> cur(out.begin(), out.end());
    for (const Perm& a : cur)
      for (const Perm& g : gens)
        if (out.insert(compose(a, g)).second) grew = true;
  }
  return out;
}

inline gradedexp::Element index_of(const Perm& p) { return gradedexp::symmetric_element(p); }

inline std::vector<gradedexp::Element> indices(const std::set<Perm>& s) {
  std::vector<gradedexp::Element> out;
  for (const Perm& p : s) out.push_back(index_of(p));
  std::sort(out.begin(), out.end());
  return out;
}

// Product of elementary matrices e_{i,j} given as (row, col) cells of an r x r
// matrix, multiplied out densely.
inline std::vector<std::vector<long>> matrix_product(const std::vector<std::pair<std::size_t, std::size_t>>& cells,
                                                     std::size_t r) {
  std::vector<std::vector<long>> acc(r, std::vector<long>(r, 0));
  for (std::size_t i = 0; i < r; ++i) acc[i][i] = 1;
  for (auto [row, col] : cells) {
    std::vector<std::vector<long>> next(r, std::vector<long>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k)
        if (k == row) next[i][col] += acc[i][k];
    acc = std::move(next);
  }
  return acc;
}

// Degree g_i^-1 h g_j evaluated straight from the group table.
inline gradedexp::Element bsz_degree(const gradedexp::Group& g, const std::vector<gradedexp::Element>& tuple,
                                     gradedexp::Element h, std::size_t i, std::size_t j) {
  return g.mul(g.mul(g.inv(tuple[i]), h), tuple[j]);
}

}  // namespace oracle
