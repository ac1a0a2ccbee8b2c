#include <algorithm>
#include <map>
#include <set>

#include "gradedexp/error.hpp"
#include "gradedexp/expconj.hpp"
#include "gradedexp/linalg.hpp"

namespace gradedexp {

namespace {

// Basis of Z(B) cap B_{N}: elements supported on degrees in N commuting with
// every basis element. Vectors are indexed like `support`.
std::vector<Vector> graded_center(const GradedSimple& b, const std::vector<std::size_t>& support) {
  const CyclotomicField& field = b.field();
  const std::size_t m = support.size();
  EchelonBasis equations(m);
  for (std::size_t j = 0; j < b.dimension() && equations.rank() < m; ++j) {
    // coefficient of output basis element k in sum_i x_i [b_i, b_j]
    std::map<std::size_t, Vector> rows;
    auto row_for = [&](std::size_t k) -> Vector& {
      auto it = rows.find(k);
      if (it == rows.end()) it = rows.emplace(k, zero_vector(field, m)).first;
      return it->second;
    };
    for (std::size_t i = 0; i < m; ++i) {
      if (auto p = b.multiply_basis(support[i], j)) row_for(p->index)[i] += CycScalar::zeta(field, p->phase);
      if (auto p = b.multiply_basis(j, support[i])) row_for(p->index)[i] -= CycScalar::zeta(field, p->phase);
    }
    for (auto& [k, row] : rows) equations.insert(std::move(row));
  }
  return nullspace(equations.rows(), m, field);
}

}  // namespace

std::vector<std::size_t> quotient_simple_dimensions(const GradedSimple& b, const Subgroup& n) {
  if (n.group() != b.grading_group()) throw InvalidArgument("N is not a subgroup of the grading group");
  if (!is_normal(n)) throw InvalidArgument("N is not normal");
  std::vector<std::size_t> support;
  for (std::size_t x = 0; x < b.dimension(); ++x)
    if (n.contains(b.degree(x))) support.push_back(x);
  const std::vector<Vector> center = graded_center(b, support);
  if (center.empty()) throw InvariantViolation("graded center is zero");
  if (center.size() == 1) return {b.dimension()};

  const CyclotomicField& field = b.field();
  const std::size_t dim = b.dimension();
  SplitMix64 rng(0x6E0C3A7ULL + dim);
  // For generic c in the center, left multiplication by c has one eigenvalue
  // per primitive idempotent e, with multiplicity dim(eB).
  for (int attempt = 0; attempt < 32; ++attempt) {
    Vector c = zero_vector(field, dim);
    for (const Vector& z : center) {
      const CycScalar coef(field, mpq_class(static_cast<long>(rng.between(1, 1000))));
      for (std::size_t i = 0; i < support.size(); ++i)
        if (!z[i].is_zero()) c[support[i]] += coef * z[i];
    }
    Matrix left(dim, zero_vector(field, dim));
    for (std::size_t i = 0; i < dim; ++i) {
      if (c[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim; ++j)
        if (auto p = b.multiply_basis(i, j)) left[p->index][j] += c[i] * CycScalar::zeta(field, p->phase);
    }
    const auto profile = root_multiplicity_profile(characteristic_polynomial(std::move(left)));
    std::size_t distinct = 0;
    for (const auto& [mult, count] : profile) distinct += count;
    if (distinct != center.size()) continue;
    std::vector<std::size_t> dims;
    for (const auto& [mult, count] : profile) dims.insert(dims.end(), count, mult);
    std::sort(dims.rbegin(), dims.rend());
    return dims;
  }
  throw InvariantViolation("could not separate the primitive central idempotents");
}

std::size_t walk_value(const GluedAlgebra& a, const std::vector<std::vector<std::size_t>>& sub_dims) {
  const std::size_t q = a.components().size();
  if (sub_dims.size() != q) throw InvalidArgument("one dimension list per component expected");
  std::vector<std::vector<std::size_t>> prefix(q);
  for (std::size_t t = 0; t < q; ++t) {
    std::vector<std::size_t> d = sub_dims[t];
    std::sort(d.rbegin(), d.rend());
    prefix[t].push_back(0);
    for (std::size_t x : d) prefix[t].push_back(prefix[t].back() + x);
  }
  std::size_t best = 0;
  std::set<std::vector<std::size_t>> seen;  // (vertex, edges used, visit counts...)
  std::vector<std::size_t> visits(q, 0);
  auto value = [&] {
    std::size_t v = 0;
    for (std::size_t t = 0; t < q; ++t) v += prefix[t][std::min(visits[t], prefix[t].size() - 1)];
    return v;
  };
  auto dfs = [&](auto&& self, std::size_t t, std::size_t used) -> void {
    std::vector<std::size_t> key{t, used};
    for (std::size_t u = 0; u < q; ++u) key.push_back(std::min(visits[u], prefix[u].size() - 1));
    if (!seen.insert(std::move(key)).second) return;
    best = std::max(best, value());
    if (used + 1 >= a.truncation()) return;
    for (const QuiverEdge& e : a.edges()) {
      if (e.from != t) continue;
      ++visits[e.to];
      self(self, e.to, used + 1);
      --visits[e.to];
    }
  };
  for (std::size_t t = 0; t < q; ++t) {
    ++visits[t];
    dfs(dfs, t, 0);
    --visits[t];
  }
  return best;
}

MonotonicityReport check_monotonicity(const GluedAlgebra& a, const Subgroup& n) {
  if (!is_normal(n)) throw InvalidArgument("N is not normal");
  MonotonicityReport r;
  r.g_value = exp_conj(a).value;
  std::vector<std::vector<std::size_t>> whole;
  for (std::size_t t = 0; t < a.components().size(); ++t) {
    r.quotient_components.push_back(quotient_simple_dimensions(a.component(t), n));
    whole.push_back({a.component(t).dimension()});
  }
  if (walk_value(a, whole) != r.g_value)
    throw InvariantViolation("walk search and block search disagree on exp^Conj over G");
  r.quotient_value = walk_value(a, r.quotient_components);
  r.holds = r.g_value >= r.quotient_value;
  return r;
}

}  // namespace gradedexp
