#include "gradedexp/linalg.hpp"

#include "gradedexp/error.hpp"

namespace gradedexp {

Vector zero_vector(const CyclotomicField& field, std::size_t n) {
  return Vector(n, CycScalar(field));
}

std::size_t rank_bareiss(Matrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  if (cols == 0) return 0;
  const CyclotomicField& field = m[0][0].field();
  CycScalar prev(field, mpq_class(1));
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && m[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const CycScalar pivot = m[r][col];
    const CycScalar prev_inv = prev.inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      const CycScalar lead = m[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        if (lead.is_zero()) {
          if (!m[i][j].is_zero()) m[i][j] = m[i][j] * pivot * prev_inv;
        } else {
          m[i][j] = (m[i][j] * pivot - lead * m[r][j]) * prev_inv;
        }
      }
      m[i][col] = CycScalar(field);
    }
    prev = pivot;
    ++r;
  }
  return r;
}

Vector EchelonBasis::reduce(Vector v) const {
  if (v.size() != width_) throw InvalidArgument("vector width mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (v[p].is_zero()) continue;
    const CycScalar f = v[p];
    const Vector& row = rows_[k];
    for (std::size_t j = 0; j < width_; ++j)
      if (!row[j].is_zero()) v[j] -= f * row[j];
  }
  return v;
}

bool EchelonBasis::insert(Vector v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < width_ && v[p].is_zero()) ++p;
  if (p == width_) return false;
  const CycScalar inv = v[p].inverse();
  for (auto& x : v)
    if (!x.is_zero()) x *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

std::vector<Vector> nullspace(const Matrix& m, std::size_t columns,
                              const CyclotomicField& field) {
  // Reduced row echelon form.
  Matrix a = m;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < columns && r < a.size(); ++col) {
    std::size_t p = r;
    while (p < a.size() && a[p][col].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const CycScalar inv = a[r][col].inverse();
    for (auto& x : a[r])
      if (!x.is_zero()) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][col].is_zero()) continue;
      const CycScalar f = a[i][col];
      for (std::size_t j = col; j < columns; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  std::vector<char> is_pivot(columns, 0);
  for (auto c : pivot_cols) is_pivot[c] = 1;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    Vector x = zero_vector(field, columns);
    x[free] = CycScalar(field, mpq_class(1));
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) x[pivot_cols[k]] = -a[k][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

Poly characteristic_polynomial(Matrix h) {
  const std::size_t n = h.size();
  if (n == 0) throw InvalidArgument("characteristic polynomial of an empty matrix");
  const CyclotomicField& field = h[0][0].field();
  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h[i][j].is_zero()) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      std::swap(h[i], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][j + 1]);
    }
    const CycScalar inv = h[j + 1][j].inverse();
    for (std::size_t k = j + 2; k < n; ++k) {
      if (h[k][j].is_zero()) continue;
      const CycScalar u = h[k][j] * inv;
      for (std::size_t c = 0; c < n; ++c)
        if (!h[j + 1][c].is_zero()) h[k][c] -= u * h[j + 1][c];
      for (std::size_t r = 0; r < n; ++r)
        if (!h[r][k].is_zero()) h[r][j + 1] += u * h[r][k];
    }
  }
  // p_{m+1} = (x - h_mm) p_m - sum_{i<m} h_im (prod_{k=i+1..m} h_{k,k-1}) p_i
  std::vector<Poly> p;
  p.push_back(Poly{CycScalar(field, mpq_class(1))});
  for (std::size_t m = 0; m < n; ++m) {
    Poly next(m + 2, CycScalar(field));
    for (std::size_t d = 0; d <= m; ++d) {
      next[d + 1] += p[m][d];
      next[d] -= h[m][m] * p[m][d];
    }
    CycScalar prod(field, mpq_class(1));
    for (std::size_t i = m; i-- > 0;) {
      prod *= h[i + 1][i];
      if (prod.is_zero()) break;
      if (h[i][m].is_zero()) continue;
      const CycScalar coef = h[i][m] * prod;
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] -= coef * p[i][d];
    }
    p.push_back(std::move(next));
  }
  Poly result = std::move(p[n]);
  poly_trim(result);
  return result;
}

void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

std::size_t poly_degree(const Poly& p) { return p.empty() ? 0 : p.size() - 1; }

Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i)
    d.push_back(p[i] * CycScalar(p[i].field(), mpq_class(static_cast<long>(i))));
  poly_trim(d);
  return d;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.empty()) throw InvalidArgument("polynomial division by zero");
  Poly r = a;
  poly_trim(r);
  if (r.size() < b.size()) return {{}, r};
  const CycScalar lead_inv = b.back().inverse();
  Poly q(r.size() - b.size() + 1, CycScalar(b[0].field()));
  const std::size_t db = b.size() - 1;
  for (std::size_t shift = q.size(); shift-- > 0;) {
    const std::size_t i = shift + db;
    if (r[i].is_zero()) continue;
    const CycScalar coef = r[i] * lead_inv;
    q[shift] = coef;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= coef * b[j];
  }
  poly_trim(q);
  poly_trim(r);
  return {q, r};
}

namespace {

Poly make_monic(Poly p) {
  poly_trim(p);
  if (p.empty()) return p;
  const CycScalar inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

}  // namespace

Poly poly_monic_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = make_monic(std::move(r));
  }
  return make_monic(std::move(a));
}

std::vector<std::pair<std::size_t, std::size_t>> root_multiplicity_profile(const Poly& f_in) {
  Poly f = make_monic(f_in);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (poly_degree(f) == 0) return out;
  Poly a0 = poly_monic_gcd(f, poly_derivative(f));
  Poly b = poly_divmod(f, a0).first;
  Poly c = poly_divmod(poly_derivative(f), a0).first;
  Poly bd = poly_derivative(b);
  Poly d = c;
  // d = c - b'
  if (d.size() < bd.size()) d.resize(bd.size(), CycScalar(f[0].field()));
  for (std::size_t i = 0; i < bd.size(); ++i) d[i] -= bd[i];
  poly_trim(d);
  for (std::size_t i = 1; poly_degree(b) > 0; ++i) {
    Poly a = poly_monic_gcd(b, d);
    if (poly_degree(a) > 0) out.emplace_back(i, poly_degree(a));
    b = poly_divmod(b, a).first;
    c = poly_divmod(d, a).first;
    bd = poly_derivative(b);
    d = c;
    if (d.size() < bd.size()) d.resize(bd.size(), CycScalar(f[0].field()));
    for (std::size_t k = 0; k < bd.size(); ++k) d[k] -= bd[k];
    poly_trim(d);
  }
  return out;
}

}  // namespace gradedexp
