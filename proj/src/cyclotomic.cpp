#include "gradedexp/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "gradedexp/error.hpp"

namespace gradedexp {

namespace {

using QPoly = std::vector<mpq_class>;  // lowest degree first

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division a / b in Q[x]; b must divide a.
QPoly exact_divide(QPoly a, const QPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  QPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const mpq_class coef = a[i] / b[db];
    q[i - db] = coef;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= coef * b[j];
  }
  trim(a);
  if (!a.empty()) throw InvariantViolation("cyclotomic division left a remainder");
  return q;
}

QPoly multiply(const QPoly& a, const QPoly& b) {
  QPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

QPoly cyclotomic_poly(int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  QPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  QPoly den{1};
  for (int d = 1; d < n; ++d)
    if (n % d == 0) den = multiply(den, cyclotomic_poly(d));
  return exact_divide(num, den);
}

// Solves M x = rhs over Q by Gaussian elimination; M is square and invertible.
std::vector<mpq_class> solve_rational(std::vector<std::vector<mpq_class>> m,
                                      std::vector<mpq_class> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw InvalidArgument("division by zero in cyclotomic field");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const mpq_class f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<mpq_class> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

}  // namespace

CyclotomicField::CyclotomicField(int n) : n_(n) {
  if (n <= 0) throw InvalidArgument("cyclotomic modulus must be positive");
  phi_poly_ = cyclotomic_poly(n);
  phi_ = static_cast<int>(phi_poly_.size()) - 1;
  // x^k reductions for k < 2*phi - 1
  const int top = std::max(2 * phi_ - 1, 1);
  reductions_.assign(top, std::vector<mpq_class>(phi_, 0));
  std::vector<mpq_class> cur(phi_, 0);
  cur[0] = 1;
  for (int k = 0; k < top; ++k) {
    reductions_[k] = cur;
    // multiply by x and reduce with x^phi = -sum_{i<phi} p_i x^i
    std::vector<mpq_class> next(phi_, 0);
    for (int i = phi_ - 1; i >= 1; --i) next[i] = cur[i - 1];
    const mpq_class carry = cur[phi_ - 1];
    if (phi_ == 1) next[0] = 0;
    for (int i = 0; i < phi_; ++i) next[i] -= carry * phi_poly_[i];
    cur = std::move(next);
  }
  zeta_powers_.assign(n_, std::vector<mpq_class>(phi_, 0));
  std::vector<mpq_class> z(phi_, 0);
  z[0] = 1;
  for (int k = 0; k < n_; ++k) {
    zeta_powers_[k] = z;
    std::vector<mpq_class> next(phi_, 0);
    for (int i = phi_ - 1; i >= 1; --i) next[i] = z[i - 1];
    const mpq_class carry = z[phi_ - 1];
    if (phi_ == 1) next[0] = 0;
    for (int i = 0; i < phi_; ++i) next[i] -= carry * phi_poly_[i];
    z = std::move(next);
  }
}

const std::vector<mpq_class>& CyclotomicField::zeta_power(long long k) const {
  long long r = k % n_;
  if (r < 0) r += n_;
  return zeta_powers_[static_cast<std::size_t>(r)];
}

const CyclotomicField& cyclotomic_field(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> fields;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = fields[n];
  if (!slot) slot.reset(new CyclotomicField(n));
  return *slot;
}

CycScalar::CycScalar(const CyclotomicField& field)
    : field_(&field), c_(field.degree(), 0) {}

CycScalar::CycScalar(const CyclotomicField& field, const mpq_class& rational)
    : field_(&field), c_(field.degree(), 0) {
  c_[0] = rational;
  c_[0].canonicalize();
}

CycScalar::CycScalar(const CyclotomicField& field, std::vector<mpq_class> coefficients)
    : field_(&field), c_(std::move(coefficients)) {
  if (c_.size() != static_cast<std::size_t>(field.degree()))
    throw InvalidArgument("coefficient vector length must equal phi(n)");
  for (mpq_class& x : c_) x.canonicalize();
}

CycScalar CycScalar::zeta(const CyclotomicField& field, long long k) {
  return CycScalar(field, field.zeta_power(k));
}

bool CycScalar::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycScalar::is_one() const { return is_rational() && c_[0] == 1; }

bool CycScalar::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

void CycScalar::require_same_field(const CycScalar& o) const {
  if (field_ != o.field_)
    throw InvalidArgument("arithmetic between different cyclotomic fields (" +
                          std::to_string(field_->modulus()) + " vs " +
                          std::to_string(o.field_->modulus()) + ")");
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
  require_same_field(o);
  const int phi = field_->degree();
  if (phi == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::vector<mpq_class> full(2 * phi - 1, 0);
  for (int i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < phi; ++j)
      if (o.c_[j] != 0) full[i + j] += c_[i] * o.c_[j];
  }
  std::vector<mpq_class> r(full.begin(), full.begin() + phi);
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (full[k] == 0) continue;
    const auto& red = field_->power_reduction(k);
    for (int i = 0; i < phi; ++i) r[i] += full[k] * red[i];
  }
  c_ = std::move(r);
  return *this;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero");
  const int phi = field_->degree();
  if (phi == 1) return CycScalar(*field_, mpq_class(1) / c_[0]);
  // Column j of the multiplication matrix is this * x^j.
  std::vector<std::vector<mpq_class>> m(phi, std::vector<mpq_class>(phi, 0));
  for (int j = 0; j < phi; ++j) {
    CycScalar xj(*field_, field_->power_reduction(j));
    CycScalar col = *this * xj;
    for (int i = 0; i < phi; ++i) m[i][j] = col.c_[i];
  }
  std::vector<mpq_class> rhs(phi, 0);
  rhs[0] = 1;
  return CycScalar(*field_, solve_rational(std::move(m), std::move(rhs)));
}

CycScalar& CycScalar::operator/=(const CycScalar& o) { return *this *= o.inverse(); }

CycScalar CycScalar::operator-() const {
  CycScalar r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

CycScalar CycScalar::embed(const CyclotomicField& larger) const {
  const int n = field_->modulus(), m = larger.modulus();
  if (m % n != 0) throw InvalidArgument("cannot embed Q(zeta_n) into Q(zeta_m) unless n | m");
  CycScalar r(larger);
  for (int i = 0; i < field_->degree(); ++i) {
    if (c_[i] == 0) continue;
    const auto& z = larger.zeta_power(static_cast<long long>(i) * (m / n));
    for (int k = 0; k < larger.degree(); ++k) r.c_[k] += c_[i] * z[k];
  }
  return r;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  a.require_same_field(b);
  return a.c_ == b.c_;
}

std::string CycScalar::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    std::string coef = c_[i].get_str();
    if (!s.empty()) s += coef[0] == '-' ? " - " : " + ";
    else if (coef[0] == '-') s += "-";
    if (coef[0] == '-') coef.erase(0, 1);
    if (i == 0) s += coef;
    else {
      if (coef != "1") s += coef + "*";
      s += "z";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace gradedexp
