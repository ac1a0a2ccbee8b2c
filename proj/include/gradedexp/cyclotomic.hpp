#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gradedexp {

/// Q(zeta_n) presented as Q[x] / Phi_n(x).
///
/// Fields are interned: cyclotomic_field(n) always returns the same object, so
/// scalars compare their fields by address.
class CyclotomicField {
 public:
  int modulus() const { return n_; }
  int degree() const { return phi_; }
  // Reduced coefficient vector of x^k for 0 <= k <= 2*degree()-2.
  const std::vector<mpq_class>& power_reduction(int k) const { return reductions_[k]; }
  // Reduced coefficient vector of zeta^k, k taken mod n.
  const std::vector<mpq_class>& zeta_power(long long k) const;
  // Coefficients of Phi_n, lowest degree first; monic of degree phi.
  const std::vector<mpq_class>& cyclotomic_polynomial() const { return phi_poly_; }

 private:
  friend const CyclotomicField& cyclotomic_field(int n);
  explicit CyclotomicField(int n);

  int n_;
  int phi_;
  std::vector<mpq_class> phi_poly_;
  std::vector<std::vector<mpq_class>> reductions_;
  std::vector<std::vector<mpq_class>> zeta_powers_;
};

const CyclotomicField& cyclotomic_field(int n);

/// Exact element of Q(zeta_n).
class CycScalar {
 public:
  explicit CycScalar(const CyclotomicField& field);  // zero
  CycScalar(const CyclotomicField& field, const mpq_class& rational);
  CycScalar(const CyclotomicField& field, std::vector<mpq_class> coefficients);

  static CycScalar zeta(const CyclotomicField& field, long long k);

  const CyclotomicField& field() const { return *field_; }
  const std::vector<mpq_class>& coefficients() const { return c_; }
  bool is_zero() const;
  bool is_one() const;
  // True when the element lies in Q.
  bool is_rational() const;

  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  CycScalar& operator/=(const CycScalar& o);
  CycScalar operator-() const;
  // Multiplicative inverse; throws on zero.
  CycScalar inverse() const;
  // Image under Q(zeta_n) -> Q(zeta_m), zeta_n -> zeta_m^(m/n). Requires n | m.
  CycScalar embed(const CyclotomicField& larger) const;

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
  friend bool operator==(const CycScalar& a, const CycScalar& b);
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void require_same_field(const CycScalar& o) const;

  const CyclotomicField* field_;
  std::vector<mpq_class> c_;
};

}  // namespace gradedexp
