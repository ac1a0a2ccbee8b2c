#include <doctest.h>

#include "gradedexp/linalg.hpp"
#include "gradedexp/rng.hpp"

using namespace gradedexp;

namespace {

CycScalar q(long v) { return CycScalar(cyclotomic_field(1), mpq_class(v)); }

Matrix int_matrix(const std::vector<std::vector<long>>& rows) {
  Matrix m;
  for (const auto& r : rows) {
    Vector v;
    for (long x : r) v.push_back(q(x));
    m.push_back(std::move(v));
  }
  return m;
}

Poly int_poly(const std::vector<long>& c) {
  Poly p;
  for (long x : c) p.push_back(q(x));
  return p;
}

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  const CyclotomicField& f4 = cyclotomic_field(4);
  CHECK(&f4 == &cyclotomic_field(4));
  CHECK(f4.degree() == 2);
  const CycScalar i = CycScalar::zeta(f4, 1);
  CHECK(i * i == CycScalar(f4, mpq_class(-1)));
  CHECK(CycScalar::zeta(f4, 4).is_one());
  CHECK(CycScalar::zeta(f4, -1) == i.inverse());
  CHECK((i + CycScalar(f4, mpq_class(1))) * (CycScalar(f4, mpq_class(1)) - i) == CycScalar(f4, mpq_class(2)));

  const CyclotomicField& f3 = cyclotomic_field(3);
  const CycScalar w = CycScalar::zeta(f3, 1);
  CHECK((CycScalar(f3, mpq_class(1)) + w + w * w).is_zero());
  CHECK(w.embed(cyclotomic_field(6)) == CycScalar::zeta(cyclotomic_field(6), 2));
  CHECK(CycScalar(f3, mpq_class(3, 4)).is_rational());
  CHECK_FALSE(w.is_rational());
}

TEST_CASE("cyclotomic field properties over random elements") {
  SplitMix64 rng(17);
  for (int n : {1, 2, 3, 4, 5, 6, 8, 12}) {
    const CyclotomicField& f = cyclotomic_field(n);
    for (int trial = 0; trial < 20; ++trial) {
      auto random = [&] {
        std::vector<mpq_class> c;
        for (int k = 0; k < f.degree(); ++k) c.emplace_back(static_cast<long>(rng.between(0, 10)) - 5, 1 + rng.between(0, 3));
        return CycScalar(f, c);
      };
      const CycScalar a = random(), b = random(), c = random();
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
    // zeta^n = 1 and the powers zeta^0..zeta^(n-1) sum to 0 (n > 1).
    CycScalar sum(f);
    for (int k = 0; k < n; ++k) sum += CycScalar::zeta(f, k);
    CHECK(CycScalar::zeta(f, n).is_one());
    if (n > 1) CHECK(sum.is_zero());
  }
}

TEST_CASE("rank and nullspace") {
  const Matrix m = int_matrix({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank_bareiss(m) == 2);
  const auto ns = nullspace(m, 3, cyclotomic_field(1));
  REQUIRE(ns.size() == 1);
  for (const Vector& row : m) {
    CycScalar dot(cyclotomic_field(1));
    for (std::size_t j = 0; j < 3; ++j) dot += row[j] * ns[0][j];
    CHECK(dot.is_zero());
  }
  CHECK(rank_bareiss(int_matrix({{0, 0}, {0, 0}})) == 0);
  CHECK(rank_bareiss(int_matrix({{0, 1}, {1, 0}})) == 2);
  CHECK(nullspace({}, 4, cyclotomic_field(1)).size() == 4);

  EchelonBasis basis(3);
  CHECK(basis.insert(int_matrix({{1, 1, 0}})[0]));
  CHECK(basis.insert(int_matrix({{0, 1, 1}})[0]));
  CHECK_FALSE(basis.insert(int_matrix({{1, 2, 1}})[0]));
  CHECK(basis.rank() == 2);
  for (const CycScalar& x : basis.reduce(int_matrix({{2, 3, 1}})[0])) CHECK(x.is_zero());
}

TEST_CASE("echelon rank agrees with Bareiss on random matrices") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng.between(0, 5), cols = 1 + rng.between(0, 5);
    std::vector<std::vector<long>> raw(rows, std::vector<long>(cols));
    for (auto& r : raw)
      for (auto& x : r) x = rng.between(0, 3) == 0 ? static_cast<long>(rng.between(0, 6)) - 3 : 0;
    // duplicate a row sometimes so the rank drops
    if (rows > 1 && trial % 3 == 0) raw[rows - 1] = raw[0];
    const Matrix m = int_matrix(raw);
    EchelonBasis basis(cols);
    for (const Vector& r : m) basis.insert(r);
    CHECK(basis.rank() == rank_bareiss(m));
    CHECK(nullspace(m, cols, cyclotomic_field(1)).size() == cols - basis.rank());
  }
}

TEST_CASE("characteristic polynomial and root multiplicities") {
  // diag(2, 2, 3): (x-2)^2 (x-3) = x^3 - 7x^2 + 16x - 12
  const Poly p = characteristic_polynomial(int_matrix({{2, 0, 0}, {0, 2, 0}, {0, 0, 3}}));
  CHECK(p == int_poly({-12, 16, -7, 1}));
  const auto profile = root_multiplicity_profile(p);
  CHECK(profile == std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}});

  // Companion-like matrix with dense entries: check Cayley-Hamilton.
  const Matrix a = int_matrix({{1, 2, 0}, {3, -1, 4}, {0, 5, 2}});
  const Poly c = characteristic_polynomial(a);
  REQUIRE(c.size() == 4);
  Matrix acc = int_matrix({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  Matrix power = int_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) acc[i][j] += c[k] * power[i][j];
    Matrix next = int_matrix({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t l = 0; l < 3; ++l) next[i][j] += power[i][l] * a[l][j];
    power = std::move(next);
  }
  for (const auto& row : acc)
    for (const auto& x : row) CHECK(x.is_zero());

  // (x-1)^3 (x+2)^2 x
  Poly f = int_poly({1});
  auto times = [&](long root) {
    Poly g(f.size() + 1, q(0));
    for (std::size_t i = 0; i < f.size(); ++i) {
      g[i + 1] += f[i];
      g[i] -= q(root) * f[i];
    }
    f = std::move(g);
  };
  for (long r : {1, 1, 1, -2, -2, 0}) times(r);
  CHECK(root_multiplicity_profile(f) ==
        std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}, {3, 1}});
}

TEST_CASE("polynomial division and gcd") {
  const Poly a = int_poly({-1, 0, 1});  // x^2 - 1
  const Poly b = int_poly({1, 1});      // x + 1
  const auto [quot, rem] = poly_divmod(a, b);
  CHECK(quot == int_poly({-1, 1}));
  CHECK(rem.empty());
  CHECK(poly_monic_gcd(a, int_poly({-1, 1})) == int_poly({-1, 1}));
  CHECK(poly_monic_gcd(a, int_poly({2, 1})) == int_poly({1}));
  CHECK(poly_derivative(a) == int_poly({0, 2}));
  CHECK(poly_degree(a) == 2);
}
