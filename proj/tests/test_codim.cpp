#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "gradedexp/codim.hpp"
#include "gradedexp/error.hpp"
#include "gradedexp/grassmann.hpp"
#include "gradedexp/linalg.hpp"
#include "random_instances.hpp"

using namespace gradedexp;
using testing_support::field_algebra;
using testing_support::permuted;
using testing_support::square_zero;

namespace {

using Table = std::vector<std::optional<BasisProduct>>;

// Dense evaluation matrix through the element API, ranked by Bareiss.
std::size_t dense_codim(const GradedAlgebra& a, std::size_t n) {
  const std::size_t d = a.dimension();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < n; ++i) tuples *= d;
  Matrix m(perms.size(), zero_vector(a.field(), tuples * d));
  for (std::size_t t = 0; t < tuples; ++t) {
    std::vector<std::size_t> subst(n);
    std::size_t x = t;
    for (std::size_t i = 0; i < n; ++i, x /= d) subst[i] = x % d;
    for (std::size_t r = 0; r < perms.size(); ++r) {
      AlgebraElement prod = AlgebraElement::basis(a, subst[perms[r][0]]);
      for (std::size_t i = 1; i < n; ++i) prod = multiply(prod, AlgebraElement::basis(a, subst[perms[r][i]]));
      for (const auto& [b, c] : prod.terms()) m[r][t * d + b] = c;
    }
  }
  return rank_bareiss(std::move(m));
}

}  // namespace

TEST_CASE("codimensions of the one-dimensional unital algebra") {
  auto g1 = cyclic_group(1);
  const auto f = field_algebra(g1);
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(codimension(*f, n) == 1);
    CHECK(graded_codimension(*f, n) == 1);
  }
  // concentrated in e with G = Z2: odd variables only see zero
  const auto fz = field_algebra(cyclic_group(2));
  for (std::size_t n = 1; n <= 4; ++n) CHECK(graded_codimension(*fz, n) == codimension(*fz, n));
  CHECK_THROWS_AS(codimension(*f, 0), InvalidArgument);
}

TEST_CASE("square-zero algebras have no multilinear survivors past degree one") {
  auto g1 = cyclic_group(1);
  const auto z = square_zero(g1, 3);
  CHECK(codimension(*z, 1) == 1);
  for (std::size_t n = 2; n <= 4; ++n) CHECK(codimension(*z, n) == 0);
}

TEST_CASE("truncated Grassmann algebra") {
  const auto e = build_grassmann(4);
  CHECK(codimension(*e, 1) == 1);
  CHECK(codimension(*e, 2) == 2);
  CHECK(codimension(*e, 2) == dense_codim(*e, 2));
  const std::size_t c3 = codimension(*e, 3);
  CHECK(c3 == dense_codim(*e, 3));
  CHECK(c3 <= 6);
}

TEST_CASE("graded codimension of FZ2 under two enumeration orders") {
  auto z2 = cyclic_group(2);
  const auto fz2 = build_glued(z2, {build_bsz_simple(TwoCocycle::trivial(Subgroup::whole(z2)), {0})}, {}, 1);
  const std::size_t plain = codimension(*fz2, 2);
  CHECK(plain == dense_codim(*fz2, 2));
  CodimOptions one, two;
  one.shuffle_seed = 1;
  two.shuffle_seed = 99;
  const std::size_t g1 = graded_codimension_detail(*fz2, 2, one).value;
  CHECK(g1 == graded_codimension_detail(*fz2, 2, two).value);
  CHECK(g1 == graded_codimension(*fz2, 2));
  // commutative: one survivor per assignment of the two variables
  CHECK(plain == 1);
  CHECK(g1 == 4);
  CHECK(graded_codimension(*fz2, 3) == 8);
}

TEST_CASE("rank matches the dense oracle and ignores basis order") {
  SplitMix64 rng(1234);
  const auto groups = testing_support::small_groups();
  for (int trial = 0; trial < 12; ++trial) {
    const auto g = groups[rng.below(groups.size())];
    const auto a = testing_support::random_glued(g, rng, 2, 2, 4);
    const std::size_t d = a->dimension();
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    const auto b = permuted(*a, perm);
    for (std::size_t n = 1; n <= 3; ++n) {
      const std::size_t c = codimension(*a, n);
      CHECK(c == dense_codim(*a, n));
      CHECK(c == codimension(*b, n));
      CodimOptions shuffled;
      shuffled.shuffle_seed = rng.next();
      CHECK(codimension_detail(*a, n, shuffled).value == c);
      CHECK(graded_codimension(*a, n) == graded_codimension(*b, n));
      CodimOptions partial;
      partial.column_limit = 1 + rng.below(d);
      const CodimResult sub = codimension_detail(*a, n, partial);
      CHECK(sub.value <= c);
    }
    CHECK(codimension(*a, 4) == codimension(*b, 4));
  }
}

TEST_CASE("caps and sampling") {
  const auto e = build_grassmann(4);
  CodimOptions tight;
  tight.work_cap = 100;
  CHECK_THROWS_AS(codimension_detail(*e, 3, tight), CapExceeded);
  CHECK_THROWS_AS(graded_codimension_detail(*e, 3, tight), CapExceeded);
  tight.allow_sampling = true;
  tight.samples = 50;
  const CodimResult s = codimension_detail(*e, 3, tight);
  CHECK_FALSE(s.exact);
  CHECK(s.value <= codimension(*e, 3));
  const CodimResult gs = graded_codimension_detail(*e, 3, tight);
  CHECK_FALSE(gs.exact);
  CHECK(gs.value <= graded_codimension(*e, 3));
}

TEST_CASE("growth report for the Z4 instance") {
  auto z4 = cyclic_group(4);
  const auto a = build_glued(z4, {build_bsz_simple(TwoCocycle::trivial(Subgroup(z4, {0, 2})), {0, 1})}, {}, 1);
  const CodimReport rep = growth_report(a, 4, Subgroup(z4, {0, 2}));
  CHECK(rep.exp_conj == 8);
  CHECK(rep.exp_conj_sub == 2);
  CHECK(rep.subgroup_index == 2);
  REQUIRE(rep.rows.size() == 4);
  CHECK(rep.rows[0].c == 1);
  for (const CodimRow& row : rep.rows) {
    CHECK(row.c_exact);
    REQUIRE(row.c_sub.has_value());
    CHECK(*row.c_sub <= row.c);
  }
  CHECK(rep.note.find("trend") != std::string::npos);

  auto g1 = cyclic_group(1);
  const auto f = build_glued(g1, {build_bsz_simple(TwoCocycle::trivial(Subgroup::trivial(g1)), {0})}, {}, 1);
  for (const CodimRow& row : growth_report(f, 4).rows) CHECK(row.root == 1.0);
}
