#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "gradedexp/error.hpp"
#include "gradedexp/grassmann.hpp"
#include "random_instances.hpp"

using namespace gradedexp;

namespace {

// Sign of e_{x...} e_{y...}: write both index lists out and bubble sort.
int bubble_parity(std::uint32_t x, std::uint32_t y) {
  std::vector<unsigned> word;
  for (unsigned i = 0; i < 32; ++i)
    if ((x >> i) & 1u) word.push_back(i);
  for (unsigned i = 0; i < 32; ++i)
    if ((y >> i) & 1u) word.push_back(i);
  int swaps = 0;
  for (std::size_t pass = 0; pass < word.size(); ++pass)
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        ++swaps;
      }
  return swaps & 1;
}

GradedSimplePtr m1(const GroupPtr& g) {
  return build_bsz_simple(TwoCocycle::trivial(Subgroup::trivial(g)), {kIdentity});
}

}  // namespace

TEST_CASE("small Grassmann algebras") {
  const auto e1 = build_grassmann(1);
  CHECK(e1->dimension() == 2);
  CHECK_FALSE(e1->multiply_basis(1, 1).has_value());

  const auto e2 = build_grassmann(2);
  const auto ab = e2->multiply_basis(1, 2), ba = e2->multiply_basis(2, 1);
  REQUIRE(ab);
  REQUIRE(ba);
  CHECK(ab->index == 3);
  CHECK(ab->phase == 0);
  CHECK(ba->phase == 1);

  const auto e3 = build_grassmann(3);
  // (e1 e2) e3 = e1 e2 e3
  CHECK(e3->multiply_basis(0b011, 0b100) == BasisProduct{0b111, 0});
  // e2 (e1 e3) = -e1 e2 e3
  CHECK(e3->multiply_basis(0b010, 0b101) == BasisProduct{0b111, 1});
  CHECK(e3->basis_label(0b101) == "e1*e3");

  CHECK_THROWS_AS(build_grassmann(0), InvalidArgument);
  CHECK_THROWS_AS(build_grassmann(13), InvalidArgument);
  CHECK(build_grassmann(12)->dimension() == 4096);
}

TEST_CASE("Grassmann signs, parity split and supercommutativity") {
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto e = build_grassmann(m);
    std::size_t even = 0;
    for (std::size_t x = 0; x < e->dimension(); ++x) even += e->degree(x) == 0;
    CHECK(even == e->dimension() / 2);
    for (std::uint32_t x = 0; x < e->dimension(); ++x)
      for (std::uint32_t y = 0; y < e->dimension(); ++y) {
        const auto xy = e->multiply_basis(x, y), yx = e->multiply_basis(y, x);
        CHECK(xy.has_value() == ((x & y) == 0));
        if (!xy) continue;
        CHECK(xy->phase == bubble_parity(x, y));
        // xy = (-1)^{|x||y|} yx
        const int expected = (std::popcount(x) * std::popcount(y)) & 1;
        CHECK(((xy->phase + yx->phase) & 1) == expected);
      }
  }
  SplitMix64 rng(5);
  for (std::size_t m = 1; m <= 5; ++m) {
    const StructureReport rep = verify_structure(*build_grassmann(m), rng);
    CHECK_MESSAGE(rep.ok, rep.failure);
  }
}

TEST_CASE("envelope of an algebra concentrated in even degree") {
  auto z4 = cyclic_group(4);
  auto g = direct_product(cyclic_group(2), z4);
  // FZ4 embedded in the even half: H = {0} x Z4
  const Subgroup even_h(g, {0, 1, 2, 3});
  const auto a = build_glued(g, {build_bsz_simple(TwoCocycle::trivial(even_h), {0, 1})}, {}, 1);
  const auto env = envelope(a, 3);
  CHECK(env->dimension() == a->dimension() * 4);
  CHECK(env->grading_group()->order() == 4);
  for (std::size_t b = 0; b < env->dimension(); ++b) {
    const auto [src, s] = env->pair(b);
    CHECK(std::popcount(s) % 2 == 0);
    CHECK(env->degree(b) == a->degree(src) % 4);
  }
  // identity component = pairs whose source has G'-part e
  const auto ident = homogeneous_component(*env, kIdentity);
  std::size_t expected = 0;
  for (std::size_t x = 0; x < a->dimension(); ++x) expected += (a->degree(x) % 4 == 0) ? 4 : 0;
  CHECK(ident.size() == expected);

  SplitMix64 rng(9);
  const StructureReport rep = verify_structure(*env, rng);
  CHECK_MESSAGE(rep.ok, rep.failure);
  const auto check = check_envelope_e_component(a, 3);
  CHECK_MESSAGE(check.ok, check.failure);
}

TEST_CASE("odd one-dimensional algebra has a zero envelope product") {
  auto g = direct_product(cyclic_group(2), cyclic_group(2));
  // b of degree (1, e); b^2 would sit in degree (0, e), so it is zero
  const auto a = std::make_shared<TableAlgebra>(g, 1, std::vector<Element>{2},
                                                std::vector<std::optional<BasisProduct>>{std::nullopt});
  for (std::size_t m = 1; m <= 2; ++m) {
    const auto env = envelope(a, m);
    CHECK(env->dimension() == (std::size_t{1} << (m - 1)));
    for (std::size_t x = 0; x < env->dimension(); ++x)
      for (std::size_t y = 0; y < env->dimension(); ++y) CHECK_FALSE(env->multiply_basis(x, y).has_value());
  }
}

TEST_CASE("envelope rejections") {
  auto z4 = cyclic_group(4);
  const auto plain = build_glued(z4, {m1(z4)}, {}, 1);
  CHECK_THROWS_AS(envelope(plain, 2), InvalidArgument);
  auto z2 = cyclic_group(2);
  const auto bare = build_glued(z2, {m1(z2)}, {}, 1);
  CHECK_THROWS_AS(envelope(bare, 2), InvalidArgument);

  auto g = direct_product(cyclic_group(2), cyclic_group(2));
  const auto a = build_glued(g, {build_bsz_simple(TwoCocycle::trivial(Subgroup::whole(g)), {0})}, {}, 1);
  CHECK_THROWS_AS(envelope(a, 0), InvalidArgument);
  setenv("GRADEDEXP_CAP", "20", 1);
  CHECK_THROWS_AS(envelope(a, 4), CapExceeded);
  unsetenv("GRADEDEXP_CAP");
  CHECK(envelope(a, 4)->dimension() == 32);
}

TEST_CASE("nothing of degree e in the G' part gives empty sides") {
  auto g = direct_product(cyclic_group(2), cyclic_group(3));
  // one square-zero element of degree (0, 1)
  const auto a = std::make_shared<TableAlgebra>(g, 1, std::vector<Element>{1},
                                                std::vector<std::optional<BasisProduct>>{std::nullopt});
  const auto rep = check_envelope_e_component(a, 3);
  CHECK(rep.ok);
  CHECK(rep.left_dimension == 0);
  CHECK(rep.right_dimension == 0);
  CHECK(envelope(a, 3)->dimension() == 4);
}

TEST_CASE("envelope products against a direct tensor computation") {
  SplitMix64 rng(808);
  const std::vector<std::string> tails{"Z2", "Z4", "Z2xZ2"};
  for (int trial = 0; trial < 30; ++trial) {
    auto g = catalog_group("Z2x" + tails[rng.below(tails.size())]);
    const auto a = testing_support::random_glued(g, rng, 2, 2, 60);
    const std::size_t m = 1 + rng.below(4);
    const auto env = envelope(a, m);
    const std::size_t tail = g->order() / 2;

    CHECK(env->dimension() == a->dimension() << (m - 1));

    const CyclotomicField& field = env->field();
    for (int sample = 0; sample < 200; ++sample) {
      const std::size_t x = rng.below(env->dimension()), y = rng.below(env->dimension());
      const auto [ax, sx] = env->pair(x);
      const auto [ay, sy] = env->pair(y);
      // (a (x) s)(b (x) t) = ab (x) st with the sign from st alone
      const AlgebraElement ab = multiply(AlgebraElement::basis(*a, ax), AlgebraElement::basis(*a, ay));
      const auto got = env->multiply_basis(x, y);
      if (ab.is_zero() || (sx & sy)) {
        CHECK_FALSE(got.has_value());
        continue;
      }
      REQUIRE(got.has_value());
      REQUIRE(ab.terms().size() == 1);
      const auto& [idx, coeff] = *ab.terms().begin();
      CHECK(env->pair(got->index) == std::pair{idx, sx | sy});
      CycScalar lhs = CycScalar::zeta(field, got->phase);
      CycScalar rhs = coeff.embed(field);
      if (bubble_parity(sx, sy)) rhs = -rhs;
      CHECK(lhs == rhs);
      CHECK(env->degree(got->index) == g->mul(a->degree(ax), a->degree(ay)) % tail);
    }
    const StructureReport rep = verify_structure(*env, rng);
    CHECK_MESSAGE(rep.ok, rep.failure);
    const auto check = check_envelope_e_component(a, m);
    CHECK_MESSAGE(check.ok, check.failure);
    CHECK(check.left_dimension == check.right_dimension);
  }
}
