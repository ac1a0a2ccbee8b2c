#include <doctest.h>

#include <algorithm>
#include <set>

#include "gradedexp/error.hpp"
#include "gradedexp/expconj.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

using namespace gradedexp;

namespace {

GradedSimplePtr m1(const GroupPtr& g) { return build_bsz_simple(TwoCocycle::trivial(Subgroup::trivial(g)), {0}); }

GluedAlgebraPtr z4_instance() {
  auto z4 = cyclic_group(4);
  return build_glued(z4, {build_bsz_simple(TwoCocycle::trivial(Subgroup(z4, {0, 2})), {0, 1})}, {}, 1);
}

void check_witness(const GluedAlgebra& a, const Subgroup& k, const ExpConjResult& r) {
  std::set<std::size_t> distinct(r.sequence.begin(), r.sequence.end());
  CHECK(distinct.size() == r.sequence.size());
  std::size_t sum = 0;
  for (std::size_t b : r.sequence) sum += r.blocks[b].dimension;
  CHECK(sum == r.value);
  CHECK(r.certified);
  REQUIRE(r.walk.size() == 2 * r.sequence.size() - 1);
  for (std::size_t i = 0; i < r.walk.size(); ++i) {
    CHECK(k.contains(a.degree(r.walk[i])));
    CHECK(a.is_semisimple(r.walk[i]) == (i % 2 == 0));
    if (i % 2 == 0) CHECK(a.source_component(r.walk[i]) == r.blocks[r.sequence[i / 2]].component);
  }
  CHECK(r.radical_length < a.truncation());
  // re-multiply from scratch through the element API
  AlgebraElement prod = AlgebraElement::basis(a, r.walk[0]);
  for (std::size_t i = 1; i < r.walk.size(); ++i) prod = multiply(prod, AlgebraElement::basis(a, r.walk[i]));
  CHECK_FALSE(prod.is_zero());
}

}  // namespace

TEST_CASE("small worked values") {
  const auto z4a = z4_instance();
  CHECK(exp_conj(*z4a).value == 8);
  CHECK(exp_conj_oracle(*z4a) == 8);

  auto g1 = cyclic_group(1);
  const auto tri = build_glued(g1, {m1(g1), m1(g1)}, {{0, 1, 0}}, 2);
  const ExpConjResult t = exp_conj(*tri);
  CHECK(t.value == 2);
  CHECK(t.sequence == std::vector<std::size_t>{0, 1});
  CHECK(exp_conj_oracle(*tri) == 2);

  auto z2 = cyclic_group(2);
  const auto big = build_bsz_simple(TwoCocycle::trivial(Subgroup::whole(z2)), {0, 1});
  const auto apart = build_glued(z2, {m1(z2), big}, {}, 3);
  CHECK(exp_conj(*apart).value == 8);
  const auto joined = build_glued(z2, {m1(z2), big}, {{1, 0, 1}}, 2);
  CHECK(exp_conj(*joined).value == 9);

  const auto single = build_glued(g1, {m1(g1)}, {}, 1);
  CHECK(exp_conj(*single).value == 1);
  CHECK(exp_conj_oracle(*single) == 1);
}

TEST_CASE("truncation limits how many blocks a product can visit") {
  auto g1 = cyclic_group(1);
  // chain 0 -> 1 -> 2: needs two radical factors, so N = 3
  const std::vector<QuiverEdge> chain{{0, 1, 0}, {1, 2, 0}};
  CHECK(exp_conj(*build_glued(g1, {m1(g1), m1(g1), m1(g1)}, chain, 2)).value == 2);
  CHECK(exp_conj(*build_glued(g1, {m1(g1), m1(g1), m1(g1)}, chain, 3)).value == 3);
}

TEST_CASE("subgroup searches on the Z4 instance") {
  const auto a = z4_instance();
  auto z4 = a->grading_group();
  const Subgroup k(z4, {0, 2});
  const ExpConjResult sub = exp_conj_sub(*a, k);
  CHECK(sub.value == 2);
  CHECK(sub.blocks.size() == 2);
  check_witness(*a, k, sub);
  CHECK(exp_conj_oracle(*a, k) == 2);

  const MainInequalityReport rep = check_main_inequality(*a, k);
  CHECK(rep.lhs == 8);
  CHECK(rep.index == 2);
  CHECK(rep.rhs == 8);
  CHECK(rep.holds);

  const MainInequalityReport whole = check_main_inequality(*a, Subgroup::whole(z4));
  CHECK(whole.lhs == whole.rhs);
  CHECK(exp_conj_sub(*a, Subgroup::whole(z4)).value == exp_conj(*a).value);
}

TEST_CASE("identity component of an elementary grading is diagonal") {
  auto z3 = cyclic_group(3);
  const auto a = build_glued(z3, {build_bsz_simple(TwoCocycle::trivial(Subgroup::trivial(z3)), {0, 1, 2})}, {}, 1);
  CHECK(exp_conj_sub(*a, Subgroup::trivial(z3)).value == 1);
  CHECK(exp_conj_oracle(*a, Subgroup::trivial(z3)) == 1);
  const MainInequalityReport rep = check_main_inequality(*a, Subgroup::trivial(z3));
  CHECK(rep.lhs == 9);
  CHECK(rep.rhs == 9);
}

TEST_CASE("search agrees with the brute-force oracle on random instances") {
  SplitMix64 rng(2024);
  const auto groups = testing_support::small_groups();
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = groups[rng.below(groups.size())];
    const auto a = testing_support::random_glued(g, rng, 3, 3, kOracleMaxDimension);
    const ExpConjResult r = exp_conj(*a);
    CHECK(r.value == exp_conj_oracle(*a));
    check_witness(*a, Subgroup::whole(g), r);

    std::size_t max_dim = 0;
    for (const auto& c : a->components()) max_dim = std::max(max_dim, c->dimension());
    CHECK(r.value >= max_dim);
    CHECK(r.value <= a->semisimple_dimension());

    const auto subs = all_subgroups(g);
    const Subgroup k = subs[rng.below(subs.size())];
    const ExpConjResult rk = exp_conj_sub(*a, k);
    CHECK(rk.value == exp_conj_oracle(*a, k));
    check_witness(*a, k, rk);
    const MainInequalityReport rep = check_main_inequality(*a, k);
    CHECK_MESSAGE(rep.holds, "lhs ", rep.lhs, " rhs ", rep.rhs);
  }
}

TEST_CASE("oracle refuses large algebras") {
  auto g1 = cyclic_group(1);
  const auto big = build_bsz_simple(TwoCocycle::trivial(Subgroup::trivial(g1)), std::vector<Element>(15, 0));
  CHECK_THROWS_AS(exp_conj_oracle(*build_glued(g1, {big}, {}, 1)), CapExceeded);
}

TEST_CASE("simple components after coarsening the grading") {
  // FZ2 splits as F + F
  auto z2 = cyclic_group(2);
  const auto fz2 = build_bsz_simple(TwoCocycle::trivial(Subgroup::whole(z2)), {0, 0});
  CHECK(quotient_simple_dimensions(*fz2, Subgroup::whole(z2)) == std::vector<std::size_t>{4, 4});
  CHECK(quotient_simple_dimensions(*fz2, Subgroup::trivial(z2)) == std::vector<std::size_t>{8});

  // twisted Klein four algebra is M_2
  auto v4 = klein_four_group();
  const auto tw = build_bsz_simple(klein_cocycle(Subgroup::whole(v4)), {0});
  CHECK(quotient_simple_dimensions(*tw, Subgroup::whole(v4)) == std::vector<std::size_t>{4});
  const auto untw = build_bsz_simple(TwoCocycle::trivial(Subgroup::whole(v4)), {0});
  CHECK(quotient_simple_dimensions(*untw, Subgroup::whole(v4)) == std::vector<std::size_t>{1, 1, 1, 1});

  // FS3 = F + F + M_2
  auto s3 = symmetric_group(3);
  const auto fs3 = build_bsz_simple(TwoCocycle::trivial(Subgroup::whole(s3)), {0});
  CHECK(quotient_simple_dimensions(*fs3, Subgroup::whole(s3)) == std::vector<std::size_t>{4, 1, 1});
  // graded by S3/A3: the trivial and sign characters merge into one block
  const Subgroup a3(s3, oracle::indices(oracle::closure({{1, 2, 0}}, 3)));
  CHECK(quotient_simple_dimensions(*fs3, a3) == std::vector<std::size_t>{4, 2});
}

TEST_CASE("monotonicity under quotients") {
  const auto a = z4_instance();
  auto z4 = a->grading_group();
  const MonotonicityReport id = check_monotonicity(*a, Subgroup::trivial(z4));
  CHECK(id.g_value == id.quotient_value);
  const MonotonicityReport half = check_monotonicity(*a, Subgroup(z4, {0, 2}));
  CHECK(half.holds);
  const MonotonicityReport full = check_monotonicity(*a, Subgroup::whole(z4));
  CHECK(full.holds);
  // trivially graded: FH (x) M_2 splits into two copies of M_2
  CHECK(full.quotient_value == 4);

  auto s3 = symmetric_group(3);
  CHECK_THROWS_AS(check_monotonicity(*build_glued(s3, {m1(s3)}, {}, 1),
                                     Subgroup(s3, oracle::indices({{0, 1, 2}, {1, 0, 2}}))),
                  InvalidArgument);

  SplitMix64 rng(77);
  const auto groups = testing_support::small_groups();
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = groups[rng.below(groups.size())];
    const auto inst = testing_support::random_glued(g, rng, 3, 3, 300);
    std::vector<Subgroup> normal;
    for (const auto& n : all_subgroups(g))
      if (is_normal(n)) normal.push_back(n);
    const Subgroup n = normal[rng.below(normal.size())];
    const MonotonicityReport rep = check_monotonicity(*inst, n);
    CHECK(rep.holds);
    if (n.size() == 1) CHECK(rep.g_value == rep.quotient_value);
    for (std::size_t t = 0; t < inst->components().size(); ++t) {
      std::size_t total = 0;
      for (std::size_t d : rep.quotient_components[t]) total += d;
      CHECK(total == inst->component(t).dimension());
    }
  }
}
