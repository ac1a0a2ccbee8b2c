#include <doctest.h>

#include <algorithm>
#include <set>

#include "gradedexp/error.hpp"
#include "gradedexp/trace.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

using namespace gradedexp;

namespace {

using Cells = std::vector<std::pair<std::size_t, std::size_t>>;

GluedAlgebraPtr single(const GroupPtr& g, const Subgroup& h, std::vector<Element> tuple) {
  return build_glued(g, {build_bsz_simple(TwoCocycle::trivial(h), std::move(tuple))}, {}, 1);
}

}  // namespace

TEST_CASE("Euler monomials of matrix units") {
  CHECK(elementary_euler_monomial(1, 0) == Cells{{0, 0}});
  CHECK(elementary_euler_monomial(2, 0) == Cells{{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  for (std::size_t r = 1; r <= 6; ++r)
    for (std::size_t i = 0; i < r; ++i) {
      const Cells cells = elementary_euler_monomial(r, i);
      CHECK(cells.size() == r * r);
      CHECK(std::set<std::pair<std::size_t, std::size_t>>(cells.begin(), cells.end()).size() == r * r);
      CHECK(cells.front() == std::pair{i, i});
      const auto product = oracle::matrix_product(cells, r);
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) CHECK(product[a][b] == (a == i && b == i ? 1 : 0));
    }
  CHECK_THROWS_AS(elementary_euler_monomial(3, 3), InvalidArgument);
}

TEST_CASE("enriched monomial factor counts") {
  auto g1 = cyclic_group(1);
  const auto m1 = single(g1, Subgroup::trivial(g1), {0});
  const TraceMonomial l1 = build_lambda_hat(*m1, exp_conj(*m1));
  // the idempotent expands to u_e e_11 * e_11
  CHECK(l1.factors.size() == 2);

  auto z3 = cyclic_group(3);
  const auto fz3 = single(z3, Subgroup::whole(z3), {0});
  const TraceMonomial l3 = build_lambda_hat(*fz3, exp_conj(*fz3));
  CHECK(l3.factors.size() == 6);
  // partial products run through H in sorted order
  std::vector<Element> u_prefix;
  for (std::size_t p = 0; p < l3.factors.size(); p += 2) u_prefix.push_back(l3.prefix_degrees[p]);
  CHECK(u_prefix == std::vector<Element>{0, 1, 2});

  auto z4 = cyclic_group(4);
  const auto a = single(z4, Subgroup(z4, {0, 2}), {0, 1});
  const TraceMonomial l = build_lambda_hat(*a, exp_conj(*a));
  // two off-diagonal cells plus two diagonal cells of 2|H| = 4 factors each
  CHECK(l.factors.size() == 10);
  CHECK(l.value == 8);
  CHECK(multiply_chain(*a, l.factors).has_value());
}

TEST_CASE("omega sets from a prefix list") {
  auto z4 = cyclic_group(4);
  TraceMonomial l;
  l.prefix_degrees = {1, 2, 3, 0};
  const OmegaData o = omega_sets(l, Subgroup(z4, {0, 2}));
  CHECK(o.omega == std::vector<Element>{0, 1, 2, 3});
  CHECK(o.pi.size() == 2);
  CHECK(std::set<Element>(o.omega0.begin(), o.omega0.end()) == std::set<Element>{1, 2});
  CHECK(o.mu[2] == 2);
  CHECK(o.mu[0] == 4);

  TraceMonomial flat;
  flat.prefix_degrees = {0, 0, 0};
  const OmegaData e = omega_sets(flat, Subgroup(z4, {0, 2}));
  CHECK(e.omega == std::vector<Element>{0});
  CHECK(e.omega0 == std::vector<Element>{0});
  CHECK(e.mu[0] == 1);
}

TEST_CASE("parses for the whole group and the Z4 instance") {
  auto z4 = cyclic_group(4);
  const auto a = single(z4, Subgroup(z4, {0, 2}), {0, 1});
  const TraceMonomial l = build_lambda_hat(*a, exp_conj(*a));

  const Subgroup whole = Subgroup::whole(z4);
  const OmegaData ow = omega_sets(l, whole);
  REQUIRE(ow.omega0.size() == 1);
  const auto bw = component_decompositions(*a, whole);
  const GDecomposition dw = decompose_for(l, ow, whole, bw, ow.omega0[0]);
  CHECK(dw.x.size() == 1);
  CHECK(dw.sigma.size() == l.factors.size() - 1);
  for (const FactorRange& s : dw.sigma) CHECK(s.size() == 1);
  CHECK(dw.y.size() == 0);

  const Subgroup k(z4, {0, 2});
  const OmegaData o = omega_sets(l, k);
  const auto blocks = component_decompositions(*a, k);
  for (Element g : o.omega0) {
    const GDecomposition d = decompose_for(l, o, k, blocks, g);
    CHECK(decomposition_conditions_hold(l, k, d));
    CHECK(count_parses(l, k, g, 5) == 1);
  }
  for (Element x = 0; x < 4; ++x)
    if (std::find(o.omega0.begin(), o.omega0.end(), x) == o.omega0.end())
      CHECK_THROWS_AS(decompose_for(l, o, k, blocks, x), InvalidArgument);

  const TraceReport rep = run_trace(*a, k);
  CHECK(rep.ok());
  for (const VisitRow& row : rep.visits.rows) CHECK(row.expected == 1);
  REQUIRE(rep.chains.size() == 1);
  CHECK(rep.chains[0].pi == std::vector<std::size_t>{1, 1});
  CHECK(rep.chains[0].lhs_c == 4);
  CHECK(rep.chains[0].rhs_c == 4);
}

TEST_CASE("visit counts with trivial K equal |H|") {
  auto s3 = symmetric_group(3);
  const Subgroup h(s3, oracle::indices({{0, 1, 2}, {1, 0, 2}}));
  const auto a = single(s3, h, {0, 3});
  const TraceReport rep = run_trace(*a, Subgroup::trivial(s3));
  CHECK(rep.ok());
  REQUIRE_FALSE(rep.visits.rows.empty());
  for (const VisitRow& row : rep.visits.rows) {
    CHECK(row.expected == h.size());
    CHECK(row.observed == h.size());
  }
}

TEST_CASE("closing arithmetic") {
  auto z6 = cyclic_group(6);
  const auto equal = build_bsz_simple(TwoCocycle::trivial(Subgroup::trivial(z6)), {0, 1, 0, 1});
  const FinalChainReport r = final_inequality_report(*equal, Subgroup(z6, {0, 2, 4}));
  CHECK(r.m == 2);
  CHECK(r.pi == std::vector<std::size_t>{2, 2});
  CHECK(r.lhs_c == r.rhs_c);
  CHECK(r.ok());

  const auto lone = build_bsz_simple(TwoCocycle::trivial(Subgroup::trivial(z6)), {0});
  const FinalChainReport one = final_inequality_report(*lone, Subgroup(z6, {0, 3}));
  CHECK(one.pi == std::vector<std::size_t>{1, 0, 0});
  CHECK(one.lhs_c == 1);
  CHECK(one.rhs_c == 3);
  CHECK(one.ok());
}

TEST_CASE("the full trace holds on random instances") {
  SplitMix64 rng(4242);
  const auto groups = testing_support::small_groups();
  for (int trial = 0; trial < 80; ++trial) {
    const auto g = groups[rng.below(groups.size())];
    const auto a = testing_support::random_glued(g, rng, 3, 3, 400);
    const auto subs = all_subgroups(g);
    const Subgroup k = subs[rng.below(subs.size())];
    const TraceReport rep = run_trace(*a, k);
    CHECK(rep.monomial.value == rep.witness.value);
    for (bool c : rep.parse_conditions) CHECK(c);
    for (std::size_t c : rep.parse_counts) CHECK(c == 1);
    CHECK(rep.visits.ok);
    std::string failures;
    for (const auto& f : rep.lemmas.failures) failures += f + "; ";
    CHECK_MESSAGE(rep.lemmas.ok(), failures);
    for (const auto& c : rep.chains) CHECK(c.ok());
    CHECK(rep.omega.omega0.size() <= subgroup_index(k));
  }
}
