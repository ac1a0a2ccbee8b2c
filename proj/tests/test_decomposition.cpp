#include <doctest.h>

#include <set>

#include "gradedexp/decomposition.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

using namespace gradedexp;

namespace {

// H x K as a set, straight from the table.
std::set<Element> hxk(const Subgroup& h, Element x, const Subgroup& k) {
  const Group& g = h.parent();
  std::set<Element> out;
  for (Element a : h.elements())
    for (Element b : k.elements()) out.insert(g.mul(g.mul(a, x), b));
  return out;
}

}  // namespace

TEST_CASE("Z4 instance: K-basis, classes and blocks") {
  auto z4 = cyclic_group(4);
  const Subgroup hk(z4, {0, 2});
  const auto b = build_bsz_simple(TwoCocycle::trivial(hk), {0, 1});
  const auto basis = k_basis(*b, hk);
  const std::vector<std::size_t> expected{b->index_of(0, 0, 0), b->index_of(0, 1, 1), b->index_of(2, 0, 0),
                                          b->index_of(2, 1, 1)};
  CHECK(std::set<std::size_t>(basis.begin(), basis.end()) == std::set<std::size_t>(expected.begin(), expected.end()));
  CHECK(index_classes(*b, hk) == std::vector<std::vector<std::size_t>>{{0}, {1}});

  const KDecomposition d = k_simple_blocks(b, hk);
  REQUIRE(d.blocks.size() == 2);
  for (const KBlock& blk : d.blocks) {
    CHECK(blk.pi() == 1);
    CHECK(blk.intersection.size() == 2);
    CHECK(blk.dimension == 2);
  }
  CHECK(d.k_dimension == 4);
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const BlockIsomorphism iso = build_block_isomorphism(d, i);
    CHECK(iso.verified);
    // F[{0,2}]: group algebra of order 2, one matrix index
    CHECK(iso.target->matrix_size() == 1);
    CHECK(iso.target->subgroup().size() == 2);
    CHECK(iso.target->cocycle().is_trivial());
    CHECK(iso.source.size() == 2);
  }
}

TEST_CASE("trivial and whole K") {
  auto z3 = cyclic_group(3);
  const auto b = build_bsz_simple(TwoCocycle::trivial(Subgroup::trivial(z3)), {0, 1, 1, 2});
  const KDecomposition d = k_simple_blocks(b, Subgroup::trivial(z3));
  std::multiset<std::size_t> dims;
  for (const KBlock& blk : d.blocks) dims.insert(blk.dimension);
  CHECK(dims == std::multiset<std::size_t>{1, 1, 4});
  // K = {e}, H = {e}: the e_{i,i} plus pairs with equal tuple entries
  CHECK(k_basis(*b, Subgroup::trivial(z3)).size() == 6);

  const auto all_e = build_bsz_simple(TwoCocycle::trivial(Subgroup::whole(z3)), {0, 0, 0});
  const KDecomposition whole = k_simple_blocks(all_e, Subgroup::whole(z3));
  REQUIRE(whole.blocks.size() == 1);
  CHECK(whole.blocks[0].dimension == 27);
  CHECK(index_classes(*all_e, Subgroup::trivial(z3)) == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
}

TEST_CASE("pi = 0 double cosets are kept") {
  auto s3 = symmetric_group(3);
  const Subgroup h(s3, oracle::indices({{0, 1, 2}, {1, 0, 2}}));
  const Subgroup k(s3, oracle::indices({{0, 1, 2}, {2, 1, 0}}));
  const auto b = build_bsz_simple(TwoCocycle::trivial(h), {kIdentity});
  const KDecomposition d = k_simple_blocks(b, k);
  CHECK(d.blocks.size() == 2);
  std::size_t empty = 0;
  for (const KBlock& blk : d.blocks) empty += blk.pi() == 0;
  CHECK(empty == 1);
}

TEST_CASE("decomposition bookkeeping on random simple algebras") {
  SplitMix64 rng(31);
  const auto groups = testing_support::small_groups();
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = groups[rng.below(groups.size())];
    const auto b = testing_support::random_simple(g, rng, 3);
    const auto subs = all_subgroups(g);
    const Subgroup k = subs[rng.below(subs.size())];
    const Subgroup& h = b->subgroup();
    const auto& tuple = b->tuple();
    const std::size_t r = b->matrix_size();

    // K-basis by direct degree evaluation
    std::set<std::size_t> direct;
    for (std::size_t x = 0; x < b->dimension(); ++x) {
      const auto e = b->decode(x);
      if (k.contains(oracle::bsz_degree(*g, tuple, b->h_of(x), e.row, e.col))) direct.insert(x);
    }
    const auto kb = k_basis(*b, k);
    CHECK(std::set<std::size_t>(kb.begin(), kb.end()) == direct);

    const KDecomposition d = k_simple_blocks(b, k);
    std::size_t pi_total = 0, dim_total = 0;
    for (const KBlock& blk : d.blocks) {
      pi_total += blk.pi();
      dim_total += blk.dimension;
      if (blk.pi() == 0) continue;
      const Element gi = tuple[*blk.representative];
      std::set<Element> inter;
      for (Element x : h.elements())
        if (k.contains(g->conj(gi, x))) inter.insert(g->conj(gi, x));
      CHECK(blk.intersection.size() == inter.size());
      CHECK(blk.dimension == inter.size() * blk.pi() * blk.pi());
    }
    CHECK(pi_total == r);
    CHECK(dim_total == direct.size());
    CHECK(d.blocks.size() == double_cosets(h, k).classes.size());

    // i ~ j iff same double coset iff an off-diagonal K-degree element exists
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        const bool same = hxk(h, tuple[i], k) == hxk(h, tuple[j], k);
        CHECK((d.block_of_index[i] == d.block_of_index[j]) == same);
        bool linked = false;
        for (std::size_t hp = 0; hp < h.size(); ++hp) linked = linked || direct.count(b->index(hp, i, j));
        CHECK(linked == same);
      }

    // different classes multiply to zero
    for (std::size_t x : direct)
      for (std::size_t y : direct) {
        const auto ex = b->decode(x), ey = b->decode(y);
        if (d.block_of_index[ex.row] != d.block_of_index[ey.row]) CHECK_FALSE(b->multiply_basis(x, y).has_value());
      }

    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
      if (d.blocks[i].pi() == 0) continue;
      const BlockIsomorphism iso = build_block_isomorphism(d, i);
      CHECK_MESSAGE(iso.verified, iso.failure);
      CHECK(iso.target->dimension() == d.blocks[i].dimension);
      std::set<std::size_t> images;
      for (const BasisProduct& p : iso.image) images.insert(p.index);
      CHECK(images.size() == iso.target->dimension());
      for (std::size_t s = 0; s < iso.source.size(); ++s)
        CHECK(b->degree(iso.source[s]) == iso.target->degree(iso.image[s].index));
    }
  }
}

TEST_CASE("whole group with a trivial cocycle maps onto the same shape") {
  auto d3 = dihedral_group(3);
  const auto b = build_bsz_simple(TwoCocycle::trivial(Subgroup(d3, {0, 1, 2})), {0, 3, 1});
  const KDecomposition d = k_simple_blocks(b, Subgroup::whole(d3));
  REQUIRE(d.blocks.size() == 1);
  const BlockIsomorphism iso = build_block_isomorphism(d, 0);
  CHECK(iso.verified);
  CHECK(iso.pairs_checked == b->dimension() * b->dimension());
  CHECK(iso.target->dimension() == b->dimension());
}
