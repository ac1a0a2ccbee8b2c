#include "gradedexp/decomposition.hpp"

#include <algorithm>

#include "gradedexp/error.hpp"

namespace gradedexp {

namespace {

int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

void require_same_group(const GradedSimple& b, const Subgroup& k) {
  if (k.group() != b.grading_group()) throw InvalidArgument("K is not a subgroup of the grading group");
}

}  // namespace

std::vector<std::size_t> k_basis(const GradedSimple& b, const Subgroup& k) {
  require_same_group(b, k);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < b.dimension(); ++x)
    if (k.contains(b.degree(x))) out.push_back(x);
  return out;
}

std::vector<std::vector<std::size_t>> index_classes(const GradedSimple& b, const Subgroup& k) {
  require_same_group(b, k);
  const DoubleCosetPartition dc = double_cosets(b.subgroup(), k);
  std::vector<std::vector<std::size_t>> by_coset(dc.classes.size());
  for (std::size_t i = 0; i < b.matrix_size(); ++i) by_coset[dc.class_of[b.tuple()[i]]].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& c : by_coset)
    if (!c.empty()) out.push_back(std::move(c));
  std::sort(out.begin(), out.end());
  return out;
}

KDecomposition k_simple_blocks(const GradedSimplePtr& bp, const Subgroup& k) {
  const GradedSimple& b = *bp;
  require_same_group(b, k);
  const Group& g = b.group();
  const Subgroup& h = b.subgroup();
  KDecomposition d{bp, k, double_cosets(h, k), {}, std::vector<std::size_t>(b.matrix_size()), 0};
  d.k_dimension = k_basis(b, k).size();

  for (std::size_t c = 0; c < d.cosets.classes.size(); ++c) {
    KBlock block{c, {}, std::nullopt, Subgroup::trivial(b.grading_group()), std::nullopt, {}, {}, 0};
    for (std::size_t i = 0; i < b.matrix_size(); ++i)
      if (d.cosets.class_of[b.tuple()[i]] == c) block.members.push_back(i);
    const Element rep_elem =
        block.members.empty() ? d.cosets.representatives[c] : b.tuple()[block.members[0]];
    block.intersection = intersect(conjugate_subgroup(rep_elem, h), k);
    if (!block.members.empty()) {
      const std::size_t i = block.members[0];
      block.representative = i;
      const Element gi = b.tuple()[i];
      block.cocycle = restrict_cocycle(conjugate_cocycle(b.cocycle(), gi), block.intersection);
      for (std::size_t t : block.members) {
        const Element gt = b.tuple()[t];
        std::optional<Element> found;
        for (Element x : h.elements())
          if (k.contains(g.mul(g.mul(g.inv(gi), x), gt))) {
            found = x;
            break;
          }
        if (!found)
          throw InvariantViolation("no translator for index " + std::to_string(t + 1) +
                                   " although it shares a double coset with " + std::to_string(i + 1));
        block.translators.push_back(*found);
        block.k_tuple.push_back(g.mul(g.mul(g.inv(gi), *found), gt));
      }
      for (std::size_t t : block.members) d.block_of_index[t] = c;
    }
    block.dimension = block.intersection.size() * block.pi() * block.pi();
    d.blocks.push_back(std::move(block));
  }

  std::size_t total = 0, pis = 0;
  for (const auto& blk : d.blocks) {
    total += blk.dimension;
    pis += blk.pi();
  }
  if (pis != b.matrix_size()) throw InvariantViolation("class sizes do not add up to r");
  if (total != d.k_dimension)
    throw InvariantViolation("K-component has dimension " + std::to_string(d.k_dimension) +
                             " but the blocks add up to " + std::to_string(total));
  return d;
}

BlockIsomorphism build_block_isomorphism(const KDecomposition& d, std::size_t block_index) {
  if (block_index >= d.blocks.size()) throw InvalidArgument("block index out of range");
  const KBlock& blk = d.blocks[block_index];
  const GradedSimple& b = *d.algebra;
  const Group& g = b.group();
  const Subgroup& h = b.subgroup();
  const TwoCocycle& f = b.cocycle();
  const int n = f.modulus();
  BlockIsomorphism iso;
  if (blk.pi() == 0) {
    iso.verified = true;
    return iso;
  }
  iso.target = build_bsz_simple(*blk.cocycle, blk.k_tuple);
  const GradedSimple& target = *iso.target;
  const Element gi = b.tuple()[*blk.representative];

  std::vector<std::int64_t> slot(b.matrix_size(), -1);  // matrix index -> position in class
  for (std::size_t mu = 0; mu < blk.members.size(); ++mu) slot[blk.members[mu]] = static_cast<std::int64_t>(mu);

  // u_h (x) e_{t,k} = zeta^-phi u_{h_t}^-1 u_hbar u_{h_k} (x) e_{t,k}, hbar = h_t h h_k^-1,
  // phi = -f(h_t^-1, h_t) + f(h_t^-1, hbar) + f(h_t^-1 hbar, h_k).
  std::vector<std::int64_t> image_of(b.dimension(), -1);
  for (std::size_t x : k_basis(b, d.k)) {
    const SimpleBasisElement e = b.decode(x);
    if (slot[e.row] < 0 || slot[e.col] < 0) continue;
    const std::size_t mu = static_cast<std::size_t>(slot[e.row]);
    const std::size_t nu = static_cast<std::size_t>(slot[e.col]);
    const Element ht = blk.translators[mu], hk = blk.translators[nu];
    const Element hv = h.elements()[e.h_position];
    const Element hbar = g.mul(g.mul(ht, hv), g.inv(hk));
    const Element ht_inv = g.inv(ht);
    const long long phi = -static_cast<long long>(f.value(ht_inv, ht)) + f.value(ht_inv, hbar) +
                          f.value(g.mul(ht_inv, hbar), hk);
    const Element v = g.conj(gi, hbar);
    if (!target.subgroup().contains(v)) {
      iso.failure = "image of " + b.basis_label(x) + " leaves the intersection subgroup";
      return iso;
    }
    image_of[x] = static_cast<std::int64_t>(iso.source.size());
    iso.source.push_back(x);
    iso.image.push_back(BasisProduct{target.index_of(v, mu, nu), mod(-phi, n)});
  }

  // Bijective and degree preserving.
  if (iso.source.size() != target.dimension()) {
    iso.failure = "block has " + std::to_string(iso.source.size()) + " basis elements, target " +
                  std::to_string(target.dimension());
    return iso;
  }
  std::vector<char> hit(target.dimension(), 0);
  for (std::size_t a = 0; a < iso.source.size(); ++a) {
    if (hit[iso.image[a].index]) {
      iso.failure = "map is not injective";
      return iso;
    }
    hit[iso.image[a].index] = 1;
    if (b.degree(iso.source[a]) != target.degree(iso.image[a].index)) {
      iso.failure = "degree not preserved at " + b.basis_label(iso.source[a]);
      return iso;
    }
  }
  // Multiplicative on all pairs.
  for (std::size_t a = 0; a < iso.source.size(); ++a)
    for (std::size_t c = 0; c < iso.source.size(); ++c) {
      ++iso.pairs_checked;
      const auto src = b.multiply_basis(iso.source[a], iso.source[c]);
      const auto tgt = target.multiply_basis(iso.image[a].index, iso.image[c].index);
      if (!src || !tgt) {
        if (src.has_value() != tgt.has_value()) {
          iso.failure = "zero pattern differs at (" + b.basis_label(iso.source[a]) + ", " +
                        b.basis_label(iso.source[c]) + ")";
          return iso;
        }
        continue;
      }
      const std::int64_t img = image_of[src->index];
      if (img < 0) {
        iso.failure = "product leaves the block";
        return iso;
      }
      const BasisProduct& mapped = iso.image[static_cast<std::size_t>(img)];
      const int lhs = mod(static_cast<long long>(src->phase) + mapped.phase, n);
      const int rhs = mod(static_cast<long long>(iso.image[a].phase) + iso.image[c].phase + tgt->phase, n);
      if (mapped.index != tgt->index || lhs != rhs) {
        iso.failure = "map is not multiplicative at (" + b.basis_label(iso.source[a]) + ", " +
                      b.basis_label(iso.source[c]) + ")";
        return iso;
      }
    }
  iso.verified = true;
  return iso;
}

}  // namespace gradedexp
