#include "gradedexp/expconj.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "gradedexp/decomposition.hpp"
#include "gradedexp/error.hpp"

namespace gradedexp {

namespace {

struct BlockPath {
  bool found = false;
  std::size_t length = 0;
  PathElement path;
};

std::vector<SubBlock> collect_blocks(const GluedAlgebra& a, const Subgroup& k) {
  std::vector<SubBlock> blocks;
  for (std::size_t t = 0; t < a.components().size(); ++t) {
    const KDecomposition d = k_simple_blocks(a.components()[t], k);
    for (const KBlock& blk : d.blocks)
      if (blk.pi() > 0) blocks.push_back(SubBlock{t, blk.members, blk.dimension});
  }
  return blocks;
}

bool in_block(const SubBlock& b, std::size_t index) {
  return std::binary_search(b.members.begin(), b.members.end(), index);
}

// Shortest K-degree radical path from every block to every block. A path
// a_0 d_1 a_1 ... d_k a_k connects b to b' when the row of a_0 lies in the
// class of b and the column of a_k in the class of b'. Breadth first search
// over (vertex, accumulated degree).
std::vector<std::vector<BlockPath>> block_distances(const GluedAlgebra& a, const Subgroup& k,
                                                    const std::vector<SubBlock>& blocks) {
  const Group& g = *a.grading_group();
  const std::size_t order = g.order();
  const std::size_t q = a.components().size();
  const std::size_t states = q * order;
  const std::size_t nb = blocks.size();
  std::vector<std::vector<BlockPath>> out(nb, std::vector<BlockPath>(nb));
  if (a.truncation() < 2 || a.edges().empty()) return out;

  // Local elements of each block's component by row / column membership.
  std::vector<std::vector<std::size_t>> starting(nb), ending(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    const GradedSimple& c = a.component(blocks[b].component);
    for (std::size_t x = 0; x < c.dimension(); ++x) {
      const SimpleBasisElement e = c.decode(x);
      if (in_block(blocks[b], e.row)) starting[b].push_back(x);
      if (in_block(blocks[b], e.col)) ending[b].push_back(x);
    }
  }
  std::vector<std::vector<std::size_t>> blocks_of(q);
  for (std::size_t b = 0; b < nb; ++b) blocks_of[blocks[b].component].push_back(b);

  constexpr std::int64_t kUnseen = -2, kRoot = -1;
  for (std::size_t src = 0; src < nb; ++src) {
    const std::size_t t0 = blocks[src].component;
    std::vector<std::int64_t> post_parent(states, kUnseen);
    std::vector<std::size_t> post_factor(states, 0);
    std::vector<std::int64_t> pre_parent(states, kUnseen);
    std::vector<std::size_t> pre_edge(states, 0);
    std::vector<std::size_t> frontier;
    for (std::size_t x : starting[src]) {
      const std::size_t s = t0 * order + a.component(t0).degree(x);
      if (post_parent[s] != kUnseen) continue;
      post_parent[s] = kRoot;
      post_factor[s] = x;
      frontier.push_back(s);
    }
    auto reconstruct = [&](std::size_t pre, std::size_t last_factor) {
      PathElement p{t0, {}, {last_factor}};
      std::size_t cur = pre;
      while (true) {
        p.edges.push_back(pre_edge[cur]);
        const std::size_t post = static_cast<std::size_t>(pre_parent[cur]);
        p.factors.push_back(post_factor[post]);
        if (post_parent[post] == kRoot) break;
        cur = static_cast<std::size_t>(post_parent[post]);
      }
      std::reverse(p.edges.begin(), p.edges.end());
      std::reverse(p.factors.begin(), p.factors.end());
      return p;
    };
    for (std::size_t len = 1; len < a.truncation() && !frontier.empty(); ++len) {
      std::vector<std::size_t> pre_frontier;
      for (std::size_t s : frontier) {
        const std::size_t t = s / order;
        const Element delta = static_cast<Element>(s % order);
        for (std::size_t e = 0; e < a.edges().size(); ++e) {
          const QuiverEdge& edge = a.edges()[e];
          if (edge.from != t) continue;
          const std::size_t p = edge.to * order + g.mul(delta, edge.degree);
          if (pre_parent[p] != kUnseen) continue;
          pre_parent[p] = static_cast<std::int64_t>(s);
          pre_edge[p] = e;
          pre_frontier.push_back(p);
        }
      }
      for (std::size_t p : pre_frontier) {
        const std::size_t u = p / order;
        const Element eps = static_cast<Element>(p % order);
        const GradedSimple& c = a.component(u);
        for (std::size_t dst : blocks_of[u]) {
          if (out[src][dst].found) continue;
          for (std::size_t y : ending[dst])
            if (k.contains(g.mul(eps, c.degree(y)))) {
              out[src][dst] = BlockPath{true, len, reconstruct(p, y)};
              break;
            }
        }
      }
      frontier.clear();
      if (len + 1 >= a.truncation()) break;
      for (std::size_t p : pre_frontier) {
        const std::size_t u = p / order;
        const Element eps = static_cast<Element>(p % order);
        const GradedSimple& c = a.component(u);
        for (std::size_t z = 0; z < c.dimension(); ++z) {
          const std::size_t s = u * order + g.mul(eps, c.degree(z));
          if (post_parent[s] != kUnseen) continue;
          post_parent[s] = static_cast<std::int64_t>(p);
          post_factor[s] = z;
          frontier.push_back(s);
        }
      }
    }
  }
  return out;
}

// z with row `row`, column `col` and degree in K inside component t.
std::size_t connecting_element(const GluedAlgebra& a, const Subgroup& k, std::size_t t,
                               std::size_t row, std::size_t col) {
  const GradedSimple& c = a.component(t);
  for (std::size_t hp = 0; hp < c.subgroup().size(); ++hp) {
    const std::size_t x = c.index(hp, row, col);
    if (k.contains(c.degree(x))) return a.vertex_index(t, x);
  }
  throw InvariantViolation("indices " + std::to_string(row + 1) + " and " + std::to_string(col + 1) +
                           " of component " + std::to_string(t + 1) + " are not K-connected");
}

ExpConjResult search(const GluedAlgebra& a, const Subgroup& k) {
  if (k.group() != a.grading_group()) throw InvalidArgument("K is not a subgroup of the grading group");
  ExpConjResult result;
  result.blocks = collect_blocks(a, k);
  const std::vector<SubBlock>& blocks = result.blocks;
  const std::size_t nb = blocks.size();
  if (nb > kMaxSearchBlocks)
    throw CapExceeded(std::to_string(nb) + " blocks exceed the search limit of " +
                      std::to_string(kMaxSearchBlocks));
  const auto paths = block_distances(a, k, blocks);
  const std::size_t limit = a.truncation();  // total radical length must stay below N

  // dp[mask][last]: least total radical length of a nonzero product visiting
  // exactly `mask`, ending in `last`.
  constexpr std::uint16_t kInf = std::numeric_limits<std::uint16_t>::max();
  const std::size_t masks = std::size_t{1} << nb;
  std::vector<std::uint16_t> dp(masks * nb, kInf);
  std::vector<std::size_t> mask_dim(masks, 0);
  for (std::size_t m = 1; m < masks; ++m) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(m));
    mask_dim[m] = mask_dim[m & (m - 1)] + blocks[low].dimension;
  }
  for (std::size_t b = 0; b < nb; ++b) dp[(std::size_t{1} << b) * nb + b] = 0;
  for (std::size_t m = 1; m < masks; ++m)
    for (std::size_t last = 0; last < nb; ++last) {
      const std::uint16_t cur = dp[m * nb + last];
      if (cur == kInf) continue;
      result.value = std::max(result.value, mask_dim[m]);
      for (std::size_t nxt = 0; nxt < nb; ++nxt) {
        if (m >> nxt & 1 || !paths[last][nxt].found) continue;
        const std::size_t len = cur + paths[last][nxt].length;
        if (len >= limit) continue;
        std::uint16_t& slot = dp[(m | std::size_t{1} << nxt) * nb + nxt];
        slot = std::min<std::uint16_t>(slot, static_cast<std::uint16_t>(len));
      }
    }

  // Lexicographically least sequence attaining the value (preorder search).
  std::vector<std::size_t> seq;
  auto dfs = [&](auto&& self, std::size_t mask, std::size_t len) -> bool {
    if (mask_dim[mask] == result.value) return true;
    const std::size_t last = seq.back();
    for (std::size_t nxt = 0; nxt < nb; ++nxt) {
      if (mask >> nxt & 1 || !paths[last][nxt].found) continue;
      const std::size_t l = len + paths[last][nxt].length;
      if (l >= limit) continue;
      seq.push_back(nxt);
      if (self(self, mask | std::size_t{1} << nxt, l)) return true;
      seq.pop_back();
    }
    return false;
  };
  bool found = false;
  for (std::size_t b = 0; b < nb && !found; ++b) {
    seq = {b};
    found = dfs(dfs, std::size_t{1} << b, 0);
  }
  if (!found) throw InvariantViolation("no witness attains the computed exp^Conj value");
  result.sequence = seq;

  // Concrete factors.
  std::vector<std::size_t> radicals, rows, cols;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const BlockPath& bp = paths[seq[i]][seq[i + 1]];
    const std::size_t v = a.encode(bp.path);
    radicals.push_back(v);
    rows.push_back(a.source_row(v));
    cols.push_back(a.target_col(v));
    result.radical_length += bp.length;
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const SubBlock& blk = blocks[seq[i]];
    const std::size_t row = i == 0 ? (seq.size() == 1 ? blk.members[0] : rows[0]) : cols[i - 1];
    const std::size_t col = i + 1 < seq.size() ? rows[i] : row;
    result.walk.push_back(connecting_element(a, k, blk.component, row, col));
    if (i < radicals.size()) result.walk.push_back(radicals[i]);
  }
  bool degrees_ok = true;
  for (std::size_t x : result.walk) degrees_ok = degrees_ok && k.contains(a.degree(x));
  result.certified = degrees_ok && multiply_chain(a, result.walk).has_value();
  if (!result.certified) throw InvariantViolation("exp^Conj witness product vanishes");
  return result;
}

}  // namespace

ExpConjResult exp_conj(const GluedAlgebra& a) {
  return search(a, Subgroup::whole(a.grading_group()));
}

ExpConjResult exp_conj_sub(const GluedAlgebra& a, const Subgroup& k) { return search(a, k); }

MainInequalityReport check_main_inequality(const GluedAlgebra& a, const Subgroup& k) {
  MainInequalityReport r;
  r.g_result = exp_conj(a);
  r.k_result = exp_conj_sub(a, k);
  r.lhs = r.g_result.value;
  r.k_value = r.k_result.value;
  r.index = subgroup_index(k);
  r.rhs = r.index * r.index * r.k_value;
  r.holds = r.lhs <= r.rhs;
  return r;
}

}  // namespace gradedexp
