#include "gradedexp/codim.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "gradedexp/error.hpp"
#include "gradedexp/expconj.hpp"
#include "gradedexp/linalg.hpp"

namespace gradedexp {

namespace {

using Choices = std::vector<std::vector<std::size_t>>;  // candidates per variable
// Sparse column: (row, phase) with the first phase normalized to 0.
using Signature = std::vector<std::pair<std::uint32_t, int>>;

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::size_t power(std::size_t base, std::size_t e) {
  std::size_t out = 1;
  while (e--) out *= base;
  return out;
}

std::vector<std::vector<std::size_t>> permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Saturating product of the choice counts.
std::size_t tuple_count(const Choices& choices, std::size_t limit) {
  std::size_t total = 1;
  for (const auto& c : choices) {
    if (c.empty()) return 0;
    if (total > limit / c.size()) return limit + 1;
    total *= c.size();
  }
  return total;
}

struct BlockRanker {
  const GradedAlgebra& a;
  const std::vector<std::vector<std::size_t>>& rows;
  EchelonBasis basis;
  std::set<Signature> seen;
  std::size_t tuples = 0;
  std::vector<std::size_t> word;

  BlockRanker(const GradedAlgebra& alg, const std::vector<std::vector<std::size_t>>& r)
      : a(alg), rows(r), basis(r.size()) {}

  bool full() const { return basis.rank() == rows.size(); }

  void add_tuple(const std::vector<std::size_t>& subst) {
    ++tuples;
    std::map<std::size_t, Signature> by_output;
    word.resize(subst.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t i = 0; i < subst.size(); ++i) word[i] = subst[rows[r][i]];
      if (const auto p = multiply_chain(a, word)) by_output[p->index].emplace_back(static_cast<std::uint32_t>(r), p->phase);
    }
    const int m = a.modulus();
    for (auto& [out, sig] : by_output) {
      const int shift = sig.front().second;
      for (auto& entry : sig) entry.second = ((entry.second - shift) % m + m) % m;
      if (!seen.insert(sig).second) continue;
      Vector v = zero_vector(a.field(), rows.size());
      for (const auto& [r, phase] : sig) v[r] = CycScalar::zeta(a.field(), phase);
      basis.insert(std::move(v));
      if (full()) return;
    }
  }
};

std::vector<std::size_t> decode_tuple(std::size_t ordinal, const Choices& choices) {
  std::vector<std::size_t> out(choices.size());
  for (std::size_t i = choices.size(); i-- > 0;) {
    out[i] = choices[i][ordinal % choices[i].size()];
    ordinal /= choices[i].size();
  }
  return out;
}

// Rank of one block; `budget` is the tuple count allowed before sampling.
CodimResult rank_block(const GradedAlgebra& a, const Choices& choices, std::vector<std::vector<std::size_t>> rows,
                       const CodimOptions& options, std::size_t budget, SplitMix64& rng) {
  CodimResult res;
  res.rows = rows.size();
  const std::size_t total = tuple_count(choices, budget);
  if (total == 0) return res;
  if (options.shuffle_seed) {
    SplitMix64 shuffle_rng(*options.shuffle_seed);
    shuffle_rng.shuffle(rows);
  }
  BlockRanker ranker(a, rows);

  if (total > budget) {
    if (!options.allow_sampling)
      throw CapExceeded("codimension work exceeds cap " + std::to_string(options.work_cap));
    res.exact = false;
    std::vector<std::size_t> subst(choices.size());
    for (std::size_t s = 0; s < options.samples && !ranker.full(); ++s) {
      for (std::size_t i = 0; i < choices.size(); ++i) subst[i] = choices[i][rng.below(choices[i].size())];
      ranker.add_tuple(subst);
    }
  } else {
    std::vector<std::size_t> order(total);
    std::iota(order.begin(), order.end(), 0);
    if (options.shuffle_seed) {
      SplitMix64 shuffle_rng(*options.shuffle_seed ^ 0x5bd1e995ULL);
      shuffle_rng.shuffle(order);
    }
    std::size_t limit = total;
    if (options.column_limit && *options.column_limit < total) {
      limit = *options.column_limit;
      res.exact = false;
    }
    for (std::size_t i = 0; i < limit && !ranker.full(); ++i) ranker.add_tuple(decode_tuple(order[i], choices));
  }
  res.value = ranker.basis.rank();
  res.tuples_used = ranker.tuples;
  res.distinct_columns = ranker.seen.size();
  return res;
}

std::size_t tuple_budget(std::size_t n, const CodimOptions& options) {
  const std::size_t per_tuple = factorial(n) * std::max<std::size_t>(n - 1, 1);
  return std::max<std::size_t>(options.work_cap / per_tuple, 1);
}

void require_degree(std::size_t n) {
  if (n == 0) throw InvalidArgument("codimension degree must be at least 1");
  if (n > 8) throw CapExceeded("codimension degree above 8 is out of reach");
}

}  // namespace

CodimResult codimension_detail(const GradedAlgebra& a, std::size_t n, const CodimOptions& options) {
  require_degree(n);
  std::vector<std::size_t> all(a.dimension());
  std::iota(all.begin(), all.end(), 0);
  SplitMix64 rng(options.sample_seed);
  return rank_block(a, Choices(n, all), permutations(n), options, tuple_budget(n, options), rng);
}

std::size_t codimension(const GradedAlgebra& a, std::size_t n) { return codimension_detail(a, n).value; }

CodimResult graded_codimension_detail(const GradedAlgebra& a, std::size_t n, const CodimOptions& options) {
  require_degree(n);
  const std::size_t order = a.grading_group()->order();
  std::vector<std::vector<std::size_t>> component(order);
  for (Element g = 0; g < order; ++g) component[g] = homogeneous_component(a, g);
  std::vector<Element> support;
  for (Element g = 0; g < order; ++g)
    if (!component[g].empty()) support.push_back(g);

  // only assignments drawn from the support give nonzero blocks
  const auto rows = permutations(n);
  const std::size_t budget = tuple_budget(n, options);
  std::size_t total = 0;
  {
    std::vector<std::size_t> all(a.dimension());
    std::iota(all.begin(), all.end(), 0);
    total = tuple_count(Choices(n, all), budget);
  }
  const bool sampled = total > budget;
  if (sampled && !options.allow_sampling)
    throw CapExceeded("graded codimension work exceeds cap " + std::to_string(options.work_cap));

  CodimResult res;
  SplitMix64 rng(options.sample_seed);
  const std::size_t blocks = support.empty() ? 0 : power(support.size(), n);
  for (std::size_t b = 0; b < blocks; ++b) {
    Choices choices(n);
    std::size_t x = b;
    for (std::size_t i = n; i-- > 0;) {
      choices[i] = component[support[x % support.size()]];
      x /= support.size();
    }
    // a zero budget makes every block sample
    const CodimResult part = rank_block(a, choices, rows, options, sampled ? 0 : budget, rng);
    res.value += part.value;
    res.exact = res.exact && part.exact;
    res.tuples_used += part.tuples_used;
    res.distinct_columns += part.distinct_columns;
  }
  // rows for assignments outside the support are zero rows
  res.rows = factorial(n) * power(order, n);
  return res;
}

std::size_t graded_codimension(const GradedAlgebra& a, std::size_t n) {
  return graded_codimension_detail(a, n).value;
}

CodimReport growth_report(const GluedAlgebraPtr& a, std::size_t n_max, const std::optional<Subgroup>& k,
                          bool graded, const CodimOptions& options) {
  CodimReport rep;
  rep.algebra = "glued algebra of dimension " + std::to_string(a->dimension());
  rep.exp_conj = exp_conj(*a).value;
  std::shared_ptr<const RestrictedAlgebra> sub;
  if (k) {
    rep.exp_conj_sub = exp_conj_sub(*a, *k).value;
    rep.subgroup_index = subgroup_index(*k);
    sub = subgroup_component(a, *k).algebra;
  }
  for (std::size_t n = 1; n <= n_max; ++n) {
    CodimRow row;
    row.n = n;
    const CodimResult c = codimension_detail(*a, n, options);
    row.c = c.value;
    row.c_exact = c.exact;
    row.root = std::pow(static_cast<double>(c.value), 1.0 / static_cast<double>(n));
    if (graded) {
      const CodimResult cg = graded_codimension_detail(*a, n, options);
      row.c_graded = cg.value;
      row.c_graded_exact = cg.exact;
    }
    if (sub) {
      const CodimResult cs = codimension_detail(*sub, n, options);
      row.c_sub = cs.value;
      row.c_sub_exact = cs.exact;
    }
    rep.rows.push_back(row);
  }
  rep.note = "trend only: finitely many c_n say nothing certain about the limit";
  return rep;
}

}  // namespace gradedexp
