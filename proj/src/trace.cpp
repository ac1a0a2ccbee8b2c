#include "gradedexp/trace.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "gradedexp/error.hpp"

namespace gradedexp {

std::vector<std::pair<std::size_t, std::size_t>> elementary_euler_monomial(std::size_t r, std::size_t i) {
  if (r == 0 || i >= r) throw InvalidArgument("matrix index out of range");
  // Out-edges of v in order: the loop, then every other vertex ascending.
  auto target = [](std::size_t v, std::size_t slot) {
    if (slot == 0) return v;
    return slot - 1 < v ? slot - 1 : slot;
  };
  std::vector<std::size_t> used(r, 0);
  std::vector<std::size_t> stack{i}, circuit;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    if (used[v] < r) {
      stack.push_back(target(v, used[v]++));
    } else {
      circuit.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t j = 0; j + 1 < circuit.size(); ++j) cells.emplace_back(circuit[j], circuit[j + 1]);
  const auto loop = std::find(cells.begin(), cells.end(), std::pair{i, i});
  std::rotate(cells.begin(), loop, cells.end());
  return cells;
}

TraceMonomial build_lambda_hat(const GluedAlgebra& a, const ExpConjResult& witness) {
  const auto& walk = witness.walk;
  if (walk.empty() || walk.size() % 2 == 0) throw InvalidArgument("witness walk must have odd length");
  std::set<std::size_t> seen;
  for (std::size_t p = 0; p < walk.size(); ++p) {
    if (walk[p] >= a.dimension()) throw InvalidArgument("witness factor out of range");
    if (a.is_semisimple(walk[p]) != (p % 2 == 0))
      throw InvalidArgument("witness must alternate semisimple and radical factors");
    if (p % 2 == 0 && !seen.insert(a.source_component(walk[p])).second)
      throw InvalidArgument("witness repeats a graded-simple component");
  }
  if (!multiply_chain(a, walk)) throw InvariantViolation("witness product vanishes");

  const Group& g = *a.grading_group();
  TraceMonomial l;
  l.algebra = &a;
  for (std::size_t t = 0; 2 * t < walk.size(); ++t) {
    const std::size_t z = walk[2 * t];
    const std::size_t comp = a.source_component(z);
    const GradedSimple& c = a.component(comp);
    const std::size_t begin = l.factors.size();
    // Step 4: z_1 is dropped, v_t z_{t+1} becomes one radical factor.
    if (t > 0) {
      const auto absorbed = a.multiply_basis(walk[2 * t - 1], z);
      if (!absorbed) throw InvariantViolation("v z vanishes inside a nonzero witness");
      l.factors.push_back(absorbed->index);
    }
    // Steps 1-3: the idempotent at the column of z, expanded as an Euler
    // monomial whose diagonal cells run through H.
    const std::size_t col = c.decode(a.decode(z).factors.front()).col;
    const auto h = c.subgroup().elements();
    for (auto [row, cell_col] : elementary_euler_monomial(c.matrix_size(), col)) {
      if (row != cell_col) {
        l.factors.push_back(a.vertex_index(comp, c.index(0, row, cell_col)));
        continue;
      }
      for (std::size_t j = 0; j < h.size(); ++j) {
        const Element step = j == 0 ? h[0] : g.mul(g.inv(h[j - 1]), h[j]);
        l.factors.push_back(a.vertex_index(comp, c.index_of(step, row, row)));
        l.factors.push_back(a.vertex_index(comp, c.idempotent(row)));
      }
    }
    l.components.push_back(comp);
    l.component_ranges.emplace_back(begin, l.factors.size());
    l.value += c.dimension();
  }

  // Every prefix product is nonzero; record its degree.
  BasisProduct acc{l.factors.front(), 0};
  l.prefix_degrees.push_back(a.degree(acc.index));
  for (std::size_t p = 1; p < l.factors.size(); ++p) {
    const auto next = a.multiply_basis(acc.index, l.factors[p]);
    if (!next) throw InvariantViolation("enriched monomial vanishes at factor " + std::to_string(p + 1));
    acc = {next->index, (acc.phase + next->phase) % a.modulus()};
    const Element deg = g.mul(l.prefix_degrees.back(), a.degree(l.factors[p]));
    if (deg != a.degree(acc.index)) throw InvariantViolation("prefix degree mismatch");
    l.prefix_degrees.push_back(deg);
  }
  l.product = acc;
  return l;
}

OmegaData omega_sets(const TraceMonomial& l, const Subgroup& k) {
  const Group& g = k.parent();
  OmegaData o;
  o.mu.assign(g.order(), 0);
  for (std::size_t p = 0; p < l.prefix_degrees.size(); ++p)
    if (o.mu[l.prefix_degrees[p]] == 0) o.mu[l.prefix_degrees[p]] = p + 1;
  for (Element x = 0; x < g.order(); ++x)
    if (o.mu[x] > 0) o.omega.push_back(x);
  for (const auto& coset : left_cosets(k)) {
    std::optional<Element> best;
    for (Element x : coset)
      if (o.mu[x] > 0 && (!best || o.mu[x] < o.mu[*best])) best = x;
    if (!best) continue;
    o.pi.push_back(coset);
    o.omega0.push_back(*best);
  }
  return o;
}

std::vector<KDecomposition> component_decompositions(const GluedAlgebra& a, const Subgroup& k) {
  std::vector<KDecomposition> out;
  for (const auto& c : a.components()) out.push_back(k_simple_blocks(c, k));
  return out;
}

GDecomposition decompose_for(const TraceMonomial& l, const OmegaData& omega, const Subgroup& k,
                             const std::vector<KDecomposition>& blocks, Element g) {
  if (std::find(omega.omega0.begin(), omega.omega0.end(), g) == omega.omega0.end())
    throw InvalidArgument("element " + std::to_string(g) + " is not in omega0");
  const Group& grp = k.parent();
  const GluedAlgebra& a = *l.algebra;
  const Element g_inv = grp.inv(g);
  GDecomposition d;
  d.g = g;
  d.x = {0, omega.mu[g]};
  std::size_t begin = d.x.end;
  for (std::size_t p = d.x.end - 1; p < l.factors.size(); ++p) {
    const Element kd = grp.mul(g_inv, l.prefix_degrees[p]);
    if (!k.contains(kd)) continue;
    if (p + 1 > d.x.end) {
      d.sigma.push_back({begin, p + 1});
      begin = p + 1;
    }
    const std::size_t comp = a.target_component(l.factors[p]);
    const std::size_t idx = a.target_col(l.factors[p]);
    d.stops.push_back({p, comp, idx, blocks[comp].block_of_index[idx], kd});
  }
  d.y = {begin, l.factors.size()};
  return d;
}

namespace {

Element range_degree(const GluedAlgebra& a, const TraceMonomial& l, std::size_t begin, std::size_t end) {
  const Group& g = *a.grading_group();
  Element deg = kIdentity;
  for (std::size_t p = begin; p < end; ++p) deg = g.mul(deg, a.degree(l.factors[p]));
  return deg;
}

// Shortest prefix of [begin, end) whose degree satisfies `pred`, 0 if none.
template <typename Pred>
std::size_t first_prefix(const GluedAlgebra& a, const TraceMonomial& l, std::size_t begin, std::size_t end,
                         Pred pred) {
  const Group& g = *a.grading_group();
  Element deg = kIdentity;
  for (std::size_t p = begin; p < end; ++p) {
    deg = g.mul(deg, a.degree(l.factors[p]));
    if (pred(deg)) return p - begin + 1;
  }
  return 0;
}

}  // namespace

bool decomposition_conditions_hold(const TraceMonomial& l, const Subgroup& k, const GDecomposition& d) {
  const GluedAlgebra& a = *l.algebra;
  auto in_k = [&](Element x) { return k.contains(x); };
  auto is_g = [&](Element x) { return x == d.g; };
  if (d.x.begin != 0 || d.x.size() == 0) return false;
  if (range_degree(a, l, d.x.begin, d.x.end) != d.g) return false;
  if (first_prefix(a, l, d.x.begin, d.x.end, is_g) != d.x.size()) return false;
  std::size_t at = d.x.end;
  for (const FactorRange& s : d.sigma) {
    if (s.begin != at || s.size() == 0) return false;
    if (first_prefix(a, l, s.begin, s.end, in_k) != s.size()) return false;
    at = s.end;
  }
  if (d.y.begin != at || d.y.end != l.factors.size()) return false;
  return first_prefix(a, l, d.y.begin, d.y.end, in_k) == 0;
}

std::size_t count_parses(const TraceMonomial& l, const Subgroup& k, Element g, std::size_t limit) {
  const GluedAlgebra& a = *l.algebra;
  const std::size_t d = l.factors.size();
  auto in_k = [&](Element x) { return k.contains(x); };
  std::size_t count = 0;
  auto rest = [&](auto&& self, std::size_t at) -> void {
    if (count >= limit) return;
    // Y(g) = [at, d)
    if (first_prefix(a, l, at, d, in_k) == 0) ++count;
    for (std::size_t end = at + 1; end <= d && count < limit; ++end)
      if (first_prefix(a, l, at, end, in_k) == end - at) self(self, end);
  };
  for (std::size_t len = 1; len <= d && count < limit; ++len)
    if (first_prefix(a, l, 0, len, [&](Element x) { return x == g; }) == len) rest(rest, len);
  return count;
}

VisitReport verify_visit_counts(const TraceMonomial& l, const Subgroup& k,
                                const std::vector<GDecomposition>& parses,
                                const std::vector<KDecomposition>& blocks) {
  VisitReport report;
  for (std::size_t t : l.components) {
    const KDecomposition& d = blocks[t];
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
      const KBlock& blk = d.blocks[b];
      if (blk.pi() == 0) continue;
      VisitRow row{t, b, blk.members, 0, 0};
      const Element gi = d.algebra->tuple()[*blk.representative];
      row.expected = double_coset_size(d.algebra->subgroup(), gi, k) / k.size();
      for (const GDecomposition& p : parses)
        if (std::any_of(p.stops.begin(), p.stops.end(),
                        [&](const KStop& s) { return s.component == t && s.k_class == b; }))
          ++row.observed;
      report.ok = report.ok && row.observed == row.expected;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

LemmaChecks check_visit_lemmas(const TraceMonomial& l, const Subgroup& k, const OmegaData& omega,
                               const std::vector<GDecomposition>& parses,
                               const std::vector<KDecomposition>& blocks) {
  const Group& grp = k.parent();
  LemmaChecks r;
  const std::size_t index = subgroup_index(k);
  auto fail = [&](bool& flag, std::string what) {
    flag = false;
    r.failures.push_back(std::move(what));
  };
  if (omega.omega0.size() > index) fail(r.omega0_bound, "|omega0| exceeds [G:K]");

  // classes determined by each parse, per component
  std::vector<std::map<std::size_t, std::set<std::size_t>>> determined(parses.size());
  for (std::size_t p = 0; p < parses.size(); ++p)
    for (const KStop& s : parses[p].stops) determined[p][s.component].insert(s.k_class);

  for (std::size_t p = 0; p < parses.size(); ++p)
    for (const auto& [t, classes] : determined[p])
      if (classes.size() > 1)
        fail(r.same_class_per_component,
             "g=" + std::to_string(parses[p].g) + " stops in two classes of component " + std::to_string(t + 1));

  for (std::size_t t : l.components)
    for (std::size_t b = 0; b < blocks[t].blocks.size(); ++b) {
      if (blocks[t].blocks[b].pi() == 0) continue;
      const bool hit = std::any_of(determined.begin(), determined.end(), [&](const auto& m) {
        const auto it = m.find(t);
        return it != m.end() && it->second.count(b);
      });
      if (!hit)
        fail(r.every_class_determined,
             "class " + std::to_string(b + 1) + " of component " + std::to_string(t + 1) + " is never a K-stop");
    }

  auto omega0_pos = [&](Element x) -> std::optional<std::size_t> {
    const auto it = std::find(omega.omega0.begin(), omega.omega0.end(), x);
    if (it == omega.omega0.end()) return std::nullopt;
    return static_cast<std::size_t>(it - omega.omega0.begin());
  };

  for (std::size_t p = 0; p < parses.size(); ++p)
    for (const KStop& s : parses[p].stops) {
      const GradedSimple& c = *blocks[s.component].algebra;
      const Element gi = c.tuple()[s.index];
      const Element lead = grp.mul(grp.mul(parses[p].g, s.k_degree), grp.inv(gi));
      std::vector<char> in_set(grp.order(), 0);
      for (Element h : c.subgroup().elements())
        for (Element kk : k.elements()) in_set[grp.mul(grp.mul(grp.mul(lead, h), gi), kk)] = 1;
      const std::string where = "g=" + std::to_string(parses[p].g) + " stop at factor " + std::to_string(s.position + 1);

      for (Element x = 0; x < grp.order(); ++x) {
        if (!in_set[x]) continue;
        bool represented = false;
        for (Element kk : k.elements()) represented = represented || omega0_pos(grp.mul(x, kk)).has_value();
        if (!represented) fail(r.coset_set_represented, where + ": coset of " + std::to_string(x) + " missing");
        if (const auto q = omega0_pos(x)) {
          const auto it = determined[*q].find(s.component);
          if (it != determined[*q].end() && (it->second.size() != 1 || *it->second.begin() != s.k_class))
            fail(r.coset_set_same_class, where + ": " + std::to_string(x) + " determines another class");
        }
      }
      for (std::size_t q = 0; q < parses.size(); ++q) {
        const auto it = determined[q].find(s.component);
        if (it != determined[q].end() && it->second.count(s.k_class) && !in_set[parses[q].g])
          fail(r.determining_inside_coset_set, where + ": " + std::to_string(parses[q].g) + " lies outside");
      }
    }

  for (std::size_t t : l.components) {
    const unsigned long long lhs = omega.omega0.size() * blocks[t].algebra->dimension();
    unsigned long long sum = 0;
    for (const auto& m : determined) {
      const auto it = m.find(t);
      if (it != m.end()) sum += blocks[t].blocks[*it->second.begin()].dimension;
    }
    if (lhs > index * index * sum)
      fail(r.aggregate, "component " + std::to_string(t + 1) + ": " + std::to_string(lhs) + " > " +
                            std::to_string(index * index * sum));
  }
  return r;
}

FinalChainReport final_inequality_report(const GradedSimple& b, const Subgroup& k) {
  const Subgroup& h = b.subgroup();
  const DoubleCosetPartition dc = double_cosets(h, k);
  FinalChainReport r;
  r.m = dc.classes.size();
  r.index = subgroup_index(k);
  r.h_order = h.size();
  r.pi.assign(r.m, 0);
  for (Element x : b.tuple()) ++r.pi[dc.class_of[x]];
  unsigned long long sum = 0, squares = 0, weighted = 0;
  for (std::size_t j = 0; j < r.m; ++j) {
    const Element rep = dc.representatives[j];
    const std::size_t visits = double_coset_size(h, rep, k) / k.size();
    const std::size_t inter = intersect(conjugate_subgroup(rep, h), k).size();
    r.group_identity = r.group_identity && visits * inter == h.size();
    sum += r.pi[j];
    squares += r.pi[j] * r.pi[j];
    weighted += visits * inter * r.pi[j] * r.pi[j];
  }
  r.lhs_a = r.h_order * sum * sum;
  r.rhs_a = r.index * weighted;
  r.lhs_b = r.lhs_c = sum * sum;
  r.rhs_b = r.index * squares;
  r.rhs_c = r.m * squares;
  r.a = r.lhs_a <= r.rhs_a;
  r.b = r.lhs_b <= r.rhs_b;
  r.c = r.lhs_c <= r.rhs_c;
  return r;
}

bool TraceReport::ok() const {
  if (monomial.value != witness.value) return false;
  if (!std::all_of(parse_conditions.begin(), parse_conditions.end(), [](bool b) { return b; })) return false;
  if (!std::all_of(parse_counts.begin(), parse_counts.end(), [](std::size_t c) { return c == 1; })) return false;
  return visits.ok && lemmas.ok() &&
         std::all_of(chains.begin(), chains.end(), [](const FinalChainReport& c) { return c.ok(); });
}

TraceReport run_trace(const GluedAlgebra& a, const Subgroup& k) {
  if (k.group() != a.grading_group()) throw InvalidArgument("K is not a subgroup of the grading group");
  TraceReport r;
  r.witness = exp_conj(a);
  r.monomial = build_lambda_hat(a, r.witness);
  r.omega = omega_sets(r.monomial, k);
  const auto blocks = component_decompositions(a, k);
  for (Element g : r.omega.omega0) {
    r.parses.push_back(decompose_for(r.monomial, r.omega, k, blocks, g));
    r.parse_conditions.push_back(decomposition_conditions_hold(r.monomial, k, r.parses.back()));
    r.parse_counts.push_back(count_parses(r.monomial, k, g));
  }
  r.visits = verify_visit_counts(r.monomial, k, r.parses, blocks);
  r.lemmas = check_visit_lemmas(r.monomial, k, r.omega, r.parses, blocks);
  for (std::size_t t : r.monomial.components) r.chains.push_back(final_inequality_report(a.component(t), k));
  return r;
}

}  // namespace gradedexp
