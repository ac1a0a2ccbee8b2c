#include "gradedexp/glued.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "gradedexp/error.hpp"

namespace gradedexp {

std::size_t default_basis_cap() {
  if (const char* env = std::getenv("GRADEDEXP_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 20000;
}

GluedAlgebra::GluedAlgebra(GroupPtr group, std::vector<GradedSimplePtr> components,
                           std::vector<QuiverEdge> edges, std::size_t truncation,
                           std::size_t basis_cap)
    : group_(std::move(group)),
      components_(std::move(components)),
      edges_(std::move(edges)),
      truncation_(truncation) {
  if (components_.empty()) throw InvalidArgument("glued algebra needs at least one component");
  if (truncation_ < 1) throw InvalidArgument("truncation N must be at least 1");
  for (std::size_t t = 0; t < components_.size(); ++t) {
    if (!components_[t]) throw InvalidArgument("null component");
    if (components_[t]->grading_group() != group_)
      throw InvalidArgument("component " + std::to_string(t) + " is graded by a different group");
    modulus_ = std::lcm(modulus_, components_[t]->modulus());
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const QuiverEdge& d = edges_[e];
    if (d.from >= components_.size() || d.to >= components_.size())
      throw InvalidArgument("edge[" + std::to_string(e) + "] references a missing component");
    if (!group_->contains(d.degree))
      throw InvalidArgument("edge[" + std::to_string(e) + "] degree is not a group element");
  }

  // Enumerate path shapes breadth first, i.e. by length.
  const std::size_t num_edges = edges_.size();
  for (std::size_t t = 0; t < components_.size(); ++t)
    shapes_.push_back(Shape{t, t, {}, 0, components_[t]->dimension()});
  std::size_t total = 0;
  for (std::size_t s = 0; s < shapes_.size(); ++s) {
    total += shapes_[s].size;
    if (total > basis_cap)
      throw CapExceeded("glued basis exceeds the cap of " + std::to_string(basis_cap) +
                        " elements (set GRADEDEXP_CAP to raise it)");
    if (shapes_[s].edges.size() + 1 >= truncation_) continue;
    for (std::size_t e = 0; e < num_edges; ++e) {
      if (edges_[e].from != shapes_[s].end) continue;
      Shape next = shapes_[s];
      next.edges.push_back(e);
      next.end = edges_[e].to;
      next.size *= components_[next.end]->dimension();
      shapes_.push_back(std::move(next));
    }
  }
  dimension_ = total;
  extend_.assign(shapes_.size() * num_edges, -1);
  std::size_t offset = 0;
  for (std::size_t s = 0; s < shapes_.size(); ++s) {
    shapes_[s].offset = offset;
    offset += shapes_[s].size;
  }
  // Parents precede children, so prefixes are already linked.
  for (std::size_t s = components_.size(); s < shapes_.size(); ++s) {
    const auto& ed = shapes_[s].edges;
    std::size_t parent = shapes_[s].start;
    for (std::size_t i = 0; i + 1 < ed.size(); ++i)
      parent = static_cast<std::size_t>(extend_[parent * num_edges + ed[i]]);
    extend_[parent * num_edges + ed.back()] = static_cast<std::int32_t>(s);
  }

  shape_of_.resize(dimension_);
  degrees_.resize(dimension_);
  std::vector<std::size_t> digits;
  const Group& g = *group_;
  for (std::size_t s = 0; s < shapes_.size(); ++s) {
    const Shape& sh = shapes_[s];
    for (std::size_t b = sh.offset; b < sh.offset + sh.size; ++b) {
      shape_of_[b] = static_cast<std::uint32_t>(s);
      digits.resize(sh.edges.size() + 1);
      decode_factors(b, digits.data());
      Element d = components_[sh.start]->degree(digits[0]);
      for (std::size_t i = 0; i < sh.edges.size(); ++i) {
        const QuiverEdge& e = edges_[sh.edges[i]];
        d = g.mul(g.mul(d, e.degree), components_[e.to]->degree(digits[i + 1]));
      }
      degrees_[b] = d;
    }
  }
}

void GluedAlgebra::decode_factors(std::size_t b, std::size_t* out) const {
  const Shape& sh = shapes_[shape_of_[b]];
  std::size_t rest = b - sh.offset;
  // Factor 0 is the most significant digit.
  for (std::size_t i = sh.edges.size() + 1; i-- > 0;) {
    const std::size_t comp = i == 0 ? sh.start : edges_[sh.edges[i - 1]].to;
    const std::size_t dim = components_[comp]->dimension();
    out[i] = rest % dim;
    rest /= dim;
  }
}

PathElement GluedAlgebra::decode(std::size_t b) const {
  if (b >= dimension_) throw InvalidArgument("basis index out of range");
  const Shape& sh = shapes_[shape_of_[b]];
  PathElement p{sh.start, sh.edges, std::vector<std::size_t>(sh.edges.size() + 1)};
  decode_factors(b, p.factors.data());
  return p;
}

std::size_t GluedAlgebra::encode(const PathElement& p) const {
  if (p.start >= components_.size() || p.factors.size() != p.edges.size() + 1)
    throw InvalidArgument("malformed path element");
  std::size_t s = p.start;
  for (std::size_t e : p.edges) {
    if (e >= edges_.size()) throw InvalidArgument("path uses a missing edge");
    const std::int32_t next = extend_[s * edges_.size() + e];
    if (next < 0) throw InvalidArgument("path is not a basis element (wrong edge or too long)");
    s = static_cast<std::size_t>(next);
  }
  const Shape& sh = shapes_[s];
  std::size_t idx = 0;
  for (std::size_t i = 0; i < p.factors.size(); ++i) {
    const std::size_t comp = i == 0 ? sh.start : edges_[sh.edges[i - 1]].to;
    const std::size_t dim = components_[comp]->dimension();
    if (p.factors[i] >= dim) throw InvalidArgument("path factor out of range");
    idx = idx * dim + p.factors[i];
  }
  return sh.offset + idx;
}

std::size_t GluedAlgebra::vertex_index(std::size_t t, std::size_t local) const {
  if (t >= components_.size() || local >= components_[t]->dimension())
    throw InvalidArgument("vertex element out of range");
  return shapes_[t].offset + local;
}

std::optional<BasisProduct> GluedAlgebra::multiply_basis(std::size_t x, std::size_t y) const {
  const Shape& sx = shapes_[shape_of_[x]];
  const Shape& sy = shapes_[shape_of_[y]];
  if (sx.end != sy.start) return std::nullopt;
  const std::size_t kx = sx.edges.size(), ky = sy.edges.size();
  if (kx + ky >= truncation_) return std::nullopt;

  std::size_t buf_x[32], buf_y[32];
  std::vector<std::size_t> heap_x, heap_y;
  std::size_t* fx = buf_x;
  std::size_t* fy = buf_y;
  if (kx + 1 > 32) { heap_x.resize(kx + 1); fx = heap_x.data(); }
  if (ky + 1 > 32) { heap_y.resize(ky + 1); fy = heap_y.data(); }
  decode_factors(x, fx);
  decode_factors(y, fy);

  const std::size_t t = sx.end;
  auto junction = components_[t]->multiply_basis(fx[kx], fy[0]);
  if (!junction) return std::nullopt;

  std::size_t s = shape_of_[x];
  for (std::size_t e : sy.edges) s = static_cast<std::size_t>(extend_[s * edges_.size() + e]);
  const Shape& sr = shapes_[s];
  // Mixed-radix encoding of fx[0..kx-1], junction, fy[1..ky].
  std::size_t idx = 0;
  std::size_t pos = 0;
  auto push = [&](std::size_t digit) {
    const std::size_t comp = pos == 0 ? sr.start : edges_[sr.edges[pos - 1]].to;
    idx = idx * components_[comp]->dimension() + digit;
    ++pos;
  };
  for (std::size_t i = 0; i < kx; ++i) push(fx[i]);
  push(junction->index);
  for (std::size_t i = 1; i <= ky; ++i) push(fy[i]);
  const int phase = (junction->phase * phase_scale(t)) % modulus_;
  return BasisProduct{sr.offset + idx, phase};
}

std::string GluedAlgebra::basis_label(std::size_t b) const {
  const PathElement p = decode(b);
  std::string s = "[" + std::to_string(p.start + 1) + ":" +
                  components_[p.start]->basis_label(p.factors[0]);
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const QuiverEdge& e = edges_[p.edges[i]];
    s += " d" + std::to_string(p.edges[i] + 1) + " " + std::to_string(e.to + 1) + ":" +
         components_[e.to]->basis_label(p.factors[i + 1]);
  }
  return s + "]";
}

std::size_t GluedAlgebra::source_row(std::size_t b) const {
  const PathElement p = decode(b);
  return components_[p.start]->decode(p.factors.front()).row;
}

std::size_t GluedAlgebra::target_col(std::size_t b) const {
  const PathElement p = decode(b);
  const std::size_t t = p.edges.empty() ? p.start : edges_[p.edges.back()].to;
  return components_[t]->decode(p.factors.back()).col;
}

std::size_t GluedAlgebra::semisimple_dimension() const {
  std::size_t s = 0;
  for (const auto& c : components_) s += c->dimension();
  return s;
}

GluedAlgebraPtr build_glued(GroupPtr group, std::vector<GradedSimplePtr> components,
                            std::vector<QuiverEdge> edges, std::size_t truncation,
                            std::size_t basis_cap) {
  auto a = std::make_shared<const GluedAlgebra>(std::move(group), std::move(components),
                                                std::move(edges), truncation, basis_cap);
  SplitMix64 rng(0x5EEDULL + a->dimension());
  const StructureReport report = verify_structure(*a, rng);
  if (!report.ok) throw InvariantViolation("glued algebra: " + report.failure);

  // J^N = 0: any product of N radical basis elements vanishes.
  std::vector<std::size_t> radical;
  for (std::size_t b = 0; b < a->dimension(); ++b)
    if (!a->is_semisimple(b)) radical.push_back(b);
  if (!radical.empty()) {
    const std::size_t samples = 2000;
    std::vector<std::size_t> chain(truncation);
    for (std::size_t s = 0; s < samples; ++s) {
      for (auto& c : chain) c = radical[rng.below(radical.size())];
      if (multiply_chain(*a, chain))
        throw InvariantViolation("glued algebra: a product of N radical elements is nonzero");
    }
  }
  return a;
}

SubgroupComponent subgroup_component(const GluedAlgebraPtr& a, const Subgroup& k) {
  if (k.group() != a->grading_group()) throw InvalidArgument("K is not a subgroup of the grading group");
  std::vector<std::size_t> embedding;
  for (std::size_t b = 0; b < a->dimension(); ++b)
    if (k.contains(a->degree(b))) embedding.push_back(b);
  SubgroupComponent out;
  for (std::size_t i = 0; i < embedding.size(); ++i)
    (a->is_semisimple(embedding[i]) ? out.semisimple : out.radical).push_back(i);
  out.algebra = std::make_shared<const RestrictedAlgebra>(a, std::move(embedding));
  return out;
}

std::shared_ptr<const RegradedAlgebra> regrade_quotient(const AlgebraPtr& a, const Subgroup& n) {
  if (n.group() != a->grading_group()) throw InvalidArgument("N is not a subgroup of the grading group");
  QuotientGroup q = quotient_group(n);
  auto out = std::make_shared<const RegradedAlgebra>(a, q.group, std::move(q.projection));
  SplitMix64 rng(0xC0FFEEULL);
  StructureCheckLimits limits;
  limits.exhaustive_triples_up_to = 0;  // products are unchanged
  limits.sampled_triples = 0;
  const StructureReport report = verify_structure(*out, rng, limits);
  if (!report.ok) throw InvariantViolation("regraded algebra: " + report.failure);
  return out;
}

}  // namespace gradedexp
