#include "gradedexp/algebra.hpp"

#include <sstream>

#include "gradedexp/error.hpp"
#include "gradedexp/linalg.hpp"

namespace gradedexp {

namespace {

int reduce_phase(long long p, int m) {
  long long r = p % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

AlgebraElement AlgebraElement::basis(const GradedAlgebra& algebra, std::size_t b) {
  if (b >= algebra.dimension()) throw InvalidArgument("basis index out of range");
  AlgebraElement e(algebra);
  e.terms_.emplace(b, CycScalar(algebra.field(), mpq_class(1)));
  return e;
}

void AlgebraElement::add_term(std::size_t index, const CycScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(index);
  if (it == terms_.end()) {
    terms_.emplace(index, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::optional<Element> AlgebraElement::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const Element d = algebra_->degree(terms_.begin()->first);
  for (const auto& [b, c] : terms_)
    if (algebra_->degree(b) != d) return std::nullopt;
  return d;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << "(" << c.to_string() << ")*";
    os << algebra_->basis_label(b);
  }
  return os.str();
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.algebra_ == b.algebra_ && a.terms_ == b.terms_;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  if (&x.algebra() != &y.algebra()) throw InvalidArgument("multiplying elements of different algebras");
  const GradedAlgebra& alg = x.algebra();
  const CyclotomicField& field = alg.field();
  AlgebraElement out(alg);
  for (const auto& [bx, cx] : x.terms())
    for (const auto& [by, cy] : y.terms()) {
      auto p = alg.multiply_basis(bx, by);
      if (!p) continue;
      out.add_term(p->index, cx * cy * CycScalar::zeta(field, p->phase));
    }
  return out;
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  if (&x.algebra() != &y.algebra()) throw InvalidArgument("adding elements of different algebras");
  AlgebraElement out = x;
  for (const auto& [b, c] : y.terms()) out.add_term(b, c);
  return out;
}

AlgebraElement scale(const CycScalar& c, const AlgebraElement& x) {
  AlgebraElement out(x.algebra());
  for (const auto& [b, v] : x.terms()) out.add_term(b, c * v);
  return out;
}

std::optional<BasisProduct> multiply_chain(const GradedAlgebra& algebra,
                                           const std::vector<std::size_t>& factors) {
  if (factors.empty()) throw InvalidArgument("empty product");
  BasisProduct acc{factors[0], 0};
  for (std::size_t i = 1; i < factors.size(); ++i) {
    auto p = algebra.multiply_basis(acc.index, factors[i]);
    if (!p) return std::nullopt;
    acc = {p->index, reduce_phase(static_cast<long long>(acc.phase) + p->phase, algebra.modulus())};
  }
  return acc;
}

TableAlgebra::TableAlgebra(GroupPtr group, int modulus, std::vector<Element> degrees,
                           std::vector<std::optional<BasisProduct>> table,
                           std::vector<std::string> labels)
    : group_(std::move(group)),
      modulus_(modulus),
      degrees_(std::move(degrees)),
      table_(std::move(table)),
      labels_(std::move(labels)) {
  const std::size_t n = degrees_.size();
  if (modulus_ <= 0) throw InvalidArgument("modulus must be positive");
  if (table_.size() != n * n) throw InvalidArgument("product table must have dim^2 entries");
  for (Element d : degrees_)
    if (!group_->contains(d)) throw InvalidArgument("degree is not a group element");
  for (auto& p : table_) {
    if (!p) continue;
    if (p->index >= n) throw InvalidArgument("product table entry out of range");
    p->phase = reduce_phase(p->phase, modulus_);
  }
  if (!labels_.empty() && labels_.size() != n) throw InvalidArgument("label count mismatch");
}

std::shared_ptr<TableAlgebra> TableAlgebra::materialize(const GradedAlgebra& source) {
  const std::size_t n = source.dimension();
  std::vector<Element> degrees(n);
  std::vector<std::string> labels(n);
  std::vector<std::optional<BasisProduct>> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    degrees[x] = source.degree(x);
    labels[x] = source.basis_label(x);
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = source.multiply_basis(x, y);
  }
  return std::make_shared<TableAlgebra>(source.grading_group(), source.modulus(),
                                        std::move(degrees), std::move(table), std::move(labels));
}

std::string TableAlgebra::basis_label(std::size_t b) const {
  return labels_.empty() ? GradedAlgebra::basis_label(b) : labels_[b];
}

RestrictedAlgebra::RestrictedAlgebra(AlgebraPtr parent, std::vector<std::size_t> embedding)
    : parent_(std::move(parent)), embedding_(std::move(embedding)) {
  local_.assign(parent_->dimension(), -1);
  for (std::size_t i = 0; i < embedding_.size(); ++i) {
    if (embedding_[i] >= parent_->dimension()) throw InvalidArgument("embedding index out of range");
    if (local_[embedding_[i]] >= 0) throw InvalidArgument("embedding repeats a basis element");
    local_[embedding_[i]] = static_cast<std::int64_t>(i);
  }
}

std::optional<BasisProduct> RestrictedAlgebra::multiply_basis(std::size_t x, std::size_t y) const {
  auto p = parent_->multiply_basis(embedding_[x], embedding_[y]);
  if (!p) return std::nullopt;
  const std::int64_t local = local_[p->index];
  if (local < 0)
    throw InvariantViolation("restricted basis is not closed under multiplication: " +
                             parent_->basis_label(embedding_[x]) + " * " +
                             parent_->basis_label(embedding_[y]));
  return BasisProduct{static_cast<std::size_t>(local), p->phase};
}

std::optional<std::size_t> RestrictedAlgebra::local_index(std::size_t parent_index) const {
  if (parent_index >= local_.size() || local_[parent_index] < 0) return std::nullopt;
  return static_cast<std::size_t>(local_[parent_index]);
}

RegradedAlgebra::RegradedAlgebra(AlgebraPtr parent, GroupPtr target, std::vector<Element> degree_map)
    : parent_(std::move(parent)), target_(std::move(target)), map_(std::move(degree_map)) {
  const Group& g = *parent_->grading_group();
  if (map_.size() != g.order()) throw InvalidArgument("degree map must cover the grading group");
  for (Element a = 0; a < g.order(); ++a) {
    if (!target_->contains(map_[a])) throw InvalidArgument("degree map leaves the target group");
    for (Element b = 0; b < g.order(); ++b)
      if (map_[g.mul(a, b)] != target_->mul(map_[a], map_[b]))
        throw InvalidArgument("degree map is not a homomorphism");
  }
}

namespace {

std::string describe(const GradedAlgebra& a, std::size_t x) { return a.basis_label(x); }

bool check_pair(const GradedAlgebra& a, std::size_t x, std::size_t y, std::string& failure) {
  auto p = a.multiply_basis(x, y);
  if (!p) return true;
  if (p->index >= a.dimension()) {
    failure = "product " + describe(a, x) + " * " + describe(a, y) + " out of range";
    return false;
  }
  const Group& g = *a.grading_group();
  if (a.degree(p->index) != g.mul(a.degree(x), a.degree(y))) {
    failure = "grading fails on " + describe(a, x) + " * " + describe(a, y);
    return false;
  }
  return true;
}

bool check_triple(const GradedAlgebra& a, std::size_t x, std::size_t y, std::size_t z,
                  std::string& failure) {
  const int m = a.modulus();
  std::optional<BasisProduct> left, right;
  if (auto xy = a.multiply_basis(x, y)) {
    if (auto p = a.multiply_basis(xy->index, z))
      left = BasisProduct{p->index, reduce_phase(static_cast<long long>(xy->phase) + p->phase, m)};
  }
  if (auto yz = a.multiply_basis(y, z)) {
    if (auto p = a.multiply_basis(x, yz->index))
      right = BasisProduct{p->index, reduce_phase(static_cast<long long>(yz->phase) + p->phase, m)};
  }
  if (left != right) {
    failure = "associativity fails on (" + describe(a, x) + ", " + describe(a, y) + ", " +
              describe(a, z) + ")";
    return false;
  }
  return true;
}

}  // namespace

StructureReport verify_structure(const GradedAlgebra& algebra, SplitMix64& rng,
                                 const StructureCheckLimits& limits) {
  StructureReport report;
  const std::size_t n = algebra.dimension();
  if (n == 0) {
    report.pairs_exhaustive = report.triples_exhaustive = true;
    return report;
  }
  for (std::size_t b = 0; b < n; ++b)
    if (!algebra.grading_group()->contains(algebra.degree(b))) {
      report.ok = false;
      report.failure = "degree of " + algebra.basis_label(b) + " is not a group element";
      return report;
    }
  if (n <= limits.exhaustive_pairs_up_to) {
    report.pairs_exhaustive = true;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        ++report.pairs_checked;
        if (!check_pair(algebra, x, y, report.failure)) {
          report.ok = false;
          return report;
        }
      }
  } else {
    for (std::size_t s = 0; s < limits.sampled_pairs; ++s) {
      ++report.pairs_checked;
      if (!check_pair(algebra, rng.below(n), rng.below(n), report.failure)) {
        report.ok = false;
        return report;
      }
    }
  }
  if (n <= limits.exhaustive_triples_up_to) {
    report.triples_exhaustive = true;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          ++report.triples_checked;
          if (!check_triple(algebra, x, y, z, report.failure)) {
            report.ok = false;
            return report;
          }
        }
  } else {
    for (std::size_t s = 0; s < limits.sampled_triples; ++s) {
      ++report.triples_checked;
      if (!check_triple(algebra, rng.below(n), rng.below(n), rng.below(n), report.failure)) {
        report.ok = false;
        return report;
      }
    }
  }
  return report;
}

std::vector<std::size_t> homogeneous_component(const GradedAlgebra& algebra, Element g) {
  if (!algebra.grading_group()->contains(g)) throw InvalidArgument("degree is not a group element");
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < algebra.dimension(); ++b)
    if (algebra.degree(b) == g) out.push_back(b);
  return out;
}

std::size_t ideal_dimension(const AlgebraElement& x) {
  const GradedAlgebra& alg = x.algebra();
  const std::size_t n = alg.dimension();
  const CyclotomicField& field = alg.field();
  EchelonBasis span(n);
  for (std::size_t a = 0; a < n && span.rank() < n; ++a) {
    const AlgebraElement ax = multiply(AlgebraElement::basis(alg, a), x);
    if (ax.is_zero()) continue;
    for (std::size_t b = 0; b < n && span.rank() < n; ++b) {
      const AlgebraElement axb = multiply(ax, AlgebraElement::basis(alg, b));
      if (axb.is_zero()) continue;
      Vector v = zero_vector(field, n);
      for (const auto& [i, c] : axb.terms()) v[i] = c;
      span.insert(std::move(v));
    }
  }
  return span.rank();
}

}  // namespace gradedexp
