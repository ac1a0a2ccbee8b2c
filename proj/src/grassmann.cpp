#include "gradedexp/grassmann.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gradedexp/error.hpp"
#include "gradedexp/glued.hpp"

namespace gradedexp {

namespace {

int mod(long long p, int m) {
  const long long r = p % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

std::string mask_label(std::uint32_t s) {
  if (s == 0) return "1";
  std::string out;
  for (unsigned i = 0; s >> i; ++i)
    if ((s >> i) & 1u) out += (out.empty() ? "e" : "*e") + std::to_string(i + 1);
  return out;
}

}  // namespace

int merge_sign_parity(std::uint32_t x, std::uint32_t y) {
  int parity = 0;
  for (unsigned j = 0; y >> j; ++j)
    if ((y >> j) & 1u) parity ^= std::popcount(x >> (j + 1)) & 1;
  return parity;
}

GrassmannAlgebra::GrassmannAlgebra(std::size_t generators) : m_(generators), z2_(cyclic_group(2)) {
  if (m_ < 1 || m_ > kMaxGrassmannGenerators)
    throw InvalidArgument("Grassmann generator count must be in [1, 12]");
}

std::optional<BasisProduct> GrassmannAlgebra::multiply_basis(std::size_t x, std::size_t y) const {
  if (x & y) return std::nullopt;
  return BasisProduct{x | y, merge_sign_parity(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y))};
}

std::string GrassmannAlgebra::basis_label(std::size_t b) const { return mask_label(static_cast<std::uint32_t>(b)); }

std::shared_ptr<const GrassmannAlgebra> build_grassmann(std::size_t m) {
  auto e = std::make_shared<const GrassmannAlgebra>(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t ei = std::size_t{1} << i;
    if (e->multiply_basis(ei, ei)) throw InvariantViolation("generator does not square to zero");
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::size_t ej = std::size_t{1} << j;
      const auto ij = e->multiply_basis(ei, ej), ji = e->multiply_basis(ej, ei);
      if (!ij || !ji || ij->index != ji->index || ij->phase == ji->phase)
        throw InvariantViolation("generators do not anticommute");
    }
  }
  return e;
}

GroupPtr split_z2_factor(const GroupPtr& group) {
  const std::string& name = group->name();
  if (name.rfind("Z2x", 0) != 0 || name.size() == 3)
    throw InvalidArgument("grading group \"" + name + "\" has no distinguished Z2 factor");
  GroupPtr tail = catalog_group(name.substr(3));
  const GroupPtr expected = direct_product(cyclic_group(2), tail);
  if (expected->order() != group->order() ||
      !std::equal(expected->table().begin(), expected->table().end(), group->table().begin()))
    throw InvalidArgument("grading group \"" + name + "\" is not laid out as Z2 x " + tail->name());
  return tail;
}

EnvelopeAlgebra::EnvelopeAlgebra(AlgebraPtr source, std::size_t generators, std::size_t basis_cap)
    : source_(std::move(source)), tail_(split_z2_factor(source_->grading_group())), m_(generators) {
  if (m_ < 1 || m_ > kMaxGrassmannGenerators)
    throw InvalidArgument("Grassmann generator count must be in [1, 12]");
  const std::size_t masks = std::size_t{1} << m_;
  const std::size_t dim = source_->dimension();
  if (dim * (masks / 2) > basis_cap)
    throw CapExceeded("envelope basis " + std::to_string(dim * (masks / 2)) + " exceeds cap " +
                      std::to_string(basis_cap));
  modulus_ = std::lcm(source_->modulus(), 2);
  lookup_.assign(dim * masks, -1);
  const std::size_t tail_order = tail_->order();
  for (std::size_t a = 0; a < dim; ++a) {
    const unsigned parity = source_->degree(a) / tail_order;
    for (std::uint32_t s = 0; s < masks; ++s)
      if ((std::popcount(s) & 1u) == parity) {
        lookup_[a * masks + s] = static_cast<std::int64_t>(pairs_.size());
        pairs_.emplace_back(a, s);
      }
  }
}

Element EnvelopeAlgebra::degree(std::size_t b) const {
  return static_cast<Element>(source_->degree(pairs_[b].first) % tail_->order());
}

std::optional<std::size_t> EnvelopeAlgebra::index_of(std::size_t source_index, std::uint32_t mask) const {
  const std::size_t masks = std::size_t{1} << m_;
  if (source_index >= source_->dimension() || mask >= masks) return std::nullopt;
  const std::int64_t i = lookup_[source_index * masks + mask];
  if (i < 0) return std::nullopt;
  return static_cast<std::size_t>(i);
}

std::optional<BasisProduct> EnvelopeAlgebra::multiply_basis(std::size_t x, std::size_t y) const {
  const auto [a, s] = pairs_[x];
  const auto [b, t] = pairs_[y];
  if (s & t) return std::nullopt;
  const auto ab = source_->multiply_basis(a, b);
  if (!ab) return std::nullopt;
  const auto idx = index_of(ab->index, s | t);
  // a grading-multiplicative source always lands on a valid pair
  if (!idx) throw InvariantViolation("envelope product left the envelope");
  const long long phase = static_cast<long long>(ab->phase) * (modulus_ / source_->modulus()) +
                          static_cast<long long>(merge_sign_parity(s, t)) * (modulus_ / 2);
  return BasisProduct{*idx, mod(phase, modulus_)};
}

std::string EnvelopeAlgebra::basis_label(std::size_t b) const {
  return source_->basis_label(pairs_[b].first) + "(x)" + mask_label(pairs_[b].second);
}

std::shared_ptr<const EnvelopeAlgebra> envelope(const AlgebraPtr& a, std::size_t m) {
  return std::make_shared<const EnvelopeAlgebra>(a, m, default_basis_cap());
}

EnvelopeComponentReport check_envelope_e_component(const AlgebraPtr& a, std::size_t m) {
  EnvelopeComponentReport rep;
  auto fail = [&rep](std::string why) {
    rep.ok = false;
    if (rep.failure.empty()) rep.failure = std::move(why);
  };
  const GroupPtr tail = split_z2_factor(a->grading_group());
  const std::size_t tail_order = tail->order();

  // left: restrict first, then take the envelope
  std::vector<std::size_t> e_part;
  for (std::size_t x = 0; x < a->dimension(); ++x)
    if (a->degree(x) % tail_order == kIdentity) e_part.push_back(x);
  const auto sub = std::make_shared<const RestrictedAlgebra>(a, e_part);
  const auto left = envelope(sub, m);

  // right: the envelope first, then its identity component
  const auto full = envelope(a, m);
  const auto right = homogeneous_component(*full, kIdentity);

  rep.left_dimension = left->dimension();
  rep.right_dimension = right.size();

  auto left_pair = [&](std::size_t i) {
    const auto [local, s] = left->pair(i);
    return std::pair{sub->embedding()[local], s};
  };
  std::set<std::pair<std::size_t, std::uint32_t>> lhs, rhs;
  for (std::size_t i = 0; i < left->dimension(); ++i) {
    lhs.insert(left_pair(i));
    if (left->degree(i) != kIdentity) fail("restricted envelope has a non-identity degree");
  }
  for (std::size_t j : right) rhs.insert(full->pair(j));
  if (lhs != rhs) {
    fail("basis pairs differ");
    return rep;
  }

  // same pair -> same index on the right
  std::vector<std::size_t> to_right(left->dimension());
  for (std::size_t i = 0; i < left->dimension(); ++i) {
    const auto [src, s] = left_pair(i);
    to_right[i] = *full->index_of(src, s);
  }
  if (full->modulus() % left->modulus() != 0) {
    fail("incompatible scalar fields");
    return rep;
  }
  const int scale = full->modulus() / left->modulus();
  for (std::size_t x = 0; x < left->dimension(); ++x)
    for (std::size_t y = 0; y < left->dimension(); ++y) {
      ++rep.products_checked;
      const auto l = left->multiply_basis(x, y);
      const auto r = full->multiply_basis(to_right[x], to_right[y]);
      if (l.has_value() != r.has_value()) {
        fail("product " + left->basis_label(x) + " * " + left->basis_label(y) + " vanishes on one side only");
        continue;
      }
      if (!l) continue;
      if (to_right[l->index] != r->index || mod(static_cast<long long>(l->phase) * scale, full->modulus()) != r->phase)
        fail("product " + left->basis_label(x) + " * " + left->basis_label(y) + " differs");
    }
  return rep;
}

}  // namespace gradedexp
