#include "gradedexp/cocycle.hpp"

#include <algorithm>

#include "gradedexp/error.hpp"

namespace gradedexp {

namespace {

int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

TwoCocycle::TwoCocycle(Subgroup h, int modulus, std::vector<int> table)
    : h_(std::move(h)), modulus_(modulus), table_(std::move(table)) {
  if (modulus_ <= 0) throw InvalidArgument("cocycle modulus must be positive");
  if (table_.size() != h_.size() * h_.size())
    throw InvalidArgument("cocycle table must have |H|^2 = " +
                          std::to_string(h_.size() * h_.size()) + " entries, got " +
                          std::to_string(table_.size()));
  for (int& v : table_) v = mod(v, modulus_);
}

TwoCocycle TwoCocycle::trivial(Subgroup h, int modulus) {
  const std::size_t n = h.size();
  return TwoCocycle(std::move(h), modulus, std::vector<int>(n * n, 0));
}

TwoCocycle TwoCocycle::coboundary(Subgroup h, int modulus, const std::vector<int>& lambda) {
  const std::size_t n = h.size();
  if (lambda.size() != n) throw InvalidArgument("coboundary data must have |H| entries");
  if (mod(lambda[0], modulus) != 0)
    throw InvalidArgument("coboundary data must vanish on the identity");
  const Group& g = h.parent();
  std::vector<int> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element ab = g.mul(h.elements()[i], h.elements()[j]);
      t[i * n + j] = mod(static_cast<long long>(lambda[i]) + lambda[j] - lambda[h.position(ab)], modulus);
    }
  return TwoCocycle(std::move(h), modulus, std::move(t));
}

bool TwoCocycle::is_trivial() const {
  return std::all_of(table_.begin(), table_.end(), [](int v) { return v == 0; });
}

CocycleCheck verify_cocycle(const TwoCocycle& f) {
  const Subgroup& h = f.subgroup();
  const Group& g = h.parent();
  const int n = f.modulus();
  CocycleCheck check;
  for (Element a : h.elements()) {
    if (f.value(kIdentity, a) != 0 || f.value(a, kIdentity) != 0) {
      check.ok = false;
      check.witness = std::array<Element, 3>{a, kIdentity, kIdentity};
      check.reason = "not normalized at " + g.label(a);
      return check;
    }
  }
  for (Element a : h.elements())
    for (Element b : h.elements())
      for (Element c : h.elements()) {
        const int lhs = mod(f.value(a, b) + f.value(g.mul(a, b), c), n);
        const int rhs = mod(f.value(b, c) + f.value(a, g.mul(b, c)), n);
        if (lhs != rhs) {
          check.ok = false;
          check.witness = std::array<Element, 3>{a, b, c};
          check.reason = "cocycle identity fails at (" + g.label(a) + ", " + g.label(b) +
                         ", " + g.label(c) + ")";
          return check;
        }
      }
  return check;
}

std::pair<int, Element> twisted_product(const TwoCocycle& f, Element a, Element b) {
  const Subgroup& h = f.subgroup();
  if (!h.contains(a) || !h.contains(b))
    throw InvalidArgument("twisted product of elements outside H");
  return {f.value(a, b), h.parent().mul(a, b)};
}

TwoCocycle conjugate_cocycle(const TwoCocycle& f, Element x) {
  const Subgroup& h = f.subgroup();
  const Group& g = h.parent();
  Subgroup target = conjugate_subgroup(x, h);
  const std::size_t n = h.size();
  std::vector<int> t(n * n);
  for (Element a : h.elements())
    for (Element b : h.elements()) {
      const std::size_t i = target.position(g.conj(x, a));
      const std::size_t j = target.position(g.conj(x, b));
      t[i * n + j] = f.value(a, b);
    }
  return TwoCocycle(std::move(target), f.modulus(), std::move(t));
}

TwoCocycle restrict_cocycle(const TwoCocycle& f, const Subgroup& sub) {
  if (!sub.is_subset_of(f.subgroup()))
    throw InvalidArgument("restriction target is not contained in the cocycle's subgroup");
  const std::size_t n = sub.size();
  std::vector<int> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = f.value(sub.elements()[i], sub.elements()[j]);
  return TwoCocycle(sub, f.modulus(), std::move(t));
}

bool is_klein_four(const Subgroup& h) {
  if (h.size() != 4) return false;
  const Group& g = h.parent();
  return std::all_of(h.elements().begin(), h.elements().end(),
                     [&](Element a) { return g.mul(a, a) == kIdentity; });
}

TwoCocycle klein_cocycle(const Subgroup& h) {
  if (!is_klein_four(h)) throw InvalidArgument("klein_cocycle needs a Klein four-group");
  const Group& g = h.parent();
  const Element x = h.elements()[1];
  const Element y = h.elements()[2];
  // coordinates (a, b) for x^a y^b
  std::vector<std::pair<int, int>> coord(4);
  const Element xy = g.mul(x, y);
  for (std::size_t i = 0; i < 4; ++i) {
    const Element e = h.elements()[i];
    if (e == kIdentity) coord[i] = {0, 0};
    else if (e == x) coord[i] = {1, 0};
    else if (e == y) coord[i] = {0, 1};
    else if (e == xy) coord[i] = {1, 1};
  }
  std::vector<int> t(16);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) t[i * 4 + j] = (coord[i].second * coord[j].first) % 2;
  return TwoCocycle(h, 2, std::move(t));
}

}  // namespace gradedexp
