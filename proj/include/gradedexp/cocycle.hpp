#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradedexp/group.hpp"

namespace gradedexp {

/// Normalized 2-cocycle c: H x H -> Z/n, read as f(a, b) = zeta_n^c(a, b).
///
/// The table is indexed by positions inside H.elements(). Construction does
/// not check the cocycle identity; call verify_cocycle for that.
class TwoCocycle {
 public:
  TwoCocycle(Subgroup h, int modulus, std::vector<int> table);

  static TwoCocycle trivial(Subgroup h, int modulus = 2);
  // c(a, b) = lambda(a) + lambda(b) - lambda(ab); lambda indexed by position.
  static TwoCocycle coboundary(Subgroup h, int modulus, const std::vector<int>& lambda);

  const Subgroup& subgroup() const { return h_; }
  int modulus() const { return modulus_; }
  // Exponent for group elements a, b of H.
  int value(Element a, Element b) const {
    return table_[h_.position(a) * h_.size() + h_.position(b)];
  }
  int value_at(std::size_t pa, std::size_t pb) const { return table_[pa * h_.size() + pb]; }
  const std::vector<int>& table() const { return table_; }
  bool is_trivial() const;

 private:
  Subgroup h_;
  int modulus_;
  std::vector<int> table_;
};

struct CocycleCheck {
  bool ok = true;
  // Violating triple (a, b, c) for the cocycle identity, or (a, b, e) for a
  // normalization failure.
  std::optional<std::array<Element, 3>> witness;
  std::string reason;
};

CocycleCheck verify_cocycle(const TwoCocycle& f);

// u_a u_b = zeta^exponent u_{ab}; returns (exponent, ab).
std::pair<int, Element> twisted_product(const TwoCocycle& f, Element a, Element b);

// Cocycle on x^-1 H x with c'(x^-1 a x, x^-1 b x) = c(a, b).
TwoCocycle conjugate_cocycle(const TwoCocycle& f, Element x);

// Sub-table on a subgroup of H.
TwoCocycle restrict_cocycle(const TwoCocycle& f, const Subgroup& sub);

// The standard non-trivial class on a Klein four-group H (n = 2):
// with H = <x> x <y>, c(x^a y^b, x^c y^d) = b*c mod 2.
// Throws unless H is isomorphic to Z2 x Z2.
TwoCocycle klein_cocycle(const Subgroup& h);

bool is_klein_four(const Subgroup& h);

}  // namespace gradedexp
