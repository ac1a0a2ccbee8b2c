#include "gradedexp/graded_simple.hpp"

#include "gradedexp/error.hpp"

namespace gradedexp {

GradedSimple::GradedSimple(TwoCocycle f, std::vector<Element> tuple)
    : f_(std::move(f)), tuple_(std::move(tuple)), h_size_(f_.subgroup().size()), r_(tuple_.size()) {
  if (r_ == 0) throw InvalidArgument("graded-simple tuple must be non-empty");
  const CocycleCheck check = verify_cocycle(f_);
  if (!check.ok) throw InvalidArgument("invalid cocycle: " + check.reason);
  const Group& g = group();
  for (Element x : tuple_)
    if (!g.contains(x)) throw InvalidArgument("tuple entry " + std::to_string(x) + " is not a group element");
  degrees_.resize(dimension());
  for (std::size_t hp = 0; hp < h_size_; ++hp)
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < r_; ++j)
        degrees_[index(hp, i, j)] =
            g.mul(g.mul(g.inv(tuple_[i]), subgroup().elements()[hp]), tuple_[j]);
}

std::optional<BasisProduct> GradedSimple::multiply_basis(std::size_t x, std::size_t y) const {
  const SimpleBasisElement a = decode(x), b = decode(y);
  if (a.col != b.row) return std::nullopt;
  const Element ha = subgroup().elements()[a.h_position];
  const Element hb = subgroup().elements()[b.h_position];
  const int phase = f_.value_at(a.h_position, b.h_position);
  return BasisProduct{index_of(group().mul(ha, hb), a.row, b.col), phase};
}

std::string GradedSimple::basis_label(std::size_t b) const {
  const SimpleBasisElement e = decode(b);
  return "u_" + group().label(subgroup().elements()[e.h_position]) + "*e_" +
         std::to_string(e.row + 1) + "," + std::to_string(e.col + 1);
}

GradedSimplePtr build_bsz_simple(TwoCocycle f, std::vector<Element> tuple) {
  return std::make_shared<const GradedSimple>(std::move(f), std::move(tuple));
}

}  // namespace gradedexp
