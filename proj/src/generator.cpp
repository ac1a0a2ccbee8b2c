#include "gradedexp/generator.hpp"

#include <algorithm>

#include "gradedexp/cocycle.hpp"
#include "gradedexp/error.hpp"
#include "gradedexp/rng.hpp"

namespace gradedexp {

namespace {

constexpr int kMaxDraws = 64;

SimpleRecord draw_simple(const GroupPtr& g, SplitMix64& rng, const GeneratorProfile& p) {
  SimpleRecord s;
  const std::size_t gens = rng.below(3);
  std::vector<Element> generators;
  for (std::size_t i = 0; i < gens; ++i) generators.push_back(static_cast<Element>(rng.below(g->order())));
  const Subgroup h = subgroup_closure(g, generators);
  for (Element x : h.elements()) s.h.push_back(x);

  if (is_klein_four(h) && rng.coin()) {
    const TwoCocycle k = klein_cocycle(h);
    s.cocycle = {k.modulus(), "table", {k.table().begin(), k.table().end()}};
  } else if (h.size() > 1 && rng.coin()) {
    s.cocycle = {4, "coboundary", std::vector<long long>(h.size(), 0)};
    for (std::size_t i = 1; i < h.size(); ++i) s.cocycle.data[i] = static_cast<long long>(rng.below(4));
  } else {
    s.cocycle = {2, "trivial", {}};
  }

  const std::size_t r = 1 + rng.below(p.max_matrix_size);
  for (std::size_t i = 0; i < r; ++i) s.tuple.push_back(static_cast<long long>(rng.below(g->order())));
  return s;
}

bool fits(const InstanceSpec& spec, std::size_t cap) {
  try {
    materialize(spec, cap);
    return true;
  } catch (const CapExceeded&) {
    return false;
  }
}

}  // namespace

std::vector<std::string> catalog_names_up_to(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= n; ++k) names.push_back("Z" + std::to_string(k));
  for (const char* extra : {"V4", "S3", "D4", "Z2xZ4", "Z2xZ2xZ2"})
    if (catalog_group(extra)->order() <= n) names.push_back(extra);
  return names;
}

InstanceSpec generate_instance(std::uint64_t seed, const GeneratorProfile& profile) {
  const std::vector<std::string> names =
      profile.groups.empty() ? catalog_names_up_to(profile.max_group_order) : profile.groups;
  if (names.empty()) throw InvalidArgument("generator profile has no groups");
  if (profile.max_components == 0 || profile.max_matrix_size == 0 || profile.max_truncation == 0)
    throw InvalidArgument("generator profile bounds must be positive");

  SplitMix64 rng(seed);
  InstanceSpec spec;
  spec.seed = seed;
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    spec.group = GroupRecord{};
    spec.group.catalog = names[rng.below(names.size())];
    const GroupPtr g = materialize_group(spec.group);
    if (g->order() > profile.max_group_order)
      throw InvalidArgument("catalog group " + *spec.group.catalog + " exceeds the profile order bound");

    const std::size_t q = 1 + rng.below(profile.max_components);
    spec.simples.clear();
    for (std::size_t t = 0; t < q; ++t) spec.simples.push_back(draw_simple(g, rng, profile));

    spec.edges.clear();
    if (profile.edges) {
      const std::size_t count = rng.below(q + 2);
      for (std::size_t e = 0; e < count; ++e)
        spec.edges.push_back({static_cast<long long>(rng.below(q)), static_cast<long long>(rng.below(q)),
                              static_cast<long long>(rng.below(g->order()))});
    }
    spec.truncation = 1 + rng.below(profile.max_truncation);

    const auto subs = all_subgroups(g);
    const Subgroup& k = subs[rng.below(subs.size())];
    spec.subgroups = {SubgroupRecord{"K", {k.elements().begin(), k.elements().end()}}};

    if (fits(spec, profile.dimension_cap)) return spec;
  }
  // shrink the last draw until it fits
  spec.edges.clear();
  spec.truncation = 1;
  if (fits(spec, profile.dimension_cap)) return spec;
  spec.simples.resize(1);
  spec.simples[0] = SimpleRecord{{0}, {2, "trivial", {}}, {0}};
  return spec;
}

}  // namespace gradedexp
