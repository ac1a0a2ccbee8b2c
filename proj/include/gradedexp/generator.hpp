#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gradedexp/instance.hpp"

namespace gradedexp {

struct GeneratorProfile {
  std::size_t max_group_order = 8;
  std::size_t max_components = 3;  // q
  std::size_t max_matrix_size = 3; // r
  std::size_t max_truncation = 3;  // N
  bool edges = true;
  // Upper bound on the glued dimension; draws above it are resampled.
  std::size_t dimension_cap = 2000;
  // Catalog names to draw from; empty means every catalog group of order at
  // most max_group_order.
  std::vector<std::string> groups;
};

// Catalog groups of order <= n, in a fixed order.
std::vector<std::string> catalog_names_up_to(std::size_t n);

// Deterministic in (seed, profile). Every draw uses SplitMix64(seed) in a
// fixed order (see docs/generator.md). After 64 rejected draws the last one
// is shrunk to N = 1 without edges, which always fits.
InstanceSpec generate_instance(std::uint64_t seed, const GeneratorProfile& profile = {});

}  // namespace gradedexp
