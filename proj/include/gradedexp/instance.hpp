#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradedexp/glued.hpp"

namespace gradedexp {

/// Instance files: records `kind { key: value, ... }`, values are integers,
/// double-quoted strings, bracketed lists of those, or a nested `{ ... }`
/// body. `#` starts a comment. The grammar is in docs/instance-format.md.

struct GroupRecord {
  // Exactly one form is used.
  std::optional<std::string> catalog;
  std::vector<std::string> product;  // catalog names, first factor outermost
  std::size_t order = 0;             // with `table`
  std::vector<long long> table;

  friend bool operator==(const GroupRecord&, const GroupRecord&) = default;
};

struct SubgroupRecord {
  std::string name;
  std::vector<long long> elements;

  friend bool operator==(const SubgroupRecord&, const SubgroupRecord&) = default;
};

struct CocycleRecord {
  int modulus = 2;
  std::string kind = "trivial";  // trivial | coboundary | table
  std::vector<long long> data;   // lambda by position in sorted H, or |H|^2 table

  friend bool operator==(const CocycleRecord&, const CocycleRecord&) = default;
};

struct SimpleRecord {
  std::vector<long long> h;  // subgroup elements
  CocycleRecord cocycle;
  std::vector<long long> tuple;

  friend bool operator==(const SimpleRecord&, const SimpleRecord&) = default;
};

struct EdgeRecord {
  long long from = 0;
  long long to = 0;
  long long degree = 0;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

struct InstanceSpec {
  GroupRecord group;
  std::vector<SubgroupRecord> subgroups;
  std::vector<SimpleRecord> simples;
  std::vector<EdgeRecord> edges;
  std::size_t truncation = 1;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

// Syntax and record-shape errors throw ParseError (line, column). Values are
// only checked against the group in materialize().
InstanceSpec parse_instance(const std::string& text);

// Canonical form: one record per line, fixed record and key order.
std::string emit_instance(const InstanceSpec& spec);

// FNV-1a (64 bit) of the canonical emission, as 16 hex digits.
std::string instance_hash(const InstanceSpec& spec);

struct Instance {
  InstanceSpec spec;
  GroupPtr group;
  GluedAlgebraPtr algebra;
  std::map<std::string, Subgroup> subgroups;
};

// Builds everything and validates cross references. Throws InvalidArgument
// whose message starts with the record path, e.g.
// "simple[1].tuple[2]: 9 is not a group element".
Instance materialize(const InstanceSpec& spec, std::size_t basis_cap = default_basis_cap());

// Group described by a group record alone.
GroupPtr materialize_group(const GroupRecord& record);

}  // namespace gradedexp
