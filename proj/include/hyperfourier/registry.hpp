#pragma once

// Hypergroup sources: `<kind>:<name>[:<arg>]` with kind in
// {group, conj, doublecoset, fusion, order2, file}. A bare name is a builtin group,
// a bare path to an existing file is read as a file source.

#include <string>
#include <string_view>
#include <vector>

#include "hyperfourier/core.hpp"
#include "hyperfourier/groups.hpp"

namespace hf {

struct Source {
  std::string id;  // canonical spelling, e.g. "doublecoset:S4:(12)"
  Hypergroup hypergroup;
};

// Throws UsageError for unknown kinds, names or malformed arguments.
Source resolve_source(std::string_view spec);

// Parameter of order2: a decimal, a fraction "p/q", or "phi^-2" / "golden".
double parse_order2_parameter(std::string_view text);

// Specs of the default sweep: groups, class hypergroups, double cosets, fusion rules
// and the order-two family.
std::vector<std::string> builtin_sources();

struct GroupPair {
  std::string group;
  Subset subgroup;
};

// Every subgroup of every builtin group of order at most `max_order`.
std::vector<GroupPair> builtin_group_pairs(std::size_t max_order = 24);

}  // namespace hf
