#pragma once

// Constructors for validated hypergroups: groups, conjugacy classes, double cosets,
// normalized fusion rings and the one-parameter order-2 family.
//
// Every builder returns a hypergroup that has passed validate() and carries its Haar
// measure as computed by haar_measure().

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hyperfourier/core.hpp"
#include "hyperfourier/groups.hpp"

namespace hf {

struct FusionData {
  std::size_t rank = 0;
  std::vector<std::vector<std::vector<long>>> fusion;  // N[i][j][k]
  std::vector<double> dims;                           // d[0] = 1
  std::vector<std::size_t> dual;
  std::vector<std::string> labels;                    // optional

  long N(std::size_t i, std::size_t j, std::size_t k) const { return fusion[i][j][k]; }
};

// Throws PreconditionError describing the first violated fusion-ring invariant.
void check_fusion_data(const FusionData& fd);

Hypergroup group_hypergroup(const FiniteGroup& g);
Hypergroup conjugacy_hypergroup(const FiniteGroup& g);
// Elements are the double cosets HxH, ordered by smallest member; H itself comes first.
Hypergroup double_coset_hypergroup(const FiniteGroup& g, const Subset& h);
Hypergroup fusion_hypergroup(const FusionData& fd);
Hypergroup parametric_order2(double t);

// Double cosets of h in g, each sorted, ordered by smallest member.
std::vector<Subset> double_cosets(const FiniteGroup& g, const Subset& h);

FusionData fibonacci_fusion();
FusionData ising_fusion();
// Group ring of Z_n viewed as a pointed fusion ring.
FusionData cyclic_fusion(std::size_t n);
// "fib", "ising", "z2", "z3", ... Throws UsageError.
FusionData builtin_fusion(std::string_view name);

inline const double kGoldenRatio = 1.6180339887498948482;

}  // namespace hf
