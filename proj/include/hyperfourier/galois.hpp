#pragma once

// Closed subhypergroups, their lattice, and the correspondence between intermediate
// subgroups H <= P <= G and closed subhypergroups of the double coset hypergroup H\G/H.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hyperfourier/core.hpp"
#include "hyperfourier/groups.hpp"

namespace hf {

inline constexpr std::size_t kMaxLatticeSize = 24;
inline constexpr double kSupportThreshold = 1e-10;
inline constexpr double kExactSupportThreshold = 1e-12;

struct Lattice {
  std::vector<std::string> labels;            // element labels of the ambient hypergroup
  std::vector<Subset> subhypergroups;         // sorted by (size, elements); bottom first, top last
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // Hasse covers (smaller, larger)

  bool contains(const Subset& s) const;
  std::size_t index_of(const Subset& s) const;
};

// Smallest subset containing `seed` closed under the identity, involution and convolution
// supports (coefficients above `tol`).
Subset subhypergroup_closure(const Hypergroup& h, Subset seed, double tol = kSupportThreshold);

bool is_subhypergroup(const Hypergroup& h, const Subset& s, double tol = kSupportThreshold);

// Structure constants restricted to `s`, validated, with its Haar measure attached.
Hypergroup restrict_hypergroup(const Hypergroup& h, const Subset& s);

// Throws SizeGuardError when |K| > kMaxLatticeSize.
Lattice enumerate_subhypergroups(const Hypergroup& h, double tol = kSupportThreshold);

struct CorrespondenceReport {
  std::vector<std::string> group_labels;
  std::vector<Subset> intermediates;   // subgroups P with H <= P <= G, as group elements
  Lattice lattice;                     // closed subhypergroups of H\G/H
  std::vector<std::size_t> image;      // intermediates[i] maps to lattice.subhypergroups[image[i]]
  bool well_defined = false;
  bool bijective = false;
  bool order_preserving = false;
  std::string failure;

  bool passed() const { return well_defined && bijective && order_preserving; }
};

CorrespondenceReport galois_check(const FiniteGroup& g, const Subset& h);

// Hasse diagram of the lattice in DOT format.
std::string lattice_dot(const Lattice& l);

}  // namespace hf
