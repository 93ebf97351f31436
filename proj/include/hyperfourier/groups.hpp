#pragma once

// Finite groups given by Cayley tables, with a small registry of named groups
// (Z_n, D4, S3, S4, A4, Q8) and brute-force subgroup utilities.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hf {

using Subset = std::vector<std::size_t>;  // sorted element indices

class FiniteGroup {
 public:
  // Verifies the Latin-square property, associativity, and finds identity and inverses.
  // The table is relabelled so that the identity is element 0. Throws StructuralError.
  FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels = {});

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return 0; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t a) const { return labels_[a]; }

  // Degree of the permutation action when the group was built from permutations, else 0.
  std::size_t permutation_degree() const { return perm_degree_; }
  const std::vector<std::vector<std::size_t>>& permutations() const { return perms_; }

  static FiniteGroup from_permutations(std::vector<std::vector<std::size_t>> perms);

  // Smallest subgroup containing the given elements.
  Subset generate(const Subset& generators) const;
  bool is_subgroup(const Subset& s) const;

  // Element index for a label or a cycle-notation string like "(12)(34)" or "(1 2 3)".
  std::size_t parse_element(std::string_view text) const;
  // Comma/space separated generator list, e.g. "(12),(123)". Empty text gives {e}.
  Subset parse_subgroup(std::string_view text) const;

  std::vector<Subset> conjugacy_classes() const;

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> labels_;
  std::size_t perm_degree_ = 0;
  std::vector<std::vector<std::size_t>> perms_;
};

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup symmetric_group(std::size_t degree);
FiniteGroup alternating_group(std::size_t degree);
FiniteGroup dihedral_group(std::size_t n);  // symmetries of the n-gon, order 2n
FiniteGroup quaternion_group();

// "Z1".."Z120", "S3", "S4", "A4", "D4", "Q8". Throws UsageError for unknown names.
FiniteGroup builtin_group(std::string_view name);
std::vector<std::string> builtin_group_names();

// All subgroups, by saturation of cyclic subgroups under joins. Sorted by (size, elements).
std::vector<Subset> all_subgroups(const FiniteGroup& g);

// Subgroups P with h <= P <= g, by repeated closure of P u {x}. Sorted by (size, elements).
std::vector<Subset> intermediate_subgroups(const FiniteGroup& g, const Subset& h);

std::string cycle_notation(const std::vector<std::size_t>& perm);

}  // namespace hf
