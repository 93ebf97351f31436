#include "hyperfourier/galois.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "hyperfourier/builders.hpp"
#include "hyperfourier/errors.hpp"

namespace hf {

namespace {

bool size_then_lex(const Subset& a, const Subset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool is_subset(const Subset& a, const Subset& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Subset set_union(const Subset& a, const Subset& b) {
  Subset out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

bool Lattice::contains(const Subset& s) const {
  return std::find(subhypergroups.begin(), subhypergroups.end(), s) != subhypergroups.end();
}

std::size_t Lattice::index_of(const Subset& s) const {
  const auto it = std::find(subhypergroups.begin(), subhypergroups.end(), s);
  if (it == subhypergroups.end()) throw PreconditionError("subset is not in the lattice");
  return static_cast<std::size_t>(it - subhypergroups.begin());
}

Subset subhypergroup_closure(const Hypergroup& h, Subset seed, double tol) {
  const std::size_t n = h.size();
  std::vector<bool> in(n, false);
  std::vector<std::size_t> members;
  auto insert = [&](std::size_t x) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
    }
  };
  insert(h.identity());
  for (std::size_t x : seed) {
    insert(x);
    insert(h.involution(x));
  }
  // Every pair is examined once; pairs involving newly added members are picked up as the list grows.
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      for (auto [x, y] : {std::pair{members[a], members[b]}, std::pair{members[b], members[a]}}) {
        const auto row = h.structure().row(x, y);
        for (std::size_t k = 0; k < n; ++k)
          if (row[k] > tol) {
            insert(k);
            insert(h.involution(k));
          }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subhypergroup(const Hypergroup& h, const Subset& s, double tol) {
  if (!std::binary_search(s.begin(), s.end(), h.identity())) return false;
  for (std::size_t x : s) {
    if (!std::binary_search(s.begin(), s.end(), h.involution(x))) return false;
    for (std::size_t y : s) {
      const auto row = h.structure().row(x, y);
      for (std::size_t k = 0; k < h.size(); ++k)
        if (row[k] > tol && !std::binary_search(s.begin(), s.end(), k)) return false;
    }
  }
  return true;
}

Hypergroup restrict_hypergroup(const Hypergroup& h, const Subset& s) {
  const std::size_t m = s.size();
  std::vector<std::size_t> pos(h.size(), m);
  for (std::size_t i = 0; i < m; ++i) pos[s[i]] = i;
  if (pos[h.identity()] == m) throw PreconditionError("subset does not contain the identity");
  StructureTensor c(m);
  std::vector<std::string> labels;
  std::vector<std::size_t> inv(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(h.labels()[s[i]]);
    inv[i] = pos[h.involution(s[i])];
    if (inv[i] == m) throw PreconditionError("subset is not closed under the involution");
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) c(i, j, k) = h.coeff(s[i], s[j], s[k]);
  }
  return finalize(Hypergroup(std::move(labels), pos[h.identity()], std::move(inv), std::move(c)));
}

Lattice enumerate_subhypergroups(const Hypergroup& h, double tol) {
  const std::size_t n = h.size();
  if (n > kMaxLatticeSize) {
    std::ostringstream os;
    os << "subhypergroup enumeration is limited to " << kMaxLatticeSize << " elements (got " << n << ")";
    throw SizeGuardError(os.str());
  }

  std::set<Subset> found;
  for (std::size_t x = 0; x < n; ++x) {
    found.insert(subhypergroup_closure(h, {x}, tol));
    for (std::size_t y = x + 1; y < n; ++y) found.insert(subhypergroup_closure(h, {x, y}, tol));
  }
  // Saturate under joins: every closed subset is the join of the closures of its points.
  bool grown = true;
  while (grown) {
    grown = false;
    const std::vector<Subset> current(found.begin(), found.end());
    for (std::size_t a = 0; a < current.size(); ++a)
      for (std::size_t b = a + 1; b < current.size(); ++b)
        if (found.insert(subhypergroup_closure(h, set_union(current[a], current[b]), tol)).second) grown = true;
  }

  Lattice l;
  l.labels = h.labels();
  l.subhypergroups.assign(found.begin(), found.end());
  std::sort(l.subhypergroups.begin(), l.subhypergroups.end(), size_then_lex);

  const auto& mu = h.haar();
  for (const auto& s : l.subhypergroups) {
    if (!is_subhypergroup(h, s, tol)) throw Error("closure produced a subset that is not a subhypergroup");
    const Hypergroup sub = restrict_hypergroup(h, s);
    double mass = 0.0;
    for (std::size_t x : s) mass += mu[x];
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (std::abs(sub.haar()[i] - mu[s[i]] / mass) > kHaarResidual)
        throw Error("restricted Haar measure differs from the conditional Haar measure");
    }
  }
  // Intersections of subhypergroups are again subhypergroups and must already be present.
  for (const auto& a : l.subhypergroups)
    for (const auto& b : l.subhypergroups) {
      Subset meet;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
      if (!l.contains(meet)) throw Error("subhypergroup lattice is not closed under intersection");
    }

  const std::size_t m = l.subhypergroups.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j || !is_subset(l.subhypergroups[i], l.subhypergroups[j]) || l.subhypergroups[i].size() == l.subhypergroups[j].size()) continue;
      bool covered = true;
      for (std::size_t k = 0; k < m && covered; ++k) {
        if (k == i || k == j) continue;
        const auto& mid = l.subhypergroups[k];
        if (mid.size() > l.subhypergroups[i].size() && mid.size() < l.subhypergroups[j].size() &&
            is_subset(l.subhypergroups[i], mid) && is_subset(mid, l.subhypergroups[j]))
          covered = false;
      }
      if (covered) l.edges.emplace_back(i, j);
    }
  std::sort(l.edges.begin(), l.edges.end());
  return l;
}

CorrespondenceReport galois_check(const FiniteGroup& g, const Subset& h) {
  if (!g.is_subgroup(h)) throw PreconditionError("galois_check requires a subgroup");
  CorrespondenceReport rep;
  rep.group_labels = g.labels();
  rep.intermediates = intermediate_subgroups(g, h);

  const auto cosets = double_cosets(g, h);
  const Hypergroup k = double_coset_hypergroup(g, h);
  rep.lattice = enumerate_subhypergroups(k, kExactSupportThreshold);

  std::vector<std::size_t> coset_of(g.order());
  for (std::size_t c = 0; c < cosets.size(); ++c)
    for (std::size_t x : cosets[c]) coset_of[x] = c;

  rep.well_defined = true;
  for (const auto& p : rep.intermediates) {
    // P is a union of double cosets; its image is the set of those cosets.
    Subset image;
    for (std::size_t x : p) image.push_back(coset_of[x]);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    std::size_t covered = 0;
    for (std::size_t c : image) covered += cosets[c].size();
    if (covered != p.size()) {
      rep.well_defined = false;
      rep.failure = "an intermediate subgroup is not a union of double cosets";
      break;
    }
    if (!rep.lattice.contains(image)) {
      rep.well_defined = false;
      rep.failure = "image of an intermediate subgroup is not a closed subhypergroup";
      break;
    }
    rep.image.push_back(rep.lattice.index_of(image));
  }
  if (!rep.well_defined) return rep;

  std::vector<std::size_t> sorted = rep.image;
  std::sort(sorted.begin(), sorted.end());
  const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  rep.bijective = injective && sorted.size() == rep.lattice.subhypergroups.size();
  if (!rep.bijective) rep.failure = "map from intermediate subgroups to subhypergroups is not bijective";

  rep.order_preserving = true;
  for (std::size_t a = 0; a < rep.intermediates.size(); ++a)
    for (std::size_t b = 0; b < rep.intermediates.size(); ++b) {
      const bool groups = is_subset(rep.intermediates[a], rep.intermediates[b]);
      const bool hyper = is_subset(rep.lattice.subhypergroups[rep.image[a]], rep.lattice.subhypergroups[rep.image[b]]);
      if (groups != hyper) {
        rep.order_preserving = false;
        if (rep.failure.empty()) rep.failure = "inclusion is not preserved in both directions";
      }
    }
  return rep;
}

std::string lattice_dot(const Lattice& l) {
  std::ostringstream os;
  os << "digraph subhypergroups {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < l.subhypergroups.size(); ++i) {
    os << "  n" << i << " [label=\"{";
    bool first = true;
    for (std::size_t x : l.subhypergroups[i]) {
      if (!first) os << ", ";
      first = false;
      for (char ch : l.labels[x]) {
        if (ch == '"' || ch == '\\') os << '\\';
        os << ch;
      }
    }
    os << "}\"];\n";
  }
  for (const auto& [a, b] : l.edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace hf
