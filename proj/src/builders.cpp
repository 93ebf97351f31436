#include "hyperfourier/builders.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "hyperfourier/errors.hpp"

namespace hf {

namespace {

// Structure constants from a partition of G into blocks: the coefficient of block Z in
// u_X u_Y, u_X = (1/|X|) sum_{g in X} g, is #{(x,y) in X x Y : xy in Z} / (|X||Y|).
// Counts are exact integers; the single division is the only rounding step.
StructureTensor partition_structure(const FiniteGroup& g, const std::vector<Subset>& blocks) {
  const std::size_t n = blocks.size();
  std::vector<std::size_t> block_of(g.order());
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t x : blocks[b]) block_of[x] = b;

  StructureTensor c(n);
  std::vector<long long> counts(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t x : blocks[i])
        for (std::size_t y : blocks[j]) ++counts[block_of[g.mul(x, y)]];
      const auto denom = static_cast<long long>(blocks[i].size() * blocks[j].size());
      for (std::size_t k = 0; k < n; ++k)
        c(i, j, k) = static_cast<double>(counts[k]) / static_cast<double>(denom);
    }
  }
  return c;
}

std::vector<std::size_t> block_involution(const FiniteGroup& g, const std::vector<Subset>& blocks) {
  std::vector<std::size_t> block_of(g.order());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t x : blocks[b]) block_of[x] = b;
  std::vector<std::size_t> inv(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) inv[b] = block_of[g.inverse(blocks[b].front())];
  return inv;
}

std::string block_label(const FiniteGroup& g, const Subset& block) {
  return "[" + g.label(block.front()) + "]";
}

}  // namespace

Hypergroup group_hypergroup(const FiniteGroup& g) {
  const std::size_t m = g.order();
  StructureTensor c(m);
  std::vector<std::size_t> inv(m);
  for (std::size_t a = 0; a < m; ++a) {
    inv[a] = g.inverse(a);
    for (std::size_t b = 0; b < m; ++b) c(a, b, g.mul(a, b)) = 1.0;
  }
  return finalize(Hypergroup(g.labels(), g.identity(), std::move(inv), std::move(c)));
}

Hypergroup conjugacy_hypergroup(const FiniteGroup& g) {
  const auto classes = g.conjugacy_classes();
  std::vector<std::string> labels;
  for (const auto& cls : classes) labels.push_back(block_label(g, cls));
  return finalize(Hypergroup(std::move(labels), 0, block_involution(g, classes), partition_structure(g, classes)));
}

std::vector<Subset> double_cosets(const FiniteGroup& g, const Subset& h) {
  if (!g.is_subgroup(h)) throw PreconditionError("double coset construction requires a subgroup");
  std::vector<bool> done(g.order(), false);
  std::vector<Subset> cosets;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    Subset cos;
    for (std::size_t a : h)
      for (std::size_t b : h) cos.push_back(g.mul(g.mul(a, x), b));
    std::sort(cos.begin(), cos.end());
    cos.erase(std::unique(cos.begin(), cos.end()), cos.end());
    for (std::size_t y : cos) done[y] = true;
    cosets.push_back(std::move(cos));
  }
  return cosets;
}

Hypergroup double_coset_hypergroup(const FiniteGroup& g, const Subset& h) {
  const auto cosets = double_cosets(g, h);
  std::vector<std::string> labels;
  for (const auto& cos : cosets) labels.push_back(cosets.size() == g.order() ? g.label(cos.front()) : block_label(g, cos));
  return finalize(Hypergroup(std::move(labels), 0, block_involution(g, cosets), partition_structure(g, cosets)));
}

void check_fusion_data(const FusionData& fd) {
  const std::size_t r = fd.rank;
  if (r == 0) throw PreconditionError("fusion rank must be positive");
  if (fd.fusion.size() != r || fd.dims.size() != r || fd.dual.size() != r)
    throw PreconditionError("fusion data shapes do not match the rank");
  for (const auto& a : fd.fusion) {
    if (a.size() != r) throw PreconditionError("fusion tensor is not r x r x r");
    for (const auto& b : a) {
      if (b.size() != r) throw PreconditionError("fusion tensor is not r x r x r");
      for (long v : b)
        if (v < 0) throw PreconditionError("fusion coefficients must be nonnegative");
    }
  }
  if (std::abs(fd.dims[0] - 1.0) > 1e-12) throw PreconditionError("unit object must have dimension 1");
  for (double d : fd.dims)
    if (!(d > 0.0)) throw PreconditionError("fusion dimensions must be positive");
  for (std::size_t i = 0; i < r; ++i)
    if (fd.dual[i] >= r || fd.dual[fd.dual[i]] != i) throw PreconditionError("duality is not an involutive permutation");

  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < r; ++k) s += static_cast<double>(fd.N(i, j, k)) * fd.dims[k];
      if (std::abs(s - fd.dims[i] * fd.dims[j]) > 1e-9 * std::max(1.0, fd.dims[i] * fd.dims[j]))
        throw PreconditionError("dimensions are not a common eigenvector of the fusion rules");
      if (fd.N(i, j, 0) != (j == fd.dual[i] ? 1 : 0))
        throw PreconditionError("unit multiplicity N[i][j][0] must equal [j = dual(i)]");
    }
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t l = 0; l < r; ++l)
        for (std::size_t k = 0; k < r; ++k) {
          long lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < r; ++m) {
            lhs += fd.N(i, j, m) * fd.N(m, l, k);
            rhs += fd.N(j, l, m) * fd.N(i, m, k);
          }
          if (lhs != rhs) throw PreconditionError("fusion rules are not associative");
        }
}

Hypergroup fusion_hypergroup(const FusionData& fd) {
  check_fusion_data(fd);
  const std::size_t r = fd.rank;
  StructureTensor c(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        c(i, j, k) = static_cast<double>(fd.N(i, j, k)) * fd.dims[k] / (fd.dims[i] * fd.dims[j]);
  std::vector<std::string> labels = fd.labels;
  if (labels.size() != r) {
    labels.clear();
    for (std::size_t i = 0; i < r; ++i) labels.push_back("x" + std::to_string(i));
  }
  return finalize(Hypergroup(std::move(labels), 0, fd.dual, std::move(c)));
}

Hypergroup parametric_order2(double t) {
  if (!(t > 0.0 && t <= 1.0)) throw DomainError("order-2 hypergroup parameter must lie in (0, 1]");
  StructureTensor c(2);
  c(0, 0, 0) = 1.0;
  c(0, 1, 1) = 1.0;
  c(1, 0, 1) = 1.0;
  c(1, 1, 0) = t;
  c(1, 1, 1) = 1.0 - t;
  return finalize(Hypergroup({"e", "a"}, 0, {0, 1}, std::move(c)));
}

FusionData fibonacci_fusion() {
  FusionData fd;
  fd.rank = 2;
  fd.fusion = {{{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}};
  fd.dims = {1.0, kGoldenRatio};
  fd.dual = {0, 1};
  fd.labels = {"1", "tau"};
  return fd;
}

FusionData ising_fusion() {
  FusionData fd;
  fd.rank = 3;
  // objects 1, sigma, psi
  fd.fusion = {
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
      {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}},
      {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}},
  };
  fd.dims = {1.0, std::sqrt(2.0), 1.0};
  fd.dual = {0, 1, 2};
  fd.labels = {"1", "sigma", "psi"};
  return fd;
}

FusionData cyclic_fusion(std::size_t n) {
  if (n == 0) throw DomainError("cyclic fusion ring needs n >= 1");
  FusionData fd;
  fd.rank = n;
  fd.fusion.assign(n, std::vector<std::vector<long>>(n, std::vector<long>(n, 0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) fd.fusion[i][j][(i + j) % n] = 1;
  fd.dims.assign(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    fd.dual.push_back((n - i) % n);
    fd.labels.push_back(std::to_string(i));
  }
  return fd;
}

FusionData builtin_fusion(std::string_view name) {
  if (name == "fib" || name == "fibonacci") return fibonacci_fusion();
  if (name == "ising") return ising_fusion();
  if (name.size() >= 2 && (name[0] == 'z' || name[0] == 'Z')) {
    const std::string digits(name.substr(1));
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return cyclic_fusion(std::stoul(digits));
  }
  throw UsageError("unknown builtin fusion ring '" + std::string(name) + "'");
}

}  // namespace hf
