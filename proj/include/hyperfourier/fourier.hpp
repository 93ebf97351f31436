#pragma once

// Fourier transform from densities and measures on K to the dual multimatrix
// algebra, its inverse, the trigonometric-polynomial basis and the dual L^p norms
// defined by the weighted trace Tr_w(x) = sum_pi k_pi tr(x_pi).

#include <cstddef>
#include <vector>

#include "hyperfourier/core.hpp"
#include "hyperfourier/spectra.hpp"

namespace hf {

inline constexpr double kRankTolerance = 1e-8;
inline constexpr double kSupportTolerance = 1e-10;
inline constexpr double kMaxCondition = 1e12;

// One square block per irrep of the Spectrum.
class DualElement {
 public:
  DualElement() = default;
  explicit DualElement(std::vector<CMatrix> blocks) : blocks_(std::move(blocks)) {}

  // Zero element shaped like the spectrum.
  static DualElement zeros(const Spectrum& spec);
  static DualElement identity(const Spectrum& spec);
  static DualElement matrix_unit(const Spectrum& spec, std::size_t irrep, std::size_t r, std::size_t s);

  std::size_t block_count() const { return blocks_.size(); }
  const CMatrix& operator[](std::size_t i) const { return blocks_[i]; }
  CMatrix& operator[](std::size_t i) { return blocks_[i]; }
  const std::vector<CMatrix>& blocks() const { return blocks_; }

  DualElement operator*(const DualElement& other) const;
  DualElement adjoint() const;
  // max over blocks of the largest absolute entry difference
  double max_abs_diff(const DualElement& other) const;

 private:
  std::vector<CMatrix> blocks_;
};

class WeightedTrace {
 public:
  explicit WeightedTrace(const Spectrum& spec);
  explicit WeightedTrace(std::vector<double> weights) : weights_(std::move(weights)) {}

  const std::vector<double>& weights() const { return weights_; }
  cplx operator()(const DualElement& x) const;
  // Tr_w(x^* y)
  cplx inner(const DualElement& x, const DualElement& y) const;

 private:
  std::vector<double> weights_;
};

// x_pi = sum_k m(k) pi(delta_k)
DualElement fourier(const Spectrum& spec, const Measure& m);
// Transform of the measure f d(mu_Haar).
DualElement fourier(const Hypergroup& h, const Spectrum& spec, const Density& f);

// Matrix of the density transform: row (pi, r, s) in block order, column k holds mu(k) pi_rs(k).
CMatrix transform_matrix(const Hypergroup& h, const Spectrum& spec);

// Unique f with fourier(f) = x, via a linear solve. Throws IllConditionedError if
// cond(transform_matrix) > kMaxCondition; throws StructuralError on block-shape mismatch.
Density inverse_fourier(const Hypergroup& h, const Spectrum& spec, const DualElement& x);

// f = sum_{pi,r,s} (x_pi)_{rs} chi_{pi,r,s} with chi_{pi,r,s} = k_pi conj(pi_rs).
Density inverse_fourier_series(const Hypergroup& h, const Spectrum& spec, const DualElement& x);

struct TrigPolynomial {
  std::size_t irrep = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  Density values;
};

// chi_{pi,r,s} = inverse_fourier of the matrix unit E_rs in block pi, in block order.
std::vector<TrigPolynomial> trig_basis(const Hypergroup& h, const Spectrum& spec);

// (sum_pi k_pi sum_sigma sigma^p)^{1/p} over singular values; p = kInfinity gives the
// largest singular value over all blocks.
double dual_lp_norm(const DualElement& x, const WeightedTrace& w, double p);

struct DualSupport {
  std::vector<std::size_t> irreps;  // blocks with rank >= 1
  std::vector<std::size_t> ranks;   // rank of every block
};

DualSupport dual_support(const DualElement& x, double rank_tolerance = kRankTolerance);

// Elements with |f(k)| > tol * max |f|.
std::vector<std::size_t> density_support(const Density& f, double tol = kSupportTolerance);

// Smallest singular value and condition number of transform_matrix.
struct TransformConditioning {
  double smallest_singular_value = 0.0;
  double condition = 0.0;
};
TransformConditioning transform_conditioning(const Hypergroup& h, const Spectrum& spec);

}  // namespace hf
