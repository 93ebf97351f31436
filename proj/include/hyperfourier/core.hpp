#pragma once

// Finite hypergroups: data model, axiom validation, Haar measure, convolution,
// involution and weighted L^p norms.
//
// A finite hypergroup K = {0, ..., n-1} is described by its structure constants
// c[i][j][k], the weight of the point mass at k in the convolution of the point
// masses at i and j, together with an identity element and an involution.
// All objects are immutable values and every operation is a pure function.

#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hf {

using cplx = std::complex<double>;

inline constexpr double kAxiomTolerance = 1e-9;
inline constexpr double kHaarResidual = 1e-10;
inline constexpr double kHaarSpectralGap = 1e-6;

// Dense n x n x n tensor of real structure constants, row-major c[i][j][k].
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(std::size_t n) : n_(n), data_(n * n * n, 0.0) {}
  StructureTensor(std::size_t n, std::vector<double> data);

  std::size_t size() const { return n_; }

  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * n_ + j) * n_ + k];
  }
  double& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * n_ + j) * n_ + k];
  }

  // Coefficients of delta_i * delta_j, indexed by k.
  std::span<const double> row(std::size_t i, std::size_t j) const {
    return {data_.data() + (i * n_ + j) * n_, n_};
  }

  const std::vector<double>& data() const { return data_; }

  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

class Hypergroup {
 public:
  // Checks shapes only (throws StructuralError); axioms are checked by validate().
  Hypergroup(std::vector<std::string> labels, std::size_t identity,
             std::vector<std::size_t> involution, StructureTensor structure,
             std::optional<std::vector<double>> haar = std::nullopt);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t identity() const { return identity_; }
  std::size_t involution(std::size_t i) const { return involution_[i]; }
  const std::vector<std::size_t>& involution() const { return involution_; }
  const StructureTensor& structure() const { return structure_; }
  double coeff(std::size_t i, std::size_t j, std::size_t k) const { return structure_(i, j, k); }

  bool has_haar() const { return haar_.has_value(); }
  // Throws PreconditionError when the Haar measure has not been attached.
  const std::vector<double>& haar() const;

  // Copy of this hypergroup carrying the given Haar weights.
  Hypergroup with_haar(std::vector<double> haar) const;

  bool is_commutative(double tol = kAxiomTolerance) const;

 private:
  std::vector<std::string> labels_;
  std::size_t identity_;
  std::vector<std::size_t> involution_;
  StructureTensor structure_;
  std::optional<std::vector<double>> haar_;
};

// A complex function on K, identified with the measure f d(mu_Haar).
class Density {
 public:
  Density() = default;
  explicit Density(std::vector<cplx> values) : values_(std::move(values)) {}
  static Density constant(std::size_t n, cplx value) { return Density(std::vector<cplx>(n, value)); }

  std::size_t size() const { return values_.size(); }
  const cplx& operator[](std::size_t k) const { return values_[k]; }
  cplx& operator[](std::size_t k) { return values_[k]; }
  const std::vector<cplx>& values() const { return values_; }

 private:
  std::vector<cplx> values_;
};

// A complex measure expanded on the point masses delta_k.
class Measure {
 public:
  Measure() = default;
  explicit Measure(std::vector<cplx> coefficients) : coefficients_(std::move(coefficients)) {}
  static Measure dirac(std::size_t n, std::size_t k);

  std::size_t size() const { return coefficients_.size(); }
  const cplx& operator[](std::size_t k) const { return coefficients_[k]; }
  cplx& operator[](std::size_t k) { return coefficients_[k]; }
  const std::vector<cplx>& coefficients() const { return coefficients_; }

 private:
  std::vector<cplx> coefficients_;
};

struct AxiomCheck {
  std::string name;
  double violation = 0.0;
  bool passed = true;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  double tolerance = kAxiomTolerance;

  bool passed() const;
  double max_violation() const;
  const AxiomCheck* find(std::string_view name) const;
};

// Axiom names used in ValidationReport.
namespace axiom {
inline constexpr const char* kNonnegativity = "nonnegativity";
inline constexpr const char* kNormalization = "normalization";
inline constexpr const char* kUnit = "unit";
inline constexpr const char* kAssociativity = "associativity";
inline constexpr const char* kInvolution = "involution";
inline constexpr const char* kIdentityDetection = "identity-detection";
inline constexpr const char* kHaar = "haar";
}  // namespace axiom

ValidationReport validate(const Hypergroup& h, double tolerance = kAxiomTolerance);

// Unique invariant probability vector; throws NoHaarMeasureError when none exists.
std::vector<double> haar_measure(const Hypergroup& h);

// Validates the axioms (throws ValidationError on failure) and attaches the Haar measure.
Hypergroup finalize(const Hypergroup& h);

// Largest l1 deviation of mu * delta_x and delta_x * mu from mu over all x.
double haar_residual(const Hypergroup& h, std::span<const double> mu);

Measure convolve_measures(const Hypergroup& h, const Measure& a, const Measure& b);
Density convolve_densities(const Hypergroup& h, const Density& f, const Density& g);

// Density of the point mass delta_k with respect to Haar: 1_k / mu(k).
Density dirac_density(const Hypergroup& h, std::size_t k);

// f#(x) = conj(f(x#)). Requires mu(x#) = mu(x).
Density involute_density(const Hypergroup& h, const Density& f);

Measure density_to_measure(const Hypergroup& h, const Density& f);
Density measure_to_density(const Hypergroup& h, const Measure& m);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// (sum_k |f(k)|^p mu(k))^{1/p}; p = kInfinity gives max_k |f(k)|.
double lp_norm(const Hypergroup& h, const Density& f, double p);

// <f, g> = sum_k conj(f(k)) g(k) mu(k).
cplx inner_product(const Hypergroup& h, const Density& f, const Density& g);

}  // namespace hf
