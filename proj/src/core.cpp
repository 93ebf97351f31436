#include "hyperfourier/core.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperfourier/errors.hpp"

namespace hf {

namespace {

void require_length(const Hypergroup& h, std::size_t len, const char* what) {
  if (len != h.size()) {
    std::ostringstream os;
    os << what << " has length " << len << " but the hypergroup has " << h.size() << " elements";
    throw StructuralError(os.str());
  }
}

}  // namespace

StructureTensor::StructureTensor(std::size_t n, std::vector<double> data) : n_(n), data_(std::move(data)) {
  if (data_.size() != n * n * n) {
    throw StructuralError("structure tensor must hold n^3 coefficients");
  }
}

Hypergroup::Hypergroup(std::vector<std::string> labels, std::size_t identity,
                       std::vector<std::size_t> involution, StructureTensor structure,
                       std::optional<std::vector<double>> haar)
    : labels_(std::move(labels)),
      identity_(identity),
      involution_(std::move(involution)),
      structure_(std::move(structure)),
      haar_(std::move(haar)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw StructuralError("hypergroup must have at least one element");
  if (identity_ >= n) throw StructuralError("identity index out of range");
  if (involution_.size() != n) throw StructuralError("involution length does not match size");
  if (structure_.size() != n) throw StructuralError("structure tensor dimension does not match size");
  std::vector<bool> seen(n, false);
  for (std::size_t i : involution_) {
    if (i >= n || seen[i]) throw StructuralError("involution is not a permutation");
    seen[i] = true;
  }
  if (haar_ && haar_->size() != n) throw StructuralError("haar length does not match size");
}

const std::vector<double>& Hypergroup::haar() const {
  if (!haar_) throw PreconditionError("Haar measure not computed for this hypergroup");
  return *haar_;
}

Hypergroup Hypergroup::with_haar(std::vector<double> haar) const {
  return Hypergroup(labels_, identity_, involution_, structure_, std::move(haar));
}

bool Hypergroup::is_commutative(double tol) const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (std::abs(structure_(i, j, k) - structure_(j, i, k)) > tol) return false;
  return true;
}

Measure Measure::dirac(std::size_t n, std::size_t k) {
  std::vector<cplx> c(n, 0.0);
  c.at(k) = 1.0;
  return Measure(std::move(c));
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

double ValidationReport::max_violation() const {
  double v = 0.0;
  for (const auto& c : checks) v = std::max(v, c.violation);
  return v;
}

const AxiomCheck* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

ValidationReport validate(const Hypergroup& h, double tolerance) {
  const std::size_t n = h.size();
  const std::size_t e = h.identity();
  const auto& c = h.structure();

  double nonneg = 0.0, norm = 0.0, unit = 0.0, assoc = 0.0, invol = 0.0, ident = 0.0;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        nonneg = std::max(nonneg, -c(i, j, k));
        sum += c(i, j, k);
        invol = std::max(invol, std::abs(c(i, j, k) - c(h.involution(j), h.involution(i), h.involution(k))));
      }
      norm = std::max(norm, std::abs(sum - 1.0));
    }
  }

  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const double kron = (j == k) ? 1.0 : 0.0;
      unit = std::max(unit, std::abs(c(e, j, k) - kron));
      unit = std::max(unit, std::abs(c(j, e, k) - kron));
    }
  }

  // (delta_i * delta_j) * delta_l against delta_i * (delta_j * delta_l).
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t k = 0; k < n; ++k) {
          double lhs = 0.0, rhs = 0.0;
          for (std::size_t m = 0; m < n; ++m) {
            lhs += c(i, j, m) * c(m, l, k);
            rhs += c(j, l, m) * c(i, m, k);
          }
          assoc = std::max(assoc, std::abs(lhs - rhs));
        }
      }
    }
  }

  if (h.involution(e) != e) invol = std::max(invol, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    if (h.involution(h.involution(i)) != i) invol = std::max(invol, 1.0);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == h.involution(i)) {
        if (!(c(i, j, e) > tolerance)) ident = std::max(ident, 1.0);
      } else {
        ident = std::max(ident, std::abs(c(i, j, e)));
      }
    }
  }

  ValidationReport report;
  report.tolerance = tolerance;
  auto add = [&](const char* name, double v) { report.checks.push_back({name, v, v <= tolerance}); };
  add(axiom::kNonnegativity, nonneg);
  add(axiom::kNormalization, norm);
  add(axiom::kUnit, unit);
  add(axiom::kAssociativity, assoc);
  add(axiom::kInvolution, invol);
  add(axiom::kIdentityDetection, ident);

  if (h.has_haar()) {
    const auto& mu = h.haar();
    double v = 0.0, total = 0.0;
    for (double w : mu) {
      if (!(w > 0.0)) v = std::max(v, 1.0);
      total += w;
    }
    v = std::max(v, std::abs(total - 1.0));
    v = std::max(v, haar_residual(h, mu));
    add(axiom::kHaar, v);
  }
  return report;
}

double haar_residual(const Hypergroup& h, std::span<const double> mu) {
  const std::size_t n = h.size();
  double worst = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    double right = 0.0, left = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      double r = 0.0, l = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        r += mu[i] * h.coeff(i, x, k);
        l += mu[i] * h.coeff(x, i, k);
      }
      right += std::abs(r - mu[k]);
      left += std::abs(l - mu[k]);
    }
    worst = std::max({worst, right, left});
  }
  return worst;
}

std::vector<double> haar_measure(const Hypergroup& h) {
  const auto n = static_cast<Eigen::Index>(h.size());
  if (n == 1) return {1.0};

  // Averaged right-translation operator, row-stochastic: A[i][k] = (1/n) sum_x c[i][x][k].
  Eigen::MatrixXd avg = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index x = 0; x < n; ++x)
      for (Eigen::Index k = 0; k < n; ++k) avg(i, k) += h.coeff(i, x, k);
  avg /= static_cast<double>(n);

  const Eigen::MatrixXd op = avg.transpose();
  Eigen::EigenSolver<Eigen::MatrixXd> es(op, false);
  if (es.info() != Eigen::Success) throw NoHaarMeasureError("eigen-solve of the averaged translation operator failed");
  const auto& ev = es.eigenvalues();
  int near_one = 0;
  double closest = kInfinity;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double d = std::abs(ev(i) - cplx(1.0, 0.0));
    closest = std::min(closest, d);
    if (d < kHaarSpectralGap) ++near_one;
  }
  if (closest > 1e-8) throw NoHaarMeasureError("averaged translation operator has no eigenvalue 1");
  if (near_one != 1) throw NoHaarMeasureError("eigenvalue 1 of the averaged translation operator is not simple");

  // Fixed vector: (A^T - I) mu = 0 together with sum(mu) = 1, solved in least squares.
  Eigen::MatrixXd sys(n + 1, n);
  sys.topRows(n) = op - Eigen::MatrixXd::Identity(n, n);
  sys.row(n).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
  rhs(n) = 1.0;
  const Eigen::VectorXd sol = sys.colPivHouseholderQr().solve(rhs);

  std::vector<double> mu(sol.data(), sol.data() + n);
  // weights at round-off level count as zero
  const double floor = 1e-12 * sol.cwiseAbs().maxCoeff();
  for (double w : mu)
    if (!(w > floor)) throw NoHaarMeasureError("invariant vector is not strictly positive");
  const double res = haar_residual(h, mu);
  if (res > kHaarResidual) {
    std::ostringstream os;
    os << "no Haar measure: translation residual " << res << " exceeds " << kHaarResidual;
    throw NoHaarMeasureError(os.str());
  }
  return mu;
}

Hypergroup finalize(const Hypergroup& h) {
  const ValidationReport report = validate(h.has_haar() ? Hypergroup(h.labels(), h.identity(), h.involution(), h.structure()) : h);
  if (!report.passed()) {
    std::ostringstream os;
    os << "hypergroup axioms violated:";
    for (const auto& c : report.checks)
      if (!c.passed) os << ' ' << c.name << '=' << c.violation;
    throw ValidationError(os.str());
  }
  std::vector<double> mu = haar_measure(h);
  if (h.has_haar()) {
    double diff = 0.0;
    for (std::size_t k = 0; k < mu.size(); ++k) diff = std::max(diff, std::abs(mu[k] - h.haar()[k]));
    if (diff > kAxiomTolerance) throw ValidationError("supplied Haar weights disagree with the computed Haar measure");
  }
  return h.with_haar(std::move(mu));
}

Measure convolve_measures(const Hypergroup& h, const Measure& a, const Measure& b) {
  require_length(h, a.size(), "measure");
  require_length(h, b.size(), "measure");
  const std::size_t n = h.size();
  std::vector<cplx> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == cplx{}) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const cplx w = a[i] * b[j];
      if (w == cplx{}) continue;
      const auto row = h.structure().row(i, j);
      for (std::size_t k = 0; k < n; ++k) out[k] += w * row[k];
    }
  }
  return Measure(std::move(out));
}

Measure density_to_measure(const Hypergroup& h, const Density& f) {
  require_length(h, f.size(), "density");
  const auto& mu = h.haar();
  std::vector<cplx> c(f.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = f[k] * mu[k];
  return Measure(std::move(c));
}

Density measure_to_density(const Hypergroup& h, const Measure& m) {
  require_length(h, m.size(), "measure");
  const auto& mu = h.haar();
  std::vector<cplx> v(m.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = m[k] / mu[k];
  return Density(std::move(v));
}

Density convolve_densities(const Hypergroup& h, const Density& f, const Density& g) {
  return measure_to_density(h, convolve_measures(h, density_to_measure(h, f), density_to_measure(h, g)));
}

Density dirac_density(const Hypergroup& h, std::size_t k) {
  const auto& mu = h.haar();
  std::vector<cplx> v(h.size(), 0.0);
  v.at(k) = 1.0 / mu[k];
  return Density(std::move(v));
}

Density involute_density(const Hypergroup& h, const Density& f) {
  require_length(h, f.size(), "density");
  const auto& mu = h.haar();
  for (std::size_t x = 0; x < h.size(); ++x) {
    if (std::abs(mu[x] - mu[h.involution(x)]) > kHaarResidual)
      throw PreconditionError("Haar measure is not invariant under the involution");
  }
  std::vector<cplx> v(f.size());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = std::conj(f[h.involution(x)]);
  return Density(std::move(v));
}

double lp_norm(const Hypergroup& h, const Density& f, double p) {
  if (std::isnan(p) || p < 1.0) throw DomainError("L^p norm requires p >= 1");
  require_length(h, f.size(), "density");
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& v : f.values()) m = std::max(m, std::abs(v));
    return m;
  }
  const auto& mu = h.haar();
  double s = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) s += std::pow(std::abs(f[k]), p) * mu[k];
  return std::pow(s, 1.0 / p);
}

cplx inner_product(const Hypergroup& h, const Density& f, const Density& g) {
  require_length(h, f.size(), "density");
  require_length(h, g.size(), "density");
  const auto& mu = h.haar();
  cplx s = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) s += std::conj(f[k]) * g[k] * mu[k];
  return s;
}

}  // namespace hf
