#include "hyperfourier/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperfourier/errors.hpp"

namespace hf {

namespace {

void require_shape(const Spectrum& spec, const DualElement& x) {
  if (x.block_count() != spec.irreps.size()) throw StructuralError("dual element block count does not match the spectrum");
  for (std::size_t i = 0; i < x.block_count(); ++i) {
    const auto d = static_cast<Eigen::Index>(spec.irreps[i].dim);
    if (x[i].rows() != d || x[i].cols() != d) throw StructuralError("dual element block size does not match the irrep dimension");
  }
}

Eigen::VectorXcd flatten(const DualElement& x) {
  Eigen::Index total = 0;
  for (const auto& b : x.blocks()) total += b.size();
  Eigen::VectorXcd v(total);
  Eigen::Index pos = 0;
  for (const auto& b : x.blocks())
    for (Eigen::Index r = 0; r < b.rows(); ++r)
      for (Eigen::Index s = 0; s < b.cols(); ++s) v(pos++) = b(r, s);
  return v;
}

}  // namespace

DualElement DualElement::zeros(const Spectrum& spec) {
  std::vector<CMatrix> blocks;
  for (const auto& pi : spec.irreps) {
    const auto d = static_cast<Eigen::Index>(pi.dim);
    blocks.push_back(CMatrix::Zero(d, d));
  }
  return DualElement(std::move(blocks));
}

DualElement DualElement::identity(const Spectrum& spec) {
  DualElement x = zeros(spec);
  for (auto& b : x.blocks_) b.setIdentity();
  return x;
}

DualElement DualElement::matrix_unit(const Spectrum& spec, std::size_t irrep, std::size_t r, std::size_t s) {
  DualElement x = zeros(spec);
  x.blocks_.at(irrep)(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) = 1.0;
  return x;
}

DualElement DualElement::operator*(const DualElement& other) const {
  if (other.block_count() != block_count()) throw StructuralError("block count mismatch in dual product");
  std::vector<CMatrix> out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) out.push_back(blocks_[i] * other.blocks_[i]);
  return DualElement(std::move(out));
}

DualElement DualElement::adjoint() const {
  std::vector<CMatrix> out;
  for (const auto& b : blocks_) out.push_back(b.adjoint());
  return DualElement(std::move(out));
}

double DualElement::max_abs_diff(const DualElement& other) const {
  if (other.block_count() != block_count()) throw StructuralError("block count mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) m = std::max(m, (blocks_[i] - other.blocks_[i]).cwiseAbs().maxCoeff());
  return m;
}

WeightedTrace::WeightedTrace(const Spectrum& spec) {
  for (const auto& pi : spec.irreps) weights_.push_back(pi.hyperdimension);
}

cplx WeightedTrace::operator()(const DualElement& x) const {
  cplx s = 0.0;
  for (std::size_t i = 0; i < x.block_count(); ++i) s += weights_.at(i) * x[i].trace();
  return s;
}

cplx WeightedTrace::inner(const DualElement& x, const DualElement& y) const {
  cplx s = 0.0;
  for (std::size_t i = 0; i < x.block_count(); ++i) s += weights_.at(i) * (x[i].adjoint() * y[i]).trace();
  return s;
}

DualElement fourier(const Spectrum& spec, const Measure& m) {
  DualElement x = DualElement::zeros(spec);
  for (std::size_t i = 0; i < spec.irreps.size(); ++i) {
    const auto& pi = spec.irreps[i];
    if (pi.matrices.size() != m.size()) throw StructuralError("measure length does not match the hypergroup");
    for (std::size_t k = 0; k < m.size(); ++k)
      if (m[k] != cplx{}) x[i] += m[k] * pi.matrices[k];
  }
  return x;
}

DualElement fourier(const Hypergroup& h, const Spectrum& spec, const Density& f) {
  return fourier(spec, density_to_measure(h, f));
}

CMatrix transform_matrix(const Hypergroup& h, const Spectrum& spec) {
  const auto n = static_cast<Eigen::Index>(h.size());
  const auto& mu = h.haar();
  CMatrix t(static_cast<Eigen::Index>(spec.total_dim_squared()), n);
  Eigen::Index row = 0;
  for (const auto& pi : spec.irreps) {
    const auto d = static_cast<Eigen::Index>(pi.dim);
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index s = 0; s < d; ++s, ++row)
        for (Eigen::Index k = 0; k < n; ++k) t(row, k) = mu[static_cast<std::size_t>(k)] * pi.matrices[static_cast<std::size_t>(k)](r, s);
  }
  return t;
}

TransformConditioning transform_conditioning(const Hypergroup& h, const Spectrum& spec) {
  const CMatrix t = transform_matrix(h, spec);
  Eigen::JacobiSVD<CMatrix> svd(t);
  const auto& sv = svd.singularValues();
  TransformConditioning c;
  c.smallest_singular_value = sv(sv.size() - 1);
  c.condition = c.smallest_singular_value > 0.0 ? sv(0) / c.smallest_singular_value : kInfinity;
  return c;
}

Density inverse_fourier(const Hypergroup& h, const Spectrum& spec, const DualElement& x) {
  require_shape(spec, x);
  const CMatrix t = transform_matrix(h, spec);
  if (t.rows() != t.cols()) throw StructuralError("transform matrix is not square");
  Eigen::JacobiSVD<CMatrix> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cond = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : kInfinity;
  if (cond > kMaxCondition) {
    std::ostringstream os;
    os << "ill-conditioned transform: condition number " << cond;
    throw IllConditionedError(os.str());
  }
  const Eigen::VectorXcd f = svd.solve(flatten(x));
  return Density(std::vector<cplx>(f.data(), f.data() + f.size()));
}

Density inverse_fourier_series(const Hypergroup& h, const Spectrum& spec, const DualElement& x) {
  require_shape(spec, x);
  std::vector<cplx> f(h.size(), 0.0);
  for (std::size_t i = 0; i < spec.irreps.size(); ++i) {
    const auto& pi = spec.irreps[i];
    const auto d = static_cast<Eigen::Index>(pi.dim);
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index s = 0; s < d; ++s) {
        const cplx coef = x[i](r, s);
        if (coef == cplx{}) continue;
        for (std::size_t k = 0; k < h.size(); ++k) f[k] += coef * pi.hyperdimension * std::conj(pi.matrices[k](r, s));
      }
  }
  return Density(std::move(f));
}

std::vector<TrigPolynomial> trig_basis(const Hypergroup& h, const Spectrum& spec) {
  std::vector<TrigPolynomial> basis;
  for (std::size_t i = 0; i < spec.irreps.size(); ++i) {
    for (std::size_t r = 0; r < spec.irreps[i].dim; ++r)
      for (std::size_t s = 0; s < spec.irreps[i].dim; ++s)
        basis.push_back({i, r, s, inverse_fourier(h, spec, DualElement::matrix_unit(spec, i, r, s))});
  }
  return basis;
}

double dual_lp_norm(const DualElement& x, const WeightedTrace& w, double p) {
  if (std::isnan(p) || p < 1.0) throw DomainError("dual L^p norm requires p >= 1");
  if (w.weights().size() != x.block_count()) throw StructuralError("weighted trace does not match the block count");
  double total = 0.0, largest = 0.0;
  for (std::size_t i = 0; i < x.block_count(); ++i) {
    if (x[i].size() == 0) continue;
    Eigen::JacobiSVD<CMatrix> svd(x[i]);
    const auto& sv = svd.singularValues();
    largest = std::max(largest, sv(0));
    if (!std::isinf(p)) {
      double s = 0.0;
      for (Eigen::Index j = 0; j < sv.size(); ++j) s += std::pow(sv(j), p);
      total += w.weights()[i] * s;
    }
  }
  return std::isinf(p) ? largest : std::pow(total, 1.0 / p);
}

DualSupport dual_support(const DualElement& x, double rank_tolerance) {
  std::vector<Eigen::VectorXd> svs;
  double largest = 0.0;
  for (const auto& b : x.blocks()) {
    Eigen::JacobiSVD<CMatrix> svd(b);
    svs.push_back(svd.singularValues());
    if (svs.back().size() > 0) largest = std::max(largest, svs.back()(0));
  }
  DualSupport out;
  for (std::size_t i = 0; i < svs.size(); ++i) {
    std::size_t rank = 0;
    if (largest > 0.0)
      for (Eigen::Index j = 0; j < svs[i].size(); ++j)
        if (svs[i](j) > rank_tolerance * largest) ++rank;
    out.ranks.push_back(rank);
    if (rank > 0) out.irreps.push_back(i);
  }
  return out;
}

std::vector<std::size_t> density_support(const Density& f, double tol) {
  double largest = 0.0;
  for (const auto& v : f.values()) largest = std::max(largest, std::abs(v));
  std::vector<std::size_t> out;
  if (largest == 0.0) return out;
  for (std::size_t k = 0; k < f.size(); ++k)
    if (std::abs(f[k]) > tol * largest) out.push_back(k);
  return out;
}

}  // namespace hf
