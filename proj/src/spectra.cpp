#include "hyperfourier/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hyperfourier/errors.hpp"

namespace hf {

namespace {

// Within-cluster eigenvalue spread, and the ambiguous band that triggers a reseed.
constexpr double kClusterTolerance = 1e-10;
constexpr double kSplittingGap = 1e-8;
constexpr double kNullspaceTolerance = 1e-9;

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// sum_k A_k^* A_k for A_k vec(X) = vec(a_k X - X b_k) (column-major vec).
CMatrix intertwiner_gram(const std::vector<CMatrix>& a, const std::vector<CMatrix>& b) {
  const Eigen::Index p = a.front().rows();
  const Eigen::Index q = b.front().rows();
  const CMatrix ip = CMatrix::Identity(p, p);
  const CMatrix iq = CMatrix::Identity(q, q);
  CMatrix m = CMatrix::Zero(p * q, p * q);
  for (std::size_t k = 0; k < a.size(); ++k) {
    // A = I_q (x) a - b^T (x) I_p
    const CMatrix bt = b[k].transpose();
    const CMatrix bconj = b[k].conjugate();
    m += kron(iq, a[k].adjoint() * a[k]);
    m -= kron(bconj, a[k]);
    m -= kron(bt, a[k].adjoint());
    m += kron(bconj * bt, ip);
  }
  return m;
}

std::vector<CMatrix> restrict_all(const std::vector<CMatrix>& mats, const CMatrix& w) {
  std::vector<CMatrix> out;
  out.reserve(mats.size());
  for (const auto& m : mats) out.push_back(w.adjoint() * m * w);
  return out;
}

struct Splitter {
  Rng rng;
  std::vector<CMatrix> blocks;  // orthonormal bases (in L^2(K, mu) coordinates) of irreducible subspaces

  explicit Splitter(std::uint64_t seed) : rng(seed) {}

  void split(const std::vector<CMatrix>& mats, const CMatrix& basis) {
    const auto comm = commutant_basis(mats);
    if (comm.size() <= 1) {
      blocks.push_back(basis);
      return;
    }
    const Eigen::Index d = mats.front().rows();
    for (int attempt = 0; attempt < kSplittingAttempts; ++attempt) {
      CMatrix x = CMatrix::Zero(d, d);
      for (const auto& c : comm) x += rng.complex_gaussian() * c;
      CMatrix herm = 0.5 * (x + x.adjoint());
      herm /= herm.norm();
      Eigen::SelfAdjointEigenSolver<CMatrix> es(herm);
      const auto& ev = es.eigenvalues();

      std::vector<std::vector<Eigen::Index>> clusters{{0}};
      bool ambiguous = false;
      for (Eigen::Index i = 1; i < d; ++i) {
        const double gap = ev(i) - ev(i - 1);
        if (gap <= kClusterTolerance) {
          clusters.back().push_back(i);
        } else if (gap < kSplittingGap) {
          ambiguous = true;
          break;
        } else {
          clusters.push_back({i});
        }
      }
      if (ambiguous || clusters.size() == 1) continue;

      for (const auto& cl : clusters) {
        CMatrix w(d, static_cast<Eigen::Index>(cl.size()));
        for (std::size_t c = 0; c < cl.size(); ++c) w.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(cl[c]);
        split(restrict_all(mats, w), basis * w);
      }
      return;
    }
    throw DegenerateSplittingError("degenerate splitting: no random commutant element separated the spectrum");
  }
};

// First basis vector of L^2(K, mu) with non-negligible weight in the subspace, and that weight.
std::pair<Eigen::Index, double> lowest_support(const CMatrix& v) {
  for (Eigen::Index r = 0; r < v.rows(); ++r) {
    const double w = v.row(r).squaredNorm();
    if (w > 1e-10) return {r, w};
  }
  return {v.rows(), 0.0};
}

// Lexicographic on real parts then imaginary parts, with values within tol treated as equal.
bool character_less(const std::vector<cplx>& a, const std::vector<cplx>& b, double tol = 1e-9) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k].real() - b[k].real()) > tol) return a[k].real() < b[k].real();
  }
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k].imag() - b[k].imag()) > tol) return a[k].imag() < b[k].imag();
  }
  return false;
}

}  // namespace

std::vector<cplx> Irrep::character() const {
  std::vector<cplx> chi;
  chi.reserve(matrices.size());
  for (const auto& m : matrices) chi.push_back(m.trace());
  return chi;
}

bool Irrep::is_trivial(double tol) const {
  if (dim != 1) return false;
  return std::all_of(matrices.begin(), matrices.end(), [tol](const CMatrix& m) { return std::abs(m(0, 0) - 1.0) <= tol; });
}

std::size_t Spectrum::total_dim_squared() const {
  std::size_t s = 0;
  for (const auto& pi : irreps) s += pi.dim * pi.dim;
  return s;
}

std::size_t Spectrum::trivial_index() const {
  for (std::size_t i = 0; i < irreps.size(); ++i)
    if (irreps[i].is_trivial()) return i;
  throw PreconditionError("spectrum has no trivial representation");
}

bool Spectrum::all_one_dimensional() const {
  return std::all_of(irreps.begin(), irreps.end(), [](const Irrep& pi) { return pi.dim == 1; });
}

std::vector<CMatrix> regular_representation(const Hypergroup& h) {
  const std::size_t n = h.size();
  const auto& mu = h.haar();
  std::vector<CMatrix> reps(n, CMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const double c = h.coeff(k, y, z);
        if (c != 0.0) reps[k](static_cast<Eigen::Index>(z), static_cast<Eigen::Index>(y)) = c * std::sqrt(mu[y] / mu[z]);
      }
  return reps;
}

std::vector<CMatrix> commutant_basis(const std::vector<CMatrix>& mats) {
  const Eigen::Index d = mats.front().rows();
  if (d == 1) return {CMatrix::Identity(1, 1)};
  const CMatrix m = intertwiner_gram(mats, mats);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
  const auto& ev = es.eigenvalues();
  const double scale = std::max(1.0, ev(ev.size() - 1));
  std::vector<CMatrix> basis;
  for (Eigen::Index i = 0; i < ev.size() && ev(i) <= kNullspaceTolerance * scale; ++i) {
    const Eigen::VectorXcd v = es.eigenvectors().col(i);
    basis.push_back(Eigen::Map<const CMatrix>(v.data(), d, d));
  }
  return basis;
}

double intertwiner_residual(const std::vector<CMatrix>& a, const std::vector<CMatrix>& b) {
  const CMatrix m = intertwiner_gram(a, b);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
  const Eigen::VectorXcd v = es.eigenvectors().col(0);
  const Eigen::Index p = a.front().rows();
  const Eigen::Index q = b.front().rows();
  const CMatrix x = Eigen::Map<const CMatrix>(v.data(), p, q);
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] * x - x * b[k]).squaredNorm();
  return std::sqrt(s);
}

Spectrum wedderburn_decompose(const Hypergroup& h, std::uint64_t seed) {
  const std::size_t n = h.size();
  const auto reg = regular_representation(h);

  Splitter splitter(seed);
  splitter.split(reg, CMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));

  struct Candidate {
    CMatrix basis;
    std::vector<CMatrix> mats;
  };
  std::vector<std::vector<Candidate>> classes;
  for (const auto& b : splitter.blocks) {
    Candidate cand{b, restrict_all(reg, b)};
    bool placed = false;
    for (auto& cls : classes) {
      if (cls.front().basis.cols() != b.cols()) continue;
      const double r = intertwiner_residual(cls.front().mats, cand.mats);
      if (r <= kEquivalenceTolerance) {
        cls.push_back(std::move(cand));
        placed = true;
        break;
      }
      if (r <= kInequivalenceFloor) {
        std::ostringstream os;
        os << "ambiguous equivalence between irreducible blocks (intertwiner residual " << r << ")";
        throw DegenerateSplittingError(os.str());
      }
    }
    if (!placed) classes.push_back({std::move(cand)});
  }

  Spectrum spec;
  spec.seed = seed;
  for (auto& cls : classes) {
    const std::size_t dim = static_cast<std::size_t>(cls.front().basis.cols());
    if (cls.size() != dim) {
      std::ostringstream os;
      os << "irreducible class of dimension " << dim << " occurs with multiplicity " << cls.size()
         << " in the regular representation";
      throw DegenerateSplittingError(os.str());
    }
    auto best = std::min_element(cls.begin(), cls.end(), [](const Candidate& a, const Candidate& b) {
      const auto ka = lowest_support(a.basis);
      const auto kb = lowest_support(b.basis);
      if (ka.first != kb.first) return ka.first < kb.first;
      return ka.second > kb.second;
    });
    Irrep pi;
    pi.dim = dim;
    pi.matrices = std::move(best->mats);
    pi.subspace = std::move(best->basis);
    spec.irreps.push_back(std::move(pi));
  }

  if (spec.total_dim_squared() != n) {
    std::ostringstream os;
    os << "incomplete decomposition: sum of squared dimensions " << spec.total_dim_squared() << " != " << n;
    throw DegenerateSplittingError(os.str());
  }

  std::stable_sort(spec.irreps.begin(), spec.irreps.end(), [](const Irrep& a, const Irrep& b) {
    const bool ta = a.is_trivial(), tb = b.is_trivial();
    if (ta != tb) return ta;
    if (a.dim != b.dim) return a.dim < b.dim;
    return character_less(a.character(), b.character());
  });
  if (!spec.irreps.front().is_trivial()) throw DegenerateSplittingError("trivial representation not found");

  for (auto& pi : spec.irreps) pi.hyperdimension = hyperdimension(h, pi);
  return spec;
}

double hyperdimension(const Hypergroup& h, const Irrep& pi) {
  const auto& mu = h.haar();
  const auto d = static_cast<Eigen::Index>(pi.dim);
  // Column (r,s) holds sqrt(mu(k)) pi_rs(k) over k, so Gram = coeffs^* coeffs.
  CMatrix coeffs(static_cast<Eigen::Index>(h.size()), d * d);
  for (std::size_t k = 0; k < h.size(); ++k)
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index s = 0; s < d; ++s)
        coeffs(static_cast<Eigen::Index>(k), r * d + s) = std::sqrt(mu[k]) * pi.matrices[k](r, s);
  const CMatrix gram = coeffs.adjoint() * coeffs;
  const double g = gram.trace().real() / static_cast<double>(d * d);
  const double dev = (gram - g * CMatrix::Identity(d * d, d * d)).cwiseAbs().maxCoeff();
  if (!(g > 0.0) || dev > kGramTolerance) {
    std::ostringstream os;
    os << "non-orthogonal coefficients: Gram matrix deviates from a multiple of the identity by " << dev;
    throw NonOrthogonalCoefficientsError(os.str());
  }
  return 1.0 / g;
}

CMatrix character_table(const Spectrum& spec) {
  if (!spec.all_one_dimensional())
    throw NoncommutativeError("noncommutative hypergroup: irreps of dimension > 1 exist, inspect the Spectrum instead");
  const auto rows = static_cast<Eigen::Index>(spec.irreps.size());
  const auto cols = static_cast<Eigen::Index>(spec.irreps.front().matrices.size());
  CMatrix table(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index k = 0; k < cols; ++k) table(r, k) = spec.irreps[static_cast<std::size_t>(r)].matrices[static_cast<std::size_t>(k)](0, 0);
  return table;
}

IrrepResiduals irrep_residuals(const Hypergroup& h, const Irrep& pi) {
  const std::size_t n = h.size();
  const auto d = static_cast<Eigen::Index>(pi.dim);
  IrrepResiduals r;
  r.unit = (pi.matrices[h.identity()] - CMatrix::Identity(d, d)).norm();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      CMatrix conv = CMatrix::Zero(d, d);
      for (std::size_t k = 0; k < n; ++k) conv += h.coeff(i, j, k) * pi.matrices[k];
      r.homomorphism = std::max(r.homomorphism, (conv - pi.matrices[i] * pi.matrices[j]).norm());
    }
    r.star = std::max(r.star, (pi.matrices[h.involution(i)] - pi.matrices[i].adjoint()).norm());
    Eigen::JacobiSVD<CMatrix> svd(pi.matrices[i]);
    r.contraction = std::max(r.contraction, svd.singularValues()(0) - 1.0);
  }
  r.commutant_dim = commutant_basis(pi.matrices).size();
  return r;
}

}  // namespace hf
