#pragma once

// Regular representation of the measure algebra on L^2(K, mu) and its numerical
// decomposition into irreducible *-representations.
//
// L^2(K, mu) carries the orthonormal basis {1_x / sqrt(mu(x))}. In that basis the
// left-convolution operators L_k satisfy L_{k#} = L_k^*, so restrictions to
// orthonormal invariant subspaces are *-representations.

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hyperfourier/core.hpp"
#include "hyperfourier/random.hpp"

namespace hf {

using CMatrix = Eigen::MatrixXcd;

struct Irrep {
  std::size_t dim = 0;
  std::vector<CMatrix> matrices;  // pi(delta_k), one per element of K
  double hyperdimension = 0.0;
  CMatrix subspace;               // orthonormal basis of the invariant subspace of L^2(K, mu)

  // chi(k) = tr pi(delta_k)
  std::vector<cplx> character() const;
  bool is_trivial(double tol = 1e-9) const;
};

struct Spectrum {
  std::vector<Irrep> irreps;
  std::uint64_t seed = kDefaultSeed;

  std::size_t total_dim_squared() const;
  std::size_t trivial_index() const;  // the trivial irrep is always first
  bool all_one_dimensional() const;
};

inline constexpr double kEquivalenceTolerance = 1e-8;
inline constexpr double kInequivalenceFloor = 1e-6;
inline constexpr double kGramTolerance = 1e-7;
inline constexpr int kSplittingAttempts = 8;

// L_k f = (1_k / mu(k)) * f, expressed in the orthonormal basis {1_x / sqrt(mu(x))}:
// L_k[z][y] = c[k][y][z] sqrt(mu(y) / mu(z)).
std::vector<CMatrix> regular_representation(const Hypergroup& h);

// Orthonormal (Frobenius) basis of {X : X A_k = A_k X for all k}.
std::vector<CMatrix> commutant_basis(const std::vector<CMatrix>& mats);

// min over ||X||_F = 1 of sqrt(sum_k ||a_k X - X b_k||_F^2); zero iff a and b are equivalent.
double intertwiner_residual(const std::vector<CMatrix>& a, const std::vector<CMatrix>& b);

// Throws DegenerateSplittingError after kSplittingAttempts failed random splittings.
Spectrum wedderburn_decompose(const Hypergroup& h, std::uint64_t seed = kDefaultSeed);

// k_pi from the Gram matrix of matrix coefficients in L^2(K, mu), which must equal
// (1/k_pi) I. Throws NonOrthogonalCoefficientsError otherwise.
double hyperdimension(const Hypergroup& h, const Irrep& pi);

// Rows are characters, trivial row first. Throws NoncommutativeError if some irrep has dim > 1.
CMatrix character_table(const Spectrum& spec);

struct IrrepResiduals {
  double unit = 0.0;          // ||pi(delta_e) - I||_F
  double homomorphism = 0.0;  // max ||pi(delta_i * delta_j) - pi(delta_i) pi(delta_j)||_F
  double star = 0.0;          // max ||pi(delta_{k#}) - pi(delta_k)^*||_F
  double contraction = 0.0;   // max (||pi(delta_k)||_op - 1), clipped at 0
  std::size_t commutant_dim = 0;
};

IrrepResiduals irrep_residuals(const Hypergroup& h, const Irrep& pi);

}  // namespace hf
