#include <doctest.h>

#include <cmath>

#include "hyperfourier/builders.hpp"
#include "hyperfourier/errors.hpp"
#include "hyperfourier/spectra.hpp"
#include "oracles.hpp"

using namespace hf;

namespace {

// k = 1 / sum_x |chi(x)|^2 mu(x), valid for one-dimensional characters.
double oracle_hyperdim(const std::vector<cplx>& chi, const std::vector<double>& mu) {
  double s = 0.0;
  for (std::size_t x = 0; x < chi.size(); ++x) s += std::norm(chi[x]) * mu[x];
  return 1.0 / s;
}

bool rows_match(const std::vector<cplx>& a, const std::vector<cplx>& b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

// Every expected row appears exactly once among the computed characters.
void check_character_rows(const Spectrum& s, const std::vector<std::vector<cplx>>& expected, double tol) {
  REQUIRE(s.irreps.size() == expected.size());
  std::vector<bool> used(expected.size(), false);
  for (const auto& pi : s.irreps) {
    const auto chi = pi.character();
    bool found = false;
    for (std::size_t r = 0; r < expected.size() && !found; ++r)
      if (!used[r] && rows_match(chi, expected[r], tol)) used[r] = found = true;
    CHECK(found);
  }
}

}  // namespace

TEST_CASE("cyclic groups: characters are the discrete Fourier characters") {
  for (std::size_t n = 1; n <= 9; ++n) {
    const Hypergroup h = group_hypergroup(cyclic_group(n));
    const Spectrum s = wedderburn_decompose(h);
    CHECK(s.total_dim_squared() == n);
    CHECK(s.all_one_dimensional());
    std::vector<std::vector<cplx>> expect;
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<cplx> row;
      for (std::size_t b = 0; b < n; ++b) row.push_back(oracle::cyclic_character(n, a, b));
      expect.push_back(row);
    }
    check_character_rows(s, expect, 1e-9);
    for (const auto& pi : s.irreps) CHECK(pi.hyperdimension == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("Conj(S3): characters (1,1,1), (1,-1,1), (1,0,-1/2) and hyperdimensions (1,1,4)") {
  const FiniteGroup g = symmetric_group(3);
  const Hypergroup h = conjugacy_hypergroup(g);
  const Spectrum s = wedderburn_decompose(h);
  // normalized group characters chi(g)/chi(e): trivial, sign, and (fixed points - 1)/2
  std::vector<std::vector<cplx>> expect(3);
  for (const auto& cls : g.conjugacy_classes()) {
    const auto& p = g.permutations()[cls.front()];
    int fixed = 0;
    for (std::size_t i = 0; i < p.size(); ++i) fixed += p[i] == i;
    const int sign = (fixed == 1) ? -1 : 1;  // in S3 only transpositions fix exactly one point
    expect[0].push_back(1.0);
    expect[1].push_back(double(sign));
    expect[2].push_back((fixed - 1) / 2.0);
  }
  check_character_rows(s, expect, 1e-7);
  CHECK(s.irreps[0].is_trivial());
  const auto& mu = h.haar();
  std::vector<double> ks;
  for (const auto& pi : s.irreps) {
    CHECK(pi.hyperdimension == doctest::Approx(oracle_hyperdim(pi.character(), mu)).epsilon(1e-7));
    ks.push_back(pi.hyperdimension);
  }
  std::sort(ks.begin(), ks.end());
  CHECK(ks[0] == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(ks[1] == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(ks[2] == doctest::Approx(4.0).epsilon(1e-7));
}

TEST_CASE("class hypergroups: hyperdimension is the squared irrep degree") {
  struct Case {
    const char* group;
    std::vector<double> squares;
  };
  for (const Case& c : {Case{"S4", {1, 1, 4, 9, 9}}, Case{"A4", {1, 1, 1, 9}}, Case{"Q8", {1, 1, 1, 1, 4}}}) {
    const Spectrum s = wedderburn_decompose(conjugacy_hypergroup(builtin_group(c.group)));
    std::vector<double> ks;
    for (const auto& pi : s.irreps) ks.push_back(pi.hyperdimension);
    std::sort(ks.begin(), ks.end());
    REQUIRE(ks.size() == c.squares.size());
    for (std::size_t i = 0; i < ks.size(); ++i) CHECK(ks[i] == doctest::Approx(c.squares[i]).epsilon(1e-7));
  }
}

TEST_CASE("S3 as a group has irreps of dimensions (1,1,2)") {
  const Spectrum s = wedderburn_decompose(group_hypergroup(symmetric_group(3)));
  REQUIRE(s.irreps.size() == 3);
  CHECK(s.irreps[0].dim == 1);
  CHECK(s.irreps[1].dim == 1);
  CHECK(s.irreps[2].dim == 2);
  CHECK(s.total_dim_squared() == 6);
  // for a group with uniform Haar, k_pi = dim
  for (const auto& pi : s.irreps) CHECK(pi.hyperdimension == doctest::Approx(double(pi.dim)).epsilon(1e-7));
  CHECK_THROWS_AS(character_table(s), NoncommutativeError);
}

TEST_CASE("nonabelian groups of order 8 and 24") {
  for (const char* name : {"D4", "Q8"}) {
    const Spectrum s = wedderburn_decompose(group_hypergroup(builtin_group(name)));
    std::vector<std::size_t> dims;
    for (const auto& pi : s.irreps) dims.push_back(pi.dim);
    CHECK(dims == std::vector<std::size_t>{1, 1, 1, 1, 2});
  }
  const Spectrum s4 = wedderburn_decompose(group_hypergroup(symmetric_group(4)));
  std::vector<std::size_t> dims;
  for (const auto& pi : s4.irreps) dims.push_back(pi.dim);
  CHECK(dims == std::vector<std::size_t>{1, 1, 2, 3, 3});
}

TEST_CASE("order-two family: characters (1,1), (1,-t) and hyperdimensions (1, 1/t)") {
  for (double t : {1.0, 0.5, 1.0 / (kGoldenRatio * kGoldenRatio), 0.2}) {
    const Hypergroup h = parametric_order2(t);
    const Spectrum s = wedderburn_decompose(h);
    check_character_rows(s, {{1.0, 1.0}, {1.0, -t}}, 1e-8);
    REQUIRE(s.irreps.size() == 2);
    CHECK(s.irreps[0].hyperdimension == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(s.irreps[1].hyperdimension == doctest::Approx(1.0 / t).epsilon(1e-8));
  }
}

TEST_CASE("fusion hypergroups: hyperdimension matches the character oracle") {
  for (const FusionData& fd : {fibonacci_fusion(), ising_fusion()}) {
    const Hypergroup h = fusion_hypergroup(fd);
    const Spectrum s = wedderburn_decompose(h);
    CHECK(s.total_dim_squared() == h.size());
    for (const auto& pi : s.irreps) CHECK(pi.hyperdimension == doctest::Approx(oracle_hyperdim(pi.character(), h.haar())).epsilon(1e-8));
  }
}

TEST_CASE("irreps are unital *-homomorphisms by contractions") {
  for (const Hypergroup& h : {group_hypergroup(symmetric_group(4)), conjugacy_hypergroup(symmetric_group(4)),
                              double_coset_hypergroup(symmetric_group(4), symmetric_group(4).parse_subgroup("(12)")),
                              fusion_hypergroup(ising_fusion())}) {
    const Spectrum s = wedderburn_decompose(h);
    CHECK(s.total_dim_squared() == h.size());
    for (const auto& pi : s.irreps) {
      const auto r = irrep_residuals(h, pi);
      CHECK(r.unit < 1e-9);
      CHECK(r.homomorphism < 1e-9);
      CHECK(r.star < 1e-9);
      CHECK(r.contraction < 1e-9);
      CHECK(r.commutant_dim == 1);
    }
  }
}

TEST_CASE("decomposition does not depend on the seed") {
  const Hypergroup h = conjugacy_hypergroup(symmetric_group(4));
  const Spectrum a = wedderburn_decompose(h, 1), b = wedderburn_decompose(h, 987654321);
  REQUIRE(a.irreps.size() == b.irreps.size());
  for (std::size_t i = 0; i < a.irreps.size(); ++i) CHECK(rows_match(a.irreps[i].character(), b.irreps[i].character(), 1e-9));
}

TEST_CASE("regular representation and intertwiners") {
  const Hypergroup h = conjugacy_hypergroup(symmetric_group(3));
  const auto L = regular_representation(h);
  REQUIRE(L.size() == 3);
  CHECK((L[0] - CMatrix::Identity(3, 3)).norm() < 1e-14);
  // commutative algebra: commutant is the algebra itself
  CHECK(commutant_basis(L).size() == 3);
  CHECK(intertwiner_residual(L, L) < 1e-8);
  const Spectrum s = wedderburn_decompose(h);
  CHECK(intertwiner_residual(s.irreps[1].matrices, s.irreps[2].matrices) > 1e-6);
}

TEST_CASE("regular representation of groups, the order-two family and Conj(S3)") {
  const auto g = regular_representation(group_hypergroup(symmetric_group(3)));
  for (const auto& m : g) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      double row_sum = 0.0;
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        const double v = m(r, c).real();
        CHECK((std::abs(v) < 1e-14 || std::abs(v - 1.0) < 1e-14));
        CHECK(std::abs(m(r, c).imag()) < 1e-14);
        row_sum += v;
      }
      CHECK(row_sum == doctest::Approx(1.0));
    }
  }

  for (double t : {0.5, 0.2}) {
    const CMatrix a = regular_representation(parametric_order2(t))[1];
    CHECK((a - a.adjoint()).norm() < 1e-14);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(a);
    CHECK(es.eigenvalues()[0] == doctest::Approx(-t).epsilon(1e-12));
    CHECK(es.eigenvalues()[1] == doctest::Approx(1.0).epsilon(1e-12));
  }

  const auto c = regular_representation(conjugacy_hypergroup(symmetric_group(3)));
  for (const auto& x : c)
    for (const auto& y : c) CHECK((x * y - y * x).norm() < 1e-14);
}

TEST_CASE("finite groups have hyperdimension equal to the degree") {
  for (const char* name : {"S3", "Q8", "D4", "A4", "S4"}) {
    const Spectrum s = wedderburn_decompose(group_hypergroup(builtin_group(name)));
    for (const auto& pi : s.irreps) CHECK(pi.hyperdimension == doctest::Approx(double(pi.dim)).epsilon(1e-9));
  }
}
