#include <doctest.h>

#include <cmath>

#include "hyperfourier/builders.hpp"
#include "hyperfourier/errors.hpp"
#include "oracles.hpp"

using namespace hf;

namespace {

oracle::Perm to_oracle(const std::vector<std::size_t>& p) { return oracle::Perm(p.begin(), p.end()); }

// Index of the oracle class containing the permutation of group element x.
std::size_t oracle_class_of(const FiniteGroup& g, std::size_t x, const std::vector<std::set<oracle::Perm>>& cl) {
  const auto p = to_oracle(g.permutations()[x]);
  for (std::size_t i = 0; i < cl.size(); ++i)
    if (cl[i].count(p)) return i;
  FAIL("permutation not found in any class");
  return 0;
}

void check_class_products(const FiniteGroup& g, int degree) {
  const auto cl = oracle::classes(oracle::all_perms(degree));
  const auto expect = oracle::class_products(cl);
  const Hypergroup h = conjugacy_hypergroup(g);
  const auto classes = g.conjugacy_classes();
  REQUIRE(classes.size() == cl.size());
  std::vector<std::size_t> map(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) map[i] = oracle_class_of(g, classes[i].front(), cl);
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j)
      for (std::size_t k = 0; k < h.size(); ++k) CHECK(h.coeff(i, j, k) == doctest::Approx(expect[map[i]][map[j]][map[k]]).epsilon(1e-14));
}

}  // namespace

TEST_CASE("Conj(S3) and Conj(S4) class products equal brute-force counts") {
  check_class_products(symmetric_group(3), 3);
  check_class_products(symmetric_group(4), 4);
}

TEST_CASE("Conj(S3) Haar measure is (1/6, 1/2, 1/3)") {
  const Hypergroup h = conjugacy_hypergroup(symmetric_group(3));
  REQUIRE(h.size() == 3);
  // classes ordered by smallest member: identity, transpositions, 3-cycles
  CHECK(h.haar()[0] == doctest::Approx(1.0 / 6).epsilon(1e-12));
  CHECK(h.haar()[1] == doctest::Approx(1.0 / 2).epsilon(1e-12));
  CHECK(h.haar()[2] == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(h.is_commutative());
}

TEST_CASE("class hypergroup Haar weights are class sizes over |G|") {
  for (const char* name : {"S4", "A4", "Q8", "D4"}) {
    const FiniteGroup g = builtin_group(name);
    const Hypergroup h = conjugacy_hypergroup(g);
    const auto cls = g.conjugacy_classes();
    for (std::size_t i = 0; i < cls.size(); ++i)
      CHECK(h.haar()[i] == doctest::Approx(double(cls[i].size()) / double(g.order())).epsilon(1e-12));
  }
}

TEST_CASE("double coset hypergroup S3 / <(12)>") {
  const FiniteGroup g = symmetric_group(3);
  const Subset h = g.parse_subgroup("(12)");
  const auto cosets = double_cosets(g, h);
  REQUIRE(cosets.size() == 2);
  CHECK(cosets[0] == h);
  const Hypergroup k = double_coset_hypergroup(g, h);
  CHECK(k.haar()[0] == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(k.haar()[1] == doctest::Approx(2.0 / 3).epsilon(1e-12));
  // brute-force: the nontrivial coset has 4 elements; products of pairs from it
  // land in H for 8 of 16 pairs
  CHECK(k.coeff(1, 1, 0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(k.coeff(1, 1, 1) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("double cosets of S3 in S4 form a two-element hypergroup") {
  const FiniteGroup g = symmetric_group(4);
  const Hypergroup k = double_coset_hypergroup(g, g.parse_subgroup("(12),(123)"));
  REQUIRE(k.size() == 2);
  CHECK(k.haar()[0] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(k.haar()[1] == doctest::Approx(0.75).epsilon(1e-12));
  // it is the order-two hypergroup with t = 1/3
  CHECK(k.coeff(1, 1, 0) == doctest::Approx(1.0 / 3).epsilon(1e-14));
}

TEST_CASE("double cosets of the trivial subgroup recover the group") {
  for (const char* name : {"S3", "Q8", "Z5"}) {
    const FiniteGroup g = builtin_group(name);
    const Hypergroup a = double_coset_hypergroup(g, {0});
    const Hypergroup b = group_hypergroup(g);
    CHECK(a.structure() == b.structure());
    CHECK(a.labels() == b.labels());
    CHECK(a.involution() == b.involution());
  }
}

TEST_CASE("group hypergroup is a table of point masses") {
  const FiniteGroup g = symmetric_group(3);
  const Hypergroup h = group_hypergroup(g);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      for (std::size_t k = 0; k < 6; ++k) CHECK(h.coeff(a, b, k) == (g.mul(a, b) == k ? 1.0 : 0.0));
  for (double m : h.haar()) CHECK(m == doctest::Approx(1.0 / 6).epsilon(1e-12));
}

TEST_CASE("fusion hypergroups") {
  const double phi = kGoldenRatio;
  SUBCASE("Fibonacci") {
    const Hypergroup h = fusion_hypergroup(fibonacci_fusion());
    CHECK(h.haar()[0] == doctest::Approx(1.0 / (1.0 + phi * phi)).epsilon(1e-12));
    CHECK(h.haar()[1] == doctest::Approx(phi * phi / (1.0 + phi * phi)).epsilon(1e-12));
    // tau x tau = 1 + tau with c = N d_k / d_tau^2
    CHECK(h.coeff(1, 1, 0) == doctest::Approx(1.0 / (phi * phi)).epsilon(1e-14));
    CHECK(h.coeff(1, 1, 1) == doctest::Approx(phi / (phi * phi)).epsilon(1e-14));
  }
  SUBCASE("Ising") {
    const Hypergroup h = fusion_hypergroup(ising_fusion());
    CHECK(h.haar()[0] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(h.haar()[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(h.haar()[2] == doctest::Approx(0.25).epsilon(1e-12));
  }
  SUBCASE("pointed fusion ring is the cyclic group") {
    const Hypergroup a = fusion_hypergroup(cyclic_fusion(4));
    const Hypergroup b = group_hypergroup(cyclic_group(4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) CHECK(a.coeff(i, j, k) == doctest::Approx(b.coeff(i, j, k)));
  }
}

TEST_CASE("malformed fusion data is rejected") {
  FusionData fd = fibonacci_fusion();
  fd.dims[1] = 2.0;
  CHECK_THROWS_AS(check_fusion_data(fd), PreconditionError);
  fd = fibonacci_fusion();
  fd.fusion[1][1][0] = 0;
  CHECK_THROWS_AS(check_fusion_data(fd), PreconditionError);
  CHECK_THROWS_AS(builtin_fusion("haagerup"), UsageError);
}

TEST_CASE("order-two family") {
  for (double t : {1.0, 0.5, 0.25}) {
    const Hypergroup h = parametric_order2(t);
    CHECK(h.coeff(1, 1, 0) == doctest::Approx(t));
    CHECK(h.coeff(1, 1, 1) == doctest::Approx(1.0 - t));
    CHECK(h.haar()[0] == doctest::Approx(t / (1.0 + t)).epsilon(1e-12));
  }
  CHECK(parametric_order2(1.0).structure() == group_hypergroup(cyclic_group(2)).structure());
  CHECK_THROWS_AS(parametric_order2(0.0), DomainError);
  CHECK_THROWS_AS(parametric_order2(1.5), DomainError);
  CHECK_THROWS_AS(parametric_order2(-0.2), DomainError);
}

TEST_CASE("every builder output passes validation") {
  std::vector<Hypergroup> all;
  for (const auto& name : builtin_group_names()) all.push_back(group_hypergroup(builtin_group(name)));
  for (const char* name : {"S3", "S4", "A4", "Q8"}) all.push_back(conjugacy_hypergroup(builtin_group(name)));
  all.push_back(fusion_hypergroup(fibonacci_fusion()));
  all.push_back(fusion_hypergroup(ising_fusion()));
  for (const auto& h : all) CHECK(validate(h).max_violation() <= 1e-9);
}

TEST_CASE("Conj(S3): transposition squared is 1/3 identity plus 2/3 three-cycles") {
  const FiniteGroup g = symmetric_group(3);
  const Hypergroup h = conjugacy_hypergroup(g);
  const auto cls = g.conjugacy_classes();
  const std::size_t t = 1, c = 2;
  REQUIRE(cls[t].size() == 3);
  REQUIRE(cls[c].size() == 2);
  CHECK(h.coeff(t, t, 0) == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(h.coeff(t, t, c) == doctest::Approx(2.0 / 3).epsilon(1e-14));
  CHECK(h.coeff(t, t, t) == 0.0);
}

TEST_CASE("abelian class hypergroups are the group itself") {
  const FiniteGroup g = cyclic_group(6);
  CHECK(conjugacy_hypergroup(g).structure() == group_hypergroup(g).structure());
}

TEST_CASE("normal subgroup double cosets give the quotient group") {
  const FiniteGroup g = symmetric_group(3);
  const Hypergroup q = double_coset_hypergroup(g, g.parse_subgroup("(123)"));
  CHECK(q.structure() == group_hypergroup(cyclic_group(2)).structure());
  const FiniteGroup s4 = symmetric_group(4);
  const Hypergroup v = double_coset_hypergroup(s4, s4.parse_subgroup("(12)(34),(13)(24)"));
  CHECK(v.size() == 6);
  CHECK(v.structure() == group_hypergroup(symmetric_group(3)).structure());
}

TEST_CASE("order-two family recovers the double coset and Fibonacci hypergroups") {
  const FiniteGroup g = symmetric_group(3);
  const Hypergroup dc = double_coset_hypergroup(g, g.parse_subgroup("(12)"));
  const Hypergroup half = parametric_order2(0.5);
  const Hypergroup fib = fusion_hypergroup(fibonacci_fusion());
  const Hypergroup golden = parametric_order2(1.0 / (kGoldenRatio * kGoldenRatio));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        CHECK(half.coeff(i, j, k) == doctest::Approx(dc.coeff(i, j, k)).epsilon(1e-15));
        CHECK(golden.coeff(i, j, k) == doctest::Approx(fib.coeff(i, j, k)).epsilon(1e-14));
      }
  CHECK(fusion_hypergroup(cyclic_fusion(2)).structure() == group_hypergroup(cyclic_group(2)).structure());
}
