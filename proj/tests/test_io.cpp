#include <doctest.h>

#include "hyperfourier/builders.hpp"
#include "hyperfourier/errors.hpp"
#include "hyperfourier/io.hpp"

using namespace hf;

TEST_CASE("hypergroup documents round trip exactly") {
  for (const Hypergroup& h : {conjugacy_hypergroup(symmetric_group(4)), fusion_hypergroup(fibonacci_fusion()), parametric_order2(0.3),
                              double_coset_hypergroup(symmetric_group(3), symmetric_group(3).parse_subgroup("(12)"))}) {
    const std::string text = io::write_hypergroup(h);
    const Hypergroup back = io::read_hypergroup(text);
    CHECK(back.structure() == h.structure());
    CHECK(back.labels() == h.labels());
    CHECK(back.involution() == h.involution());
    CHECK(back.identity() == h.identity());
    CHECK(io::write_hypergroup(back) == text);
  }
}

TEST_CASE("malformed hypergroup documents") {
  CHECK_THROWS_AS(io::read_hypergroup("{"), StructuralError);
  CHECK_THROWS_AS(io::read_hypergroup(R"({"size": 1})"), StructuralError);
  CHECK_THROWS_AS(io::read_hypergroup(R"({"size": 2, "identity": 0, "involution": [0, 1], "structure": [[[1, 0]]]})"), StructuralError);
  // valid shape, broken axioms
  CHECK_THROWS_AS(io::read_hypergroup(R"({"size": 2, "identity": 0, "involution": [0, 1],
      "structure": [[[1, 0], [0, 1]], [[0, 1], [0.5, 0.4]]]})"),
                  ValidationError);
  // wrong Haar field
  CHECK_THROWS_AS(io::read_hypergroup(R"({"size": 2, "identity": 0, "involution": [0, 1],
      "structure": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]], "haar": [0.9, 0.1]})"),
                  ValidationError);
  const Hypergroup z2 = io::read_hypergroup(R"({"size": 2, "identity": 0, "involution": [0, 1],
      "structure": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]], "haar": [0.5, 0.5]})");
  CHECK(z2.labels() == std::vector<std::string>{"0", "1"});
}

TEST_CASE("group and fusion documents") {
  const FiniteGroup g = io::group_from_json(io::json::parse(R"({"order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]})"));
  CHECK(g.order() == 3);
  const FusionData fd = io::fusion_from_json(io::json::parse(R"({"rank": 2, "N": [[[1,0],[0,1]],[[0,1],[1,0]]], "dims": [1,1], "dual": [0,1]})"));
  CHECK(fusion_hypergroup(fd).size() == 2);
}

TEST_CASE("density and dual element documents") {
  const Density f({cplx(1.0, -2.0), cplx(0.25, 0.0)});
  const Density back = io::density_from_json(io::density_to_json(f, io::kFullDigits));
  CHECK(back.values() == f.values());
  CHECK(io::density_from_json(io::json::parse(R"({"values": [1, 0, 0]})")).values() == std::vector<cplx>{1.0, 0.0, 0.0});
  CHECK(io::density_from_json(io::json::parse(R"([1, [0, 1]])")).values() == std::vector<cplx>{1.0, cplx(0.0, 1.0)});

  DualElement x(std::vector<CMatrix>{CMatrix::Constant(1, 1, cplx(0.5, 0.5)), CMatrix::Identity(2, 2)});
  const DualElement y = io::dual_from_json(io::dual_to_json(x, io::kFullDigits));
  CHECK(y.max_abs_diff(x) == 0.0);
  CHECK_THROWS_AS(io::dual_from_json(io::json::parse(R"({"blocks": [{"irrep": 0, "matrix": [[1, 2]]}]})")), StructuralError);
}

TEST_CASE("number formatting") {
  CHECK(io::format_number(1.0 / 3.0, 12) == "0.333333333333");
  CHECK(io::format_number(kInfinity, 12) == "inf");
  CHECK(io::round_digits(2.0 / 3.0, 3) == 0.667);
  CHECK(io::chop(1e-20) == 0.0);
  CHECK(io::chop(1e-3) == 1e-3);
}

TEST_CASE("reports omit wall time") {
  VerificationReport r;
  r.suite = "parseval";
  r.hypergroup = "group:Z2";
  r.wall_time_seconds = 12.5;
  r.details = {{"a", 1.0}};
  const auto j = io::report_to_json(r, 12);
  CHECK_FALSE(j.contains("wall_time_seconds"));
  CHECK(j.at("details").at("a") == 1.0);
  const std::string csv = io::reports_csv({r}, 12);
  CHECK(csv.find("parseval,\"group:Z2\"") != std::string::npos);
}

TEST_CASE("character table CSV for Conj(S3)") {
  const Hypergroup h = conjugacy_hypergroup(symmetric_group(3));
  const std::string csv = io::character_table_csv(h, wedderburn_decompose(h), 12);
  CHECK(csv.find("0,1,1,1,1") != std::string::npos);
  CHECK(csv.find("2,4,1,0,-0.5") != std::string::npos);
}
