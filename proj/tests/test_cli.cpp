#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "hyperfourier/cli.hpp"
#include "hyperfourier/io.hpp"

using namespace hf;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST_CASE("gen writes a validated hypergroup document") {
  const Result r = run({"gen", "conj:S3"});
  CHECK(r.code == 0);
  const auto j = io::json::parse(r.out);
  CHECK(j.at("size") == 3);
  const auto haar = j.at("haar").get<std::vector<double>>();
  CHECK(haar[0] == doctest::Approx(1.0 / 6).epsilon(1e-15));
  CHECK(haar[1] == doctest::Approx(1.0 / 2).epsilon(1e-15));
  CHECK(haar[2] == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(r.err.find("validation: pass") != std::string::npos);

  CHECK(run({"gen", "group:Z2"}).code == 0);
  CHECK(run({"gen", "fusion:fib"}).code == 0);

  const std::string path = temp_path("hf_cli_gen.json");
  const Result w = run({"gen", "doublecoset:S4:(12)", "--out", path});
  CHECK(w.code == 0);
  CHECK(w.out.find("validation: pass") != std::string::npos);
  CHECK(io::read_hypergroup(io::read_file(path)).size() == 7);
  std::filesystem::remove(path);
}

TEST_CASE("gen rejects unknown builders with exit code 2") {
  CHECK(run({"gen", "conj:M11"}).code == 2);
  CHECK(run({"gen", "widget:S3"}).code == 2);
  CHECK(run({"gen"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("analyze reports dimensions and hyperdimensions") {
  const Result c = run({"analyze", "conj:S3", "--format", "json"});
  REQUIRE(c.code == 0);
  const auto j = io::json::parse(c.out);
  CHECK(j.at("dims") == io::json::array({1, 1, 1}));
  const auto k = j.at("hyperdimensions").get<std::vector<double>>();
  CHECK(k[0] == doctest::Approx(1.0));
  CHECK(k[1] == doctest::Approx(1.0));
  CHECK(k[2] == doctest::Approx(4.0));
  CHECK(j.at("sum_check") == true);

  const Result s = run({"analyze", "group:S3"});
  CHECK(s.code == 0);
  CHECK(s.out.find("dims: 1, 1, 2") != std::string::npos);
  CHECK(s.out.find("noncommutative") != std::string::npos);

  const Result z = run({"analyze", "group:Z1"});
  CHECK(z.code == 0);
  CHECK(z.out.find("irreps: 1") != std::string::npos);

  CHECK(run({"analyze", "group:S3", "--format", "csv"}).code == 2);
  CHECK(run({"analyze", "conj:S3", "--format", "csv"}).out.rfind("irrep,hyperdimension", 0) == 0);
}

TEST_CASE("analyze of an invalid file exits with 1") {
  const std::string path = temp_path("hf_cli_bad.json");
  io::write_file(path, R"({"size": 2, "identity": 0, "involution": [0, 1], "structure": [[[1, 0], [0, 1]], [[0, 1], [0.5, 0.4]]]})");
  const Result r = run({"analyze", "file:" + path});
  CHECK(r.code == 1);
  CHECK(r.err.find("normalization") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("verify named suites") {
  const Result p = run({"verify", "parseval", "group:Z6", "--trials", "20"});
  CHECK(p.code == 0);
  const auto j = io::json::parse(p.out);
  CHECK(j.at("pass") == true);
  CHECK(j.at("reports").size() == 1);

  const Result d = run({"verify", "donoho-stark", "group:Z2", "--trials", "1", "--format", "text"});
  CHECK(d.code == 0);
  CHECK(d.out.find("PASS donoho-stark group:Z2") != std::string::npos);

  const Result csv = run({"verify", "young", "inversion", "conj:S3", "order2:1/2", "--trials", "5", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 5);
}

TEST_CASE("verify reports failures with exit code 1 and a witness") {
  const Result r = run({"verify", "parseval", "group:S4", "--trials", "10", "--tolerance", "1e-300"});
  CHECK(r.code == 1);
  CHECK(r.err.find("FAIL parseval") != std::string::npos);
  CHECK(r.err.find("witness") != std::string::npos);
}

TEST_CASE("verify output is independent of the thread count and honors the seed") {
  const Result a = run({"verify", "group:S3", "conj:S4", "--trials", "15", "--seed", "7", "--threads", "1"});
  const Result b = run({"verify", "group:S3", "conj:S4", "--trials", "15", "--seed", "7", "--threads", "8"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Result c = run({"verify", "group:S3", "conj:S4", "--trials", "15", "--seed", "8"});
  CHECK(c.out != a.out);
  const Result hex = run({"verify", "group:S3", "conj:S4", "--trials", "15", "--seed", "0x7"});
  CHECK(hex.out == a.out);
}

TEST_CASE("seed falls back to the environment") {
  const Result def = run({"verify", "parseval", "group:Z3", "--trials", "3"});
  CHECK(io::json::parse(def.out).at("seed") == 0xC0FFEE);
  ::setenv("HYPERFOURIER_SEED", "99", 1);
  const Result env = run({"verify", "parseval", "group:Z3", "--trials", "3"});
  const Result flag = run({"verify", "parseval", "group:Z3", "--trials", "3", "--seed", "5"});
  ::unsetenv("HYPERFOURIER_SEED");
  CHECK(io::json::parse(env.out).at("seed") == 99);
  CHECK(io::json::parse(flag.out).at("seed") == 5);
  CHECK(run({"verify", "group:Z3", "--seed", "abc"}).code == 2);
}

TEST_CASE("galois subcommands") {
  const Result z6 = run({"galois", "lattice", "group:Z6"});
  CHECK(z6.code == 0);
  std::size_t nodes = 0;
  for (std::size_t pos = 0; (pos = z6.out.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
  CHECK(nodes == 4);

  const Result z1 = run({"galois", "lattice", "group:Z1", "--format", "json"});
  CHECK(io::json::parse(z1.out).at("subhypergroups").size() == 1);

  const Result chk = run({"galois", "check", "S3", "(12)"});
  CHECK(chk.code == 0);
  CHECK(chk.out.find("bijection confirmed") != std::string::npos);

  CHECK(run({"galois", "lattice", "group:Z30"}).code == 2);
  CHECK(run({"galois", "check", "S3", "(14)"}).code == 2);
}

TEST_CASE("fourier subcommand") {
  const std::string f = temp_path("hf_cli_density.json");
  io::write_file(f, R"({"values": [1, 0, 0]})");
  const Result r = run({"fourier", "conj:S3", "--input", f, "--norms", "1,2,inf"});
  REQUIRE(r.code == 0);
  const auto j = io::json::parse(r.out);
  const auto& n = j.at("norms").at("density");
  CHECK(n.at("1").get<double>() == doctest::Approx(1.0 / 6));
  CHECK(n.at("2").get<double>() == doctest::Approx(1.0 / std::sqrt(6.0)));
  CHECK(n.at("inf").get<double>() == doctest::Approx(1.0));
  CHECK(j.at("round_trip_error").get<double>() <= 1e-9);

  // constant density: only the trivial block is nonzero
  io::write_file(f, R"({"values": [1, 1, 1, 1, 1, 1]})");
  const Result c = run({"fourier", "group:S3", "--input", f});
  REQUIRE(c.code == 0);
  const DualElement x = io::dual_from_json(io::json::parse(c.out).at("transform"));
  CHECK(std::abs(x[0](0, 0) - 1.0) < 1e-12);
  CHECK(x[1].norm() < 1e-12);
  CHECK(x[2].norm() < 1e-12);

  // round trip through the inverse
  const std::string dual = temp_path("hf_cli_dual.json");
  io::write_file(f, R"({"values": [[0.3, 1], [-2, 0.5], 0.25, [1, -1], 4, [0, 2]]})");
  const Result fwd = run({"fourier", "group:S3", "--input", f, "--full-precision"});
  io::write_file(dual, io::json::parse(fwd.out).at("transform").dump());
  const Result inv = run({"fourier", "group:S3", "--input", dual, "--inverse", "--full-precision"});
  REQUIRE(inv.code == 0);
  const Density back = io::density_from_json(io::json::parse(inv.out).at("density"));
  CHECK(std::abs(back[0] - cplx(0.3, 1)) < 1e-9);
  CHECK(std::abs(back[4] - cplx(4, 0)) < 1e-9);

  // wrong block shapes
  io::write_file(dual, R"({"blocks": [{"irrep": 0, "matrix": [[1]]}]})");
  CHECK(run({"fourier", "group:S3", "--input", dual, "--inverse"}).code == 1);
  CHECK(run({"fourier", "group:S3", "--input", f, "--norms", "0.5"}).code == 2);
  std::filesystem::remove(f);
  std::filesystem::remove(dual);
}

TEST_CASE("help exits cleanly") {
  const Result r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}
