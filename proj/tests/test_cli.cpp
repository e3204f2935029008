#include "orbitfn/io.hpp"

#include "doctest.h"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace orbitfn;
namespace fs = std::filesystem;

namespace {

#ifndef ORBITFN_CLI_PATH
#define ORBITFN_CLI_PATH "orbitfn"
#endif

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const fs::path dir = fs::temp_directory_path() / "orbitfn_cli_test";
  fs::create_directories(dir);
  const fs::path log = dir / "out.txt";
  const std::string cmd = std::string(ORBITFN_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
  const int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = read_text_file(log.string());
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "orbitfn_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("grid subcommand row counts and exit codes") {
  const auto out1 = scratch("b3s10.csv");
  auto r = run_cli("grid --algebra B3 --family s --M 10 -o " + out1.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("count 55") != std::string::npos);
  CHECK(count_lines(read_text_file(out1.string())) == 56);  // header + 55 rows

  const auto out2 = scratch("c3l10.csv");
  r = run_cli("grid --algebra C3 --family l --M 10 -o " + out2.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("count 55") != std::string::npos);

  CHECK(run_cli("grid --algebra B3 --family s --M 0").exit_code == 2);
  CHECK(run_cli("grid --algebra D4 --family s --M 4").exit_code == 2);
  CHECK(run_cli("grid --algebra B3 --family q --M 4").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("weights subcommand json output") {
  const auto out = scratch("b3s11.json");
  const auto r = run_cli("weights --algebra B3 --family s --M 11 --format json -o " + out.string());
  CHECK(r.exit_code == 0);
  const json j = json::parse(read_text_file(out.string()));
  CHECK(j["count"] == 70);
  CHECK(j["algebra"] == "B3");
  CHECK(j["weights"].size() == 70);
}

TEST_CASE("transform roundtrip through files") {
  // Build a sampled field, write it, transform it via the CLI, reload.
  const WeylGroup W(build_algebra(AlgebraName::B3));
  SampledField f{AlgebraName::B3, GridFamily::Short, 8, {}};
  const auto grid = enumerate_grid(W.algebra(), GridFamily::Short, 8);
  for (std::size_t i = 0; i < grid.size(); ++i)
    f.values.emplace_back(std::sin(0.37 * static_cast<double>(i + 1)), 0.25 * static_cast<double>(i % 5));
  const auto in = scratch("field.json");
  write_text_file(in.string(), field_to_json(f).dump());

  const auto out = scratch("spec.json");
  const auto r = run_cli("transform -i " + in.string() + " -o " + out.string() + " --verify-roundtrip");
  CHECK(r.exit_code == 0);
  const auto residual_pos = r.out.find("roundtrip_residual");
  REQUIRE(residual_pos != std::string::npos);
  CHECK(std::stod(r.out.substr(residual_pos + 19)) < 1e-9);

  const auto spec = spectral_field_from_json(json::parse(read_text_file(out.string())));
  const auto direct = forward_transform(W, f);
  REQUIRE(spec.coeffs.size() == direct.coeffs.size());
  for (std::size_t i = 0; i < spec.coeffs.size(); ++i)
    CHECK(std::abs(spec.coeffs[i] - direct.coeffs[i]) < 1e-15);
}

TEST_CASE("transform csv output carries barycentric index columns") {
  const SampledField f{AlgebraName::C3, GridFamily::Long, 4,
                       std::vector<Complex>(5, Complex(1.0, 0.0))};
  REQUIRE(enumerate_grid(build_algebra(AlgebraName::C3), GridFamily::Long, 4).size() == 5);
  const auto in = scratch("csvfield.json");
  write_text_file(in.string(), field_to_json(f).dump());
  const auto out = scratch("csvspec.csv");
  const auto r = run_cli("transform -i " + in.string() + " --format csv -o " + out.string());
  CHECK(r.exit_code == 0);
  const auto text = read_text_file(out.string());
  CHECK(text.rfind("t0,t1,t2,t3,re,im", 0) == 0);
  CHECK(count_lines(text) == 6);
}

TEST_CASE("transform data errors exit with 3") {
  const auto bad = scratch("bad.json");
  write_text_file(bad.string(), "{ not json");
  CHECK(run_cli("transform -i " + bad.string()).exit_code == 3);

  const auto mismatched = scratch("mismatch.json");
  json j = {{"algebra", "B3"}, {"family", "s"}, {"M", 8}, {"kind", "samples"},
            {"data", {{1.0, 0.0}, {2.0, 0.0}}}};
  write_text_file(mismatched.string(), j.dump());
  CHECK(run_cli("transform -i " + mismatched.string()).exit_code == 3);

  CHECK(run_cli("transform -i /nonexistent/file.json").exit_code == 3);
}

TEST_CASE("empty grid transforms cleanly") {
  const auto in = scratch("empty.json");
  const SampledField f{AlgebraName::C3, GridFamily::Short, 2, {}};
  write_text_file(in.string(), field_to_json(f).dump());
  const auto out = scratch("empty_spec.json");
  const auto r = run_cli("transform -i " + in.string() + " -o " + out.string());
  CHECK(r.exit_code == 0);
  CHECK(json::parse(read_text_file(out.string()))["data"].empty());
}

TEST_CASE("interpolate evaluates the spectral field") {
  const WeylGroup W(build_algebra(AlgebraName::C3));
  const auto weights = enumerate_weights(W.algebra(), GridFamily::Long, 6);
  SpectralField s{AlgebraName::C3, GridFamily::Long, 6, {}};
  s.coeffs.assign(weights.size(), Complex(0.0));
  s.coeffs[0] = Complex(1.0);
  const auto in = scratch("interp_spec.json");
  write_text_file(in.string(), field_to_json(s).dump());
  const auto pts = scratch("pts.csv");
  write_text_file(pts.string(), "0.1,0.2,0.05\n");
  const auto out = scratch("values.csv");
  const auto r = run_cli("interpolate -i " + in.string() + " -p " + pts.string() +
                         " --coords alphavee -o " + out.string());
  CHECK(r.exit_code == 0);
  std::istringstream body(read_text_file(out.string()));
  std::string header, line;
  std::getline(body, header);
  std::getline(body, line);
  const auto last_comma = line.rfind(',');
  const auto second_last = line.rfind(',', last_comma - 1);
  const double re = std::stod(line.substr(second_last + 1, last_comma - second_last - 1));
  const double im = std::stod(line.substr(last_comma + 1));
  const Complex want = orbit_sum(W, Series::Sl, weights[0].omega(), Vec3(0.1, 0.2, 0.05));
  CHECK(std::abs(Complex(re, im) - want) < 1e-9);
}

TEST_CASE("verify passes and the corrupted-epsilon control fails") {
  const auto good = run_cli("verify --gram-max 6 --trials 40");
  CHECK(good.exit_code == 0);
  CHECK(good.out.find("[FAIL]") == std::string::npos);
  CHECK(good.out.find("[PASS] discrete-orthogonality") != std::string::npos);

  const auto bad = run_cli("verify --gram-max 6 --trials 10 --corrupt-epsilon");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("[FAIL] discrete-orthogonality") != std::string::npos);
}

TEST_CASE("experiment emits a reproducible report") {
  const auto out1 = scratch("exp1.json");
  const auto out2 = scratch("exp2.json");
  const std::string args =
      "experiment --algebra C3 --family s --M 8 --method mc --mc-samples 20000 --seed 3 -o ";
  CHECK(run_cli(args + out1.string()).exit_code == 0);
  CHECK(run_cli(args + out2.string()).exit_code == 0);
  json a = json::parse(read_text_file(out1.string()));
  json b = json::parse(read_text_file(out2.string()));
  a.erase("runtime_ms");
  b.erase("runtime_ms");
  CHECK(a == b);  // identical config and seed, identical payload
  CHECK(a["mc_samples"] == 20000);
  CHECK(a["seed"] == 3);
  CHECK(a["error_l2"].get<double>() > 0.0);
}

TEST_CASE("grid output is byte-identical across runs") {
  const auto out1 = scratch("g1.csv");
  const auto out2 = scratch("g2.csv");
  CHECK(run_cli("grid --algebra C3 --family s --M 9 -o " + out1.string()).exit_code == 0);
  CHECK(run_cli("grid --algebra C3 --family s --M 9 -o " + out2.string()).exit_code == 0);
  CHECK(read_text_file(out1.string()) == read_text_file(out2.string()));
}

TEST_CASE("slice writes three component files") {
  const auto prefix = scratch("bumpslice").string();
  const auto r = run_cli("slice --bump --algebra C3 --resolution 16 -o " + prefix);
  CHECK(r.exit_code == 0);
  for (const std::string comp : {"re", "im", "abs"}) {
    const auto text = read_text_file(prefix + "_" + comp + ".csv");
    CHECK(count_lines(text) == 18);  // 2 header lines + 16 rows
  }
}
