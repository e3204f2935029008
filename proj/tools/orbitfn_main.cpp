// Command-line front end: grid/weight-set generation, discrete transforms,
// interpolation, verification suites, and the reference interpolation
// experiments.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 data error.

#include "orbitfn/io.hpp"
#include "orbitfn/summation.hpp"

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

using namespace orbitfn;

namespace {

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const WeylGroup& group(AlgebraName n) {
  static const WeylGroup b3(build_algebra(AlgebraName::B3));
  static const WeylGroup c3(build_algebra(AlgebraName::C3));
  return n == AlgebraName::B3 ? b3 : c3;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DataError("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  write_text_file(path, content);
}

// ---- grid / weights ----------------------------------------------------

struct GridArgs {
  std::string algebra, family, format = "csv", output;
  Int M = 0;
};

int run_grid(const GridArgs& a, bool weights) {
  const Algebra& alg = build_algebra(parse_algebra(a.algebra));
  const GridFamily fam = parse_family(a.family);
  std::ostringstream body;
  std::size_t count = 0;
  if (weights) {
    const auto wts = enumerate_weights(alg, fam, a.M);
    count = wts.size();
    if (a.format == "json")
      body << weights_to_json(alg, fam, a.M, wts).dump(2) << '\n';
    else
      write_weights_csv(body, alg, wts);
  } else {
    const auto pts = enumerate_grid(alg, fam, a.M);
    count = pts.size();
    if (a.format == "json")
      body << grid_to_json(alg, fam, a.M, pts).dump(2) << '\n';
    else
      write_grid_csv(body, alg, pts);
  }
  emit(a.output, body.str());
  if (a.output.empty() || a.output == "-")
    std::cerr << "count " << count << '\n';
  else
    std::cout << "count " << count << '\n';
  return 0;
}

// ---- transform ----------------------------------------------------------

int run_transform(const std::string& input, const std::string& output, const std::string& format,
                  bool roundtrip, unsigned threads) {
  SampledField field;
  try {
    field = sampled_field_from_json(load_json(input));
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
  const WeylGroup& W = group(field.algebra);
  SpectralField spec;
  try {
    spec = forward_transform(W, field, threads);
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
  if (format == "csv") {
    std::ostringstream body;
    write_field_csv(body, W.algebra(), spec);
    emit(output, body.str());
  } else {
    emit(output, field_to_json(spec).dump(2) + "\n");
  }
  std::cout << "coefficients " << spec.coeffs.size() << '\n';
  if (roundtrip) {
    const auto back = inverse_on_grid(W, spec, threads);
    double worst = 0;
    for (std::size_t i = 0; i < back.size(); ++i)
      worst = std::max(worst, std::abs(back[i] - field.values[i]) /
                                  (1.0 + std::abs(field.values[i])));
    std::cout << "roundtrip_residual " << worst << '\n';
  }
  return 0;
}

// ---- interpolate ---------------------------------------------------------

int run_interpolate(const std::string& input, const std::string& points_path,
                    const std::string& coords, const std::string& output) {
  SpectralField spec;
  try {
    spec = spectral_field_from_json(load_json(input));
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
  const WeylGroup& W = group(spec.algebra);
  std::vector<Vec3> pts;
  {
    std::ifstream in(points_path);
    if (!in) throw DataError("cannot open '" + points_path + "'");
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#' || line[0] == 'x') continue;
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream ls(line);
      Vec3 p;
      if (!(ls >> p[0] >> p[1] >> p[2])) throw DataError("bad point line: " + line);
      pts.push_back(p);
    }
  }
  std::ostringstream body;
  body << "x1,x2,x3,re,im\n";
  body.precision(17);
  for (const Vec3& p : pts) {
    const Vec3 x = coords == "alphavee" ? p : W.algebra().alphavee_from_point(p);
    const Complex v = inverse_transform(W, spec, x);
    body << p[0] << ',' << p[1] << ',' << p[2] << ',' << v.real() << ',' << v.imag() << '\n';
  }
  emit(output, body.str());
  return 0;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  Int gram_max = 8;
  int trials = 100;
  std::uint64_t seed = 0;
  bool corrupt_epsilon = false;  // negative-control hook for the test suite
};

struct Suite {
  bool ok = true;
  std::string first_failure;

  void fail(const std::string& what) {
    if (ok) first_failure = what;
    ok = false;
  }
};

void report(const std::string& name, const Suite& s, int& failures) {
  if (s.ok) {
    std::cout << "[PASS] " << name << '\n';
  } else {
    std::cout << "[FAIL] " << name << ": " << s.first_failure << '\n';
    ++failures;
  }
}

int run_verify(const VerifyArgs& a) {
  int failures = 0;
  std::mt19937_64 rng(a.seed + 1);

  {  // stabilizer-order table for dominant weights
    Suite s;
    // Indexed by the nonzero mask (bit i set = coordinate i nonzero):
    // (0,0,0)->48 (a,0,0)->8 (0,b,0)->4 (a,b,0)->2 (0,0,c)->6 (a,0,c)->2
    // (0,b,c)->2 (a,b,c)->1.
    const int expected[8] = {48, 8, 4, 2, 6, 2, 2, 1};
    std::uniform_int_distribution<Int> nz(1, 20);
    for (auto name : {AlgebraName::B3, AlgebraName::C3}) {
      const WeylGroup& W = group(name);
      for (int mask = 0; mask < 8; ++mask)
        for (int t = 0; t < 10; ++t) {
          IVec3 lam;
          for (int i = 0; i < 3; ++i) lam[i] = (mask >> i) & 1 ? nz(rng) : 0;
          const int got = stabilizer_order_d(W, lam);
          if (got != expected[mask])
            s.fail("d(" + std::to_string(lam[0]) + "," + std::to_string(lam[1]) + "," +
                   std::to_string(lam[2]) + ") = " + std::to_string(got) + " in " +
                   to_string(name));
        }
    }
    report("stabilizer-orders", s, failures);
  }

  {  // counting formulas
    Suite s;
    for (auto name : {AlgebraName::B3, AlgebraName::C3}) {
      const Algebra& alg = build_algebra(name);
      for (auto fam : {GridFamily::Short, GridFamily::Long})
        for (Int M = 1; M <= 20; ++M) {
          const Int want = grid_count_closed_form(alg, fam, M);
          const Int got = static_cast<Int>(enumerate_grid(alg, fam, M).size());
          const Int gotw = static_cast<Int>(enumerate_weights(alg, fam, M).size());
          if (got != want || gotw != want)
            s.fail(to_string(name) + " " + to_string(fam) + " M=" + std::to_string(M) + ": " +
                   std::to_string(got) + "/" + std::to_string(gotw) + " vs " +
                   std::to_string(want));
        }
    }
    report("grid-counts", s, failures);
  }

  {  // discrete orthogonality (optionally with a corrupted epsilon table)
    Suite s;
    for (auto name : {AlgebraName::B3, AlgebraName::C3}) {
      const WeylGroup& W = group(name);
      const Algebra& alg = W.algebra();
      for (auto fam : {GridFamily::Short, GridFamily::Long})
        for (Int M = 4; M <= a.gram_max; M += 2) {
          const auto grid = enumerate_grid(alg, fam, M);
          const auto wts = enumerate_weights(alg, fam, M);
          if (grid.empty()) continue;
          const PhaseTable table(alg.coweight_coroot_den * M);
          std::vector<int> eps;
          for (const auto& p : grid) eps.push_back(orbit_size_eps(W, grid_torus_point(alg, p)));
          if (a.corrupt_epsilon) eps[0] += 1;
          Eigen::MatrixXcd v(wts.size(), grid.size());
          for (std::size_t li = 0; li < wts.size(); ++li)
            for (std::size_t xi = 0; xi < grid.size(); ++xi)
              v(li, xi) = orbit_sum(W, series_of(fam), wts[li].omega(),
                                    grid_torus_point(alg, grid[xi]), table);
          const double m3 = static_cast<double>(M) * M * M;
          for (std::size_t i = 0; i < wts.size(); ++i)
            for (std::size_t j = 0; j < wts.size(); ++j) {
              ComplexSum acc;
              for (std::size_t xi = 0; xi < grid.size(); ++xi)
                acc.add(static_cast<double>(eps[xi]) * v(i, xi) * std::conj(v(j, xi)));
              const double want =
                  i == j ? 96.0 * m3 * stabilizer_order_h(W, wts[i].omega(), M) : 0.0;
              if (std::abs(acc.value() - Complex(want)) > 1e-8 * 96.0 * m3 * 48.0)
                s.fail(to_string(name) + " " + to_string(fam) + " M=" + std::to_string(M) +
                       " G[" + std::to_string(i) + "," + std::to_string(j) + "]");
            }
        }
    }
    report("discrete-orthogonality", s, failures);
  }

  {  // shift and Weyl invariances
    Suite s;
    std::uniform_int_distribution<Int> coord(0, 6);
    for (auto name : {AlgebraName::B3, AlgebraName::C3}) {
      const WeylGroup& W = group(name);
      for (auto fam : {Series::C, Series::S, Series::Ss, Series::Sl}) {
        IVec3 lam;
        do {
          lam = IVec3(coord(rng), coord(rng), coord(rng));
        } while (!weight_in_cone(W.algebra(), fam, lam));
        const auto rep = verify_symmetries(W, {fam, lam}, a.trials, a.seed + 17);
        if (rep.worst() > 1e-10)
          s.fail(to_string(name) + " " + to_string(fam) + " deviation " +
                 std::to_string(rep.worst()));
      }
    }
    report("symmetries", s, failures);
  }

  {  // explicit expansions against the generic sum
    Suite s;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<Int> coord(0, 8);
    for (auto name : {AlgebraName::B3, AlgebraName::C3}) {
      const WeylGroup& W = group(name);
      for (auto fam : {Series::Ss, Series::Sl})
        for (int t = 0; t < a.trials; ++t) {
          IVec3 lam;
          do {
            lam = IVec3(coord(rng), coord(rng), coord(rng));
          } while (!weight_in_cone(W.algebra(), fam, lam));
          const Vec3 x(unit(rng), unit(rng), unit(rng));
          const Complex g = orbit_sum(W, fam, lam, x);
          const Complex e = eval_explicit(W.algebra(), fam, lam, x);
          if (std::abs(g - e) / (1.0 + std::abs(g)) > 1e-10)
            s.fail(to_string(name) + " " + to_string(fam));
        }
    }
    report("explicit-expansions", s, failures);
  }

  {  // C3 determinant/permanent correspondence
    Suite s;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<Int> coord(0, 8);
    const WeylGroup& W = group(AlgebraName::C3);
    for (auto fam : {Series::C, Series::S, Series::Ss, Series::Sl})
      for (int t = 0; t < a.trials; ++t) {
        IVec3 lam;
        do {
          lam = IVec3(coord(rng), coord(rng), coord(rng));
        } while (!weight_in_cone(W.algebra(), fam, lam));
        const Vec3 x(unit(rng), unit(rng), unit(rng));
        if (trig_correspondence_C3(W, fam, lam, x).deviation > 1e-10)
          s.fail(to_string(fam) + " at trial " + std::to_string(t));
      }
    report("trig-correspondence", s, failures);
  }

  {  // orbit-stabilizer relation
    Suite s;
    std::uniform_int_distribution<Int> num(0, 29);
    for (auto name : {AlgebraName::B3, AlgebraName::C3}) {
      const WeylGroup& W = group(name);
      for (int t = 0; t < a.trials; ++t) {
        const TorusPoint x(IVec3(num(rng), num(rng), num(rng)), 30);
        if (orbit_size_eps(W, x) * torus_stabilizer_order(W, x) != 48)
          s.fail(to_string(name) + " torus point trial " + std::to_string(t));
      }
    }
    report("orbit-stabilizer", s, failures);
  }

  {  // transform round trip
    Suite s;
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto name : {AlgebraName::B3, AlgebraName::C3}) {
      const WeylGroup& W = group(name);
      for (auto fam : {GridFamily::Short, GridFamily::Long}) {
        SampledField f{name, fam, 6, {}};
        const auto n = enumerate_grid(W.algebra(), fam, 6).size();
        for (std::size_t i = 0; i < n; ++i) f.values.emplace_back(u(rng), u(rng));
        const auto back = inverse_on_grid(W, forward_transform(W, f));
        for (std::size_t i = 0; i < n; ++i)
          if (std::abs(back[i] - f.values[i]) > 1e-9 * (1.0 + std::abs(f.values[i])))
            s.fail(to_string(name) + " " + to_string(fam) + " index " + std::to_string(i));
      }
    }
    report("transform-roundtrip", s, failures);
  }

  return failures == 0 ? 0 : 1;
}

// ---- experiment ------------------------------------------------------------

struct ExperimentArgs {
  bool paper_f1 = false, paper_f2 = false;
  std::string algebra = "C3", family = "s", method = "exact", output, slice_prefix;
  std::vector<Int> Ms;
  double alpha = 1.0 / 20.0, beta = 1.0 / 9.0;
  std::vector<double> center = {11.0 / 20.0, 1.0 / 3.0, 1.0 / 8.0};
  Int mc_samples = 2000000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

int run_experiment_cmd(const ExperimentArgs& a) {
  AlgebraName alg = parse_algebra(a.algebra);
  GridFamily fam = parse_family(a.family);
  BumpSpec bump{a.alpha, a.beta, Vec3(a.center[0], a.center[1], a.center[2])};
  std::vector<Int> ms = a.Ms;
  if (a.paper_f1 || a.paper_f2) {
    if (a.paper_f1 && a.paper_f2) throw CLI::ValidationError("choose one of --paper-f1/--paper-f2");
    alg = a.paper_f1 ? AlgebraName::C3 : AlgebraName::B3;
    fam = a.paper_f1 ? GridFamily::Short : GridFamily::Long;
    bump = a.paper_f1 ? reference_bump_f1() : reference_bump_f2();
    if (ms.empty()) ms = {8, 16, 24, 32, 40};
  }
  if (ms.empty()) ms = {8};

  ExperimentOptions opts;
  opts.method = a.method == "mc" ? ErrorMethod::MonteCarlo : ErrorMethod::Exact;
  opts.mc_samples = a.mc_samples;
  opts.seed = a.seed;
  opts.threads = a.threads;

  const WeylGroup& W = group(alg);
  json reports = json::array();
  for (Int M : ms) {
    const auto res = run_experiment(W, fam, M, bump, opts);
    reports.push_back(experiment_to_json(res));
    std::cout << "M=" << M << " error_l2=" << res.error_l2 << " (" << res.method << ")\n";
    if (!a.slice_prefix.empty()) {
      const auto s = slice_export(W.algebra(), interpolant_evaluator(W, res.coefficients), 2,
                                  bump.center[2], 65);
      for (const std::string comp : {"re", "im", "abs"}) {
        std::ostringstream body;
        write_slice_csv(body, s, comp);
        write_text_file(a.slice_prefix + "_M" + std::to_string(M) + "_" + comp + ".csv",
                        body.str());
      }
    }
  }
  emit(a.output, (reports.size() == 1 ? reports[0] : reports).dump(2) + "\n");
  return 0;
}

// ---- slice -------------------------------------------------------------------

struct SliceArgs {
  std::string input, algebra = "C3", output = "slice";
  bool bump = false;
  double alpha = 1.0 / 20.0, beta = 1.0 / 9.0;
  std::vector<double> center = {11.0 / 20.0, 1.0 / 3.0, 1.0 / 8.0};
  int axis = 2;
  double value = 1.0 / 8.0;
  int resolution = 128;
};

int run_slice(const SliceArgs& a) {
  std::function<Complex(const Vec3&)> eval;
  const Algebra* alg = nullptr;
  if (a.bump) {
    alg = &build_algebra(parse_algebra(a.algebra));
    eval = bump_evaluator(BumpSpec{a.alpha, a.beta, Vec3(a.center[0], a.center[1], a.center[2])});
  } else {
    if (a.input.empty()) throw CLI::ValidationError("slice needs --input or --bump");
    SpectralField spec;
    try {
      spec = spectral_field_from_json(load_json(a.input));
    } catch (const std::invalid_argument& e) {
      throw DataError(e.what());
    }
    const WeylGroup& W = group(spec.algebra);
    alg = &W.algebra();
    eval = interpolant_evaluator(W, spec);
  }
  const auto s = slice_export(*alg, eval, a.axis, a.value, a.resolution);
  for (const std::string comp : {"re", "im", "abs"}) {
    std::ostringstream body;
    write_slice_csv(body, s, comp);
    write_text_file(a.output + "_" + comp + ".csv", body.str());
  }
  std::cout << "slices written to " << a.output << "_{re,im,abs}.csv\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl orbit-function grids, discrete transforms and interpolation for B3/C3"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "cap worker threads (0 = auto)");

  GridArgs grid_args;
  auto* grid = app.add_subcommand("grid", "enumerate the point grid F_M");
  grid->add_option("--algebra", grid_args.algebra, "B3 or C3")->required();
  grid->add_option("--family", grid_args.family, "s or l")->required();
  grid->add_option("--M", grid_args.M, "grid density (>= 1)")->required();
  grid->add_option("--format", grid_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  grid->add_option("--output,-o", grid_args.output, "output path (default stdout)");

  GridArgs weight_args;
  auto* weights = app.add_subcommand("weights", "enumerate the weight set Lambda_M");
  weights->add_option("--algebra", weight_args.algebra, "B3 or C3")->required();
  weights->add_option("--family", weight_args.family, "s or l")->required();
  weights->add_option("--M", weight_args.M, "grid density (>= 1)")->required();
  weights->add_option("--format", weight_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  weights->add_option("--output,-o", weight_args.output, "output path (default stdout)");

  std::string tf_input, tf_output, tf_format = "json";
  bool tf_roundtrip = false;
  auto* transform = app.add_subcommand("transform", "forward transform of a sampled field");
  transform->add_option("--input,-i", tf_input, "sampled-field JSON")->required();
  transform->add_option("--output,-o", tf_output, "spectral-field output (default stdout)");
  transform->add_option("--format", tf_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  transform->add_flag("--verify-roundtrip", tf_roundtrip, "report the reconstruction residual");

  std::string ip_input, ip_points, ip_coords = "orthonormal", ip_output;
  auto* interpolate = app.add_subcommand("interpolate", "evaluate an interpolant at points");
  interpolate->add_option("--input,-i", ip_input, "spectral-field JSON")->required();
  interpolate->add_option("--points,-p", ip_points, "CSV/whitespace file of points")->required();
  interpolate->add_option("--coords", ip_coords, "orthonormal or alphavee")
      ->check(CLI::IsMember({"orthonormal", "alphavee"}));
  interpolate->add_option("--output,-o", ip_output, "output CSV (default stdout)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run the structural verification suites");
  verify->add_option("--gram-max", verify_args.gram_max, "largest M for the Gram checks");
  verify->add_option("--trials", verify_args.trials, "random trials per suite");
  verify->add_option("--seed", verify_args.seed, "RNG seed");
  verify->add_flag("--corrupt-epsilon", verify_args.corrupt_epsilon,
                   "negative control: corrupt one orbit size");

  ExperimentArgs ex;
  auto* experiment = app.add_subcommand("experiment", "interpolation error experiments");
  experiment->add_flag("--paper-f1", ex.paper_f1, "reference bump on the short grids of C3");
  experiment->add_flag("--paper-f2", ex.paper_f2, "reference bump on the long grids of B3");
  experiment->add_option("--algebra", ex.algebra, "B3 or C3");
  experiment->add_option("--family", ex.family, "s or l");
  experiment->add_option("--M", ex.Ms, "grid densities");
  experiment->add_option("--alpha", ex.alpha, "bump inner radius");
  experiment->add_option("--beta", ex.beta, "bump outer radius");
  experiment->add_option("--center", ex.center, "bump center (orthonormal)")->expected(3);
  experiment->add_option("--method", ex.method, "exact or mc")
      ->check(CLI::IsMember({"exact", "mc"}));
  experiment->add_option("--mc-samples", ex.mc_samples, "Monte Carlo sample count");
  experiment->add_option("--seed", ex.seed, "RNG seed");
  experiment->add_option("--output,-o", ex.output, "report JSON (default stdout)");
  experiment->add_option("--slice-output", ex.slice_prefix, "also write interpolant slices");

  SliceArgs sl;
  auto* slice = app.add_subcommand("slice", "sample a 2D slice of a field");
  slice->add_option("--input,-i", sl.input, "spectral-field JSON");
  slice->add_flag("--bump", sl.bump, "slice the model bump instead");
  slice->add_option("--algebra", sl.algebra, "algebra for --bump");
  slice->add_option("--alpha", sl.alpha, "bump inner radius");
  slice->add_option("--beta", sl.beta, "bump outer radius");
  slice->add_option("--center", sl.center, "bump center (orthonormal)")->expected(3);
  slice->add_option("--axis", sl.axis, "fixed axis (0,1,2)");
  slice->add_option("--value", sl.value, "fixed coordinate");
  slice->add_option("--resolution", sl.resolution, "samples per side");
  slice->add_option("--output,-o", sl.output, "output prefix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*grid) {
      if (grid_args.M < 1) throw CLI::ValidationError("--M must be >= 1");
      return run_grid(grid_args, false);
    }
    if (*weights) {
      if (weight_args.M < 1) throw CLI::ValidationError("--M must be >= 1");
      return run_grid(weight_args, true);
    }
    if (*transform) return run_transform(tf_input, tf_output, tf_format, tf_roundtrip, threads);
    if (*interpolate) return run_interpolate(ip_input, ip_points, ip_coords, ip_output);
    if (*verify) return run_verify(verify_args);
    if (*experiment) {
      ex.threads = threads;
      return run_experiment_cmd(ex);
    }
    if (*slice) return run_slice(sl);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
