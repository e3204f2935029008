#include "orbitfn/models.hpp"

#include "orbitfn/summation.hpp"

#include <chrono>
#include <cmath>
#include <memory>
#include <random>

namespace orbitfn {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kFourPi = 2.0 * kTwoPi;
}  // namespace

double bump_profile(const BumpSpec& spec, double r) {
  if (!(spec.beta > spec.alpha) || !(spec.alpha > 0.0))
    throw std::invalid_argument("bump requires beta > alpha > 0");
  if (r < spec.alpha) return 1.0;
  if (r >= spec.beta) return 0.0;
  const double t = (r - spec.alpha) / (spec.beta - spec.alpha);
  return std::exp(1.0 + 1.0 / (t * t - 1.0));
}

double eval_bump(const BumpSpec& spec, const Vec3& x) {
  return bump_profile(spec, (x - spec.center).norm());
}

BumpSpec reference_bump_f1() { return BumpSpec{1.0 / 20.0, 1.0 / 9.0, Vec3(11.0 / 20.0, 1.0 / 3.0, 1.0 / 8.0)}; }
BumpSpec reference_bump_f2() { return BumpSpec{1.0 / 20.0, 1.0 / 9.0, Vec3(0.5, 1.0 / 3.0, 1.0 / 8.0)}; }

namespace {

// Gauss–Legendre nodes/weights on [-1,1] by Newton iteration.
struct GaussRule {
  std::vector<double> node, weight;
  explicit GaussRule(int n) {
    node.resize(n);
    weight.resize(n);
    for (int i = 0; i < n; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        const double dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) {
          double q0 = 1.0, q1 = x;
          for (int k = 2; k <= n; ++k) {
            const double q2 = ((2 * k - 1) * x * q1 - (k - 1) * q0) / k;
            q0 = q1;
            q1 = q2;
          }
          const double d = n * (x * q1 - q0) / (x * x - 1.0);
          weight[i] = 2.0 / ((1.0 - x * x) * d * d);
          break;
        }
      }
      node[i] = x;
    }
  }
};

const GaussRule& rule24() {
  static const GaussRule r(24);
  return r;
}

double integrate(const std::function<double(double)>& f, double a, double b, int panels) {
  const GaussRule& g = rule24();
  NeumaierSum acc;
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (std::size_t i = 0; i < g.node.size(); ++i)
      acc.add(0.5 * h * g.weight[i] * f(mid + 0.5 * h * g.node[i]));
  }
  return acc.value();
}

}  // namespace

double bump_l2_norm(const BumpSpec& spec) {
  const double core = spec.alpha * spec.alpha * spec.alpha / 3.0;
  const double shell = integrate(
      [&](double r) {
        const double f = bump_profile(spec, r);
        return f * f * r * r;
      },
      spec.alpha, spec.beta, 8);
  return kFourPi * (core + shell);
}

double bump_radial_fourier(const BumpSpec& spec, double rho) {
  if (rho < 1e-9) {
    const double shell =
        integrate([&](double r) { return bump_profile(spec, r) * r * r; }, spec.alpha, spec.beta, 8);
    return kFourPi * (spec.alpha * spec.alpha * spec.alpha / 3.0 + shell);
  }
  const double c = kTwoPi * rho;
  // ∫_0^α r sin(cr) dr in closed form; the shell by quadrature with panel
  // count tracking the oscillation.
  const double core = (std::sin(c * spec.alpha) - c * spec.alpha * std::cos(c * spec.alpha)) / (c * c);
  const int panels = 4 + static_cast<int>(rho * (spec.beta - spec.alpha) * 4.0);
  const double shell = integrate(
      [&](double r) { return bump_profile(spec, r) * r * std::sin(c * r); }, spec.alpha, spec.beta,
      panels);
  return (2.0 / rho) * (core + shell);
}

double distance_to_domain_boundary(const Algebra& alg, const Vec3& point) {
  const Vec4 y = alg.point_barycentric(alg.alphavee_from_point(point));
  const Vec3 xi = alg.simple_roots.transpose() * alg.marks.cast<double>();
  double d = y[0] / xi.norm();
  for (int i = 0; i < 3; ++i)
    d = std::min(d, y[i + 1] / alg.simple_roots.row(i).norm());
  return d;
}

namespace {

// Interpolant evaluation with all per-weight frequency vectors precomputed.
class FastInterpolant {
 public:
  FastInterpolant(const WeylGroup& W, const SpectralField& spec)
      : sine_(false), coeffs_(spec.coeffs) {
    const Algebra& alg = W.algebra();
    const Series series = series_of(spec.family);
    const auto& terms = explicit_terms(alg, series);
    sine_ = (alg.name == AlgebraName::B3) == (spec.family == GridFamily::Short);
    const auto weights = enumerate_weights(alg, spec.family, spec.M);
    if (weights.size() != coeffs_.size())
      throw std::invalid_argument("spectral field length does not match |Λ_M|");
    freq_.resize(weights.size() * 24);
    sign_.resize(24);
    for (int t = 0; t < 24; ++t) sign_[t] = terms[t].sign;
    for (std::size_t li = 0; li < weights.size(); ++li) {
      const IVec3 lam = weights[li].omega();
      for (int t = 0; t < 24; ++t) freq_[li * 24 + t] = (terms[t].freq * lam).cast<double>();
    }
  }

  Complex operator()(const Vec3& x_alphavee) const {
    ComplexSum acc;
    for (std::size_t li = 0; li < coeffs_.size(); ++li) {
      NeumaierSum basis;
      for (int t = 0; t < 24; ++t) {
        const double phase = kTwoPi * freq_[li * 24 + t].dot(x_alphavee);
        basis.add(sign_[t] * (sine_ ? std::sin(phase) : std::cos(phase)));
      }
      const Complex phi = sine_ ? Complex(0.0, 2.0 * basis.value()) : Complex(2.0 * basis.value(), 0.0);
      acc.add(coeffs_[li] * phi);
    }
    return acc.value();
  }

 private:
  bool sine_;
  std::vector<Complex> coeffs_;
  std::vector<Vec3> freq_;
  std::vector<int> sign_;
};

struct McEstimate {
  double error_l2;
  double bump_l2;
};

McEstimate monte_carlo_error(const WeylGroup& W, const SpectralField& spec, const BumpSpec& bump,
                             Int samples, std::uint64_t seed) {
  const Algebra& alg = W.algebra();
  const FastInterpolant interp(W, spec);
  Mat3 vertices;
  for (int i = 0; i < 3; ++i)
    vertices.row(i) =
        alg.coweight_coroot_num.row(i).cast<double>() /
        (static_cast<double>(alg.coweight_coroot_den) * static_cast<double>(alg.marks[i]));
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  NeumaierSum err, fsq;
  for (Int s = 0; s < samples; ++s) {
    Vec4 e(expo(rng), expo(rng), expo(rng), expo(rng));
    e /= e.sum();
    const Vec3 x = vertices.transpose() * e.tail<3>();
    const double f = eval_bump(bump, alg.point_from_alphavee(x));
    err.add(std::norm(Complex(f, 0.0) - interp(x)));
    fsq.add(f * f);
  }
  const double volF = alg.K_const / 48.0;
  return {err.value() * volF / static_cast<double>(samples),
          fsq.value() * volF / static_cast<double>(samples)};
}

}  // namespace

ExperimentResult run_experiment(const WeylGroup& W, GridFamily family, Int M,
                                const BumpSpec& bump, const ExperimentOptions& opts) {
  if (M < 2) throw std::invalid_argument("run_experiment: M must be >= 2");
  const auto t0 = std::chrono::steady_clock::now();
  const Algebra& alg = W.algebra();

  SampledField field{alg.name, family, M, {}};
  const auto grid = enumerate_grid(alg, family, M);
  field.values.reserve(grid.size());
  for (const auto& p : grid)
    field.values.emplace_back(eval_bump(bump, grid_point_orthonormal(alg, p)), 0.0);

  ExperimentResult res;
  res.algebra = alg.name;
  res.family = family;
  res.M = M;
  res.bump = bump;
  res.coefficients = forward_transform(W, field, opts.threads);
  res.seed = opts.seed;

  const bool ball_inside = distance_to_domain_boundary(alg, bump.center) > bump.beta;
  if (opts.method == ErrorMethod::Exact && ball_inside) {
    // ∫|f−I|² = ∫|f|² − 2Re Σ c̄_λ ∫f φ̄_λ + Σ |c_λ|² K d_λ, with
    // ∫f φ̄_λ = F̂(|λ|)·φ̄_λ(x₀) because |wλ| is W-invariant.
    const auto weights = enumerate_weights(alg, family, M);
    const Vec3 x0 = alg.alphavee_from_point(bump.center);
    const Series series = series_of(family);
    NeumaierSum cross, energy;
    for (std::size_t li = 0; li < weights.size(); ++li) {
      const IVec3 lam = weights[li].omega();
      const Complex c = res.coefficients.coeffs[li];
      const double rho = alg.point_from_omega(lam).norm();
      const Complex phi0 = orbit_sum(W, series, lam, x0);
      cross.add((std::conj(c) * bump_radial_fourier(bump, rho) * std::conj(phi0)).real());
      energy.add(std::norm(c) * alg.K_const * stabilizer_order_d(W, lam));
    }
    res.bump_l2 = bump_l2_norm(bump);
    res.error_l2 = std::max(0.0, res.bump_l2 - 2.0 * cross.value() + energy.value());
    res.method = "exact-orthogonality";
    res.mc_samples = 0;
  } else {
    const auto est = monte_carlo_error(W, res.coefficients, bump, opts.mc_samples, opts.seed);
    res.error_l2 = est.error_l2;
    res.bump_l2 = est.bump_l2;
    res.method = "monte-carlo";
    res.mc_samples = opts.mc_samples;
  }

  const auto t1 = std::chrono::steady_clock::now();
  res.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return res;
}

std::function<Complex(const Vec3&)> bump_evaluator(const BumpSpec& spec) {
  return [spec](const Vec3& x) { return Complex(eval_bump(spec, x), 0.0); };
}

std::function<Complex(const Vec3&)> interpolant_evaluator(const WeylGroup& W,
                                                          const SpectralField& spec) {
  auto interp = std::make_shared<FastInterpolant>(W, spec);
  const Algebra* alg = &W.algebra();
  return [interp, alg](const Vec3& x) { return (*interp)(alg->alphavee_from_point(x)); };
}

SliceResult slice_export(const Algebra& alg, const std::function<Complex(const Vec3&)>& eval,
                         int axis, double value, int resolution) {
  if (axis < 0 || axis > 2) throw std::invalid_argument("slice axis must be 0, 1 or 2");
  if (resolution < 2) throw std::invalid_argument("slice resolution must be >= 2");
  const int u = axis == 0 ? 1 : 0;
  const int v = axis == 2 ? 1 : 2;

  // Bounding box of the F simplex vertices.
  Eigen::Matrix<double, 4, 3> verts;
  verts.row(0).setZero();
  for (int i = 0; i < 3; ++i)
    verts.row(i + 1) = alg.coweights.row(i) / static_cast<double>(alg.marks[i]);

  SliceResult out;
  out.axis = axis;
  out.value = value;
  out.resolution = resolution;
  out.lo0 = verts.col(u).minCoeff();
  out.hi0 = verts.col(u).maxCoeff();
  out.lo1 = verts.col(v).minCoeff();
  out.hi1 = verts.col(v).maxCoeff();
  out.values.resize(resolution, resolution);

  const double step0 = (out.hi0 - out.lo0) / (resolution - 1);
  const double step1 = (out.hi1 - out.lo1) / (resolution - 1);
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j < resolution; ++j) {
      Vec3 x;
      x[axis] = value;
      x[u] = out.lo0 + i * step0;
      x[v] = out.lo1 + j * step1;
      out.values(i, j) = eval(x);
    }
  return out;
}

}  // namespace orbitfn
