#pragma once

#include "orbitfn/transforms.hpp"

#include <functional>

namespace orbitfn {

/// Smooth characteristic function of a ball: 1 inside radius alpha, 0 outside
/// beta, and e·exp(((r−α)/(β−α))² − 1)^{-1} in between. Coordinates are
/// orthonormal.
struct BumpSpec {
  double alpha;
  double beta;
  Vec3 center;
};

double eval_bump(const BumpSpec& spec, const Vec3& point_orthonormal);
/// Radial profile f(r).
double bump_profile(const BumpSpec& spec, double r);

enum class ErrorMethod {
  /// Expands ∫_F |f−I_M|² through the continuous orthogonality of the basis
  /// and the radial Fourier transform of the bump; exact up to 1-D quadrature
  /// error, valid when the support ball lies inside F.
  Exact,
  /// Plain Monte Carlo over the F simplex.
  MonteCarlo,
};

struct ExperimentOptions {
  ErrorMethod method = ErrorMethod::Exact;
  Int mc_samples = 2000000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

struct ExperimentResult {
  AlgebraName algebra;
  GridFamily family;
  Int M;
  BumpSpec bump;
  SpectralField coefficients;
  double error_l2;     ///< estimate of ∫_{F^family} |f − I_M|² dx
  double bump_l2;      ///< ∫_F |f|² dx (same estimator family)
  std::string method;  ///< "exact-orthogonality" or "monte-carlo"
  Int mc_samples;      ///< 0 for the exact method
  std::uint64_t seed;
  double runtime_ms;
};

/// Samples the bump on F_M^{family}, forward-transforms, and estimates the
/// L² interpolation error. When the exact method is requested but the bump
/// support crosses the boundary of F, falls back to Monte Carlo.
ExperimentResult run_experiment(const WeylGroup& W, GridFamily family, Int M,
                                const BumpSpec& bump, const ExperimentOptions& opts = {});

/// The paper-style reference experiments: f1 lives on the short grids of C3,
/// f2 on the long grids of B3.
BumpSpec reference_bump_f1();
BumpSpec reference_bump_f2();

/// Regular 2D sampling of a scalar field on an axis-aligned slice through
/// the bounding box of F. `eval` receives orthonormal coordinates.
struct SliceResult {
  int axis;          ///< fixed orthonormal axis (0,1,2)
  double value;      ///< fixed coordinate value
  int resolution;
  double lo0, hi0;   ///< sampled range of the first free axis
  double lo1, hi1;   ///< and of the second
  Eigen::MatrixXcd values;  ///< values(i,j) at (lo0 + i·step0, lo1 + j·step1)
};
SliceResult slice_export(const Algebra& alg, const std::function<Complex(const Vec3&)>& eval,
                         int axis, double value, int resolution);

/// Slice evaluator helpers.
std::function<Complex(const Vec3&)> bump_evaluator(const BumpSpec& spec);
std::function<Complex(const Vec3&)> interpolant_evaluator(const WeylGroup& W,
                                                          const SpectralField& spec);

/// ∫_F |f|² for a bump supported inside F (4π ∫ f(r)² r² dr).
double bump_l2_norm(const BumpSpec& spec);

/// Radial Fourier transform of the bump profile over its support ball:
/// ∫ f(|y|) e^{−2πi⟨μ,y⟩} dy as a function of ρ = |μ|.
double bump_radial_fourier(const BumpSpec& spec, double rho);

/// Distance from a point (orthonormal coords) to the nearest wall of F;
/// negative when the point lies outside.
double distance_to_domain_boundary(const Algebra& alg, const Vec3& point_orthonormal);

}  // namespace orbitfn
