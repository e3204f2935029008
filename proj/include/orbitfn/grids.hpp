#pragma once

#include "orbitfn/algebra.hpp"

#include <optional>
#include <vector>

namespace orbitfn {

/// One point of the grid F_M^s or F_M^l, stored by its barycentric integers
/// (u0,u1,u2,u3): the embedded torus point is (u1 ω∨1 + u2 ω∨2 + u3 ω∨3)/M
/// and u0 is the affine slack making Σ coeff_i u_i = M.
struct GridPoint {
  IVec4 bary;
  Int M;
};

/// One weight of Λ_M^s or Λ_M^l: the embedded weight is t1ω1 + t2ω2 + t3ω3,
/// with affine slack t0.
struct GridWeight {
  IVec4 bary;
  Int M;

  IVec3 omega() const { return IVec3(bary[1], bary[2], bary[3]); }
};

/// Coefficients of the affine constraint Σ c_i u_i = M for point grids:
/// (1, m1, m2, m3).
IVec4 point_form(const Algebra& alg);
/// Coefficients for weight sets: (1, m∨1, m∨2, m∨3).
IVec4 weight_form(const Algebra& alg);

/// Exact torus point embedded by a grid point (α∨-coordinates over 2M).
TorusPoint grid_torus_point(const Algebra& alg, const GridPoint& p);
/// Orthonormal coordinates of a grid point.
Vec3 grid_point_orthonormal(const Algebra& alg, const GridPoint& p);

/// All points of F_M^{family}, exactly once, ordered lexicographically in
/// (u1,u2,u3).
std::vector<GridPoint> enumerate_grid(const Algebra& alg, GridFamily family, Int M);

/// All weights of Λ_M^{family}, ordered lexicographically in (t1,t2,t3).
std::vector<GridWeight> enumerate_weights(const Algebra& alg, GridFamily family, Int M);

/// Closed-form cardinality of F_M^{family} (= |Λ_M^{family}|).
Int grid_count_closed_form(const Algebra& alg, GridFamily family, Int M);

/// An element of the affine Weyl group: x ↦ w·x + shift in α∨-coordinates,
/// with w ∈ W an integer matrix and shift ∈ Q∨ an integer vector.
struct AffineTransform {
  IMat3 w = IMat3::Identity();
  IVec3 shift = IVec3::Zero();

  Vec3 apply(const Vec3& x) const { return w.cast<double>() * x + shift.cast<double>(); }
};

/// Folds an arbitrary point (α∨-coordinates) into the fundamental domain F.
/// Returns the canonical representative and the affine Weyl transform that
/// maps the input onto it. Idempotent on F.
struct ReductionResult {
  Vec3 point;
  AffineTransform transform;
  int steps;
};
ReductionResult reduce_to_domain(const Algebra& alg, const Vec3& alphavee_coords);

/// Exact variant for torus points: returns the barycentric integers
/// (u0,u1,u2,u3) of the canonical representative of x in F, scaled by M.
/// Requires x ∈ (1/M)P∨/Q∨.
IVec4 reduce_torus_point(const Algebra& alg, const TorusPoint& x, Int M);

}  // namespace orbitfn
