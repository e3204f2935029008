#pragma once

#include "orbitfn/grids.hpp"
#include "orbitfn/orbit_eval.hpp"

#include <Eigen/Dense>

namespace orbitfn {

/// Complex samples over the canonical (lexicographic) order of F_M^{family}.
struct SampledField {
  AlgebraName algebra;
  GridFamily family;
  Int M;
  std::vector<Complex> values;
};

/// Expansion coefficients c_λ over the canonical order of Λ_M^{family}.
struct SpectralField {
  AlgebraName algebra;
  GridFamily family;
  Int M;
  std::vector<Complex> coeffs;
};

/// Discrete forward transform: c_λ = (1/(k·M³·h∨_λ)) Σ_x ε(x) f(x) φ̄_λ(x),
/// with exact rational phases. Throws on grid-length mismatch.
SpectralField forward_transform(const WeylGroup& W, const SampledField& field,
                                unsigned threads = 0);

/// Interpolant I_M(x) = Σ_λ c_λ φ_λ(x) at an arbitrary point (α∨-coords).
Complex inverse_transform(const WeylGroup& W, const SpectralField& spec, const Vec3& x_alphavee);

/// Interpolant evaluated on the whole grid F_M with exact phases; the
/// round-trip inverse_on_grid(forward_transform(f)) reproduces f.
std::vector<Complex> inverse_on_grid(const WeylGroup& W, const SpectralField& spec,
                                     unsigned threads = 0);

/// Gram matrix G[λ,λ'] = Σ_x ε(x) φ_λ(x) φ̄_λ'(x) over F_M; by discrete
/// orthogonality it is diag(k·M³·h∨_λ).
Eigen::MatrixXcd discrete_gram_matrix(const WeylGroup& W, GridFamily family, Int M);

/// Diagonal the Gram matrix must equal.
std::vector<double> gram_expected_diagonal(const WeylGroup& W, GridFamily family, Int M);

enum class QuadratureMethod { MonteCarlo, Mesh };

/// Quadrature estimate of ∫_F ψ^σ_λ(x) conj(ψ^σ_λ'(x)) dx. Equals K·d_λ for
/// λ = λ' and 0 otherwise. Monte Carlo samples the F simplex uniformly with
/// the given seed; Mesh uses midpoints of an n×n×n cell grid of the torus
/// folded into F.
Complex continuous_inner_product(const WeylGroup& W, Series family, const IVec3& lambda,
                                 const IVec3& lambda2, QuadratureMethod method, Int n_samples,
                                 std::uint64_t seed);

}  // namespace orbitfn
