#pragma once

#include "orbitfn/weyl.hpp"

#include <vector>

namespace orbitfn {

/// Shared table of the den-th roots of unity, cis[k] = e^{2πik/den}. Using it
/// for all grid-point phases makes discrete transforms bit-reproducible
/// across summation strategies at fixed M.
class PhaseTable {
 public:
  explicit PhaseTable(Int den);

  Int den() const { return den_; }
  Complex at(Int numerator) const {
    Int k = numerator % den_;
    if (k < 0) k += den_;
    return cis_[static_cast<std::size_t>(k)];
  }

 private:
  Int den_;
  std::vector<Complex> cis_;
};

/// An orbit function ψ^σ_λ: the family fixes the sign homomorphism σ, the
/// weight λ is in ω-coordinates and must lie in the family's admissible cone
/// (P⁺, P⁺⁺, P⁺ˢ or P⁺ˡ).
struct OrbitFunctionSpec {
  Series family;
  IVec3 weight;
};

bool weight_in_cone(const Algebra& alg, Series family, const IVec3& weight);

/// Raw 48-term sum Σ_w σ(w) e^{2πi⟨wλ,x⟩} with no cone validation; λ may be
/// any integer weight (used with non-dominant arguments in the product
/// decomposition).
Complex orbit_sum(const WeylGroup& W, Series family, const IVec3& lambda, const Vec3& x_alphavee);

/// Exact-phase variant for torus points: all exponents are reduced mod 1 in
/// integer arithmetic, then looked up in the shared table (whose denominator
/// must be divisible by the point's).
Complex orbit_sum(const WeylGroup& W, Series family, const IVec3& lambda, const TorusPoint& x,
                  const PhaseTable& table);

/// Validated evaluation of ψ^σ_λ(x); throws std::invalid_argument when the
/// weight lies outside the family's cone.
Complex eval_generic(const WeylGroup& W, const OrbitFunctionSpec& spec, const Vec3& x_alphavee);
Complex eval_generic(const WeylGroup& W, const OrbitFunctionSpec& spec, const TorusPoint& x,
                     const PhaseTable& table);

/// The 24-term trigonometric expansions of the Sˢ- and Sˡ-functions. Only
/// families Ss and Sl are defined; anything else throws. B3-Sˢ and C3-Sˡ are
/// 2i·(±sin) sums, B3-Sˡ and C3-Sˢ are 2·(±cos) sums.
Complex eval_explicit(const Algebra& alg, Series family, const IVec3& lambda,
                      const Vec3& x_alphavee);
Complex eval_explicit(const Algebra& alg, Series family, const IVec3& lambda, const TorusPoint& x,
                      const PhaseTable& table);

/// One term of an explicit expansion: the integer matrix maps the weight
/// (a,b,c) to the frequency triple multiplying (x,y,z), with the term's sign.
struct ExplicitTerm {
  IMat3 freq;
  int sign;
};
const std::array<ExplicitTerm, 24>& explicit_terms(const Algebra& alg, Series family);

/// Random verification of the defining invariances: shift by q∨ ∈ Q∨,
/// ψ(wx) = σ(w)ψ(x) and ψ_{wλ} = σ(w)ψ_λ. Deviations are |lhs−rhs| scaled by
/// 1 + max magnitude.
struct SymmetryReport {
  double max_shift_dev = 0.0;
  double max_point_dev = 0.0;
  double max_weight_dev = 0.0;

  double worst() const { return std::max({max_shift_dev, max_point_dev, max_weight_dev}); }
};
SymmetryReport verify_symmetries(const WeylGroup& W, const OrbitFunctionSpec& spec, int trials,
                                 std::uint64_t seed);

/// Product of two same-family functions against its C-function expansion
/// Σ_w σ(w) Φ_{λ+wλ'}(x).
struct ProductCheck {
  Complex lhs;
  Complex rhs;
  double deviation;
};
ProductCheck product_decomposition_check(const WeylGroup& W, Series family, const IVec3& lambda,
                                         const IVec3& lambda2, const Vec3& x_alphavee);

/// C3 only: the orbit functions against determinants/permanents of the 3×3
/// sine/cosine matrices built from orthonormal coordinates.
struct TrigCheck {
  Complex orbit_value;
  Complex matrix_value;
  double deviation;
};
TrigCheck trig_correspondence_C3(const WeylGroup& W, Series family, const IVec3& lambda,
                                 const Vec3& x_alphavee);

}  // namespace orbitfn
