#pragma once

#include "orbitfn/algebra.hpp"

#include <vector>

namespace orbitfn {

/// One element of the Weyl group, stored as exact integer matrices: the
/// action on ω-basis weight coordinates and the contragredient action on
/// α∨-basis point coordinates (so that ⟨wλ, wx⟩ = ⟨λ, x⟩ stays the plain dot
/// product). The four sign-homomorphism values are cached at generation.
struct WeylElement {
  IMat3 on_weight;
  IMat3 on_point;
  std::array<std::int8_t, 4> sign;  // indexed by Series: 1, σe, σs, σl

  IVec3 apply_weight(const IVec3& a) const { return on_weight * a; }
  TorusPoint apply_point(const TorusPoint& x) const { return x.transformed(on_point); }
};

inline int sign_value(Series s, const WeylElement& w) { return w.sign[static_cast<int>(s)]; }

/// The full Weyl group of B3 or C3, generated by the three simple
/// reflections. Elements are stored in a deterministic breadth-first order
/// with the identity first. Immutable after construction.
class WeylGroup {
 public:
  explicit WeylGroup(const Algebra& alg);

  const Algebra& algebra() const { return *alg_; }
  const std::vector<WeylElement>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  const WeylElement& identity() const { return elems_.front(); }

  /// Index of the longest element, which acts as −1 on both algebras.
  std::size_t longest_element_index() const { return longest_; }

  /// Generator matrices acting on ω-coordinates (r_i λ = λ − ⟨λ,α∨_i⟩α_i).
  static IMat3 generator_on_weight(const Algebra& alg, int i);

 private:
  const Algebra* alg_;
  std::vector<WeylElement> elems_;
  std::size_t longest_ = 0;
};

/// σ-values on the three generators for a given family.
std::array<int, 3> generator_signs(const Algebra& alg, Series s);

/// Whether a ±1 assignment to (r1,r2,r3) extends to a homomorphism W → {±1},
/// i.e. satisfies (σ(r_i)σ(r_j))^{m_ij} = 1 for the algebra's Coxeter matrix.
bool admissibility_check(const Algebra& alg, const std::array<int, 3>& gen_signs);

/// d_λ = |Stab_W(λ)| for a weight in ω-coordinates (exact).
int stabilizer_order_d(const WeylGroup& W, const IVec3& weight);

/// ε(x) = |Wx| on the torus R^3/Q∨ (exact rational arithmetic).
int orbit_size_eps(const WeylGroup& W, const TorusPoint& x);

/// |{w : wx = x}| on the torus; ε(x)·this = |W|.
int torus_stabilizer_order(const WeylGroup& W, const TorusPoint& x);

/// h∨_λ = |{w : wλ ≡ λ mod MQ}| (exact; MQ membership via the adjugate of
/// the Cartan matrix).
int stabilizer_order_h(const WeylGroup& W, const IVec3& weight, Int M);

}  // namespace orbitfn
