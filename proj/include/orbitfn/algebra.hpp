#pragma once

#include "orbitfn/types.hpp"

namespace orbitfn {

/// Static root-system data of one of the two rank-3 simple Lie algebras with
/// two root lengths, B3 and C3. Basis matrices hold orthonormal coordinates
/// in their rows: row i of `simple_roots` is α_i, of `coroots` is
/// α∨_i = 2α_i/⟨α_i,α_i⟩, of `weights` is ω_i (⟨ω_i,α∨_j⟩ = δ_ij), of
/// `coweights` is ω∨_i = 2ω_i/⟨α_i,α_i⟩.
///
/// Throughout the library, points of R^3 carry α∨-basis coordinates and
/// weights carry ω-basis coordinates, so the scalar product of a weight with
/// a point is the plain dot product of their coordinate vectors and every
/// Weyl group action is an integer matrix.
struct Algebra {
  AlgebraName name;

  Mat3 simple_roots;
  Mat3 coroots;
  Mat3 weights;
  Mat3 coweights;

  IMat3 cartan;       ///< C(i,j) = ⟨α_i, α∨_j⟩
  IMat3 coxeter;      ///< m_ij = order of r_i r_j
  IMat3 cartan_adj;   ///< adjugate of `cartan`, so cartan·cartan_adj = det(C)·I
  Int cartan_det;     ///< det(C) = 2 for both algebras

  IVec3 marks;        ///< highest root ξ in the α-basis
  IVec3 dual_marks;   ///< highest dual root η in the α∨-basis
  std::array<bool, 3> is_short;  ///< length pattern of the simple roots

  double K_const;     ///< |W|·vol(F): 2 for B3, 2√2 for C3
  int k_const;        ///< |W|·det(C) = 96

  /// ω∨_j expressed in the α∨-basis: row j of coweight_coroot_num divided by
  /// coweight_coroot_den (the denominator is 2 for both algebras).
  IMat3 coweight_coroot_num;
  Int coweight_coroot_den;

  IVec3 highest_root_coroot;   ///< ξ∨ = 2ξ/⟨ξ,ξ⟩ in α∨-coordinates
  IVec3 highest_root_pairing;  ///< ⟨ξ, α∨_i⟩

  // --- coordinate conversions ---

  /// Orthonormal coordinates of a point given in the α∨-basis.
  Vec3 point_from_alphavee(const Vec3& c) const { return coroots.transpose() * c; }
  /// α∨-basis coordinates of a point given in orthonormal coordinates.
  Vec3 alphavee_from_point(const Vec3& v) const { return weights * v; }
  /// Orthonormal coordinates of a weight given in the ω-basis.
  Vec3 point_from_omega(const Vec3& a) const { return weights.transpose() * a; }
  Vec3 point_from_omega(const IVec3& a) const {
    return weights.transpose() * a.cast<double>().eval();
  }
  /// ω-basis coordinates of a point given in orthonormal coordinates.
  Vec3 omega_from_point(const Vec3& v) const { return coroots * v; }

  /// Barycentric coordinates (y0,y1,y2,y3) of a point in the α∨-basis with
  /// respect to the F simplex: y_i = ⟨α_i, x⟩ and y0 = 1 − Σ m_i y_i, so that
  /// x = Σ y_i ω∨_i and y0 + Σ m_i y_i = 1.
  Vec4 point_barycentric(const Vec3& alphavee_coords) const;

  /// Barycentric coordinates (z0,z1,z2,z3) of a weight in the ω-basis with
  /// respect to the F∨ simplex: z_i = a_i and z0 = 1 − Σ m∨_i z_i.
  Vec4 weight_barycentric(const Vec3& omega_coords) const;

  /// Which barycentric coordinates must be strictly positive for membership
  /// in the given region (index 0 is the affine one).
  std::array<bool, 4> strict_mask(Region r) const;
};

/// Exact static data for B3 or C3. Returns a reference to an immutable
/// singleton; cheap to call repeatedly.
const Algebra& build_algebra(AlgebraName name);

/// Membership test for the six fundamental domains. The point is given in
/// orthonormal coordinates; boundary comparisons use the given tolerance.
/// Regions F/Fs/Fl live in point space, Fvee/Fsvee/Flvee in weight space.
bool domain_membership(const Algebra& alg, Region region, const Vec3& point, double tol = 1e-12);

}  // namespace orbitfn
