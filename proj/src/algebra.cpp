#include "orbitfn/algebra.hpp"

#include <cmath>

namespace orbitfn {

std::string to_string(AlgebraName n) { return n == AlgebraName::B3 ? "B3" : "C3"; }

std::string to_string(Series s) {
  switch (s) {
    case Series::C: return "C";
    case Series::S: return "S";
    case Series::Ss: return "Ss";
    case Series::Sl: return "Sl";
  }
  return "?";
}

std::string to_string(GridFamily f) { return f == GridFamily::Short ? "s" : "l"; }

std::string to_string(Region r) {
  switch (r) {
    case Region::F: return "F";
    case Region::Fs: return "Fs";
    case Region::Fl: return "Fl";
    case Region::Fvee: return "Fvee";
    case Region::Fsvee: return "Fsvee";
    case Region::Flvee: return "Flvee";
  }
  return "?";
}

AlgebraName parse_algebra(const std::string& s) {
  if (s == "B3" || s == "b3") return AlgebraName::B3;
  if (s == "C3" || s == "c3") return AlgebraName::C3;
  throw std::invalid_argument("unknown algebra '" + s + "' (expected B3 or C3)");
}

GridFamily parse_family(const std::string& s) {
  if (s == "s" || s == "S" || s == "short") return GridFamily::Short;
  if (s == "l" || s == "L" || s == "long") return GridFamily::Long;
  throw std::invalid_argument("unknown family '" + s + "' (expected s or l)");
}

namespace {

// adjugate of a 3x3 integer matrix
IMat3 adjugate(const IMat3& m) {
  IMat3 a;
  a(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  a(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
  a(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  a(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
  a(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  a(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
  a(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  a(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
  a(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return a;
}

Int det3(const IMat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

// Coxeter exponent from the off-diagonal Cartan product C_ij·C_ji.
Int coxeter_entry(Int cc) {
  switch (cc) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw std::logic_error("invalid Cartan product");
  }
}

Algebra make_b3() {
  Algebra a;
  a.name = AlgebraName::B3;
  a.simple_roots << 1, -1, 0,
                    0, 1, -1,
                    0, 0, 1;
  a.coroots << 1, -1, 0,
               0, 1, -1,
               0, 0, 2;
  a.weights << 1, 0, 0,
               1, 1, 0,
               0.5, 0.5, 0.5;
  a.coweights << 1, 0, 0,
                 1, 1, 0,
                 1, 1, 1;
  a.is_short = {false, false, true};  // α3 is the short root
  a.marks << 1, 2, 2;                 // ξ = α1 + 2α2 + 2α3
  a.dual_marks << 2, 2, 1;            // η = 2α∨1 + 2α∨2 + α∨3
  a.K_const = 2.0;
  return a;
}

Algebra make_c3() {
  const double s = std::sqrt(2.0);
  Algebra a;
  a.name = AlgebraName::C3;
  a.simple_roots << 1 / s, -1 / s, 0,
                    0, 1 / s, -1 / s,
                    0, 0, s;
  a.coroots << s, -s, 0,
               0, s, -s,
               0, 0, s;
  a.weights << 1 / s, 0, 0,
               1 / s, 1 / s, 0,
               1 / s, 1 / s, 1 / s;
  a.coweights << s, 0, 0,
                 s, s, 0,
                 1 / s, 1 / s, 1 / s;
  a.is_short = {true, true, false};  // α3 is the long root
  a.marks << 2, 2, 1;                // ξ = 2α1 + 2α2 + α3
  a.dual_marks << 1, 2, 2;           // η = α∨1 + 2α∨2 + 2α∨3
  a.K_const = 2.0 * s;
  return a;
}

void finish(Algebra& a) {
  // Cartan matrix from the orthonormal data, rounded to exact integers.
  Mat3 c = a.simple_roots * a.coroots.transpose();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a.cartan(i, j) = static_cast<Int>(std::llround(c(i, j)));
  a.cartan_det = det3(a.cartan);
  a.cartan_adj = adjugate(a.cartan);
  a.k_const = static_cast<int>(48 * a.cartan_det);

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      a.coxeter(i, j) = (i == j) ? 1 : coxeter_entry(a.cartan(i, j) * a.cartan(j, i));

  // ω∨_j = Σ_i ⟨ω∨_j, ω_i⟩ α∨_i; the pairings are half-integers.
  Mat3 w = a.coweights * a.weights.transpose();
  a.coweight_coroot_den = 2;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i)
      a.coweight_coroot_num(j, i) = static_cast<Int>(std::llround(2.0 * w(j, i)));

  // Highest root ξ in orthonormal coordinates, its coroot and pairings.
  Vec3 xi = a.simple_roots.transpose() * a.marks.cast<double>();
  Vec3 xiv = 2.0 * xi / xi.squaredNorm();
  Vec3 xiv_coords = a.weights * xiv;  // α∨-coordinates
  Vec3 pair = a.coroots * xi;         // ⟨ξ, α∨_i⟩
  for (int i = 0; i < 3; ++i) {
    a.highest_root_coroot[i] = static_cast<Int>(std::llround(xiv_coords[i]));
    a.highest_root_pairing[i] = static_cast<Int>(std::llround(pair[i]));
  }
}

}  // namespace

const Algebra& build_algebra(AlgebraName name) {
  static const Algebra b3 = [] { Algebra a = make_b3(); finish(a); return a; }();
  static const Algebra c3 = [] { Algebra a = make_c3(); finish(a); return a; }();
  return name == AlgebraName::B3 ? b3 : c3;
}

Vec4 Algebra::point_barycentric(const Vec3& x) const {
  Vec3 y = cartan.cast<double>() * x;  // y_i = ⟨α_i, x⟩
  Vec4 out;
  out[0] = 1.0 - marks.cast<double>().dot(y);
  out.tail<3>() = y;
  return out;
}

Vec4 Algebra::weight_barycentric(const Vec3& a) const {
  Vec4 out;
  out[0] = 1.0 - dual_marks.cast<double>().dot(a);
  out.tail<3>() = a;
  return out;
}

std::array<bool, 4> Algebra::strict_mask(Region r) const {
  std::array<bool, 4> m = {false, false, false, false};
  switch (r) {
    case Region::F:
    case Region::Fvee:
      break;
    case Region::Fs:  // facets fixed by short simple reflections removed
      for (int i = 0; i < 3; ++i) m[i + 1] = is_short[i];
      break;
    case Region::Fl:  // facets fixed by r_0 and the long simple reflections
      m[0] = true;
      for (int i = 0; i < 3; ++i) m[i + 1] = !is_short[i];
      break;
    case Region::Fsvee:
      m[0] = true;
      for (int i = 0; i < 3; ++i) m[i + 1] = is_short[i];
      break;
    case Region::Flvee:
      for (int i = 0; i < 3; ++i) m[i + 1] = !is_short[i];
      break;
  }
  return m;
}

bool domain_membership(const Algebra& alg, Region region, const Vec3& point, double tol) {
  const bool dual = region == Region::Fvee || region == Region::Fsvee || region == Region::Flvee;
  Vec4 bary = dual ? alg.weight_barycentric(alg.omega_from_point(point))
                   : alg.point_barycentric(alg.alphavee_from_point(point));
  const auto strict = alg.strict_mask(region);
  for (int i = 0; i < 4; ++i) {
    if (strict[i] ? !(bary[i] > tol) : !(bary[i] >= -tol)) return false;
  }
  return true;
}

}  // namespace orbitfn
