#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace orbitfn {

using Int = std::int64_t;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using IVec3 = Eigen::Matrix<Int, 3, 1>;
using IVec4 = Eigen::Matrix<Int, 4, 1>;
using IMat3 = Eigen::Matrix<Int, 3, 3>;
using Complex = std::complex<double>;

enum class AlgebraName { B3, C3 };

/// The four sign homomorphisms of the Weyl group and the function families
/// they induce: trivial (C), determinant (S), short (Ss), long (Sl).
enum class Series { C, S, Ss, Sl };

/// Lattice fragment / weight set family: the short grids pair with Ss
/// functions, the long grids with Sl functions.
enum class GridFamily { Short, Long };

/// Fundamental domains of the affine Weyl group and its dual.
enum class Region { F, Fs, Fl, Fvee, Fsvee, Flvee };

std::string to_string(AlgebraName n);
std::string to_string(Series s);
std::string to_string(GridFamily f);
std::string to_string(Region r);

AlgebraName parse_algebra(const std::string& s);
GridFamily parse_family(const std::string& s);

inline Series series_of(GridFamily f) {
  return f == GridFamily::Short ? Series::Ss : Series::Sl;
}

/// A point of the torus R^3/Q∨ with exact rational coordinates in the
/// α∨-basis: coords are num[i]/den with a shared positive denominator.
/// Canonical form: den > 0, gcd(num, den) joint factor removed, numerators
/// reduced into [0, den). Two points are equal iff their canonical forms
/// match component-wise.
struct TorusPoint {
  IVec3 num = IVec3::Zero();
  Int den = 1;

  TorusPoint() = default;
  TorusPoint(const IVec3& numerators, Int denominator) : num(numerators), den(denominator) {
    normalize();
  }

  void normalize() {
    if (den <= 0) throw std::invalid_argument("TorusPoint: denominator must be positive");
    Int g = den;
    for (int i = 0; i < 3; ++i) g = std::gcd(g, num[i] < 0 ? -num[i] : num[i]);
    if (g > 1) {
      den /= g;
      for (int i = 0; i < 3; ++i) num[i] /= g;
    }
    for (int i = 0; i < 3; ++i) {
      num[i] %= den;
      if (num[i] < 0) num[i] += den;
    }
  }

  /// Image under an integer matrix acting on α∨-coordinates.
  TorusPoint transformed(const IMat3& m) const { return TorusPoint(m * num, den); }

  Vec3 alphavee() const {
    return Vec3(static_cast<double>(num[0]) / static_cast<double>(den),
                static_cast<double>(num[1]) / static_cast<double>(den),
                static_cast<double>(num[2]) / static_cast<double>(den));
  }

  std::array<Int, 4> key() const { return {num[0], num[1], num[2], den}; }

  friend bool operator==(const TorusPoint& a, const TorusPoint& b) { return a.key() == b.key(); }
  friend bool operator<(const TorusPoint& a, const TorusPoint& b) { return a.key() < b.key(); }
};

}  // namespace orbitfn
