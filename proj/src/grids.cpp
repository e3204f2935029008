#include "orbitfn/grids.hpp"

#include "orbitfn/weyl.hpp"

#include <cmath>

namespace orbitfn {

IVec4 point_form(const Algebra& alg) {
  IVec4 c;
  c << 1, alg.marks[0], alg.marks[1], alg.marks[2];
  return c;
}

IVec4 weight_form(const Algebra& alg) {
  IVec4 c;
  c << 1, alg.dual_marks[0], alg.dual_marks[1], alg.dual_marks[2];
  return c;
}

TorusPoint grid_torus_point(const Algebra& alg, const GridPoint& p) {
  IVec3 num = IVec3::Zero();
  for (int j = 0; j < 3; ++j) num += p.bary[j + 1] * alg.coweight_coroot_num.row(j).transpose();
  return TorusPoint(num, alg.coweight_coroot_den * p.M);
}

Vec3 grid_point_orthonormal(const Algebra& alg, const GridPoint& p) {
  Vec3 y(static_cast<double>(p.bary[1]), static_cast<double>(p.bary[2]),
         static_cast<double>(p.bary[3]));
  return alg.coweights.transpose() * (y / static_cast<double>(p.M));
}

namespace {

// Shared enumerator: all nonnegative integer solutions of Σ c_i v_i = M with
// the given strict-positivity mask, lexicographic in (v1,v2,v3).
std::vector<IVec4> enumerate_solutions(const IVec4& c, const std::array<bool, 4>& strict, Int M) {
  std::vector<IVec4> out;
  const Int lo1 = strict[1] ? 1 : 0, lo2 = strict[2] ? 1 : 0, lo3 = strict[3] ? 1 : 0;
  const Int lo0 = strict[0] ? 1 : 0;
  for (Int v1 = lo1; c[1] * v1 <= M; ++v1) {
    for (Int v2 = lo2; c[1] * v1 + c[2] * v2 <= M; ++v2) {
      for (Int v3 = lo3; c[1] * v1 + c[2] * v2 + c[3] * v3 <= M; ++v3) {
        const Int v0 = M - c[1] * v1 - c[2] * v2 - c[3] * v3;
        if (v0 < lo0) continue;
        IVec4 v;
        v << v0, v1, v2, v3;
        out.push_back(v);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<GridPoint> enumerate_grid(const Algebra& alg, GridFamily family, Int M) {
  if (M < 1) throw std::invalid_argument("enumerate_grid: M must be >= 1");
  const Region r = family == GridFamily::Short ? Region::Fs : Region::Fl;
  std::vector<GridPoint> out;
  for (const auto& v : enumerate_solutions(point_form(alg), alg.strict_mask(r), M))
    out.push_back(GridPoint{v, M});
  return out;
}

std::vector<GridWeight> enumerate_weights(const Algebra& alg, GridFamily family, Int M) {
  if (M < 1) throw std::invalid_argument("enumerate_weights: M must be >= 1");
  const Region r = family == GridFamily::Short ? Region::Fsvee : Region::Flvee;
  std::vector<GridWeight> out;
  for (const auto& v : enumerate_solutions(weight_form(alg), alg.strict_mask(r), M))
    out.push_back(GridWeight{v, M});
  return out;
}

Int grid_count_closed_form(const Algebra& alg, GridFamily family, Int M) {
  const bool plus = (alg.name == AlgebraName::B3) == (family == GridFamily::Short);
  if (M % 2 == 0) {
    const Int k = M / 2;
    return plus ? k * (k + 1) * (2 * k + 1) / 6 : k * (k - 1) * (2 * k - 1) / 6;
  }
  const Int k = (M - 1) / 2;
  return plus ? k * (k + 1) * (k + 2) / 3 : k * (k + 1) * (k - 1) / 3;
}

namespace {

constexpr int kMaxReductionSteps = 100000;

struct Walls {
  std::array<IMat3, 3> refl;  // simple reflections on α∨-coordinates
  IMat3 r0lin;                // linear part of the affine reflection r_0
  IVec3 r0shift;              // its translation, ξ∨
};

Walls make_walls(const Algebra& alg) {
  Walls w;
  for (int i = 0; i < 3; ++i) w.refl[i] = WeylGroup::generator_on_weight(alg, i).transpose();
  w.r0lin = IMat3::Identity() - alg.highest_root_coroot * alg.highest_root_pairing.transpose();
  w.r0shift = alg.highest_root_coroot;
  return w;
}

}  // namespace

ReductionResult reduce_to_domain(const Algebra& alg, const Vec3& x0) {
  const Walls walls = make_walls(alg);
  ReductionResult res{x0, {}, 0};

  // Coarse translation into the unit cell first.
  for (int i = 0; i < 3; ++i) {
    const double f = std::floor(res.point[i]);
    res.point[i] -= f;
    res.transform.shift[i] -= static_cast<Int>(f);
  }

  const Vec3 marks = alg.marks.cast<double>();
  const Mat3 cartan = alg.cartan.cast<double>();
  for (; res.steps < kMaxReductionSteps; ++res.steps) {
    const Vec3 y = cartan * res.point;
    const double y0 = 1.0 - marks.dot(y);
    int worst = -1;
    double worst_val = -1e-14;
    for (int i = 0; i < 3; ++i)
      if (y[i] < worst_val) { worst = i + 1; worst_val = y[i]; }
    if (y0 < worst_val) { worst = 0; worst_val = y0; }
    if (worst < 0) return res;

    if (worst == 0) {
      res.point = walls.r0lin.cast<double>() * res.point + walls.r0shift.cast<double>();
      res.transform.w = walls.r0lin * res.transform.w;
      res.transform.shift = walls.r0lin * res.transform.shift + walls.r0shift;
    } else {
      const IMat3& r = walls.refl[worst - 1];
      res.point = r.cast<double>() * res.point;
      res.transform.w = r * res.transform.w;
      res.transform.shift = r * res.transform.shift;
    }
  }
  throw std::runtime_error("reduce_to_domain failed to converge");
}

IVec4 reduce_torus_point(const Algebra& alg, const TorusPoint& x, Int M) {
  const Walls walls = make_walls(alg);
  IVec3 num = x.num;
  const Int den = x.den;

  for (int step = 0; step < kMaxReductionSteps; ++step) {
    const IVec3 y = alg.cartan * num;  // numerators of ⟨α_i, x⟩ over den
    const Int y0 = den - alg.marks.dot(y);
    int worst = -1;
    Int worst_val = 0;
    for (int i = 0; i < 3; ++i)
      if (y[i] < worst_val) { worst = i + 1; worst_val = y[i]; }
    if (y0 < worst_val) { worst = 0; worst_val = y0; }

    if (worst < 0) {
      IVec4 u;
      u[0] = M;
      for (int i = 0; i < 3; ++i) {
        if ((y[i] * M) % den != 0)
          throw std::invalid_argument("reduce_torus_point: point is not in (1/M)P∨");
        u[i + 1] = y[i] * M / den;
        u[0] -= alg.marks[i] * u[i + 1];
      }
      return u;
    }

    if (worst == 0)
      num = walls.r0lin * num + den * walls.r0shift;
    else
      num = walls.refl[worst - 1] * num;
  }
  throw std::runtime_error("reduce_torus_point failed to converge");
}

}  // namespace orbitfn
