#include "orbitfn/orbit_eval.hpp"

#include "orbitfn/summation.hpp"

#include <cmath>
#include <random>

namespace orbitfn {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

PhaseTable::PhaseTable(Int den) : den_(den) {
  if (den < 1) throw std::invalid_argument("PhaseTable: denominator must be positive");
  cis_.resize(static_cast<std::size_t>(den));
  for (Int k = 0; k < den; ++k) {
    const double a = kTwoPi * static_cast<double>(k) / static_cast<double>(den);
    cis_[static_cast<std::size_t>(k)] = Complex(std::cos(a), std::sin(a));
  }
}

bool weight_in_cone(const Algebra& alg, Series family, const IVec3& weight) {
  for (int i = 0; i < 3; ++i) {
    Int lo = 0;
    switch (family) {
      case Series::C: lo = 0; break;
      case Series::S: lo = 1; break;
      case Series::Ss: lo = alg.is_short[i] ? 1 : 0; break;
      case Series::Sl: lo = alg.is_short[i] ? 0 : 1; break;
    }
    if (weight[i] < lo) return false;
  }
  return true;
}

Complex orbit_sum(const WeylGroup& W, Series family, const IVec3& lambda, const Vec3& x) {
  ComplexSum acc;
  for (const auto& w : W.elements()) {
    const IVec3 mu = w.on_weight * lambda;
    const double phase = kTwoPi * mu.cast<double>().dot(x);
    const double s = static_cast<double>(w.sign[static_cast<int>(family)]);
    acc.add(s * std::cos(phase), s * std::sin(phase));
  }
  return acc.value();
}

Complex orbit_sum(const WeylGroup& W, Series family, const IVec3& lambda, const TorusPoint& x,
                  const PhaseTable& table) {
  if (table.den() % x.den != 0)
    throw std::invalid_argument("orbit_sum: phase table denominator incompatible with point");
  const Int scale = table.den() / x.den;
  ComplexSum acc;
  for (const auto& w : W.elements()) {
    const IVec3 mu = w.on_weight * lambda;
    const Complex z = table.at(scale * mu.dot(x.num));
    const double s = static_cast<double>(w.sign[static_cast<int>(family)]);
    acc.add(s * z.real(), s * z.imag());
  }
  return acc.value();
}

namespace {

void require_cone(const WeylGroup& W, const OrbitFunctionSpec& spec) {
  if (!weight_in_cone(W.algebra(), spec.family, spec.weight))
    throw std::invalid_argument("weight (" + std::to_string(spec.weight[0]) + "," +
                                std::to_string(spec.weight[1]) + "," +
                                std::to_string(spec.weight[2]) + ") outside the " +
                                to_string(spec.family) + " cone of " +
                                to_string(W.algebra().name));
}

}  // namespace

Complex eval_generic(const WeylGroup& W, const OrbitFunctionSpec& spec, const Vec3& x) {
  require_cone(W, spec);
  return orbit_sum(W, spec.family, spec.weight, x);
}

Complex eval_generic(const WeylGroup& W, const OrbitFunctionSpec& spec, const TorusPoint& x,
                     const PhaseTable& table) {
  require_cone(W, spec);
  return orbit_sum(W, spec.family, spec.weight, x, table);
}

namespace {

// The 24 coset representatives of W/{1,−1} as frequency matrices: row r of
// each matrix holds the (a,b,c) coefficients of the factor multiplying the
// r-th point coordinate. Signs are listed per family below.
constexpr std::int8_t kTermsB3[24][9] = {
    {1, 0, 0, 0, 1, 0, 0, 0, 1},       {-1, 0, 0, 1, 1, 0, 0, 0, 1},
    {1, 1, 0, 0, -1, 0, 0, 2, 1},      {1, 0, 0, 0, 1, 1, 0, 0, -1},
    {0, 1, 0, -1, -1, 0, 2, 2, 1},     {-1, 0, 0, 1, 1, 1, 0, 0, -1},
    {-1, -1, 0, 1, 0, 0, 0, 2, 1},     {1, 1, 0, 0, 1, 1, 0, -2, -1},
    {1, 1, 1, 0, -1, -1, 0, 2, 1},     {0, -1, 0, -1, 0, 0, 2, 2, 1},
    {0, 1, 0, 1, 1, 1, -2, -2, -1},    {0, 1, 1, -1, -1, -1, 2, 2, 1},
    {-1, -1, 0, 1, 2, 1, 0, -2, -1},   {1, 2, 1, 0, -1, -1, 0, 0, 1},
    {-1, -1, -1, 1, 0, 0, 0, 2, 1},    {1, 1, 1, 0, 1, 0, 0, -2, -1},
    {0, -1, 0, 1, 2, 1, -2, -2, -1},   {1, 2, 1, -1, -1, -1, 0, 0, 1},
    {0, -1, -1, -1, 0, 0, 2, 2, 1},    {0, 1, 1, 1, 1, 0, -2, -2, -1},
    {0, 1, 1, -1, -2, -1, 2, 2, 1},    {-1, -2, -1, 1, 1, 0, 0, 0, 1},
    {1, 2, 1, 0, -1, 0, 0, 0, -1},     {-1, -1, -1, 1, 2, 1, 0, -2, -1},
};

constexpr std::int8_t kTermsC3[24][9] = {
    {1, 0, 0, 0, 1, 0, 0, 0, 1},       {-1, 0, 0, 1, 1, 0, 0, 0, 1},
    {1, 1, 0, 0, -1, 0, 0, 1, 1},      {1, 0, 0, 0, 1, 2, 0, 0, -1},
    {0, 1, 0, -1, -1, 0, 1, 1, 1},     {-1, 0, 0, 1, 1, 2, 0, 0, -1},
    {-1, -1, 0, 1, 0, 0, 0, 1, 1},     {1, 1, 0, 0, 1, 2, 0, -1, -1},
    {1, 1, 2, 0, -1, -2, 0, 1, 1},     {0, -1, 0, -1, 0, 0, 1, 1, 1},
    {0, 1, 0, 1, 1, 2, -1, -1, -1},    {0, 1, 2, -1, -1, -2, 1, 1, 1},
    {-1, -1, 0, 1, 2, 2, 0, -1, -1},   {1, 2, 2, 0, -1, -2, 0, 0, 1},
    {-1, -1, -2, 1, 0, 0, 0, 1, 1},    {1, 1, 2, 0, 1, 0, 0, -1, -1},
    {0, -1, 0, 1, 2, 2, -1, -1, -1},   {1, 2, 2, -1, -1, -2, 0, 0, 1},
    {0, -1, -2, -1, 0, 0, 1, 1, 1},    {0, 1, 2, 1, 1, 0, -1, -1, -1},
    {0, 1, 2, -1, -2, -2, 1, 1, 1},    {-1, -2, -2, 1, 1, 0, 0, 0, 1},
    {1, 2, 2, 0, -1, 0, 0, 0, -1},     {-1, -1, -2, 1, 2, 2, 0, -1, -1},
};

constexpr std::int8_t kSignsSine[24] = {1, 1, 1, -1, 1, -1, 1, -1, -1, 1, -1, -1,
                                        -1, -1, -1, 1, -1, -1, -1, 1, -1, -1, 1, 1};
constexpr std::int8_t kSignsCosine[24] = {1, -1, -1, 1, 1, -1, 1, -1, -1, -1, 1, 1,
                                          1, 1, 1, -1, -1, -1, -1, 1, -1, -1, 1, 1};

std::array<ExplicitTerm, 24> build_terms(const std::int8_t (&freq)[24][9],
                                         const std::int8_t (&signs)[24]) {
  std::array<ExplicitTerm, 24> out;
  for (int t = 0; t < 24; ++t) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out[t].freq(i, j) = freq[t][3 * i + j];
    out[t].sign = signs[t];
  }
  return out;
}

}  // namespace

const std::array<ExplicitTerm, 24>& explicit_terms(const Algebra& alg, Series family) {
  static const auto b3s = build_terms(kTermsB3, kSignsSine);
  static const auto b3l = build_terms(kTermsB3, kSignsCosine);
  static const auto c3s = build_terms(kTermsC3, kSignsCosine);
  static const auto c3l = build_terms(kTermsC3, kSignsSine);
  if (family != Series::Ss && family != Series::Sl)
    throw std::invalid_argument("explicit expansions exist only for the Ss and Sl families");
  if (alg.name == AlgebraName::B3) return family == Series::Ss ? b3s : b3l;
  return family == Series::Ss ? c3s : c3l;
}

namespace {

// B3-Ss and C3-Sl pair the ±w cosets into sines (prefactor 2i); the other two
// into cosines (prefactor 2).
bool is_sine_family(const Algebra& alg, Series family) {
  return (alg.name == AlgebraName::B3) == (family == Series::Ss);
}

}  // namespace

Complex eval_explicit(const Algebra& alg, Series family, const IVec3& lambda, const Vec3& x) {
  const auto& terms = explicit_terms(alg, family);
  const bool sine = is_sine_family(alg, family);
  NeumaierSum acc;
  for (const auto& t : terms) {
    const Vec3 f = (t.freq * lambda).cast<double>();
    const double phase = kTwoPi * f.dot(x);
    acc.add(t.sign * (sine ? std::sin(phase) : std::cos(phase)));
  }
  return sine ? Complex(0.0, 2.0 * acc.value()) : Complex(2.0 * acc.value(), 0.0);
}

Complex eval_explicit(const Algebra& alg, Series family, const IVec3& lambda, const TorusPoint& x,
                      const PhaseTable& table) {
  if (table.den() % x.den != 0)
    throw std::invalid_argument("eval_explicit: phase table denominator incompatible with point");
  const Int scale = table.den() / x.den;
  const auto& terms = explicit_terms(alg, family);
  const bool sine = is_sine_family(alg, family);
  NeumaierSum acc;
  for (const auto& t : terms) {
    const IVec3 f = t.freq * lambda;
    const Complex z = table.at(scale * f.dot(x.num));
    acc.add(t.sign * (sine ? z.imag() : z.real()));
  }
  return sine ? Complex(0.0, 2.0 * acc.value()) : Complex(2.0 * acc.value(), 0.0);
}

namespace {

double mixed_dev(const Complex& a, const Complex& b) {
  return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b)));
}

}  // namespace

SymmetryReport verify_symmetries(const WeylGroup& W, const OrbitFunctionSpec& spec, int trials,
                                 std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify_symmetries: trials must be >= 1");
  require_cone(W, spec);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::uniform_int_distribution<Int> lattice(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, W.size() - 1);

  SymmetryReport rep;
  for (int t = 0; t < trials; ++t) {
    const Vec3 x(coord(rng), coord(rng), coord(rng));
    const Complex base = orbit_sum(W, spec.family, spec.weight, x);

    const IVec3 q(lattice(rng), lattice(rng), lattice(rng));
    const Complex shifted = orbit_sum(W, spec.family, spec.weight, x + q.cast<double>());
    rep.max_shift_dev = std::max(rep.max_shift_dev, mixed_dev(shifted, base));

    const WeylElement& w = W.elements()[pick(rng)];
    const double s = static_cast<double>(w.sign[static_cast<int>(spec.family)]);
    const Complex moved = orbit_sum(W, spec.family, spec.weight, w.on_point.cast<double>() * x);
    rep.max_point_dev = std::max(rep.max_point_dev, mixed_dev(moved, s * base));

    const Complex relabeled = orbit_sum(W, spec.family, w.on_weight * spec.weight, x);
    rep.max_weight_dev = std::max(rep.max_weight_dev, mixed_dev(relabeled, s * base));
  }
  return rep;
}

ProductCheck product_decomposition_check(const WeylGroup& W, Series family, const IVec3& lambda,
                                         const IVec3& lambda2, const Vec3& x) {
  if (family != Series::Ss && family != Series::Sl)
    throw std::invalid_argument("product decomposition applies to the Ss and Sl families");
  const Complex lhs =
      orbit_sum(W, family, lambda, x) * orbit_sum(W, family, lambda2, x);
  ComplexSum rhs;
  for (const auto& w : W.elements()) {
    const IVec3 mu = lambda + w.on_weight * lambda2;
    const double s = static_cast<double>(w.sign[static_cast<int>(family)]);
    const Complex phi = orbit_sum(W, Series::C, mu, x);
    rhs.add(s * phi.real(), s * phi.imag());
  }
  ProductCheck out{lhs, rhs.value(), 0.0};
  out.deviation = mixed_dev(out.lhs, out.rhs);
  return out;
}

namespace {

Complex det3c(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Complex per3c(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) + m(1, 2) * m(2, 1)) +
         m(0, 1) * (m(1, 0) * m(2, 2) + m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) + m(1, 1) * m(2, 0));
}

}  // namespace

TrigCheck trig_correspondence_C3(const WeylGroup& W, Series family, const IVec3& lambda,
                                 const Vec3& x) {
  const Algebra& alg = W.algebra();
  if (alg.name != AlgebraName::C3)
    throw std::invalid_argument("trig correspondence is specific to C3");
  const Vec3 lam = alg.point_from_omega(lambda);
  const Vec3 pt = alg.point_from_alphavee(x);
  Mat3 sines, cosines;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double a = kTwoPi * lam[i] * pt[j];
      sines(i, j) = std::sin(a);
      cosines(i, j) = std::cos(a);
    }

  TrigCheck out{};
  out.orbit_value = orbit_sum(W, family, lambda, x);
  switch (family) {
    case Series::C: out.matrix_value = 8.0 * per3c(cosines); break;
    case Series::S: out.matrix_value = Complex(0, -8) * det3c(sines); break;
    case Series::Ss: out.matrix_value = 8.0 * det3c(cosines); break;
    case Series::Sl: out.matrix_value = Complex(0, -8) * per3c(sines); break;
  }
  out.deviation = mixed_dev(out.orbit_value, out.matrix_value);
  return out;
}

}  // namespace orbitfn
