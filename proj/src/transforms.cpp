#include "orbitfn/transforms.hpp"

#include "orbitfn/summation.hpp"

#include <random>

namespace orbitfn {

namespace {

void check_field_header(const WeylGroup& W, AlgebraName algebra, GridFamily, Int M) {
  if (algebra != W.algebra().name)
    throw std::invalid_argument("field algebra does not match the Weyl group");
  if (M < 1) throw std::invalid_argument("field modulus M must be >= 1");
}

// Per-weight orbit data reused across all grid points.
struct WeightOrbit {
  std::array<IVec3, 48> mu;
  Int h;  // h∨_λ
};

struct Kernel {
  std::vector<GridPoint> points;
  std::vector<GridWeight> weights;
  std::vector<TorusPoint> torus;
  std::vector<int> eps;
  std::vector<WeightOrbit> orbits;
  std::array<std::int8_t, 48> sign;
  PhaseTable table;

  Kernel(const WeylGroup& W, GridFamily family, Int M)
      : points(enumerate_grid(W.algebra(), family, M)),
        weights(enumerate_weights(W.algebra(), family, M)),
        table(W.algebra().coweight_coroot_den * M) {
    const Series series = series_of(family);
    torus.reserve(points.size());
    eps.reserve(points.size());
    for (const auto& p : points) {
      torus.push_back(grid_torus_point(W.algebra(), p));
      eps.push_back(orbit_size_eps(W, torus.back()));
    }
    orbits.resize(weights.size());
    for (std::size_t li = 0; li < weights.size(); ++li) {
      const IVec3 lam = weights[li].omega();
      for (std::size_t wi = 0; wi < W.size(); ++wi)
        orbits[li].mu[wi] = W.elements()[wi].on_weight * lam;
      orbits[li].h = stabilizer_order_h(W, lam, M);
    }
    for (std::size_t wi = 0; wi < W.size(); ++wi)
      sign[wi] = W.elements()[wi].sign[static_cast<int>(series)];
  }

  Complex phi(std::size_t li, std::size_t xi) const {
    const TorusPoint& x = torus[xi];
    const Int scale = table.den() / x.den;
    ComplexSum acc;
    for (std::size_t wi = 0; wi < 48; ++wi) {
      const Complex z = table.at(scale * orbits[li].mu[wi].dot(x.num));
      const double s = static_cast<double>(sign[wi]);
      acc.add(s * z.real(), s * z.imag());
    }
    return acc.value();
  }
};

}  // namespace

SpectralField forward_transform(const WeylGroup& W, const SampledField& field, unsigned threads) {
  check_field_header(W, field.algebra, field.family, field.M);
  const Kernel k(W, field.family, field.M);
  if (field.values.size() != k.points.size())
    throw std::invalid_argument("sampled field length " + std::to_string(field.values.size()) +
                                " does not match |F_M| = " + std::to_string(k.points.size()));

  SpectralField out{field.algebra, field.family, field.M, {}};
  out.coeffs.resize(k.weights.size());
  const double m3 = static_cast<double>(field.M) * field.M * field.M;
  const double kconst = static_cast<double>(W.algebra().k_const);
  parallel_for(
      k.weights.size(),
      [&](std::size_t li) {
        ComplexSum acc;
        for (std::size_t xi = 0; xi < k.points.size(); ++xi) {
          const Complex term =
              static_cast<double>(k.eps[xi]) * field.values[xi] * std::conj(k.phi(li, xi));
          acc.add(term);
        }
        out.coeffs[li] = acc.value() / (kconst * m3 * static_cast<double>(k.orbits[li].h));
      },
      threads);
  return out;
}

std::vector<Complex> inverse_on_grid(const WeylGroup& W, const SpectralField& spec,
                                     unsigned threads) {
  check_field_header(W, spec.algebra, spec.family, spec.M);
  const Kernel k(W, spec.family, spec.M);
  if (spec.coeffs.size() != k.weights.size())
    throw std::invalid_argument("spectral field length " + std::to_string(spec.coeffs.size()) +
                                " does not match |Λ_M| = " + std::to_string(k.weights.size()));
  std::vector<Complex> values(k.points.size());
  parallel_for(
      k.points.size(),
      [&](std::size_t xi) {
        ComplexSum acc;
        for (std::size_t li = 0; li < k.weights.size(); ++li)
          acc.add(spec.coeffs[li] * k.phi(li, xi));
        values[xi] = acc.value();
      },
      threads);
  return values;
}

Complex inverse_transform(const WeylGroup& W, const SpectralField& spec, const Vec3& x) {
  check_field_header(W, spec.algebra, spec.family, spec.M);
  const Algebra& alg = W.algebra();
  const auto weights = enumerate_weights(alg, spec.family, spec.M);
  if (spec.coeffs.size() != weights.size())
    throw std::invalid_argument("spectral field length does not match |Λ_M|");
  const Series series = series_of(spec.family);
  ComplexSum acc;
  for (std::size_t li = 0; li < weights.size(); ++li)
    acc.add(spec.coeffs[li] * eval_explicit(alg, series, weights[li].omega(), x));
  return acc.value();
}

Eigen::MatrixXcd discrete_gram_matrix(const WeylGroup& W, GridFamily family, Int M) {
  const Kernel k(W, family, M);
  const Eigen::Index n = static_cast<Eigen::Index>(k.weights.size());
  Eigen::MatrixXcd values(n, static_cast<Eigen::Index>(k.points.size()));
  for (Eigen::Index li = 0; li < n; ++li)
    for (std::size_t xi = 0; xi < k.points.size(); ++xi)
      values(li, static_cast<Eigen::Index>(xi)) = k.phi(static_cast<std::size_t>(li), xi);

  Eigen::MatrixXcd gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      ComplexSum acc;
      for (std::size_t xi = 0; xi < k.points.size(); ++xi)
        acc.add(static_cast<double>(k.eps[xi]) * values(i, static_cast<Eigen::Index>(xi)) *
                std::conj(values(j, static_cast<Eigen::Index>(xi))));
      gram(i, j) = acc.value();
    }
  return gram;
}

std::vector<double> gram_expected_diagonal(const WeylGroup& W, GridFamily family, Int M) {
  const auto weights = enumerate_weights(W.algebra(), family, M);
  const double base = static_cast<double>(W.algebra().k_const) * static_cast<double>(M) * M * M;
  std::vector<double> diag;
  diag.reserve(weights.size());
  for (const auto& lam : weights)
    diag.push_back(base * stabilizer_order_h(W, lam.omega(), M));
  return diag;
}

Complex continuous_inner_product(const WeylGroup& W, Series family, const IVec3& lambda,
                                 const IVec3& lambda2, QuadratureMethod method, Int n_samples,
                                 std::uint64_t seed) {
  const Algebra& alg = W.algebra();
  if (!weight_in_cone(alg, family, lambda) || !weight_in_cone(alg, family, lambda2))
    throw std::invalid_argument("continuous_inner_product: weight outside the family cone");
  if (n_samples < 1) throw std::invalid_argument("continuous_inner_product: need n_samples >= 1");

  const bool same = lambda == lambda2;
  const bool fast = family == Series::Ss || family == Series::Sl;
  auto value = [&](const Vec3& x) -> Complex {
    const Complex a = fast ? eval_explicit(alg, family, lambda, x) : orbit_sum(W, family, lambda, x);
    if (same) return Complex(std::norm(a), 0.0);
    const Complex b =
        fast ? eval_explicit(alg, family, lambda2, x) : orbit_sum(W, family, lambda2, x);
    return a * std::conj(b);
  };

  const double volF = alg.K_const / 48.0;
  ComplexSum acc;
  Int used = 0;

  if (method == QuadratureMethod::MonteCarlo) {
    // Uniform barycentric sampling of the F simplex, in α∨-coordinates.
    Mat3 vertices;  // row i: ω∨_{i+1}/m_{i+1}
    for (int i = 0; i < 3; ++i)
      vertices.row(i) = alg.coweight_coroot_num.row(i).cast<double>() /
                        (static_cast<double>(alg.coweight_coroot_den) *
                         static_cast<double>(alg.marks[i]));
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> expo(1.0);
    for (Int s = 0; s < n_samples; ++s) {
      Vec4 e(expo(rng), expo(rng), expo(rng), expo(rng));
      e /= e.sum();
      const Vec3 x = vertices.transpose() * e.tail<3>();
      acc.add(value(x));
    }
    used = n_samples;
  } else {
    // Midpoint rule over the torus cube folded into F; each cell contributes
    // once, and F tiles the torus 48-fold.
    const Int n = std::max<Int>(1, static_cast<Int>(std::llround(std::cbrt(
                                        static_cast<double>(n_samples)))));
    for (Int i = 0; i < n; ++i)
      for (Int j = 0; j < n; ++j)
        for (Int l = 0; l < n; ++l) {
          const Vec3 cube((i + 0.5) / n, (j + 0.5) / n, (l + 0.5) / n);
          acc.add(value(reduce_to_domain(alg, cube).point));
        }
    used = n * n * n;
  }
  return acc.value() * (volF / static_cast<double>(used));
}

}  // namespace orbitfn
