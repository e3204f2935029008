#include "orbitfn/weyl.hpp"

#include "doctest.h"

#include <map>
#include <random>
#include <set>

using namespace orbitfn;

namespace {

const WeylGroup& group(AlgebraName n) {
  static const WeylGroup b3(build_algebra(AlgebraName::B3));
  static const WeylGroup c3(build_algebra(AlgebraName::C3));
  return n == AlgebraName::B3 ? b3 : c3;
}

Int det3(const IMat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

std::array<Int, 9> key(const IMat3& m) {
  std::array<Int, 9> k;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) k[3 * i + j] = m(i, j);
  return k;
}

}  // namespace

TEST_CASE("group order and closure") {
  for (auto name : {AlgebraName::B3, AlgebraName::C3}) {
    const WeylGroup& W = group(name);
    REQUIRE(W.size() == 48);
    std::set<std::array<Int, 9>> keys;
    for (const auto& w : W.elements()) keys.insert(key(w.on_weight));
    CHECK(keys.size() == 48);
    // Products stay inside the set.
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, 47);
    for (int t = 0; t < 200; ++t) {
      const IMat3 prod =
          W.elements()[pick(rng)].on_weight * W.elements()[pick(rng)].on_weight;
      CHECK(keys.count(key(prod)) == 1);
    }
    CHECK(W.identity().on_weight == IMat3::Identity());
  }
}

TEST_CASE("signs are multiplicative homomorphisms") {
  for (auto name : {AlgebraName::B3, AlgebraName::C3}) {
    const WeylGroup& W = group(name);
    std::map<std::array<Int, 9>, const WeylElement*> lookup;
    for (const auto& w : W.elements()) lookup[key(w.on_weight)] = &w;
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, 47);
    for (int t = 0; t < 300; ++t) {
      const WeylElement& a = W.elements()[pick(rng)];
      const WeylElement& b = W.elements()[pick(rng)];
      const WeylElement& ab = *lookup.at(key(IMat3(a.on_weight * b.on_weight)));
      for (int s = 0; s < 4; ++s) CHECK(ab.sign[s] == a.sign[s] * b.sign[s]);
    }
    // Identity has all signs +1; σe is the determinant.
    CHECK(W.identity().sign == std::array<std::int8_t, 4>{1, 1, 1, 1});
    for (const auto& w : W.elements()) {
      CHECK(w.sign[0] == 1);
      CHECK(w.sign[static_cast<int>(Series::S)] == det3(w.on_weight));
      CHECK(std::abs(det3(w.on_point)) == 1);
      // σe = σs·σl.
      CHECK(w.sign[1] == w.sign[2] * w.sign[3]);
    }
    // Nontrivial characters sum to zero over the group.
    for (int s = 1; s < 4; ++s) {
      int sum = 0;
      for (const auto& w : W.elements()) sum += w.sign[s];
      CHECK(sum == 0);
    }
  }
}

TEST_CASE("generator sign values follow the short/long split") {
  const Algebra& b3 = build_algebra(AlgebraName::B3);
  CHECK(generator_signs(b3, Series::Ss) == std::array<int, 3>{1, 1, -1});
  CHECK(generator_signs(b3, Series::Sl) == std::array<int, 3>{-1, -1, 1});
  const Algebra& c3 = build_algebra(AlgebraName::C3);
  CHECK(generator_signs(c3, Series::Ss) == std::array<int, 3>{-1, -1, 1});
  CHECK(generator_signs(c3, Series::Sl) == std::array<int, 3>{1, 1, -1});
  // r1 is a reflection: σe(r1) = −1.
  CHECK(generator_signs(c3, Series::S)[0] == -1);
}

TEST_CASE("admissibility: exactly the four sign homomorphisms") {
  for (auto name : {AlgebraName::B3, AlgebraName::C3}) {
    const Algebra& alg = build_algebra(name);
    CHECK(admissibility_check(alg, {1, 1, 1}));
    CHECK(admissibility_check(alg, {-1, -1, -1}));
    int admissible = 0;
    std::set<std::array<int, 3>> found;
    for (int bits = 0; bits < 8; ++bits) {
      std::array<int, 3> s{bits & 1 ? -1 : 1, bits & 2 ? -1 : 1, bits & 4 ? -1 : 1};
      if (admissibility_check(alg, s)) {
        ++admissible;
        found.insert(s);
      }
    }
    CHECK(admissible == 4);
    for (auto series : {Series::C, Series::S, Series::Ss, Series::Sl})
      CHECK(found.count(generator_signs(alg, series)) == 1);
  }
  CHECK(admissibility_check(build_algebra(AlgebraName::B3), {1, 1, -1}));
}

TEST_CASE("longest element is -1 with the prefactor parities") {
  const WeylGroup& b3 = group(AlgebraName::B3);
  const WeylElement& w0b = b3.elements()[b3.longest_element_index()];
  REQUIRE(w0b.on_weight == -IMat3::Identity());
  CHECK(sign_value(Series::Ss, w0b) == -1);  // B3 Ss pairs into sines
  CHECK(sign_value(Series::Sl, w0b) == 1);   // B3 Sl pairs into cosines
  const WeylGroup& c3 = group(AlgebraName::C3);
  const WeylElement& w0c = c3.elements()[c3.longest_element_index()];
  REQUIRE(w0c.on_weight == -IMat3::Identity());
  CHECK(sign_value(Series::Ss, w0c) == 1);
  CHECK(sign_value(Series::Sl, w0c) == -1);
}

TEST_CASE("pairing invariance over random weight/point pairs") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<Int> wcoord(-9, 9);
  std::uniform_int_distribution<Int> num(0, 59);
  std::uniform_int_distribution<std::size_t> pick(0, 47);
  for (auto name : {AlgebraName::B3, AlgebraName::C3}) {
    const WeylGroup& W = group(name);
    for (int t = 0; t < 1000; ++t) {
      const IVec3 lambda(wcoord(rng), wcoord(rng), wcoord(rng));
      const IVec3 x(num(rng), num(rng), num(rng));  // numerators over 60
      const WeylElement& w = W.elements()[pick(rng)];
      // Exact integer pairing: ⟨wλ, wx⟩·60 = ⟨λ, x⟩·60.
      CHECK((w.on_weight * lambda).dot(w.on_point * x) == lambda.dot(x));
    }
  }
}

TEST_CASE("stabilizer orders d_lambda reproduce the zero-pattern table") {
  // Patterns of (a,b,c) with nonzero entries drawn at random; the table of
  // stabilizer orders is the same for B3 and C3.
  const std::map<std::array<bool, 3>, int> expected = {
      {{true, true, true}, 1}, {{true, true, false}, 2}, {{true, false, true}, 2},
      {{false, true, true}, 2}, {{true, false, false}, 8}, {{false, true, false}, 4},
      {{false, false, true}, 6}, {{false, false, false}, 48}};
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<Int> nz(1, 20);
  for (auto name : {AlgebraName::B3, AlgebraName::C3}) {
    const WeylGroup& W = group(name);
    for (const auto& [pattern, d] : expected) {
      for (int t = 0; t < 20; ++t) {
        IVec3 lam;
        for (int i = 0; i < 3; ++i) lam[i] = pattern[i] ? nz(rng) : 0;
        CHECK(stabilizer_order_d(W, lam) == d);
      }
    }
  }
}

TEST_CASE("orbit-stabilizer relation on the torus") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<Int> num(0, 21);
  for (auto name : {AlgebraName::B3, AlgebraName::C3}) {
    const WeylGroup& W = group(name);
    for (int t = 0; t < 200; ++t) {
      const TorusPoint x(IVec3(num(rng), num(rng), num(rng)), 22);
      CHECK(orbit_size_eps(W, x) * torus_stabilizer_order(W, x) == 48);
    }
    CHECK(orbit_size_eps(W, TorusPoint(IVec3::Zero(), 1)) == 1);
  }
}
