#include "orbitfn/weyl.hpp"

#include <map>
#include <set>

namespace orbitfn {

IMat3 WeylGroup::generator_on_weight(const Algebra& alg, int i) {
  // (r_i λ)_j = λ_j − λ_i C_ij: column i of the identity picks up −row i of C.
  IMat3 m = IMat3::Identity();
  for (int j = 0; j < 3; ++j) m(j, i) -= alg.cartan(i, j);
  return m;
}

std::array<int, 3> generator_signs(const Algebra& alg, Series s) {
  std::array<int, 3> g{};
  for (int i = 0; i < 3; ++i) {
    switch (s) {
      case Series::C: g[i] = 1; break;
      case Series::S: g[i] = -1; break;
      case Series::Ss: g[i] = alg.is_short[i] ? -1 : 1; break;
      case Series::Sl: g[i] = alg.is_short[i] ? 1 : -1; break;
    }
  }
  return g;
}

bool admissibility_check(const Algebra& alg, const std::array<int, 3>& gen_signs) {
  for (int i = 0; i < 3; ++i) {
    if (gen_signs[i] != 1 && gen_signs[i] != -1) return false;
    for (int j = 0; j < 3; ++j) {
      // (σ_i σ_j)^{m_ij} = 1 fails exactly when m_ij is odd and σ_i σ_j = −1.
      if (alg.coxeter(i, j) % 2 == 1 && gen_signs[i] * gen_signs[j] == -1) return false;
    }
  }
  return true;
}

namespace {

std::array<Int, 9> matrix_key(const IMat3& m) {
  std::array<Int, 9> k;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) k[3 * i + j] = m(i, j);
  return k;
}

}  // namespace

WeylGroup::WeylGroup(const Algebra& alg) : alg_(&alg) {
  std::array<IMat3, 3> gen_w, gen_p;
  std::array<std::array<std::int8_t, 4>, 3> gen_sign;
  for (int i = 0; i < 3; ++i) {
    gen_w[i] = generator_on_weight(alg, i);
    gen_p[i] = gen_w[i].transpose();  // contragredient of an involution
    for (int s = 0; s < 4; ++s)
      gen_sign[i][s] =
          static_cast<std::int8_t>(generator_signs(alg, static_cast<Series>(s))[i]);
  }

  WeylElement id{IMat3::Identity(), IMat3::Identity(), {1, 1, 1, 1}};
  elems_.push_back(id);
  std::set<std::array<Int, 9>> seen;
  seen.insert(matrix_key(id.on_weight));

  // Breadth-first closure under right multiplication by the generators.
  for (std::size_t head = 0; head < elems_.size(); ++head) {
    if (elems_.size() > 48)
      throw std::runtime_error("Weyl group closure exceeded 48 elements; generator data is wrong");
    for (int i = 0; i < 3; ++i) {
      WeylElement next;
      next.on_weight = elems_[head].on_weight * gen_w[i];
      if (!seen.insert(matrix_key(next.on_weight)).second) continue;
      next.on_point = elems_[head].on_point * gen_p[i];
      for (int s = 0; s < 4; ++s)
        next.sign[s] = static_cast<std::int8_t>(elems_[head].sign[s] * gen_sign[i][s]);
      elems_.push_back(next);
    }
  }
  if (elems_.size() != 48)
    throw std::runtime_error("Weyl group closure produced " + std::to_string(elems_.size()) +
                             " elements, expected 48");

  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i].on_weight == -IMat3::Identity()) {
      longest_ = i;
      break;
    }
  }
}

int stabilizer_order_d(const WeylGroup& W, const IVec3& weight) {
  int count = 0;
  for (const auto& w : W.elements())
    if (w.on_weight * weight == weight) ++count;
  return count;
}

int orbit_size_eps(const WeylGroup& W, const TorusPoint& x) {
  std::set<std::array<Int, 4>> orbit;
  for (const auto& w : W.elements()) orbit.insert(w.apply_point(x).key());
  return static_cast<int>(orbit.size());
}

int torus_stabilizer_order(const WeylGroup& W, const TorusPoint& x) {
  int count = 0;
  for (const auto& w : W.elements())
    if (w.apply_point(x) == x) ++count;
  return count;
}

int stabilizer_order_h(const WeylGroup& W, const IVec3& weight, Int M) {
  if (M < 1) throw std::invalid_argument("stabilizer_order_h: M must be positive");
  const Algebra& alg = W.algebra();
  const Int mod = alg.cartan_det * M;
  int count = 0;
  for (const auto& w : W.elements()) {
    IVec3 delta = w.on_weight * weight - weight;
    // wλ − λ ∈ MQ iff adj(Cᵀ)·delta ≡ 0 (mod det(C)·M) component-wise.
    IVec3 n = alg.cartan_adj.transpose() * delta;
    if (n[0] % mod == 0 && n[1] % mod == 0 && n[2] % mod == 0) ++count;
  }
  return count;
}

}  // namespace orbitfn
