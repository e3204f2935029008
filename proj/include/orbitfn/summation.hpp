#pragma once

#include "orbitfn/types.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace orbitfn {

/// Neumaier compensated accumulator; summation error stays at ulp scale
/// independent of term count and ordering.
struct NeumaierSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }

  double value() const { return sum + comp; }
};

struct ComplexSum {
  NeumaierSum re, im;

  void add(const Complex& z) {
    re.add(z.real());
    im.add(z.imag());
  }
  void add(double r, double i) {
    re.add(r);
    im.add(i);
  }
  Complex value() const { return Complex(re.value(), im.value()); }
};

/// Worker cap: ORBIT_THREADS if set, else the hardware concurrency.
inline unsigned default_thread_count() {
  if (const char* env = std::getenv("ORBIT_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Deterministic data-parallel map: each index is processed exactly once and
/// every output cell is owned by a single worker, so results do not depend on
/// the worker count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                         unsigned threads = 0) {
  if (threads == 0) threads = default_thread_count();
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += workers) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace orbitfn
