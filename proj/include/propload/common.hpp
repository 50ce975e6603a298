#pragma once

#include <complex>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace propload {

using cplx = std::complex<double>;

inline constexpr double PI = 3.141592653589793238462643383279502884;
inline constexpr cplx I{0.0, 1.0};

// Natural units used throughout unless a caller overrides them.
struct PhysConsts {
  double hbar = 1.0;
  double mass = 1.0;
};

// Thread cap for the few data-parallel loops (quadrature over grid points,
// projection shots). PROPLOAD_THREADS=1 forces serial execution.
inline unsigned max_threads() {
  static unsigned cached = [] {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PROPLOAD_THREADS")) {
      long v = std::strtol(env, nullptr, 10);
      if (v >= 1 && v < 1024) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return hw;
  }();
  return cached;
}

// Chunked parallel loop over [0, n). Falls back to serial when the range is
// small or only one thread is allowed. Results must be written to disjoint
// slots by the body.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  unsigned nt = max_threads();
  if (nt <= 1 || n < 16) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  nt = std::min<std::size_t>(nt, n);
  std::vector<std::thread> pool;
  pool.reserve(nt);
  std::size_t chunk = (n + nt - 1) / nt;
  for (unsigned t = 0; t < nt; ++t) {
    std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

inline double sq(double x) { return x * x; }
inline cplx sq(cplx x) { return x * x; }

}  // namespace propload
