// Test-only oracles. Everything here is an independent route against which
// the library implementations are checked; none of it calls the code path it
// verifies.
#pragma once

#include <cmath>
#include <cstdint>

#include "spinprobe/numerics.hpp"

namespace oracles {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

inline double rel_err(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

// Gamma(s, x) = int_x^inf t^{s-1} e^{-t} dt by adaptive quadrature.
inline double gamma_upper_quadrature(double s, double x) {
  namespace num = spinprobe::numerics;
  const num::Tolerance tol{1e-12, 0.0, 20000};
  const num::RadialFunction integrand{
      [s](double t) { return std::pow(t, s - 1.0) * std::exp(-t); },
      x + 45.0, s - 1.0, nullptr};
  return num::integrate_semiline(integrand, x, tol);
}

}  // namespace oracles
