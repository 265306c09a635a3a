#pragma once

#include <complex>
#include <functional>
#include <stdexcept>

namespace spinprobe::numerics {

// Stopping rule for the adaptive quadrature routines. `rel` scales against
// the running value of the integral, `abs` is the floor below which
// contributions count as zero.
struct Tolerance {
  double rel = 1e-10;
  double abs = 1e-14;
  int max_subdivisions = 2000;
};

void validate(const Tolerance& tol);

// Thrown when a subdivision budget runs out before the requested tolerance is
// met. Quadrature fails loudly instead of returning a silently bad value.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A radial profile r > 0 -> value plus the metadata the quadrature routines
// need: the radius beyond which the profile is negligible, and the power-law
// exponent p at the origin (evaluator ~ r^p as r -> 0, p > -1).
//
// `analytic_fourier`, when set, is a closed form of the spherical Fourier
// transform of the profile. spherical_fourier() never consults it (it is the
// independent quadrature route); the response functionals use it as their
// fast path.
struct RadialFunction {
  std::function<double(double)> evaluator;
  double decay_scale = 30.0;
  double origin_exponent = 0.0;
  std::function<double(double)> analytic_fourier;

  double operator()(double r) const { return evaluator(r); }
};

// Upper incomplete gamma function Gamma(s, x) for s > 0, x >= 0.
// Series for x < s + 1, Lentz continued fraction otherwise.
double gamma_upper(double s, double x);

// Adaptive Gauss-Kronrod 15(7) integration over [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 const Tolerance& tol = {});

// Same, for complex-valued integrands (one pass, shared subdivision).
std::complex<double> integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const Tolerance& tol = {});

// int_0^inf f(r) dr, resp. int_lower^inf f(r) dr.
double integrate_semiline(const RadialFunction& f, const Tolerance& tol = {});
double integrate_semiline(const RadialFunction& f, double lower,
                          const Tolerance& tol = {});

// int_0^inf f(u) cos(omega u) du (sin when use_sin). Panels are partitioned
// at the half-periods of the oscillation; panels wider than `scale` (the
// decay radius of f) are capped. Slowly decaying tails fall back to Aitken
// acceleration of the alternating partial sums before giving up.
double oscillatory_semiline(const std::function<double(double)>& f,
                            double omega, bool use_sin, double scale,
                            const Tolerance& tol = {});

// phi_tilde(k) = int d^3x f(|x|) e^{i k.x}
//             = (4 pi / k) int_0^inf r sin(kr) f(r) dr,
// continuous at k = 0 where it equals 4 pi int_0^inf r^2 f(r) dr.
double spherical_fourier(const RadialFunction& f, double k,
                         const Tolerance& tol = {});

}  // namespace spinprobe::numerics
