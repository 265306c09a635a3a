#pragma once

#include <stdexcept>

#include "spinprobe/numerics.hpp"

namespace spinprobe::atom {

// CODATA 2018 fine-structure constant; overridable everywhere it enters.
inline constexpr double kDefaultAlpha = 7.2973525693e-3;

// Frozen constants of a Dirac hydrogen-like s-orbital in internal units:
// hbar = c = 1 and a0 = 1, so lengths are in a0 and energies in 1/a0.
struct OrbitalParams {
  int Z = 1;
  int n0 = 1;
  double alpha = kDefaultAlpha;
  double beta = 0.0;  // sqrt(1 - Z^2 alpha^2)
  double a0 = 1.0;
  double k1 = 0.0;    // 2^beta Z^{beta+1/2} sqrt((1+beta)/Gamma(1+2 beta)) > 0
  double k2 = 0.0;    // -k1 sqrt((1-beta)/(1+beta)) < 0
  double me = 0.0;    // 1 / (alpha a0)
};

// Radial data of the orbital. g and f are the closed-form n0 = 1 profiles,
// phi the smearing function; all three carry their analytic spherical
// transforms for the response-functional fast path.
struct OrbitalProfile {
  OrbitalParams params;
  numerics::RadialFunction g;
  numerics::RadialFunction f;
  numerics::RadialFunction phi;
};

class UnsupportedOrbital : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

OrbitalProfile make_orbital(int Z, int n0 = 1, double alpha = kDefaultAlpha);

// Bound-state energy E_nj; requires n >= 1, half-integer j in
// {1/2, ..., n - 1/2} and Z alpha < j + 1/2.
double energy_level(int Z, int n, double j, double alpha = kDefaultAlpha);

// phi(r) in closed form (upper incomplete gamma); r > 0.
double smearing_phi(const OrbitalProfile& profile, double r);

// int d^3x phi(|x|) by direct quadrature of 4 pi r^2 phi(r).
double phi_volume_integral(const OrbitalProfile& profile,
                           const numerics::Tolerance& tol = {});

// 1 - (4/3) int_0^inf r^2 f^2(r) dr, in (0, 1].
double g_factor_correction(const OrbitalProfile& profile,
                           const numerics::Tolerance& tol = {});

// phi_tilde(k) through the generic quadrature transform.
double phi_fourier(const OrbitalProfile& profile, double k,
                   const numerics::Tolerance& tol = {});

// sin(2 beta arctan tau) - 2 beta tau cos(2 beta arctan tau), evaluated
// cancellation-free (the expression is O(tau^3)). This is the oscillatory
// bracket shared by phi's spectral closed form and the adiabatic rate.
double spectral_bracket(double beta, double tau);

}  // namespace spinprobe::atom
