#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "spinprobe/atom.hpp"
#include "spinprobe/fieldgeom.hpp"
#include "spinprobe/numerics.hpp"
#include "spinprobe/switching.hpp"

namespace spinprobe::detector {

using complexd = std::complex<double>;

// Bloch vector a with |a| <= 1; rho = (1 + a.sigma)/2.
struct QubitState {
  fieldgeom::Vec3 a{0.0, 0.0, 0.0};

  double bloch_norm() const { return fieldgeom::norm(a); }
  fieldgeom::Mat2c density_matrix() const {
    return fieldgeom::density_matrix(a);
  }
};

enum class CouplingKind { SpinMagnetic, UdwAmplitude, UdwDerivative };

// Which detector coupling is active, its coupling constant, and the spatial
// smearing profile of the interaction.
struct CouplingModel {
  CouplingKind kind = CouplingKind::SpinMagnetic;
  double coupling = 0.0;  // q for SpinMagnetic, lambda for the UDW kinds
  numerics::RadialFunction smearing;

  static CouplingModel spin_magnetic(double q,
                                     numerics::RadialFunction smearing);
  static CouplingModel udw_amplitude(double lambda,
                                     numerics::RadialFunction smearing);
  static CouplingModel udw_derivative(double lambda,
                                      numerics::RadialFunction smearing);

  // Spectral exponent of the k-integrals: 3 for SpinMagnetic and
  // UdwDerivative, 1 for UdwAmplitude.
  int spectral_exponent() const;

  // (4 pi / 3)(q / 2 pi)^2 for SpinMagnetic, pi lambda^2 for the UDW kinds.
  double map_prefactor() const;

  bool is_udw() const { return kind != CouplingKind::SpinMagnetic; }
};

// Default spin coupling q = sqrt(4 pi alpha) (Heaviside-Lorentz convention).
double default_spin_coupling(double alpha = atom::kDefaultAlpha);

// The scalars that fully determine the leading-order state map.
struct ResponseSet {
  double L_plus = 0.0;   // L(+Omega)
  double L_minus = 0.0;  // L(-Omega)
  double L_zero = 0.0;   // L(0)
  complexd M{0.0, 0.0};  // M(Omega)
  std::optional<complexd> K;  // Kbar(Omega); UDW kinds only
};

// Requesting a functional a model does not have (Kbar for SpinMagnetic).
class ModelMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Q(k, Omega) = int dt dt' chi(t) chi(t') e^{i Omega |t-t'|} e^{-i k (t-t')},
// evaluated as int du W(u) e^{i Omega |u|} e^{-i k u} with W the switching
// autocorrelation. Q(k, 0) = |chi_tilde(k)|^2.
complexd q_kernel(const SwitchingFunction& chi, double k, double Omega,
                  const numerics::Tolerance& tol = {});

// L(Omega) = (2 pi)^{-3} int_0^inf dk k^gamma |s~(k)|^2 |chi~(k + Omega)|^2.
double response_L(const CouplingModel& model, const SwitchingFunction& chi,
                  double Omega, const numerics::Tolerance& tol = {});

// M(Omega) = (2 pi)^{-3} int_0^inf dk k^gamma |s~(k)|^2 Q(k, Omega);
// satisfies M(-Omega) = conj(M(Omega)).
complexd response_M(const CouplingModel& model, const SwitchingFunction& chi,
                    double Omega, const numerics::Tolerance& tol = {});

// Kbar(Omega) = (2 pi)^{-3} int dk k^gamma |s~(k)|^2
//               chi~*(k - Omega) chi~(k + Omega); UDW kinds only.
complexd response_K(const CouplingModel& model, const SwitchingFunction& chi,
                    double Omega, const numerics::Tolerance& tol = {});

ResponseSet compute_response_set(const CouplingModel& model,
                                 const SwitchingFunction& chi, double Omega,
                                 const numerics::Tolerance& tol = {});

struct EvolveResult {
  QubitState state;
  ResponseSet response;
  // false when |delta a| > 0.1 (leading-order map pushed past its regime).
  bool perturbative = true;
};

// Leading-order state map on the Bloch vector.
EvolveResult evolve_leading_order(const CouplingModel& model,
                                  const SwitchingFunction& chi, double Omega,
                                  const QubitState& initial,
                                  const numerics::Tolerance& tol = {});

enum class InitialSpin { Ground, Excited };

// 2 * map_prefactor * L(-Omega) for a ground start (a_z = +1), resp.
// L(+Omega) for an excited start (a_z = -1).
double flip_probability(const CouplingModel& model,
                        const SwitchingFunction& chi, double Omega,
                        InitialSpin initial,
                        const numerics::Tolerance& tol = {});

// Closed-form adiabatic transition rate of the n0 = 1 spin-magnetic detector;
// nonnegative, identically zero for Omega >= 0.
double adiabatic_rate_closed(const atom::OrbitalParams& params, double q,
                             double Omega);

// P_flip(Omega)/T over T_list (Gaussian switching, excited start),
// Richardson-extrapolated to T -> infinity. T_list must be strictly
// increasing with at least three entries; the P/T sequence must be
// monotone-converging or NonConvergence is thrown with the raw sequence.
double adiabatic_rate_numeric(const CouplingModel& model, double Omega,
                              const std::vector<double>& T_list,
                              const numerics::Tolerance& tol = {});

}  // namespace spinprobe::detector
