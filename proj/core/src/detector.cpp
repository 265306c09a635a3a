#include "spinprobe/detector.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace spinprobe::detector {

using numerics::NonConvergence;
using numerics::Tolerance;

CouplingModel CouplingModel::spin_magnetic(double q,
                                           numerics::RadialFunction smearing) {
  return {CouplingKind::SpinMagnetic, q, std::move(smearing)};
}

CouplingModel CouplingModel::udw_amplitude(double lambda,
                                           numerics::RadialFunction smearing) {
  return {CouplingKind::UdwAmplitude, lambda, std::move(smearing)};
}

CouplingModel CouplingModel::udw_derivative(double lambda,
                                            numerics::RadialFunction smearing) {
  return {CouplingKind::UdwDerivative, lambda, std::move(smearing)};
}

int CouplingModel::spectral_exponent() const {
  return kind == CouplingKind::UdwAmplitude ? 1 : 3;
}

double CouplingModel::map_prefactor() const {
  if (kind == CouplingKind::SpinMagnetic) {
    const double q2pi = coupling / (2.0 * M_PI);
    return (4.0 * M_PI / 3.0) * q2pi * q2pi;
  }
  return M_PI * coupling * coupling;
}

double default_spin_coupling(double alpha) {
  return std::sqrt(4.0 * M_PI * alpha);
}

namespace {

double autocorrelation_scale(const SwitchingFunction& chi) {
  if (chi.kind() == SwitchingFunction::Kind::Gaussian) {
    return 8.0 * chi.width();
  }
  return chi.width();
}

}  // namespace

complexd q_kernel(const SwitchingFunction& chi, double k, double Omega,
                  const Tolerance& tol) {
  if (!(k >= 0.0)) throw std::domain_error("q_kernel: requires k >= 0");

  auto W = [&chi](double u) { return chi.autocorrelation_closed(u); };
  const double scale = autocorrelation_scale(chi);

  // Q = int_0^inf W(u) [cos((Omega-k)u) + cos((Omega+k)u)] du
  //   + i int_0^inf W(u) [sin((Omega-k)u) + sin((Omega+k)u)] du.
  const double re =
      numerics::oscillatory_semiline(W, Omega - k, false, scale, tol) +
      numerics::oscillatory_semiline(W, Omega + k, false, scale, tol);
  const double im =
      numerics::oscillatory_semiline(W, Omega - k, true, scale, tol) +
      numerics::oscillatory_semiline(W, Omega + k, true, scale, tol);
  return {re, im};
}

namespace {

double smearing_transform(const CouplingModel& model, double k,
                          const Tolerance& tol) {
  if (model.smearing.analytic_fourier) return model.smearing.analytic_fourier(k);
  return numerics::spherical_fourier(model.smearing, k, tol);
}

// (2 pi)^{-3} int_0^inf dk k^gamma |s~(k)|^2 kern(k).
//
// `center` is where the kernel is concentrated (max(0, -Omega) for the
// L-type kernels, |Omega| for Q). With Gaussian switching the L-type kernel
// is known to vanish outside center +- 12 sqrt(2 pi)/T, so the integral is
// hard-cut there; every other case extends geometrically until contributions
// fall below tolerance.
complexd spectral_integral(const CouplingModel& model,
                           const SwitchingFunction& chi, double center,
                           bool hard_cut,
                           const std::function<complexd(double)>& kern,
                           const Tolerance& tol) {
  const int gamma = model.spectral_exponent();
  auto integrand = [&](double k) -> complexd {
    const double s = smearing_transform(model, k, tol);
    const double kg = (gamma == 3) ? k * k * k : k;
    return kg * s * s * kern(k);
  };

  const bool gaussian = chi.kind() == SwitchingFunction::Kind::Gaussian;
  const double width = gaussian
                           ? 12.0 * std::sqrt(2.0 * M_PI) / chi.width()
                           : std::max(1.0, 2.0 * M_PI / chi.width());

  const double norm = 1.0 / std::pow(2.0 * M_PI, 3);

  if (hard_cut && gaussian) {
    const double lo = std::max(0.0, center - width);
    const double hi = center + width;
    return norm * numerics::integrate_complex(integrand, lo, hi, tol);
  }

  // Momentum scale on which the smearing transform varies.
  const double k_smear = 36.0 / std::max(model.smearing.decay_scale, 1e-12);

  std::vector<double> pts{0.0,
                          std::max(0.0, center - width),
                          center + width,
                          k_smear};
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  complexd total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i + 1] > pts[i]) {
      total += numerics::integrate_complex(integrand, pts[i], pts[i + 1], tol);
    }
  }

  double a = pts.back();
  double step = std::max(a, 1.0);
  int quiet = 0;
  for (int chunk = 0; chunk < 48; ++chunk) {
    const complexd piece =
        numerics::integrate_complex(integrand, a, a + step, tol);
    total += piece;
    if (std::abs(piece) <=
        std::max(tol.abs, 0.01 * tol.rel * std::abs(total))) {
      if (++quiet >= 2) return norm * total;
    } else {
      quiet = 0;
    }
    a += step;
    step *= 2.0;
  }
  throw NonConvergence("spectral_integral: k-tail did not converge");
}

}  // namespace

double response_L(const CouplingModel& model, const SwitchingFunction& chi,
                  double Omega, const Tolerance& tol) {
  auto kern = [&](double k) -> complexd {
    return std::norm(chi_fourier(chi, k + Omega, tol));
  };
  const double center = std::max(0.0, -Omega);
  return spectral_integral(model, chi, center, /*hard_cut=*/true, kern, tol)
      .real();
}

complexd response_M(const CouplingModel& model, const SwitchingFunction& chi,
                    double Omega, const Tolerance& tol) {
  auto kern = [&](double k) -> complexd { return q_kernel(chi, k, Omega, tol); };
  return spectral_integral(model, chi, std::abs(Omega), /*hard_cut=*/false,
                           kern, tol);
}

complexd response_K(const CouplingModel& model, const SwitchingFunction& chi,
                    double Omega, const Tolerance& tol) {
  if (!model.is_udw()) {
    throw ModelMismatch(
        "response_K: Kbar exists only for the UDW kinds; the spin-magnetic "
        "model has no analogue");
  }
  auto kern = [&](double k) -> complexd {
    return std::conj(chi_fourier(chi, k - Omega, tol)) *
           chi_fourier(chi, k + Omega, tol);
  };
  return spectral_integral(model, chi, std::abs(Omega), /*hard_cut=*/true,
                           kern, tol);
}

ResponseSet compute_response_set(const CouplingModel& model,
                                 const SwitchingFunction& chi, double Omega,
                                 const Tolerance& tol) {
  ResponseSet rs;
  rs.L_plus = response_L(model, chi, Omega, tol);
  rs.L_minus = response_L(model, chi, -Omega, tol);
  rs.L_zero = response_L(model, chi, 0.0, tol);
  rs.M = response_M(model, chi, Omega, tol);
  if (model.is_udw()) rs.K = response_K(model, chi, Omega, tol);
  return rs;
}

EvolveResult evolve_leading_order(const CouplingModel& model,
                                  const SwitchingFunction& chi, double Omega,
                                  const QubitState& initial,
                                  const Tolerance& tol) {
  if (initial.bloch_norm() > 1.0 + 1e-12) {
    throw std::domain_error("evolve_leading_order: requires |a| <= 1");
  }

  const ResponseSet rs = compute_response_set(model, chi, Omega, tol);
  const double pref = model.map_prefactor();
  const double ax = initial.a[0], ay = initial.a[1], az = initial.a[2];

  double dx, dy;
  if (model.is_udw()) {
    const complexd MmK = rs.M - *rs.K;
    const complexd MpK = rs.M + *rs.K;
    dx = -2.0 * pref * (ax * MmK.real() + ay * MpK.imag());
    dy = -2.0 * pref * (ay * MpK.real() - ax * MmK.imag());
  } else {
    dx = -2.0 * pref * (ax * (rs.L_zero + rs.M.real()) + ay * rs.M.imag());
    dy = -2.0 * pref * (ay * (rs.L_zero + rs.M.real()) - ax * rs.M.imag());
  }
  // a_z (L+ + L-) - L+ + L- rearranged so the vanishing branch cancels
  // exactly at a_z = +-1.
  const double dz = -2.0 * pref *
                    ((az - 1.0) * rs.L_plus + (az + 1.0) * rs.L_minus);

  EvolveResult out;
  out.state.a = {ax + dx, ay + dy, az + dz};
  out.response = rs;
  out.perturbative = std::sqrt(dx * dx + dy * dy + dz * dz) <= 0.1;
  return out;
}

double flip_probability(const CouplingModel& model,
                        const SwitchingFunction& chi, double Omega,
                        InitialSpin initial, const Tolerance& tol) {
  const double arg = (initial == InitialSpin::Ground) ? -Omega : Omega;
  return 2.0 * model.map_prefactor() * response_L(model, chi, arg, tol);
}

double adiabatic_rate_closed(const atom::OrbitalParams& params, double q,
                             double Omega) {
  if (params.n0 != 1) {
    throw atom::UnsupportedOrbital(
        "adiabatic_rate_closed: closed form exists only for n0 = 1");
  }
  if (Omega >= 0.0) return 0.0;

  const double beta = params.beta;
  const double za = params.Z * params.alpha;   // sqrt(1 - beta^2)
  const double ae = params.a0 / params.Z;      // effective length scale
  const double tau = ae * Omega / 2.0;
  const double bracket = atom::spectral_bracket(beta, tau);

  const double num = -8.0 * q * q * za * za * bracket * bracket;
  const double den = 3.0 * M_PI * beta * beta * std::pow(ae, 4) *
                     Omega * Omega * Omega * (2.0 * beta - 1.0) *
                     std::pow(1.0 + tau * tau, 2.0 * beta);
  return num / den;
}

namespace {

double neville_at_zero(const std::vector<double>& x, std::vector<double> y) {
  const std::size_t n = x.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      y[i] = (x[i + level] * y[i] - x[i] * y[i + 1]) / (x[i + level] - x[i]);
    }
  }
  return y[0];
}

}  // namespace

double adiabatic_rate_numeric(const CouplingModel& model, double Omega,
                              const std::vector<double>& T_list,
                              const Tolerance& tol) {
  if (T_list.size() < 3) {
    throw std::domain_error("adiabatic_rate_numeric: need >= 3 T values");
  }
  for (std::size_t i = 0; i < T_list.size(); ++i) {
    if (!(T_list[i] > 0.0) || (i > 0 && !(T_list[i] > T_list[i - 1]))) {
      throw std::domain_error(
          "adiabatic_rate_numeric: T_list must be positive and strictly "
          "increasing");
    }
  }

  std::vector<double> x, rates;
  x.reserve(T_list.size());
  rates.reserve(T_list.size());
  for (double T : T_list) {
    const auto chi = SwitchingFunction::gaussian(T);
    rates.push_back(
        flip_probability(model, chi, Omega, InitialSpin::Excited, tol) / T);
    x.push_back(1.0 / T);
  }

  double peak = 0.0;
  for (double r : rates) peak = std::max(peak, std::abs(r));
  if (peak > tol.abs) {
    // The sequence must close in on a limit inside the probed range.
    const double floor = 1e-12 * peak;
    for (std::size_t i = 0; i + 2 < rates.size(); ++i) {
      const double d0 = rates[i + 1] - rates[i];
      const double d1 = rates[i + 2] - rates[i + 1];
      if (std::abs(d1) > std::abs(d0) * (1.0 + 1e-9) + floor) {
        std::ostringstream msg;
        msg << "adiabatic_rate_numeric: P/T sequence is not "
               "monotone-converging:";
        for (double r : rates) msg << " " << r;
        throw NonConvergence(msg.str());
      }
    }
  }
  return neville_at_zero(x, rates);
}

}  // namespace spinprobe::detector
