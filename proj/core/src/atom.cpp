#include "spinprobe/atom.hpp"

#include <cmath>

namespace spinprobe::atom {

namespace {

double round_half_integer(double j) { return std::round(2.0 * j) / 2.0; }

}  // namespace

double spectral_bracket(double beta, double tau) {
  const double theta = std::atan(tau);
  const double v = 2.0 * beta * theta;

  // d = tau - arctan(tau) = tau^3/3 - tau^5/5 + ...
  double d;
  if (std::abs(tau) < 0.25) {
    double p = tau * tau * tau;
    d = p / 3.0;
    for (int m = 2; m < 60; ++m) {
      p *= -tau * tau;
      const double add = p / (2.0 * m + 1.0);
      d += add;
      if (std::abs(add) <= 1e-18 * std::abs(d)) break;
    }
  } else {
    d = tau - theta;
  }

  // sin(v) - v cos(v) = sum_{n>=1} (-1)^{n+1} (2n) v^{2n+1} / (2n+1)!
  double svc;
  if (std::abs(v) < 0.9) {
    double p = v * v * v;
    double fact = 6.0;
    svc = 2.0 * p / fact;
    for (int n = 2; n < 40; ++n) {
      p *= v * v;
      fact *= (2.0 * n) * (2.0 * n + 1.0);
      const double add = ((n % 2 == 1) ? 1.0 : -1.0) * (2.0 * n) * p / fact;
      svc += add;
      if (std::abs(add) <= 1e-18 * std::abs(svc)) break;
    }
  } else {
    svc = std::sin(v) - v * std::cos(v);
  }

  // sin(v) - 2 beta tau cos(v) with 2 beta tau = v + 2 beta d.
  return svc - 2.0 * beta * d * std::cos(v);
}

OrbitalProfile make_orbital(int Z, int n0, double alpha) {
  if (n0 != 1) {
    throw UnsupportedOrbital(
        "make_orbital: closed-form profiles exist only for n0 = 1");
  }
  if (Z < 1) throw std::domain_error("make_orbital: requires Z >= 1");
  if (!(alpha > 0.0)) throw std::domain_error("make_orbital: requires alpha > 0");
  const double za = Z * alpha;
  if (!(za < 1.0)) {
    throw std::domain_error("make_orbital: requires Z alpha < 1");
  }
  // The closed forms carry Gamma(2 beta - 1, .) and 1/(2 beta - 1); they
  // need beta > 1/2, i.e. Z alpha < sqrt(3)/2.
  if (!(za < 0.8660254037844386)) {
    throw std::domain_error(
        "make_orbital: requires Z alpha < sqrt(3)/2 so that beta > 1/2 "
        "(validity domain of the closed-form smearing profile)");
  }

  OrbitalParams p;
  p.Z = Z;
  p.n0 = n0;
  p.alpha = alpha;
  p.beta = std::sqrt(1.0 - za * za);
  p.a0 = 1.0;
  p.k1 = std::pow(2.0, p.beta) * std::pow(static_cast<double>(Z), p.beta + 0.5) *
         std::sqrt((1.0 + p.beta) / std::tgamma(1.0 + 2.0 * p.beta));
  // sqrt((1-beta)/(1+beta)) = Z alpha / (1 + beta), cancellation-free.
  p.k2 = -p.k1 * za / (1.0 + p.beta);
  p.me = 1.0 / (alpha * p.a0);

  const double beta = p.beta;
  const double a0 = p.a0;
  const double zz = static_cast<double>(Z);

  auto radial = [beta, a0, zz](double norm) {
    return [norm, beta, a0, zz](double r) {
      return norm * std::pow(a0, -1.5) * std::exp(-zz * r / a0) *
             std::pow(r / a0, beta - 1.0);
    };
  };

  // (4 pi / k) int_0^inf r^{beta} e^{-Z r / a0} sin(kr) dr in closed form.
  auto radial_fourier = [beta, a0, zz](double norm) {
    const double b1 = zz / a0;
    const double front = norm * std::pow(a0, -0.5 - beta) * std::tgamma(beta + 1.0);
    return [front, beta, b1](double k) {
      if (k <= 1e-14 * b1) {
        return 4.0 * M_PI * front * (beta + 1.0) / std::pow(b1, beta + 2.0);
      }
      const double theta = std::atan(k / b1);
      return 4.0 * M_PI / k * front * std::sin((beta + 1.0) * theta) /
             std::pow(b1 * b1 + k * k, 0.5 * (beta + 1.0));
    };
  };

  // phi(r) = Cz Gamma(2 beta - 1, 2 Z r / a0) with
  // Cz = 2 Z^2 sqrt(1 - beta^2) / (a0^2 Gamma(2 beta + 1)); sqrt(1-beta^2) = Z alpha.
  const double Cz = 2.0 * zz * zz * za /
                    (a0 * a0 * std::tgamma(2.0 * beta + 1.0));
  auto phi_eval = [Cz, beta, a0, zz](double r) {
    return Cz * numerics::gamma_upper(2.0 * beta - 1.0, 2.0 * zz * r / a0);
  };

  // phi_tilde(k) = 4 pi K B(tau) / (k^3 (1 + tau^2)^beta), tau = k a0 / (2Z),
  // K = Z^3 alpha / (a0^2 beta (2 beta - 1)); k -> 0 limit
  // (pi/3) Z alpha (2 beta + 1) a0 / Z.
  const double Kphi = zz * zz * za / (a0 * a0 * beta * (2.0 * beta - 1.0));
  auto phi_fourier_closed = [Kphi, beta, a0, zz, za](double k) {
    if (k == 0.0) {
      return (M_PI / 3.0) * za * (2.0 * beta + 1.0) * a0 / zz;
    }
    const double tau = k * a0 / (2.0 * zz);
    const double bracket = spectral_bracket(beta, tau);
    return 4.0 * M_PI * Kphi * bracket /
           (k * k * k * std::pow(1.0 + tau * tau, beta));
  };

  OrbitalProfile profile;
  profile.params = p;
  profile.g = {radial(p.k1), 36.0 * a0 / zz, beta - 1.0, radial_fourier(p.k1)};
  profile.f = {radial(p.k2), 36.0 * a0 / zz, beta - 1.0, radial_fourier(p.k2)};
  profile.phi = {phi_eval, 20.0 * a0 / zz, 0.0, phi_fourier_closed};
  return profile;
}

double energy_level(int Z, int n, double j, double alpha) {
  if (Z < 1) throw std::domain_error("energy_level: requires Z >= 1");
  if (n < 1) throw std::domain_error("energy_level: requires n >= 1");
  const double j2 = 2.0 * j;
  if (std::abs(j2 - std::round(j2)) > 1e-9 ||
      static_cast<long>(std::round(j2)) % 2 == 0) {
    throw std::domain_error("energy_level: j must be a half-integer");
  }
  const double jr = round_half_integer(j);
  if (jr < 0.5 || jr > n - 0.5) {
    throw std::domain_error("energy_level: requires 1/2 <= j <= n - 1/2");
  }
  const double za = Z * alpha;
  if (!(za > 0.0) || !(za < jr + 0.5)) {
    throw std::domain_error("energy_level: requires 0 < Z alpha < j + 1/2");
  }
  const double root = std::sqrt((jr + 0.5) * (jr + 0.5) - za * za);
  const double denom = n - jr - 0.5 + root;
  const double me = 1.0 / alpha;  // a0 = 1
  return me / std::sqrt(1.0 + za * za / (denom * denom));
}

double smearing_phi(const OrbitalProfile& profile, double r) {
  if (!(r > 0.0)) throw std::domain_error("smearing_phi: requires r > 0");
  return profile.phi(r);
}

double phi_volume_integral(const OrbitalProfile& profile,
                           const numerics::Tolerance& tol) {
  const auto& phi = profile.phi;
  numerics::RadialFunction moment{
      [&phi](double r) { return r * r * phi.evaluator(r); },
      phi.decay_scale, phi.origin_exponent + 2.0, nullptr};
  return 4.0 * M_PI * numerics::integrate_semiline(moment, tol);
}

double g_factor_correction(const OrbitalProfile& profile,
                           const numerics::Tolerance& tol) {
  const auto& f = profile.f;
  numerics::RadialFunction moment{
      [&f](double r) {
        const double v = f.evaluator(r);
        return r * r * v * v;
      },
      f.decay_scale, 2.0 * f.origin_exponent + 2.0, nullptr};
  return 1.0 - (4.0 / 3.0) * numerics::integrate_semiline(moment, tol);
}

double phi_fourier(const OrbitalProfile& profile, double k,
                   const numerics::Tolerance& tol) {
  if (!(k >= 0.0)) throw std::domain_error("phi_fourier: requires k >= 0");
  return numerics::spherical_fourier(profile.phi, k, tol);
}

}  // namespace spinprobe::atom
