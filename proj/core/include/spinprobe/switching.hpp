#pragma once

#include <complex>
#include <vector>

#include "spinprobe/numerics.hpp"

namespace spinprobe::detector {

// Time profile chi(t) of the interaction. The Gaussian variant uses the
// convention chi(t) = exp(-pi (t - t0)^2 / (2 T^2)), normalized so that
// int chi^2 dt = T.
class SwitchingFunction {
 public:
  enum class Kind { Gaussian, Window, Sampled };

  static SwitchingFunction gaussian(double T, double shift = 0.0);
  static SwitchingFunction window(double t_start, double t_end,
                                  double shift = 0.0);
  static SwitchingFunction sampled(std::vector<double> grid,
                                   std::vector<double> values,
                                   double shift = 0.0);

  Kind kind() const { return kind_; }
  double shift() const { return shift_; }

  // Gaussian duration parameter T, resp. window width t_end - t_start.
  double width() const;
  double t_start() const { return t_start_; }
  double t_end() const { return t_end_; }

  double operator()(double t) const;

  // chi is negligible outside [center - radius, center + radius].
  double support_center() const;
  double support_radius() const;

  // W(u) = int chi(t) chi(t-u) dt in closed form where one exists
  // (Gaussian: T exp(-pi u^2 / 4T^2); window: max(width - |u|, 0));
  // the Sampled variant falls back to quadrature.
  double autocorrelation_closed(double u) const;
  bool has_closed_autocorrelation() const { return kind_ != Kind::Sampled; }

  // Sampled variant only: the (unshifted) interpolation grid.
  const std::vector<double>& sample_grid() const { return grid_; }

 private:
  SwitchingFunction() = default;

  Kind kind_ = Kind::Gaussian;
  double shift_ = 0.0;
  double T_ = 1.0;
  double t_start_ = 0.0, t_end_ = 0.0;
  std::vector<double> grid_, values_;
};

// chi_tilde(omega) = int dt chi(t) e^{i omega t}. Closed forms for Gaussian
// and Window; quadrature for Sampled.
std::complex<double> chi_fourier(const SwitchingFunction& chi, double omega,
                                 const numerics::Tolerance& tol = {});

// W(u) = int chi(t) chi(t-u) dt by adaptive quadrature on the actual profile
// (shift included in the integrand). This is the oracle route against which
// the closed forms are verified.
double autocorrelation(const SwitchingFunction& chi, double u,
                       const numerics::Tolerance& tol = {});

}  // namespace spinprobe::detector
