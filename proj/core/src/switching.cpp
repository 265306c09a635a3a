#include "spinprobe/switching.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace spinprobe::detector {

namespace {

// exp(-pi t^2 / (2 T^2)) drops below 1e-22 around |t| = 5.7 T.
constexpr double kGaussianSupportFactor = 8.0;

}  // namespace

SwitchingFunction SwitchingFunction::gaussian(double T, double shift) {
  if (!(T > 0.0)) {
    throw std::invalid_argument("SwitchingFunction::gaussian: requires T > 0");
  }
  SwitchingFunction chi;
  chi.kind_ = Kind::Gaussian;
  chi.T_ = T;
  chi.shift_ = shift;
  return chi;
}

SwitchingFunction SwitchingFunction::window(double t_start, double t_end,
                                            double shift) {
  if (!(t_end > t_start)) {
    throw std::invalid_argument(
        "SwitchingFunction::window: requires t_end > t_start");
  }
  SwitchingFunction chi;
  chi.kind_ = Kind::Window;
  chi.t_start_ = t_start;
  chi.t_end_ = t_end;
  chi.shift_ = shift;
  return chi;
}

SwitchingFunction SwitchingFunction::sampled(std::vector<double> grid,
                                             std::vector<double> values,
                                             double shift) {
  if (grid.size() < 2 || grid.size() != values.size()) {
    throw std::invalid_argument(
        "SwitchingFunction::sampled: need >= 2 grid points, sizes equal");
  }
  if (!std::is_sorted(grid.begin(), grid.end()) ||
      std::adjacent_find(grid.begin(), grid.end()) != grid.end()) {
    throw std::invalid_argument(
        "SwitchingFunction::sampled: grid must be strictly increasing");
  }
  SwitchingFunction chi;
  chi.kind_ = Kind::Sampled;
  chi.grid_ = std::move(grid);
  chi.values_ = std::move(values);
  chi.shift_ = shift;
  return chi;
}

double SwitchingFunction::width() const {
  switch (kind_) {
    case Kind::Gaussian:
      return T_;
    case Kind::Window:
      return t_end_ - t_start_;
    case Kind::Sampled:
      return grid_.back() - grid_.front();
  }
  return 0.0;
}

double SwitchingFunction::operator()(double t) const {
  const double s = t - shift_;
  switch (kind_) {
    case Kind::Gaussian:
      return std::exp(-M_PI * s * s / (2.0 * T_ * T_));
    case Kind::Window:
      return (s >= t_start_ && s <= t_end_) ? 1.0 : 0.0;
    case Kind::Sampled: {
      if (s <= grid_.front() || s >= grid_.back()) {
        return (s == grid_.front()) ? values_.front()
               : (s == grid_.back()) ? values_.back()
                                     : 0.0;
      }
      const auto it = std::upper_bound(grid_.begin(), grid_.end(), s);
      const std::size_t i = static_cast<std::size_t>(it - grid_.begin());
      const double w = (s - grid_[i - 1]) / (grid_[i] - grid_[i - 1]);
      return values_[i - 1] * (1.0 - w) + values_[i] * w;
    }
  }
  return 0.0;
}

double SwitchingFunction::support_center() const {
  switch (kind_) {
    case Kind::Gaussian:
      return shift_;
    case Kind::Window:
      return shift_ + 0.5 * (t_start_ + t_end_);
    case Kind::Sampled:
      return shift_ + 0.5 * (grid_.front() + grid_.back());
  }
  return 0.0;
}

double SwitchingFunction::support_radius() const {
  switch (kind_) {
    case Kind::Gaussian:
      return kGaussianSupportFactor * T_;
    case Kind::Window:
      return 0.5 * (t_end_ - t_start_);
    case Kind::Sampled:
      return 0.5 * (grid_.back() - grid_.front());
  }
  return 0.0;
}

double SwitchingFunction::autocorrelation_closed(double u) const {
  switch (kind_) {
    case Kind::Gaussian:
      return T_ * std::exp(-M_PI * u * u / (4.0 * T_ * T_));
    case Kind::Window:
      return std::max(width() - std::abs(u), 0.0);
    case Kind::Sampled:
      return autocorrelation(*this, u);
  }
  return 0.0;
}

namespace {

// Finite-interval quadrature that first splits [a, b] at the half-periods of
// cos/sin(omega t) so the adaptive pass never straddles many oscillations.
double integrate_oscillatory(const std::function<double(double)>& f, double a,
                             double b, double omega, bool use_sin,
                             const numerics::Tolerance& tol) {
  auto integrand = [&](double t) {
    return f(t) * (use_sin ? std::sin(omega * t) : std::cos(omega * t));
  };
  const double w = std::abs(omega);
  if (w == 0.0 || (b - a) * w < M_PI) {
    return numerics::integrate(integrand, a, b, tol);
  }
  const double half_period = M_PI / w;
  numerics::Tolerance panel_tol = tol;
  panel_tol.max_subdivisions = 200;
  double total = 0.0;
  double lo = a;
  int panels = 0;
  while (lo < b) {
    if (++panels > 8 * tol.max_subdivisions) {
      throw numerics::NonConvergence(
          "integrate_oscillatory: too many half-period panels");
    }
    const double hi = std::min(lo + half_period, b);
    total += numerics::integrate(integrand, lo, hi, panel_tol);
    lo = hi;
  }
  return total;
}

}  // namespace

std::complex<double> chi_fourier(const SwitchingFunction& chi, double omega,
                                 const numerics::Tolerance& tol) {
  using namespace std::complex_literals;
  switch (chi.kind()) {
    case SwitchingFunction::Kind::Gaussian: {
      const double T = chi.width();
      const double mag =
          std::sqrt(2.0) * T * std::exp(-T * T * omega * omega / (2.0 * M_PI));
      return std::polar(mag, omega * chi.shift());
    }
    case SwitchingFunction::Kind::Window: {
      const double a = chi.t_start() + chi.shift();
      const double b = chi.t_end() + chi.shift();
      if (omega == 0.0) return b - a;
      const std::complex<double> num =
          std::exp(1i * omega * b) - std::exp(1i * omega * a);
      return num / (1i * omega);
    }
    case SwitchingFunction::Kind::Sampled: {
      // Piecewise-linear profile: integrate cell by cell so the adaptive
      // pass never fights the interpolation kinks.
      const auto& cells = chi.sample_grid();
      numerics::Tolerance cell_tol = tol;
      cell_tol.max_subdivisions = 200;
      std::complex<double> sum = 0.0;
      for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        const double a = cells[i] + chi.shift();
        const double b = cells[i + 1] + chi.shift();
        auto f = [&chi](double t) { return chi(t); };
        sum += std::complex<double>(
            integrate_oscillatory(f, a, b, omega, false, cell_tol),
            integrate_oscillatory(f, a, b, omega, true, cell_tol));
      }
      return sum;
    }
  }
  return 0.0;
}

double autocorrelation(const SwitchingFunction& chi, double u,
                       const numerics::Tolerance& tol) {
  const double c = chi.support_center();
  const double r = chi.support_radius();
  const double lo = std::max(c - r, c - r + u);
  const double hi = std::min(c + r, c + r + u);
  if (hi <= lo) return 0.0;
  auto integrand = [&chi, u](double t) { return chi(t) * chi(t - u); };
  if (chi.kind() != SwitchingFunction::Kind::Sampled) {
    return numerics::integrate(integrand, lo, hi, tol);
  }

  // Split at the interpolation kinks of both factors.
  std::vector<double> cuts{lo, hi};
  for (double g : chi.sample_grid()) {
    for (double t : {g + chi.shift(), g + chi.shift() + u}) {
      if (t > lo && t < hi) cuts.push_back(t);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  numerics::Tolerance cell_tol = tol;
  cell_tol.max_subdivisions = 50;
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] > cuts[i]) {
      sum += numerics::integrate(integrand, cuts[i], cuts[i + 1], cell_tol);
    }
  }
  return sum;
}

}  // namespace spinprobe::detector
