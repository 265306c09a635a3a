#include "spinprobe/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace spinprobe::numerics {

namespace {

// Gauss-Kronrod 15(7) abscissae/weights on [-1, 1] (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct PanelResult {
  double integral;
  double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  const double fc = f(c);
  double result_gauss = fc * kWg[3];
  double result_kronrod = fc * kWgk[7];

  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    result_kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) result_gauss += kWg[j / 2] * (f1 + f2);
  }

  result_kronrod *= h;
  result_gauss *= h;
  return {result_kronrod, std::abs(result_kronrod - result_gauss)};
}

}  // namespace

void validate(const Tolerance& tol) {
  if (!(tol.rel > 0.0) || !(tol.abs >= 0.0) || tol.max_subdivisions < 1) {
    throw std::invalid_argument(
        "Tolerance requires rel > 0, abs >= 0, max_subdivisions >= 1");
  }
}

double gamma_upper(double s, double x) {
  if (!(s > 0.0)) throw std::domain_error("gamma_upper: requires s > 0");
  if (!(x >= 0.0)) throw std::domain_error("gamma_upper: requires x >= 0");
  if (x == 0.0) return std::tgamma(s);

  if (x < s + 1.0) {
    // Gamma(s,x) = Gamma(s) - gamma(s,x), lower series.
    double ap = s;
    double term = 1.0 / s;
    double sum = term;
    for (int n = 0; n < 500; ++n) {
      ap += 1.0;
      term *= x / ap;
      sum += term;
      if (std::abs(term) < std::abs(sum) * 1e-17) {
        return std::tgamma(s) - sum * std::exp(-x + s * std::log(x));
      }
    }
    throw NonConvergence("gamma_upper: series did not converge");
  }

  // Modified Lentz continued fraction.
  const double tiny = 1e-300;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-17) {
      return std::exp(-x + s * std::log(x)) * h;
    }
  }
  throw NonConvergence("gamma_upper: continued fraction did not converge");
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const Tolerance& tol) {
  validate(tol);
  if (a == b) return 0.0;

  struct Segment {
    double a, b, integral, error;
  };

  std::vector<Segment> segments;
  auto [i0, e0] = gk15(f, a, b);
  segments.push_back({a, b, i0, e0});
  double total = i0;
  double total_err = e0;

  int splits = 0;
  const double min_width = 1e-14 * (std::abs(a) + std::abs(b) + 1.0);
  while (total_err > std::max(tol.abs, tol.rel * std::abs(total))) {
    if (++splits > tol.max_subdivisions) {
      throw NonConvergence("integrate: subdivision budget exhausted, err=" +
                           std::to_string(total_err));
    }
    std::size_t worst = 0;
    for (std::size_t i = 1; i < segments.size(); ++i) {
      if (segments[i].error > segments[worst].error) worst = i;
    }
    Segment seg = segments[worst];
    if (seg.b - seg.a < min_width) {
      throw NonConvergence("integrate: roundoff limit before tolerance met");
    }
    const double mid = 0.5 * (seg.a + seg.b);
    auto [il, el] = gk15(f, seg.a, mid);
    auto [ir, er] = gk15(f, mid, seg.b);
    total += il + ir - seg.integral;
    total_err += el + er - seg.error;
    segments[worst] = {seg.a, mid, il, el};
    segments.push_back({mid, seg.b, ir, er});
  }
  return total;
}

namespace {

struct PanelResultC {
  std::complex<double> integral;
  double error;
};

PanelResultC gk15c(const std::function<std::complex<double>(double)>& f,
                   double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  const std::complex<double> fc = f(c);
  std::complex<double> result_gauss = fc * kWg[3];
  std::complex<double> result_kronrod = fc * kWgk[7];

  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const std::complex<double> f1 = f(c - dx);
    const std::complex<double> f2 = f(c + dx);
    result_kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) result_gauss += kWg[j / 2] * (f1 + f2);
  }

  result_kronrod *= h;
  result_gauss *= h;
  return {result_kronrod, std::abs(result_kronrod - result_gauss)};
}

}  // namespace

std::complex<double> integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const Tolerance& tol) {
  validate(tol);
  if (a == b) return 0.0;

  struct Segment {
    double a, b;
    std::complex<double> integral;
    double error;
  };

  std::vector<Segment> segments;
  auto [i0, e0] = gk15c(f, a, b);
  segments.push_back({a, b, i0, e0});
  std::complex<double> total = i0;
  double total_err = e0;

  int splits = 0;
  const double min_width = 1e-14 * (std::abs(a) + std::abs(b) + 1.0);
  while (total_err > std::max(tol.abs, tol.rel * std::abs(total))) {
    if (++splits > tol.max_subdivisions) {
      throw NonConvergence("integrate_complex: subdivision budget exhausted");
    }
    std::size_t worst = 0;
    for (std::size_t i = 1; i < segments.size(); ++i) {
      if (segments[i].error > segments[worst].error) worst = i;
    }
    Segment seg = segments[worst];
    if (seg.b - seg.a < min_width) {
      throw NonConvergence(
          "integrate_complex: roundoff limit before tolerance met");
    }
    const double mid = 0.5 * (seg.a + seg.b);
    auto [il, el] = gk15c(f, seg.a, mid);
    auto [ir, er] = gk15c(f, mid, seg.b);
    total += il + ir - seg.integral;
    total_err += el + er - seg.error;
    segments[worst] = {seg.a, mid, il, el};
    segments.push_back({mid, seg.b, ir, er});
  }
  return total;
}

namespace {

// First panel of a semi-infinite integral when the integrand behaves like
// r^p near the origin: substitute r = b u^{1/(1+p)}, which flattens the
// measure so GK nodes sample it accurately.
double integrate_origin_panel(const RadialFunction& f, double b,
                              const Tolerance& tol) {
  const double p = f.origin_exponent;
  if (p == 0.0) return integrate(f.evaluator, 0.0, b, tol);
  if (p <= -1.0) {
    throw std::domain_error("integrate_semiline: origin exponent <= -1");
  }
  const double q = 1.0 / (1.0 + p);
  auto transformed = [&](double u) {
    const double r = b * std::pow(u, q);
    return f.evaluator(r) * b * q * std::pow(u, q - 1.0);
  };
  return integrate(transformed, 0.0, 1.0, tol);
}

}  // namespace

double integrate_semiline(const RadialFunction& f, const Tolerance& tol) {
  return integrate_semiline(f, 0.0, tol);
}

double integrate_semiline(const RadialFunction& f, double lower,
                          const Tolerance& tol) {
  validate(tol);
  if (!(lower >= 0.0)) {
    throw std::domain_error("integrate_semiline: requires lower >= 0");
  }
  const double scale = std::max(f.decay_scale, 1e-12);

  double a = lower;
  double width = std::max(scale - lower, 0.5 * scale);
  double total = 0.0;
  int quiet = 0;
  for (int chunk = 0; chunk < 64; ++chunk) {
    const double b = a + width;
    const double piece = (chunk == 0 && lower == 0.0)
                             ? integrate_origin_panel(f, b, tol)
                             : integrate(f.evaluator, a, b, tol);
    total += piece;
    if (std::abs(piece) <= std::max(tol.abs, tol.rel * std::abs(total))) {
      if (++quiet >= 2) return total;
    } else {
      quiet = 0;
    }
    a = b;
    width *= 2.0;
  }
  throw NonConvergence("integrate_semiline: tail did not decay");
}

namespace {

// Iterated Aitken delta-squared on a sequence of partial sums.
double aitken_accelerate(std::vector<double> s) {
  while (s.size() >= 3) {
    std::vector<double> next;
    next.reserve(s.size() - 2);
    for (std::size_t i = 0; i + 2 < s.size(); ++i) {
      const double denom = s[i + 2] - 2.0 * s[i + 1] + s[i];
      if (denom == 0.0) {
        next.push_back(s[i + 2]);
      } else {
        const double d = s[i + 1] - s[i];
        next.push_back(s[i] - d * d / denom);
      }
    }
    s = std::move(next);
  }
  return s.back();
}

}  // namespace

double oscillatory_semiline(const std::function<double(double)>& f,
                            double omega, bool use_sin, double scale,
                            const Tolerance& tol) {
  validate(tol);
  const double sign = (use_sin && omega < 0.0) ? -1.0 : 1.0;
  const double w = std::abs(omega);
  scale = std::max(scale, 1e-12);

  if (w == 0.0) {
    if (use_sin) return 0.0;
    RadialFunction plain{f, scale, 0.0, nullptr};
    return integrate_semiline(plain, tol);
  }

  auto integrand = [&](double u) {
    return f(u) * (use_sin ? std::sin(w * u) : std::cos(w * u));
  };

  // Panels between consecutive zeros of the trig factor, so each panel is
  // single-signed: sin vanishes at n pi/w, cos at (n + 1/2) pi/w.
  const double half_period = M_PI / w;
  const double width = std::min(half_period, scale);
  const double first =
      use_sin ? width : std::min(0.5 * half_period, scale);
  const int max_panels = std::max(8, tol.max_subdivisions);

  // Panels converge tolerance-relative to their own size; an absolute panel
  // floor would accumulate across thousands of panels.
  Tolerance panel_tol = tol;
  panel_tol.abs = 1e-300;
  panel_tol.max_subdivisions = 200;

  double total = 0.0;
  double piece_scale = 0.0;
  std::vector<double> partials;
  double a = 0.0;
  int quiet = 0;
  for (int panel = 0; panel < max_panels; ++panel) {
    const double b = a + (panel == 0 ? first : width);
    const double piece = integrate(integrand, a, b, panel_tol);
    total += piece;
    partials.push_back(total);
    piece_scale = std::max(piece_scale, std::abs(piece));
    const double gate = std::max(tol.abs, tol.rel * std::abs(total));
    if (a >= scale && std::abs(piece) <= gate) {
      if (++quiet >= 3) return sign * total;
    } else {
      quiet = 0;
    }
    a = b;
  }

  // Plain summation stalled (slow decay or an oscillation count beyond the
  // panel budget). Accelerate the alternating partial sums; accept only if
  // the estimate is stable to the achievable precision, which is set by the
  // panel scale, not by the (possibly near-cancelled) result.
  if (partials.size() >= 13) {
    const std::vector<double> last(partials.end() - 12, partials.end());
    const double acc1 = aitken_accelerate(last);
    const std::vector<double> prev(partials.end() - 13, partials.end() - 1);
    const double acc0 = aitken_accelerate(prev);
    const double floor = std::max(10.0 * tol.rel * piece_scale,
                                  256.0 * 2.2e-16 * piece_scale);
    if (std::abs(acc1 - acc0) <=
        std::max({tol.abs, 10.0 * tol.rel * std::abs(acc1), floor})) {
      return sign * acc1;
    }
  }
  throw NonConvergence("oscillatory_semiline: panel sum did not converge");
}

double spherical_fourier(const RadialFunction& f, double k,
                         const Tolerance& tol) {
  validate(tol);
  if (!(k >= 0.0)) throw std::domain_error("spherical_fourier: requires k >= 0");

  const double scale = std::max(f.decay_scale, 1e-12);
  if (k * scale < 1e-7) {
    RadialFunction moment{
        [&f](double r) { return r * r * f.evaluator(r); }, scale,
        f.origin_exponent + 2.0, nullptr};
    return 4.0 * M_PI * integrate_semiline(moment, tol);
  }

  auto rf = [&f](double r) { return r * f.evaluator(r); };
  const double radial = oscillatory_semiline(rf, k, /*use_sin=*/true, scale, tol);
  return 4.0 * M_PI / k * radial;
}

}  // namespace spinprobe::numerics
