#include "spinprobe/fieldgeom.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace spinprobe::fieldgeom {

double dot(const Vec3& u, const Vec3& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

Mat2c Mat2c::operator+(const Mat2c& o) const {
  Mat2c r;
  for (int i = 0; i < 4; ++i) r.e[i] = e[i] + o.e[i];
  return r;
}

Mat2c Mat2c::operator-(const Mat2c& o) const {
  Mat2c r;
  for (int i = 0; i < 4; ++i) r.e[i] = e[i] - o.e[i];
  return r;
}

Mat2c Mat2c::operator*(const Mat2c& o) const {
  Mat2c r;
  r.e[0] = e[0] * o.e[0] + e[1] * o.e[2];
  r.e[1] = e[0] * o.e[1] + e[1] * o.e[3];
  r.e[2] = e[2] * o.e[0] + e[3] * o.e[2];
  r.e[3] = e[2] * o.e[1] + e[3] * o.e[3];
  return r;
}

Mat2c Mat2c::adjoint() const {
  Mat2c r;
  r.e[0] = std::conj(e[0]);
  r.e[1] = std::conj(e[2]);
  r.e[2] = std::conj(e[1]);
  r.e[3] = std::conj(e[3]);
  return r;
}

complexd Mat2c::trace() const { return e[0] + e[3]; }

Mat2c operator*(const complexd& s, const Mat2c& m) {
  Mat2c r;
  for (int i = 0; i < 4; ++i) r.e[i] = s * m.e[i];
  return r;
}

Mat2c operator*(double s, const Mat2c& m) { return complexd(s, 0.0) * m; }

double max_abs_entry(const Mat2c& m) {
  double v = 0.0;
  for (const auto& x : m.e) v = std::max(v, std::abs(x));
  return v;
}

Mat2c identity2() {
  Mat2c r;
  r.e = {1.0, 0.0, 0.0, 1.0};
  return r;
}

Mat2c pauli(int i) {
  using namespace std::complex_literals;
  Mat2c r;
  switch (i) {
    case 0:
      r.e = {0.0, 1.0, 1.0, 0.0};
      break;
    case 1:
      r.e = {0.0, -1.0i, 1.0i, 0.0};
      break;
    case 2:
      r.e = {1.0, 0.0, 0.0, -1.0};
      break;
    default:
      throw std::domain_error("pauli: index must be 0, 1 or 2");
  }
  return r;
}

Mat2c pauli_interaction(int i, double Omega, double t) {
  const double c = std::cos(Omega * t);
  const double s = std::sin(Omega * t);
  switch (i) {
    case 0: {
      Mat2c r = c * pauli(0) + (-s) * pauli(1);
      return r;
    }
    case 1: {
      Mat2c r = s * pauli(0) + c * pauli(1);
      return r;
    }
    case 2:
      return pauli(2);
    default:
      throw std::domain_error("pauli_interaction: index must be 0, 1 or 2");
  }
}

Mat2c density_matrix(const Vec3& a) {
  Mat2c r;
  r(0, 0) = 0.5 * (1.0 + a[2]);
  r(0, 1) = 0.5 * complexd(a[0], -a[1]);
  r(1, 0) = 0.5 * complexd(a[0], a[1]);
  r(1, 1) = 0.5 * (1.0 - a[2]);
  return r;
}

double heaviside(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? 0.0 : 0.5); }

PolarizationFrame polarization_frame(double theta, double phi) {
  if (!(theta > 0.0) || !(theta < M_PI)) {
    throw std::domain_error(
        "polarization_frame: theta must lie in (0, pi); the poles are "
        "coordinate singularities");
  }
  const double st = std::sin(theta), ct = std::cos(theta);
  const double sp = std::sin(phi), cp = std::cos(phi);

  PolarizationFrame fr;
  fr.khat = {st * cp, st * sp, ct};
  fr.E1 = {ct * cp, ct * sp, -st};
  fr.E2 = {-sp, cp, 0.0};
  fr.eps1 = cross(fr.khat, fr.E1);
  fr.eps2 = cross(fr.khat, fr.E2);
  return fr;
}

namespace {

void check_polarization_index(int s) {
  if (s != 1 && s != 2) {
    throw std::domain_error("polarization index s must be 1 or 2");
  }
}

void check_bloch(const Vec3& a) {
  if (norm(a) > 1.0 + 1e-12) {
    throw std::domain_error("Bloch vector must satisfy |a| <= 1");
  }
}

struct GaussLegendre {
  std::vector<double> nodes, weights;
};

// Nodes/weights on [-1, 1] by Newton iteration on the Legendre recurrence.
GaussLegendre gauss_legendre(int n) {
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    gl.nodes[i] = -x;
    gl.nodes[n - 1 - i] = x;
    gl.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    gl.weights[n - 1 - i] = gl.weights[i];
  }
  return gl;
}

}  // namespace

Mat2c angular_pauli_integral(PauliTerm term, int s, double Omega, double t,
                             double tprime, const Vec3& a, int theta_nodes,
                             int phi_nodes) {
  check_polarization_index(s);
  check_bloch(a);
  if (theta_nodes < 2 || phi_nodes < 2) {
    throw std::domain_error("angular_pauli_integral: need >= 2 nodes per axis");
  }

  static const GaussLegendre gl64 = gauss_legendre(64);
  const GaussLegendre gl =
      (theta_nodes == 64) ? gl64 : gauss_legendre(theta_nodes);

  // W_ij = int dtheta dphi sin(theta) eps_s^i eps_s^j by tensor quadrature.
  double W[3][3] = {};
  const double phi_w = 2.0 * M_PI / phi_nodes;
  for (int it = 0; it < theta_nodes; ++it) {
    const double theta = 0.5 * M_PI * (gl.nodes[it] + 1.0);
    const double wt = 0.5 * M_PI * gl.weights[it] * std::sin(theta);
    for (int ip = 0; ip < phi_nodes; ++ip) {
      const double phi = phi_w * ip;
      const PolarizationFrame fr = polarization_frame(theta, phi);
      const Vec3& eps = (s == 1) ? fr.eps1 : fr.eps2;
      const double w = wt * phi_w;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          W[i][j] += w * eps[i] * eps[j];
        }
      }
    }
  }

  const Mat2c rho = density_matrix(a);
  Mat2c result;
  for (int i = 0; i < 3; ++i) {
    const Mat2c si = pauli_interaction(i, Omega, t);
    for (int j = 0; j < 3; ++j) {
      if (W[i][j] == 0.0) continue;
      const Mat2c sj = pauli_interaction(j, Omega, tprime);
      Mat2c x;
      switch (term) {
        case PauliTerm::U2rho:
          x = heaviside(t - tprime) * (si * sj * rho);
          break;
        case PauliTerm::rhoU2:
          x = heaviside(tprime - t) * (rho * si * sj);
          break;
        case PauliTerm::U1rhoU1:
          x = sj * rho * si;
          break;
      }
      result = result + W[i][j] * x;
    }
  }
  return result;
}

Mat2c angular_pauli_closed(PauliTerm term, int s, double Omega, double t,
                           double tprime, const Vec3& a) {
  using namespace std::complex_literals;
  check_polarization_index(s);
  check_bloch(a);

  const double d = t - tprime;
  const complexd Ep = std::exp(1.0i * Omega * d);
  const complexd Em = std::conj(Ep);
  const double tp = heaviside(d);
  const double tm = heaviside(-d);
  const double az = a[2];
  const complexd am(a[0], -a[1]);  // a^x - i a^y
  const complexd ap(a[0], a[1]);   // a^x + i a^y

  Mat2c r;
  if (s == 1) {
    switch (term) {
      case PauliTerm::U2rho:
        r(0, 0) = (1.0 + az) * Ep;
        r(0, 1) = am * Ep;
        r(1, 0) = ap * Em;
        r(1, 1) = (1.0 - az) * Em;
        return (2.0 * M_PI * tp) * r;
      case PauliTerm::rhoU2:
        r(0, 0) = (1.0 + az) * Ep;
        r(0, 1) = am * Em;
        r(1, 0) = ap * Ep;
        r(1, 1) = (1.0 - az) * Em;
        return (2.0 * M_PI * tm) * r;
      case PauliTerm::U1rhoU1:
        r(0, 0) = (1.0 - az) * Em;
        r(1, 1) = (1.0 + az) * Ep;
        return 2.0 * M_PI * r;
    }
  } else {
    switch (term) {
      case PauliTerm::U2rho:
        r(0, 0) = (1.0 + az) * (2.0 + Ep);
        r(0, 1) = am * (2.0 + Ep);
        r(1, 0) = ap * (2.0 + Em);
        r(1, 1) = (1.0 - az) * (2.0 + Em);
        return (2.0 * M_PI / 3.0 * tp) * r;
      case PauliTerm::rhoU2:
        r(0, 0) = (1.0 + az) * (2.0 + Ep);
        r(0, 1) = am * (2.0 + Em);
        r(1, 0) = ap * (2.0 + Ep);
        r(1, 1) = (1.0 - az) * (2.0 + Em);
        return (2.0 * M_PI / 3.0 * tm) * r;
      case PauliTerm::U1rhoU1:
        r(0, 0) = 2.0 * (1.0 + az) + (1.0 - az) * Em;
        r(0, 1) = -2.0 * am;
        r(1, 0) = -2.0 * ap;
        r(1, 1) = 2.0 * (1.0 - az) + (1.0 + az) * Ep;
        return (2.0 * M_PI / 3.0) * r;
    }
  }
  throw std::logic_error("angular_pauli_closed: unreachable");
}

Mat2c combined_R_matrix(double Omega, double t, double tprime, const Vec3& a) {
  using namespace std::complex_literals;
  check_bloch(a);

  const double d = t - tprime;
  const complexd Ep = std::exp(1.0i * Omega * d);
  const complexd Em = std::conj(Ep);
  const complexd Fp = std::exp(1.0i * Omega * std::abs(d));
  const complexd Fm = std::conj(Fp);
  const double az = a[2];
  const complexd am(a[0], -a[1]);
  const complexd ap(a[0], a[1]);

  Mat2c r;
  r(0, 0) = (1.0 - az) * Em - (1.0 + az) * Ep;
  r(0, 1) = -am * (1.0 + Fp);
  r(1, 0) = -ap * (1.0 + Fm);
  r(1, 1) = (1.0 + az) * Ep - (1.0 - az) * Em;
  return (8.0 * M_PI / 3.0) * r;
}

}  // namespace spinprobe::fieldgeom
