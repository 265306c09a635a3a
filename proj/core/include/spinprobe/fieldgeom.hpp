#pragma once

#include <array>
#include <complex>

namespace spinprobe::fieldgeom {

using Vec3 = std::array<double, 3>;
using complexd = std::complex<double>;

double dot(const Vec3& u, const Vec3& v);
Vec3 cross(const Vec3& u, const Vec3& v);
double norm(const Vec3& v);

// 2x2 complex matrix, row major.
struct Mat2c {
  std::array<complexd, 4> e{};

  complexd& operator()(int r, int c) { return e[2 * r + c]; }
  const complexd& operator()(int r, int c) const { return e[2 * r + c]; }

  Mat2c operator+(const Mat2c& o) const;
  Mat2c operator-(const Mat2c& o) const;
  Mat2c operator*(const Mat2c& o) const;
  Mat2c adjoint() const;
  complexd trace() const;
};

Mat2c operator*(const complexd& s, const Mat2c& m);
Mat2c operator*(double s, const Mat2c& m);
double max_abs_entry(const Mat2c& m);

Mat2c identity2();
Mat2c pauli(int i);  // i = 0, 1, 2 -> sigma_x, sigma_y, sigma_z

// Interaction-picture Pauli operator sigma_i(t) for gap Omega:
// sigma_x(t) = cos(Omega t) sigma_x - sin(Omega t) sigma_y,
// sigma_y(t) = sin(Omega t) sigma_x + cos(Omega t) sigma_y, sigma_z(t) = sigma_z.
Mat2c pauli_interaction(int i, double Omega, double t);

// rho = (1 + a.sigma)/2 for a Bloch vector a.
Mat2c density_matrix(const Vec3& a);

// Heaviside step with the symmetric convention theta(0) = 1/2.
double heaviside(double x);

// Momentum direction khat(theta, phi), the transverse polarization vectors
// E1, E2, and the magnetic polarization vectors eps_s = khat x E_s
// (eps1 = E2, eps2 = -E1).
struct PolarizationFrame {
  Vec3 khat, E1, E2, eps1, eps2;
};

// theta in (0, pi) (poles are coordinate singularities), phi arbitrary.
PolarizationFrame polarization_frame(double theta, double phi);

enum class PauliTerm { U2rho, rhoU2, U1rhoU1 };

// Closed form of the angular integral
//   int dtheta dphi sin(theta) eps_s^i(theta,phi) eps_s^j(theta,phi) X_ij(t,t')
// with X_ij the Pauli structure of the requested Dyson term:
//   U2rho:    sigma_i(t) sigma_j(t') rho theta(t-t')
//   rhoU2:    rho sigma_i(t) sigma_j(t') theta(t'-t)
//   U1rhoU1:  sigma_j(t') rho sigma_i(t)
Mat2c angular_pauli_closed(PauliTerm term, int s, double Omega, double t,
                           double tprime, const Vec3& a);

// Same integral by tensor quadrature (Gauss-Legendre in theta, trapezoid in
// phi); the independent oracle for the closed forms.
Mat2c angular_pauli_integral(PauliTerm term, int s, double Omega, double t,
                             double tprime, const Vec3& a, int theta_nodes = 64,
                             int phi_nodes = 64);

// (8 pi / 3)-prefactored combination sum_s [U1rhoU1 - U2rho - rhoU2]; the
// angular structure feeding the leading-order state map.
Mat2c combined_R_matrix(double Omega, double t, double tprime, const Vec3& a);

}  // namespace spinprobe::fieldgeom
