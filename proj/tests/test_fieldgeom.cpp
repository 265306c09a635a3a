#include <cmath>
#include <complex>

#include "doctest.h"
#include "oracles.hpp"
#include "spinprobe/fieldgeom.hpp"

namespace fg = spinprobe::fieldgeom;
using fg::Mat2c;
using fg::PauliTerm;
using fg::Vec3;

namespace {

double mat_diff(const Mat2c& a, const Mat2c& b) {
  return fg::max_abs_entry(a - b);
}

Mat2c combined_quadrature(double Omega, double t, double tprime,
                          const Vec3& a) {
  Mat2c sum;
  for (int s = 1; s <= 2; ++s) {
    sum = sum + fg::angular_pauli_integral(PauliTerm::U1rhoU1, s, Omega, t,
                                           tprime, a);
    sum = sum -
          fg::angular_pauli_integral(PauliTerm::U2rho, s, Omega, t, tprime, a);
    sum = sum -
          fg::angular_pauli_integral(PauliTerm::rhoU2, s, Omega, t, tprime, a);
  }
  return sum;
}

}  // namespace

TEST_CASE("polarization frame at theta=pi/2, phi=0") {
  const auto fr = fg::polarization_frame(M_PI / 2.0, 0.0);
  CHECK(std::abs(fr.khat[0] - 1.0) < 1e-15);
  CHECK(std::abs(fr.khat[1]) < 1e-15);
  CHECK(std::abs(fr.khat[2]) < 1e-15);
  CHECK(std::abs(fr.E1[2] + 1.0) < 1e-15);  // E1 = -e_z
  CHECK(std::abs(fr.E2[1] - 1.0) < 1e-15);  // E2 = e_y
}

TEST_CASE("polarization frame invariants at random angles") {
  oracles::SplitMix64 rng(11);
  for (int i = 0; i < 25; ++i) {
    const double theta = rng.uniform(1e-3, M_PI - 1e-3);
    const double phi = rng.uniform(0.0, 2.0 * M_PI);
    const auto fr = fg::polarization_frame(theta, phi);
    CAPTURE(theta);
    CAPTURE(phi);

    CHECK(std::abs(fg::norm(fr.khat) - 1.0) < 1e-14);
    CHECK(std::abs(fg::norm(fr.E1) - 1.0) < 1e-14);
    CHECK(std::abs(fg::norm(fr.E2) - 1.0) < 1e-14);
    CHECK(std::abs(fg::norm(fr.eps1) - 1.0) < 1e-14);
    CHECK(std::abs(fg::norm(fr.eps2) - 1.0) < 1e-14);
    CHECK(std::abs(fg::dot(fr.E1, fr.E2)) < 1e-14);
    CHECK(std::abs(fg::dot(fr.E1, fr.khat)) < 1e-14);
    CHECK(std::abs(fg::dot(fr.E2, fr.khat)) < 1e-14);
    CHECK(std::abs(fg::dot(fr.eps1, fr.eps2)) < 1e-14);

    // eps1 = E2, eps2 = -E1 (curl relations)
    for (int c = 0; c < 3; ++c) {
      CHECK(std::abs(fr.eps1[c] - fr.E2[c]) < 1e-14);
      CHECK(std::abs(fr.eps2[c] + fr.E1[c]) < 1e-14);
    }

    // transversality of the magnetic polarization vectors
    CHECK(std::abs(fg::dot(fr.khat, fr.eps1)) < 1e-14);
    CHECK(std::abs(fg::dot(fr.khat, fr.eps2)) < 1e-14);

    // completeness: sum_s eps_s eps_s + khat khat = identity
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        const double v = fr.eps1[r] * fr.eps1[c] + fr.eps2[r] * fr.eps2[c] +
                         fr.khat[r] * fr.khat[c];
        CHECK(std::abs(v - (r == c ? 1.0 : 0.0)) < 1e-14);
      }
    }
  }
}

TEST_CASE("polarization frame rejects the poles") {
  CHECK_THROWS_AS((void)fg::polarization_frame(0.0, 0.3), std::domain_error);
  CHECK_THROWS_AS((void)fg::polarization_frame(M_PI, 0.3), std::domain_error);
  CHECK_THROWS_AS((void)fg::polarization_frame(-0.1, 0.3), std::domain_error);
}

TEST_CASE("interaction-picture Pauli operators") {
  // sigma_i(0) = sigma_i
  for (int i = 0; i < 3; ++i) {
    CHECK(mat_diff(fg::pauli_interaction(i, 1.3, 0.0), fg::pauli(i)) == 0.0);
  }
  // sigma_x(t)^2 = identity
  const Mat2c sx = fg::pauli_interaction(0, 0.7, 1.9);
  CHECK(mat_diff(sx * sx, fg::identity2()) < 1e-15);
}

TEST_CASE("angular integrals: fixed anchors") {
  const Vec3 ez{0.0, 0.0, 1.0};
  const Vec3 zero{0.0, 0.0, 0.0};

  SUBCASE("s=1 U1rhoU1 at Omega=0, a=e_z is 2 pi diag(0, 2)") {
    const Mat2c closed =
        fg::angular_pauli_closed(PauliTerm::U1rhoU1, 1, 0.0, 0.4, -0.2, ez);
    CHECK(std::abs(closed(0, 0)) < 1e-14);
    CHECK(std::abs(closed(0, 1)) < 1e-14);
    CHECK(std::abs(closed(1, 0)) < 1e-14);
    CHECK(std::abs(closed(1, 1) - 4.0 * M_PI) < 1e-12);
    const Mat2c quad =
        fg::angular_pauli_integral(PauliTerm::U1rhoU1, 1, 0.0, 0.4, -0.2, ez);
    CHECK(mat_diff(closed, quad) < 1e-10);
  }

  SUBCASE("s=2 U2rho at Omega=0, t=t', a=0 is pi * identity (theta(0)=1/2)") {
    const Mat2c closed =
        fg::angular_pauli_closed(PauliTerm::U2rho, 2, 0.0, 0.7, 0.7, zero);
    CHECK(std::abs(closed(0, 0) - M_PI) < 1e-12);
    CHECK(std::abs(closed(1, 1) - M_PI) < 1e-12);
    CHECK(std::abs(closed(0, 1)) < 1e-14);
    const Mat2c quad =
        fg::angular_pauli_integral(PauliTerm::U2rho, 2, 0.0, 0.7, 0.7, zero);
    CHECK(mat_diff(closed, quad) < 1e-10);
  }

  SUBCASE("s=1 U2rho carries overall weight 2 pi") {
    const Mat2c closed =
        fg::angular_pauli_closed(PauliTerm::U2rho, 1, 0.0, 0.6, 0.1, zero);
    CHECK(std::abs(closed(0, 0) - 2.0 * M_PI) < 1e-12);
    CHECK(std::abs(closed(1, 1) - 2.0 * M_PI) < 1e-12);
  }
}

TEST_CASE("closed forms match 2D quadrature on random draws") {
  oracles::SplitMix64 rng(404);
  for (int i = 0; i < 8; ++i) {
    const double Omega = rng.uniform(-3.0, 3.0);
    const double t = rng.uniform(-2.0, 2.0);
    const double tp = (i == 0) ? t : rng.uniform(-2.0, 2.0);  // include t = t'
    Vec3 a{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    while (fg::norm(a) > 1.0) {
      a = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    }
    CAPTURE(Omega);
    CAPTURE(t);
    CAPTURE(tp);
    for (int s = 1; s <= 2; ++s) {
      for (auto term :
           {PauliTerm::U2rho, PauliTerm::rhoU2, PauliTerm::U1rhoU1}) {
        const Mat2c closed =
            fg::angular_pauli_closed(term, s, Omega, t, tp, a);
        const Mat2c quad =
            fg::angular_pauli_integral(term, s, Omega, t, tp, a);
        CHECK(mat_diff(closed, quad) < 1e-6);
      }
    }
    const Mat2c closed = fg::combined_R_matrix(Omega, t, tp, a);
    CHECK(mat_diff(closed, combined_quadrature(Omega, t, tp, a)) < 1e-6);
  }
}

TEST_CASE("combined matrix structure") {
  SUBCASE("Omega = 0 reduces to the gapless pattern") {
    const Vec3 a{0.3, -0.2, 0.5};
    const Mat2c m = fg::combined_R_matrix(0.0, 1.2, 0.4, a);
    const double pref = 8.0 * M_PI / 3.0;
    CHECK(std::abs(m(0, 0) - std::complex<double>(-2.0 * pref * a[2], 0.0)) <
          1e-12);
    CHECK(std::abs(m(0, 1) -
                   std::complex<double>(-2.0 * pref * a[0],
                                        2.0 * pref * a[1])) < 1e-12);
    CHECK(std::abs(m(1, 1) + m(0, 0)) < 1e-14);  // traceless
  }
  SUBCASE("a = 0 keeps only the spontaneous diagonal") {
    const double Omega = 1.3, t = 0.9, tp = -0.4;
    const Mat2c m = fg::combined_R_matrix(Omega, t, tp, {0.0, 0.0, 0.0});
    const double pref = 8.0 * M_PI / 3.0;
    const std::complex<double> ep =
        std::exp(std::complex<double>(0.0, Omega * (t - tp)));
    CHECK(std::abs(m(0, 1)) == 0.0);
    CHECK(std::abs(m(1, 0)) == 0.0);
    CHECK(std::abs(m(0, 0) - pref * (std::conj(ep) - ep)) < 1e-12);
    CHECK(std::abs(m(1, 1) - pref * (ep - std::conj(ep))) < 1e-12);
  }
  SUBCASE("(2,1) entry is the conjugate of (1,2) under t <-> t'") {
    const Vec3 a{0.4, 0.1, -0.3};
    const Mat2c m = fg::combined_R_matrix(0.8, 1.5, 0.2, a);
    const Mat2c mswap = fg::combined_R_matrix(0.8, 0.2, 1.5, a);
    CHECK(std::abs(m(1, 0) - std::conj(mswap(0, 1))) < 1e-14);
  }
}

TEST_CASE("angular integral rejects bad inputs") {
  CHECK_THROWS_AS((void)fg::angular_pauli_closed(PauliTerm::U2rho, 3, 0, 0, 0,
                                                 {0, 0, 0}),
                  std::domain_error);
  CHECK_THROWS_AS((void)fg::angular_pauli_integral(PauliTerm::U2rho, 1, 0, 0,
                                                   0, {1.5, 0, 0}),
                  std::domain_error);
}
