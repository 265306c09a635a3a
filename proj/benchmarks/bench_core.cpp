#include <benchmark/benchmark.h>

#include "spinprobe/detector.hpp"

namespace atom = spinprobe::atom;
namespace det = spinprobe::detector;
namespace fg = spinprobe::fieldgeom;
namespace num = spinprobe::numerics;

namespace {

const atom::OrbitalProfile& hydrogen() {
  static const auto pr = atom::make_orbital(1);
  return pr;
}

void BM_SmearingPhi(benchmark::State& state) {
  const auto& pr = hydrogen();
  double r = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(atom::smearing_phi(pr, r));
    r = r < 10.0 ? r + 0.1 : 0.1;
  }
}
BENCHMARK(BM_SmearingPhi);

void BM_PhiFourierClosed(benchmark::State& state) {
  const auto& pr = hydrogen();
  double k = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pr.phi.analytic_fourier(k));
    k = k < 6.0 ? k + 0.05 : 0.1;
  }
}
BENCHMARK(BM_PhiFourierClosed);

void BM_PhiFourierQuadrature(benchmark::State& state) {
  const auto& pr = hydrogen();
  for (auto _ : state) {
    benchmark::DoNotOptimize(atom::phi_fourier(pr, 1.3));
  }
}
BENCHMARK(BM_PhiFourierQuadrature);

void BM_QKernel(benchmark::State& state) {
  const auto chi = det::SwitchingFunction::gaussian(10.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(det::q_kernel(chi, 0.9, -1.0));
  }
}
BENCHMARK(BM_QKernel);

void BM_ResponseL(benchmark::State& state) {
  const auto model = det::CouplingModel::spin_magnetic(
      det::default_spin_coupling(), hydrogen().phi);
  const auto chi = det::SwitchingFunction::gaussian(10.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(det::response_L(model, chi, -1.0));
  }
}
BENCHMARK(BM_ResponseL);

void BM_ResponseM(benchmark::State& state) {
  const auto model = det::CouplingModel::spin_magnetic(
      det::default_spin_coupling(), hydrogen().phi);
  const auto chi = det::SwitchingFunction::gaussian(10.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(det::response_M(model, chi, -1.0));
  }
}
BENCHMARK(BM_ResponseM);

void BM_AngularQuadrature(benchmark::State& state) {
  const fg::Vec3 a{0.3, -0.2, 0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(fg::angular_pauli_integral(
        fg::PauliTerm::U1rhoU1, 2, -1.0, 0.7, -0.3, a));
  }
}
BENCHMARK(BM_AngularQuadrature);

}  // namespace

BENCHMARK_MAIN();
