#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinprobe/atom.hpp"
#include "spinprobe/switching.hpp"

namespace spinprobe::cli {

struct Grid {
  double min = 0.0;
  double max = 1.0;
  int steps = 2;
  bool log = false;

  std::vector<double> points() const;
};

// "min:max:steps[:log]"
Grid parse_grid(const std::string& spec);

// "gaussian:T=<v>" or "window:<a>,<b>"
detector::SwitchingFunction parse_switching(const std::string& spec);

// Fully resolved run configuration; every field is recorded in the CSV
// header so a run is reproducible from the file alone.
struct RunConfig {
  std::string command;
  int Z = 1;
  int n0 = 1;
  double alpha = atom::kDefaultAlpha;
  std::optional<double> coupling;  // q (spin) or lambda (UDW); model default
  double gap = -1.0;               // Omega in units of 1/a0
  std::string switching = "gaussian:T=10";
  std::string model = "spin";      // spin | udw-amplitude | udw-derivative
  std::string initial = "excited"; // pflip-sweep start state
  std::string grid;                // per-command default applied by main
  std::vector<double> T_list;
  std::array<double, 3> bloch{0.3, 0.2, 0.4};
  std::string out = "-";
  double tol_rel = 1e-10;
  std::uint64_t seed = 1;
  int count = 20;                  // oracle draws
};

// Each command writes one CSV (self-describing comment header first) and
// returns the process exit status: nonzero iff any row failed its tolerance
// gate or any computation errored.
int run_orbital(const RunConfig& cfg);
int run_response(const RunConfig& cfg);
int run_pflip_sweep(const RunConfig& cfg);
int run_rate(const RunConfig& cfg);
int run_udw_compare(const RunConfig& cfg);
int run_oracle(const RunConfig& cfg);

int dispatch(const RunConfig& cfg);

// Worker-thread cap from SPINPROBE_THREADS (>= 1), else hardware concurrency.
int thread_cap();

}  // namespace spinprobe::cli
