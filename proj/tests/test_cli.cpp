#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "doctest.h"
#include "spinprobe/detector.hpp"

namespace cli = spinprobe::cli;
namespace fs = std::filesystem;

namespace {

struct Csv {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

Csv read_csv(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  Csv csv;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      csv.comments.push_back(line);
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (csv.header.empty()) {
      csv.header = cells;
      continue;
    }
    std::vector<double> row;
    for (const auto& c : cells) {
      char* end = nullptr;
      const double v = std::strtod(c.c_str(), &end);
      row.push_back(end == c.c_str() ? std::nan("") : v);
    }
    csv.rows.push_back(row);
  }
  return csv;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int column(const Csv& csv, const std::string& name) {
  for (std::size_t i = 0; i < csv.header.size(); ++i) {
    if (csv.header[i] == name) return static_cast<int>(i);
  }
  REQUIRE_MESSAGE(false, "missing column " << name);
  return -1;
}

fs::path temp_path(const std::string& name) {
  return fs::temp_directory_path() / ("spinprobe_test_" + name);
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(SPINPROBE_CLI_PATH) + " " + args;
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("grid and switching parsing") {
  const auto g = cli::parse_grid("-6:2:5");
  CHECK(g.points() == std::vector<double>{-6.0, -4.0, -2.0, 0.0, 2.0});
  const auto lg = cli::parse_grid("0.01:100:5:log");
  CHECK(lg.points()[2] == doctest::Approx(1.0));
  CHECK_THROWS(cli::parse_grid("1:2"));
  CHECK_THROWS(cli::parse_grid("2:1:5"));
  CHECK_THROWS(cli::parse_grid("-1:1:5:log"));
  CHECK_THROWS(cli::parse_grid("1:2:1"));

  CHECK(cli::parse_switching("gaussian:T=10").width() == 10.0);
  CHECK(cli::parse_switching("window:0,4").width() == 4.0);
  CHECK_THROWS(cli::parse_switching("boxcar:1"));
}

TEST_CASE("orbital command") {
  cli::RunConfig cfg;
  cfg.command = "orbital";
  cfg.grid = "1e-3:20:40:log";
  cfg.out = temp_path("orbital.csv").string();

  CHECK(cli::run_orbital(cfg) == 0);
  const auto csv = read_csv(cfg.out);
  CHECK(csv.header ==
        std::vector<std::string>{"r_over_a0", "g", "f", "phi",
                                 "phi_closed_minus_integral"});
  CHECK(csv.rows.size() == 40);

  const int cphi = column(csv, "phi");
  const int cdiff = column(csv, "phi_closed_minus_integral");
  for (const auto& row : csv.rows) {
    CHECK(std::abs(row[cdiff]) <= 1e-8 * std::max(std::abs(row[cphi]), 1e-300));
  }

  // summary comment carries normalization, volume integral, g-factor
  bool found = false;
  for (const auto& c : csv.comments) {
    if (c.find("# summary") == 0) {
      found = true;
      const auto pos = c.find("normalization=");
      REQUIRE(pos != std::string::npos);
      const double norm = std::strtod(c.c_str() + pos + 14, nullptr);
      CHECK(std::abs(norm - 1.0) < 1e-8);
    }
  }
  CHECK(found);
}

TEST_CASE("orbital command rejects Z alpha >= 1") {
  cli::RunConfig cfg;
  cfg.command = "orbital";
  cfg.grid = "1e-3:20:10:log";
  cfg.Z = 137;
  cfg.out = temp_path("orbital_bad.csv").string();
  CHECK_THROWS_AS((void)cli::run_orbital(cfg), std::domain_error);
}

TEST_CASE("pflip-sweep command") {
  cli::RunConfig cfg;
  cfg.command = "pflip-sweep";
  cfg.grid = "-4:1:26";
  cfg.T_list = {5.0, 10.0};
  cfg.out = temp_path("pflip.csv").string();

  CHECK(cli::run_pflip_sweep(cfg) == 0);
  const auto csv = read_csv(cfg.out);
  const int cw = column(csv, "Omega_a0");
  const int ct = column(csv, "T_over_a0");
  const int cp = column(csv, "P_flip");
  REQUIRE(csv.rows.size() == 52);

  std::map<double, std::pair<double, double>> argmax;  // T -> (omega, peak)
  for (const auto& row : csv.rows) {
    CHECK(row[cp] >= 0.0);
    auto& best = argmax[row[ct]];
    if (row[cp] > best.second) best = {row[cw], row[cp]};
  }
  REQUIRE(argmax.size() == 2);
  for (const auto& [T, best] : argmax) {
    CAPTURE(T);
    CHECK(best.first < 0.0);  // peak at negative gap
  }
  CHECK(argmax[10.0].second > argmax[5.0].second);  // longer exposure
}

TEST_CASE("rate command") {
  cli::RunConfig cfg;
  cfg.command = "rate";
  cfg.grid = "-1:1:2";
  cfg.T_list = {25.0, 50.0, 100.0};
  cfg.out = temp_path("rate.csv").string();

  CHECK(cli::run_rate(cfg) == 0);
  const auto csv = read_csv(cfg.out);
  const int cw = column(csv, "Omega_a0");
  const int cc = column(csv, "rate_closed");
  const int cr = column(csv, "rel_err");
  REQUIRE(csv.rows.size() == 2);
  for (const auto& row : csv.rows) {
    if (row[cw] < 0.0) {
      CHECK(row[cc] > 0.0);
      CHECK(row[cr] < 0.01);
    } else {
      CHECK(row[cc] == 0.0);
    }
  }

  // doubled coupling scales both rate columns by exactly 4
  cli::RunConfig cfg2 = cfg;
  cfg2.coupling = 2.0 * spinprobe::detector::default_spin_coupling();
  cfg2.grid = "-1:-0.5:2";
  cfg2.out = temp_path("rate4.csv").string();
  cli::RunConfig cfg1 = cfg2;
  cfg1.coupling = spinprobe::detector::default_spin_coupling();
  cfg1.out = temp_path("rate1.csv").string();
  CHECK(cli::run_rate(cfg1) == 0);
  CHECK(cli::run_rate(cfg2) == 0);
  const auto csv1 = read_csv(cfg1.out);
  const auto csv2 = read_csv(cfg2.out);
  const int cn = column(csv1, "rate_numeric");
  for (std::size_t i = 0; i < csv1.rows.size(); ++i) {
    CHECK(csv2.rows[i][cc] == 4.0 * csv1.rows[i][cc]);
    CHECK(csv2.rows[i][cn] == doctest::Approx(4.0 * csv1.rows[i][cn])
                                  .epsilon(1e-12));
  }
}

TEST_CASE("udw-compare command") {
  cli::RunConfig cfg;
  cfg.command = "udw-compare";
  cfg.grid = "-1:1:3";
  cfg.out = temp_path("udw.csv").string();

  CHECK(cli::run_udw_compare(cfg) == 0);
  const auto csv = read_csv(cfg.out);
  const int cw = column(csv, "Omega_a0");

  for (const auto& row : csv.rows) {
    // derivative functionals == spin functionals
    CHECK(row[column(csv, "der_L_plus")] ==
          doctest::Approx(row[column(csv, "spin_L_plus")]).epsilon(1e-12));
    CHECK(row[column(csv, "der_M_re")] ==
          doctest::Approx(row[column(csv, "spin_M_re")]).epsilon(1e-12));

    // z-row: identical behavior up to the (4 pi/3)/pi = 4/3 prefactor
    const double dz_spin = row[column(csv, "spin_az")] - cfg.bloch[2];
    const double dz_der = row[column(csv, "der_az")] - cfg.bloch[2];
    if (std::abs(dz_der) > 1e-300) {
      CHECK(dz_spin / dz_der == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
    }

    if (row[cw] == 0.0) {
      // gapless amplitude coupling leaves a_x unchanged
      CHECK(std::abs(row[column(csv, "amp_ax")] - cfg.bloch[0]) < 1e-12);
    }
  }
}

TEST_CASE("udw-compare rejects |a| > 1") {
  cli::RunConfig cfg;
  cfg.command = "udw-compare";
  cfg.grid = "-1:1:3";
  cfg.bloch = {1.2, 0.0, 0.0};
  cfg.out = temp_path("udw_bad.csv").string();
  CHECK_THROWS_AS((void)cli::run_udw_compare(cfg), std::invalid_argument);
}

TEST_CASE("oracle command") {
  cli::RunConfig cfg;
  cfg.command = "oracle";
  cfg.count = 20;
  cfg.seed = 42;
  cfg.out = temp_path("oracle_a.csv").string();
  CHECK(cli::run_oracle(cfg) == 0);

  const auto csv = read_csv(cfg.out);
  const int cerr = column(csv, "abs_err");
  REQUIRE(csv.rows.size() == 20u * 28u);
  double max_err = 0.0;
  for (const auto& row : csv.rows) max_err = std::max(max_err, row[cerr]);
  CHECK(max_err < 1e-6);

  // fixed seed: byte-identical rerun
  cli::RunConfig cfg2 = cfg;
  cfg2.out = temp_path("oracle_b.csv").string();
  CHECK(cli::run_oracle(cfg2) == 0);
  auto a = read_file(cfg.out);
  auto b = read_file(cfg2.out);
  // headers differ only in the out= path; compare from the column header on
  a.erase(0, a.find('\n'));
  b.erase(0, b.find('\n'));
  CHECK(a == b);

  cli::RunConfig bad = cfg;
  bad.bloch = {2.0, 0.0, 0.0};
  CHECK_THROWS_AS((void)cli::run_oracle(bad), std::invalid_argument);
}

TEST_CASE("sweeps are deterministic across thread counts") {
  cli::RunConfig cfg;
  cfg.command = "pflip-sweep";
  cfg.grid = "-3:0:7";
  cfg.T_list = {5.0};
  cfg.out = temp_path("pflip_t1.csv").string();

  setenv("SPINPROBE_THREADS", "1", 1);
  CHECK(cli::run_pflip_sweep(cfg) == 0);
  cfg.out = temp_path("pflip_t4.csv").string();
  setenv("SPINPROBE_THREADS", "4", 1);
  CHECK(cli::run_pflip_sweep(cfg) == 0);
  unsetenv("SPINPROBE_THREADS");

  auto a = read_file(temp_path("pflip_t1.csv"));
  auto b = read_file(temp_path("pflip_t4.csv"));
  a.erase(0, a.find('\n'));
  b.erase(0, b.find('\n'));
  CHECK(a == b);
}

TEST_CASE("binary: config file with flag override") {
  const auto cfgfile = temp_path("run.cfg");
  {
    std::ofstream out(cfgfile);
    out << "# sample config\n";
    out << "Z=2\n";
    out << "grid=1e-3:10:12:log\n";
    out << "tol=1e-9\n";
  }
  const auto out1 = temp_path("cfg_run1.csv");
  const int rc1 = run_binary("orbital --config " + cfgfile.string() +
                             " --out " + out1.string());
  CHECK(rc1 == 0);
  const auto csv1 = read_csv(out1);
  REQUIRE(!csv1.comments.empty());
  CHECK(csv1.comments[0].find("Z=2") != std::string::npos);
  CHECK(csv1.rows.size() == 12);

  // flag overrides the config file
  const auto out2 = temp_path("cfg_run2.csv");
  const int rc2 = run_binary("orbital --config " + cfgfile.string() +
                             " --Z 1 --out " + out2.string());
  CHECK(rc2 == 0);
  const auto csv2 = read_csv(out2);
  CHECK(csv2.comments[0].find("Z=1") != std::string::npos);
}

TEST_CASE("binary: bad input exits nonzero") {
  CHECK(run_binary("orbital --Z 137 --out /dev/null 2>/dev/null") != 0);
  CHECK(run_binary("definitely-not-a-command 2>/dev/null") != 0);
}
