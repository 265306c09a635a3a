#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using spinprobe::cli::RunConfig;

// Per-command defaults for the sweep grid and T list.
void apply_command_defaults(RunConfig& cfg) {
  if (cfg.command == "orbital") {
    cfg.grid = "1e-3:20:200:log";
  } else if (cfg.command == "response") {
    cfg.grid = "-3:3:25";
  } else if (cfg.command == "pflip-sweep") {
    cfg.grid = "-6:2:161";
    cfg.T_list = {10.0, 20.0, 40.0};
  } else if (cfg.command == "rate") {
    cfg.grid = "-3:1:9";
    cfg.T_list = {25.0, 50.0, 100.0};
  } else if (cfg.command == "udw-compare") {
    cfg.grid = "-2:2:5";
  }
}

std::vector<double> parse_list(const std::string& s, const std::string& what) {
  std::vector<double> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw CLI::ValidationError(what + ": empty entry");
    out.push_back(std::stod(cur));
    cur.clear();
  };
  for (char c : s) {
    if (c == ',') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

// Plain-text key=value config file; '#' starts a comment. Flags given on the
// command line override values read here.
void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::FileError("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                             line.back() == '\r')) {
      line.pop_back();
    }
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    line.erase(0, start);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw CLI::FileError(path + ":" + std::to_string(lineno) +
                           ": expected key=value");
    }
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key == "Z") {
      cfg.Z = std::stoi(value);
    } else if (key == "n0") {
      cfg.n0 = std::stoi(value);
    } else if (key == "alpha") {
      cfg.alpha = std::stod(value);
    } else if (key == "coupling") {
      cfg.coupling = std::stod(value);
    } else if (key == "gap") {
      cfg.gap = std::stod(value);
    } else if (key == "switching") {
      cfg.switching = value;
    } else if (key == "model") {
      cfg.model = value;
    } else if (key == "initial") {
      cfg.initial = value;
    } else if (key == "grid") {
      cfg.grid = value;
    } else if (key == "T-list") {
      cfg.T_list = parse_list(value, "T-list");
    } else if (key == "bloch") {
      const auto v = parse_list(value, "bloch");
      if (v.size() != 3) {
        throw CLI::FileError(path + ": bloch needs three components");
      }
      cfg.bloch = {v[0], v[1], v[2]};
    } else if (key == "out") {
      cfg.out = value;
    } else if (key == "tol") {
      cfg.tol_rel = std::stod(value);
    } else if (key == "seed") {
      cfg.seed = std::stoull(value);
    } else if (key == "count") {
      cfg.count = std::stoi(value);
    } else {
      throw CLI::FileError(path + ":" + std::to_string(lineno) +
                           ": unknown key '" + key + "'");
    }
  }
}

void add_common_options(CLI::App* cmd, RunConfig& cfg, std::string& T_list_arg,
                        std::string& bloch_arg, std::string& config_path) {
  cmd->add_option("--Z", cfg.Z, "Atomic number");
  cmd->add_option("--n0", cfg.n0, "Principal quantum number of the s-orbital");
  cmd->add_option("--alpha", cfg.alpha, "Fine-structure constant override");
  cmd->add_option_function<double>(
      "--coupling", [&cfg](double v) { cfg.coupling = v; },
      "Coupling constant (q for spin, lambda for UDW kinds)");
  cmd->add_option("--gap", cfg.gap, "Energy gap Omega in units of 1/a0");
  cmd->add_option("--switching", cfg.switching,
                  "gaussian:T=<v> or window:<a>,<b>");
  cmd->add_option("--model", cfg.model,
                  "spin | udw-amplitude | udw-derivative");
  cmd->add_option("--initial", cfg.initial, "ground | excited");
  cmd->add_option("--grid", cfg.grid, "Sweep grid min:max:steps[:log]");
  cmd->add_option("--T-list", T_list_arg, "Comma-separated T values (a0)");
  cmd->add_option("--bloch", bloch_arg, "Initial Bloch vector x,y,z");
  cmd->add_option("--out", cfg.out, "Output CSV path ('-' for stdout)");
  cmd->add_option("--tol", cfg.tol_rel, "Relative quadrature tolerance");
  cmd->add_option("--seed", cfg.seed, "RNG seed for randomized commands");
  cmd->add_option("--count", cfg.count, "Number of randomized oracle draws");
  cmd->add_option("--config", config_path,
                  "key=value config file (flags override)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinprobe: Dirac-orbital spin detector numerics"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string T_list_arg, bloch_arg, config_path;

  const char* commands[] = {"orbital",     "response", "pflip-sweep",
                            "rate",        "udw-compare", "oracle"};
  const char* descriptions[] = {
      "Tabulate the orbital radial functions and smearing profile",
      "Sweep the response functionals L, M (and K for UDW kinds) over Omega",
      "Spin-flip probability over an (Omega, T) grid",
      "Adiabatic transition rate: closed form vs extrapolated numerics",
      "Side-by-side spin vs UDW functionals and state maps",
      "Angular-integral closed forms vs 2D quadrature"};
  for (int i = 0; i < 6; ++i) {
    auto* sub = app.add_subcommand(commands[i], descriptions[i]);
    add_common_options(sub, cfg, T_list_arg, bloch_arg, config_path);
    sub->callback([&cfg, name = std::string(commands[i])] { cfg.command = name; });
  }

  // Defaults and the config file must be resolved before CLI11 writes the
  // flag values, so flags override both. Pre-scan for the subcommand name
  // and --config.
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (!arg.empty() && arg[0] != '-') {
      cfg.command = arg;
      apply_command_defaults(cfg);
      break;
    }
  }
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) {
      config_path = argv[i + 1];
    } else if (arg.rfind("--config=", 0) == 0) {
      config_path = arg.substr(9);
    }
  }
  try {
    if (!config_path.empty()) apply_config_file(cfg, config_path);
  } catch (const std::exception& e) {
    std::cerr << "spinprobe: " << e.what() << "\n";
    return 2;
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (!T_list_arg.empty()) cfg.T_list = parse_list(T_list_arg, "T-list");
    if (!bloch_arg.empty()) {
      const auto v = parse_list(bloch_arg, "bloch");
      if (v.size() != 3) throw std::invalid_argument("bloch needs 3 components");
      cfg.bloch = {v[0], v[1], v[2]};
    }
    return spinprobe::cli::dispatch(cfg);
  } catch (const std::exception& e) {
    std::cerr << "spinprobe: " << e.what() << "\n";
    return 2;
  }
}
