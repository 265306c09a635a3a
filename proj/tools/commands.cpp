#include "commands.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "spinprobe/detector.hpp"
#include "spinprobe/fieldgeom.hpp"

namespace spinprobe::cli {

namespace {

using detector::CouplingModel;
using detector::SwitchingFunction;
using numerics::Tolerance;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  fieldgeom::Vec3 bloch_ball() {
    for (;;) {
      fieldgeom::Vec3 a{uniform(-1.0, 1.0), uniform(-1.0, 1.0),
                        uniform(-1.0, 1.0)};
      if (fieldgeom::norm(a) <= 1.0) return a;
    }
  }
};

class CsvSink {
 public:
  explicit CsvSink(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);  // LF line endings everywhere
      if (!file_) {
        throw std::runtime_error("cannot open output file: " + path);
      }
      out_ = &file_;
    } else {
      out_ = &std::cout;
    }
  }

  void line(const std::string& s) { (*out_) << s << "\n"; }

 private:
  std::ofstream file_;
  std::ostream* out_ = nullptr;
};

std::string config_header(const RunConfig& cfg) {
  std::ostringstream h;
  h << "# spinprobe " << cfg.command << " Z=" << cfg.Z << " n0=" << cfg.n0
    << " alpha=" << fmt(cfg.alpha);
  if (cfg.coupling) h << " coupling=" << fmt(*cfg.coupling);
  h << " gap=" << fmt(cfg.gap) << " switching=" << cfg.switching
    << " model=" << cfg.model << " initial=" << cfg.initial;
  if (!cfg.grid.empty()) h << " grid=" << cfg.grid;
  if (!cfg.T_list.empty()) {
    h << " T-list=";
    for (std::size_t i = 0; i < cfg.T_list.size(); ++i) {
      h << (i ? "," : "") << fmt(cfg.T_list[i]);
    }
  }
  h << " bloch=" << fmt(cfg.bloch[0]) << "," << fmt(cfg.bloch[1]) << ","
    << fmt(cfg.bloch[2]);
  h << " out=" << cfg.out << " tol=" << fmt(cfg.tol_rel) << " seed=" << cfg.seed
    << " count=" << cfg.count << " units=a0=1";
  return h.str();
}

Tolerance make_tol(const RunConfig& cfg) {
  return Tolerance{cfg.tol_rel, 1e-14, 2000};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

double to_double(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse " + what + ": '" + s + "'");
  }
}

// Run body(i) for i in [0, n) across worker threads; per-index errors are
// captured, never thrown across threads.
void parallel_for(std::size_t n, std::vector<std::string>& errors,
                  const std::function<void(std::size_t)>& body) {
  errors.assign(n, {});
  const int threads =
      std::max(1, std::min<int>(thread_cap(), static_cast<int>(n)));
  auto worker = [&](std::atomic<std::size_t>& counter) {
    for (;;) {
      const std::size_t i = counter.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  if (threads == 1) {
    std::atomic<std::size_t> counter{0};
    worker(counter);
    return;
  }
  std::atomic<std::size_t> counter{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back([&] { worker(counter); });
  for (auto& th : pool) th.join();
}

int report_errors(const std::vector<std::string>& errors,
                  const std::string& what) {
  int bad = 0;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i].empty()) {
      std::cerr << "spinprobe: " << what << " row " << i << ": " << errors[i]
                << "\n";
      ++bad;
    }
  }
  return bad;
}

struct Models {
  atom::OrbitalProfile profile;
  double q;        // spin coupling
  double lambda;   // UDW coupling
  CouplingModel active;
};

Models build_models(const RunConfig& cfg) {
  Models m{atom::make_orbital(cfg.Z, cfg.n0, cfg.alpha), 0.0, 0.0, {}};
  m.q = cfg.coupling.value_or(detector::default_spin_coupling(cfg.alpha));
  m.lambda = cfg.coupling.value_or(detector::default_spin_coupling(cfg.alpha) /
                                   (2.0 * M_PI));
  if (cfg.model == "spin") {
    m.active = CouplingModel::spin_magnetic(m.q, m.profile.phi);
  } else if (cfg.model == "udw-amplitude") {
    m.active = CouplingModel::udw_amplitude(m.lambda, m.profile.f);
  } else if (cfg.model == "udw-derivative") {
    m.active = CouplingModel::udw_derivative(m.lambda, m.profile.f);
  } else {
    throw std::invalid_argument(
        "model must be spin, udw-amplitude or udw-derivative");
  }
  return m;
}

void check_bloch_config(const RunConfig& cfg) {
  const double n = std::sqrt(cfg.bloch[0] * cfg.bloch[0] +
                             cfg.bloch[1] * cfg.bloch[1] +
                             cfg.bloch[2] * cfg.bloch[2]);
  if (n > 1.0) {
    throw std::invalid_argument("bloch vector must satisfy |a| <= 1");
  }
}

}  // namespace

std::vector<double> Grid::points() const {
  std::vector<double> p;
  p.reserve(steps);
  if (log) {
    const double ratio = std::log(max / min);
    for (int i = 0; i < steps; ++i) {
      p.push_back(min * std::exp(ratio * i / (steps - 1)));
    }
  } else {
    for (int i = 0; i < steps; ++i) {
      p.push_back(min + (max - min) * i / (steps - 1));
    }
  }
  return p;
}

Grid parse_grid(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() < 3 || parts.size() > 4) {
    throw std::invalid_argument("grid must be min:max:steps[:log], got '" +
                                spec + "'");
  }
  Grid g;
  g.min = to_double(parts[0], "grid min");
  g.max = to_double(parts[1], "grid max");
  g.steps = static_cast<int>(to_double(parts[2], "grid steps"));
  g.log = parts.size() == 4;
  if (g.log && parts[3] != "log") {
    throw std::invalid_argument("grid scale must be 'log', got '" + parts[3] +
                                "'");
  }
  if (g.steps < 2 || !(g.max > g.min)) {
    throw std::invalid_argument("grid requires steps >= 2 and max > min");
  }
  if (g.log && !(g.min > 0.0)) {
    throw std::invalid_argument("log grid requires min > 0");
  }
  return g;
}

SwitchingFunction parse_switching(const std::string& spec) {
  if (spec.rfind("gaussian:T=", 0) == 0) {
    return SwitchingFunction::gaussian(
        to_double(spec.substr(11), "gaussian T"));
  }
  if (spec.rfind("window:", 0) == 0) {
    const auto ab = split(spec.substr(7), ',');
    if (ab.size() != 2) {
      throw std::invalid_argument("window switching must be window:<a>,<b>");
    }
    return SwitchingFunction::window(to_double(ab[0], "window start"),
                                     to_double(ab[1], "window end"));
  }
  throw std::invalid_argument(
      "switching must be gaussian:T=<v> or window:<a>,<b>, got '" + spec + "'");
}

int thread_cap() {
  if (const char* env = std::getenv("SPINPROBE_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

int run_orbital(const RunConfig& cfg) {
  const auto profile = atom::make_orbital(cfg.Z, cfg.n0, cfg.alpha);
  const Tolerance tol = make_tol(cfg);
  const auto radii = parse_grid(cfg.grid).points();
  const double gate = 100.0 * cfg.tol_rel;

  struct Row {
    double r, g, f, phi, diff;
    bool ok;
  };
  std::vector<Row> rows(radii.size());
  std::vector<std::string> errors;
  parallel_for(radii.size(), errors, [&](std::size_t i) {
    const double r = radii[i];
    const double g = profile.g(r);
    const double f = profile.f(r);
    const double phi = profile.phi(r);
    numerics::RadialFunction fg{
        [&profile](double x) { return profile.f(x) * profile.g(x); },
        profile.phi.decay_scale, 2.0 * profile.g.origin_exponent, nullptr};
    const double integral = -numerics::integrate_semiline(fg, r, tol);
    const double diff = phi - integral;
    const bool ok = std::abs(diff) <= gate * std::max(std::abs(phi), 1e-300);
    rows[i] = {r, g, f, phi, diff, ok};
  });

  int bad = report_errors(errors, "orbital");
  if (bad) return 1;

  // Summary quantities: normalization, volume integral and g-factor, with
  // the closed-form volume integral for cross-reference.
  numerics::RadialFunction norm_integrand{
      [&profile](double r) {
        const double g = profile.g(r), f = profile.f(r);
        return r * r * (f * f + g * g);
      },
      profile.phi.decay_scale, 2.0 * profile.g.origin_exponent + 2.0, nullptr};
  const double normalization = numerics::integrate_semiline(norm_integrand, tol);
  const double volume = atom::phi_volume_integral(profile, tol);
  const auto& p = profile.params;
  const double one_minus_beta = (p.Z * p.alpha) * (p.Z * p.alpha) / (1.0 + p.beta);
  const double volume_closed =
      M_PI / p.me * (1.0 - (2.0 / 3.0) * one_minus_beta);
  const double gfac = atom::g_factor_correction(profile, tol);

  if (std::abs(normalization - 1.0) > gate) ++bad;
  if (std::abs(volume - volume_closed) > gate * std::abs(volume_closed)) ++bad;

  CsvSink sink(cfg.out);
  sink.line(config_header(cfg));
  sink.line("r_over_a0,g,f,phi,phi_closed_minus_integral");
  for (const auto& row : rows) {
    sink.line(fmt(row.r) + "," + fmt(row.g) + "," + fmt(row.f) + "," +
              fmt(row.phi) + "," + fmt(row.diff));
    if (!row.ok) ++bad;
  }
  sink.line("# summary normalization=" + fmt(normalization) +
            " volume_integral=" + fmt(volume) +
            " volume_integral_closed=" + fmt(volume_closed) +
            " g_factor_correction=" + fmt(gfac));
  return bad ? 1 : 0;
}

int run_response(const RunConfig& cfg) {
  const auto models = build_models(cfg);
  const auto chi = parse_switching(cfg.switching);
  const Tolerance tol = make_tol(cfg);
  const auto omegas = parse_grid(cfg.grid).points();

  std::vector<detector::ResponseSet> rows(omegas.size());
  std::vector<std::string> errors;
  parallel_for(omegas.size(), errors, [&](std::size_t i) {
    rows[i] = detector::compute_response_set(models.active, chi, omegas[i], tol);
  });
  int bad = report_errors(errors, "response");
  if (bad) return 1;

  CsvSink sink(cfg.out);
  sink.line(config_header(cfg));
  const bool udw = models.active.is_udw();
  sink.line(udw ? "Omega_a0,L_plus,L_minus,L_zero,M_re,M_im,K_re,K_im"
                : "Omega_a0,L_plus,L_minus,L_zero,M_re,M_im");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    std::string line = fmt(omegas[i]) + "," + fmt(r.L_plus) + "," +
                       fmt(r.L_minus) + "," + fmt(r.L_zero) + "," +
                       fmt(r.M.real()) + "," + fmt(r.M.imag());
    if (udw) line += "," + fmt(r.K->real()) + "," + fmt(r.K->imag());
    sink.line(line);
  }
  return 0;
}

int run_pflip_sweep(const RunConfig& cfg) {
  const auto models = build_models(cfg);
  const Tolerance tol = make_tol(cfg);
  const auto omegas = parse_grid(cfg.grid).points();
  if (cfg.T_list.empty()) {
    throw std::invalid_argument("pflip-sweep requires a T list");
  }
  const auto initial = cfg.initial == "ground" ? detector::InitialSpin::Ground
                       : cfg.initial == "excited"
                           ? detector::InitialSpin::Excited
                           : throw std::invalid_argument(
                                 "initial must be ground or excited");

  struct Job {
    double T, omega;
  };
  std::vector<Job> jobs;
  for (double T : cfg.T_list) {
    for (double w : omegas) jobs.push_back({T, w});
  }

  std::vector<double> pflip(jobs.size());
  std::vector<std::string> errors;
  parallel_for(jobs.size(), errors, [&](std::size_t i) {
    const auto chi = SwitchingFunction::gaussian(jobs[i].T);
    pflip[i] = detector::flip_probability(models.active, chi, jobs[i].omega,
                                          initial, tol);
  });
  int bad = report_errors(errors, "pflip-sweep");
  if (bad) return 1;

  CsvSink sink(cfg.out);
  sink.line(config_header(cfg));
  sink.line("Omega_a0,T_over_a0,P_flip");
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    sink.line(fmt(jobs[i].omega) + "," + fmt(jobs[i].T) + "," + fmt(pflip[i]));
    if (!(pflip[i] >= -1e-18)) ++bad;
  }
  return bad ? 1 : 0;
}

int run_rate(const RunConfig& cfg) {
  if (cfg.model != "spin") {
    throw std::invalid_argument(
        "rate: the closed-form reference exists for the spin model only");
  }
  const auto models = build_models(cfg);
  const Tolerance tol = make_tol(cfg);
  const auto omegas = parse_grid(cfg.grid).points();
  if (cfg.T_list.size() < 3) {
    throw std::invalid_argument("rate requires a T list with >= 3 entries");
  }

  // Reference scale for rows where the closed rate vanishes.
  const double rate_scale =
      detector::adiabatic_rate_closed(models.profile.params, models.q, -1.0);

  struct Row {
    double closed = 0.0, numeric = 0.0, rel_err = 0.0;
    bool converged = true;
  };
  std::vector<Row> rows(omegas.size());
  std::vector<std::string> errors;
  parallel_for(omegas.size(), errors, [&](std::size_t i) {
    Row row;
    row.closed =
        detector::adiabatic_rate_closed(models.profile.params, models.q, omegas[i]);
    try {
      row.numeric = detector::adiabatic_rate_numeric(models.active, omegas[i],
                                                     cfg.T_list, tol);
    } catch (const numerics::NonConvergence& e) {
      row.numeric = std::nan("");
      row.converged = false;
      std::cerr << "spinprobe: rate row Omega=" << fmt(omegas[i]) << ": "
                << e.what() << "\n";
    }
    row.rel_err = row.closed > 0.0
                      ? std::abs(row.numeric - row.closed) / row.closed
                      : std::abs(row.numeric) / rate_scale;
    rows[i] = row;
  });
  int bad = report_errors(errors, "rate");

  CsvSink sink(cfg.out);
  sink.line(config_header(cfg));
  sink.line("Omega_a0,rate_closed,rate_numeric,rel_err");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    sink.line(fmt(omegas[i]) + "," + fmt(r.closed) + "," + fmt(r.numeric) +
              "," + fmt(r.rel_err));
    if (!r.converged) ++bad;
    if (omegas[i] >= -3.0 && omegas[i] <= -0.3 && !(r.rel_err < 0.01)) ++bad;
  }
  return bad ? 1 : 0;
}

int run_udw_compare(const RunConfig& cfg) {
  check_bloch_config(cfg);
  const auto profile = atom::make_orbital(cfg.Z, cfg.n0, cfg.alpha);
  const auto chi = parse_switching(cfg.switching);
  const Tolerance tol = make_tol(cfg);
  const auto omegas = parse_grid(cfg.grid).points();

  // Matched comparison: same smearing phi, lambda = q / 2 pi.
  const double q =
      cfg.coupling.value_or(detector::default_spin_coupling(cfg.alpha));
  const double lambda = q / (2.0 * M_PI);
  const auto spin = CouplingModel::spin_magnetic(q, profile.phi);
  const auto amp = CouplingModel::udw_amplitude(lambda, profile.phi);
  const auto der = CouplingModel::udw_derivative(lambda, profile.phi);
  const detector::QubitState a0{cfg.bloch};

  struct Row {
    detector::ResponseSet s, a, d;
    detector::QubitState sa, aa, da;
  };
  std::vector<Row> rows(omegas.size());
  std::vector<std::string> errors;
  parallel_for(omegas.size(), errors, [&](std::size_t i) {
    Row row;
    auto es = detector::evolve_leading_order(spin, chi, omegas[i], a0, tol);
    auto ea = detector::evolve_leading_order(amp, chi, omegas[i], a0, tol);
    auto ed = detector::evolve_leading_order(der, chi, omegas[i], a0, tol);
    row.s = es.response;
    row.a = ea.response;
    row.d = ed.response;
    row.sa = es.state;
    row.aa = ea.state;
    row.da = ed.state;
    rows[i] = row;
  });
  int bad = report_errors(errors, "udw-compare");
  if (bad) return 1;

  CsvSink sink(cfg.out);
  sink.line(config_header(cfg));
  sink.line(
      "Omega_a0,"
      "spin_L_plus,spin_L_minus,spin_L_zero,spin_M_re,spin_M_im,"
      "amp_L_plus,amp_L_minus,amp_L_zero,amp_M_re,amp_M_im,amp_K_re,amp_K_im,"
      "der_L_plus,der_L_minus,der_L_zero,der_M_re,der_M_im,der_K_re,der_K_im,"
      "spin_ax,spin_ay,spin_az,amp_ax,amp_ay,amp_az,der_ax,der_ay,der_az");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    std::ostringstream line;
    line << fmt(omegas[i]) << "," << fmt(r.s.L_plus) << "," << fmt(r.s.L_minus)
         << "," << fmt(r.s.L_zero) << "," << fmt(r.s.M.real()) << ","
         << fmt(r.s.M.imag());
    line << "," << fmt(r.a.L_plus) << "," << fmt(r.a.L_minus) << ","
         << fmt(r.a.L_zero) << "," << fmt(r.a.M.real()) << ","
         << fmt(r.a.M.imag()) << "," << fmt(r.a.K->real()) << ","
         << fmt(r.a.K->imag());
    line << "," << fmt(r.d.L_plus) << "," << fmt(r.d.L_minus) << ","
         << fmt(r.d.L_zero) << "," << fmt(r.d.M.real()) << ","
         << fmt(r.d.M.imag()) << "," << fmt(r.d.K->real()) << ","
         << fmt(r.d.K->imag());
    for (double v : r.sa.a) line << "," << fmt(v);
    for (double v : r.aa.a) line << "," << fmt(v);
    for (double v : r.da.a) line << "," << fmt(v);
    sink.line(line.str());

    // Derivative coupling must reproduce the spin functionals identically.
    auto rel = [](double x, double ref) {
      return std::abs(x) / std::max(std::abs(ref), 1e-300);
    };
    if (rel(r.d.L_plus - r.s.L_plus, r.s.L_zero) > 1e-12 ||
        rel(r.d.L_minus - r.s.L_minus, r.s.L_zero) > 1e-12 ||
        rel(std::abs(r.d.M - r.s.M), std::abs(r.s.M)) > 1e-12) {
      ++bad;
    }
  }
  return bad ? 1 : 0;
}

int run_oracle(const RunConfig& cfg) {
  check_bloch_config(cfg);
  using fieldgeom::Mat2c;
  using fieldgeom::PauliTerm;
  const auto chi = parse_switching(cfg.switching);
  const double tscale = chi.width();
  if (cfg.count < 1) throw std::invalid_argument("oracle requires count >= 1");

  struct Draw {
    double omega, t, tprime;
    fieldgeom::Vec3 a;
  };
  std::vector<Draw> draws;
  SplitMix64 rng(cfg.seed);
  for (int d = 0; d < cfg.count; ++d) {
    Draw dr;
    dr.omega = rng.uniform(-3.0, 3.0);
    dr.t = rng.uniform(-2.0, 2.0) * tscale;
    dr.tprime = rng.uniform(-2.0, 2.0) * tscale;
    dr.a = rng.bloch_ball();
    draws.push_back(dr);
  }

  static const char* kTermNames[] = {"U2rho", "rhoU2", "U1rhoU1"};
  static const char* kEntryNames[] = {"00", "01", "10", "11"};

  struct Row {
    int draw;
    std::string term;
    int s;
    int entry;
    std::complex<double> closed, quad;
    double abs_err;
  };
  std::vector<std::vector<Row>> all(draws.size());
  std::vector<std::string> errors;
  parallel_for(draws.size(), errors, [&](std::size_t i) {
    const Draw& d = draws[i];
    std::vector<Row>& out = all[i];
    Mat2c combined_quad;
    for (int s = 1; s <= 2; ++s) {
      for (int t = 0; t < 3; ++t) {
        const auto term = static_cast<PauliTerm>(t);
        const Mat2c closed = fieldgeom::angular_pauli_closed(
            term, s, d.omega, d.t, d.tprime, d.a);
        const Mat2c quad = fieldgeom::angular_pauli_integral(
            term, s, d.omega, d.t, d.tprime, d.a);
        if (term == PauliTerm::U1rhoU1) {
          combined_quad = combined_quad + quad;
        } else {
          combined_quad = combined_quad - quad;
        }
        for (int e = 0; e < 4; ++e) {
          out.push_back({static_cast<int>(i), kTermNames[t], s, e, closed.e[e],
                         quad.e[e], std::abs(closed.e[e] - quad.e[e])});
        }
      }
    }
    const Mat2c combined_closed =
        fieldgeom::combined_R_matrix(d.omega, d.t, d.tprime, d.a);
    for (int e = 0; e < 4; ++e) {
      out.push_back({static_cast<int>(i), "combined", 0, e,
                     combined_closed.e[e], combined_quad.e[e],
                     std::abs(combined_closed.e[e] - combined_quad.e[e])});
    }
  });
  int bad = report_errors(errors, "oracle");
  if (bad) return 1;

  CsvSink sink(cfg.out);
  sink.line(config_header(cfg));
  sink.line("draw,term,s,entry,closed_re,closed_im,quad_re,quad_im,abs_err");
  double max_err = 0.0;
  for (const auto& rows : all) {
    for (const auto& r : rows) {
      sink.line(std::to_string(r.draw) + "," + r.term + "," +
                std::to_string(r.s) + "," + kEntryNames[r.entry] + "," +
                fmt(r.closed.real()) + "," + fmt(r.closed.imag()) + "," +
                fmt(r.quad.real()) + "," + fmt(r.quad.imag()) + "," +
                fmt(r.abs_err));
      max_err = std::max(max_err, r.abs_err);
      if (!(r.abs_err < 1e-6)) ++bad;
    }
  }
  sink.line("# summary max_abs_err=" + fmt(max_err));
  return bad ? 1 : 0;
}

int dispatch(const RunConfig& cfg) {
  if (cfg.command == "orbital") return run_orbital(cfg);
  if (cfg.command == "response") return run_response(cfg);
  if (cfg.command == "pflip-sweep") return run_pflip_sweep(cfg);
  if (cfg.command == "rate") return run_rate(cfg);
  if (cfg.command == "udw-compare") return run_udw_compare(cfg);
  if (cfg.command == "oracle") return run_oracle(cfg);
  throw std::invalid_argument("unknown command: " + cfg.command);
}

}  // namespace spinprobe::cli
