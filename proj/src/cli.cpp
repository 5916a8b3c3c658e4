#include <elastic_landau/cli.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include <elastic_landau/currents.hpp>
#include <elastic_landau/error.hpp>
#include <elastic_landau/geometry.hpp>
#include <elastic_landau/hardwall.hpp>
#include <elastic_landau/oracle.hpp>
#include <elastic_landau/parallel.hpp>
#include <elastic_landau/spectrum.hpp>

namespace elastic_landau::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// Non-finite values print as empty cells / null.
std::string format_number(double v) {
  if (!std::isfinite(v)) return "";
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// A table emitted either as CSV (header row first) or as a JSON object.
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  using Cell = std::variant<long long, double, std::string>;

  void add_row(std::vector<Cell> row) { rows_.push_back(std::move(row)); }
  void set_summary(const std::string& key, ordered_json value) { summary_[key] = std::move(value); }

  void write(std::ostream& os, OutputFormat fmt, const std::string& command) const {
    if (fmt == OutputFormat::csv) {
      for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << columns_[i];
      os << '\n';
      for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << '\n';
      }
      return;
    }
    ordered_json doc;
    doc["command"] = command;
    for (const auto& [k, v] : summary_.items()) doc[k] = v;
    doc["rows"] = ordered_json::array();
    for (const auto& row : rows_) {
      ordered_json obj;
      for (std::size_t i = 0; i < row.size(); ++i) obj[columns_[i]] = json_cell(row[i]);
      doc["rows"].push_back(std::move(obj));
    }
    os << doc.dump(2) << '\n';
  }

 private:
  static std::string csv_cell(const Cell& c) {
    if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
    return std::get<std::string>(c);
  }
  static ordered_json json_cell(const Cell& c) {
    if (const auto* i = std::get_if<long long>(&c)) return *i;
    if (const auto* d = std::get_if<double>(&c)) return std::isfinite(*d) ? ordered_json(*d) : ordered_json();
    return std::get<std::string>(c);
  }

  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
  ordered_json summary_ = ordered_json::object();
};

// ---------------------------------------------------------------- config

double json_number(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number()) throw DomainError("config key '" + key + "' must be a number");
  return v.get<double>();
}

int json_int(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number_integer()) throw DomainError("config key '" + key + "' must be an integer");
  return v.get<int>();
}

Spin json_spin(const nlohmann::json& v, const std::string& key) {
  const int s = json_int(v, key);
  if (s != 1 && s != -1) throw DomainError("config key '" + key + "' must be +1 or -1");
  return spin_from_int(s);
}

Spin parse_spin_text(const std::string& text) {
  try {
    std::size_t used = 0;
    const int s = std::stoi(text, &used);
    if (used == text.size() && (s == 1 || s == -1)) return spin_from_int(s);
  } catch (const std::exception&) {
  }
  throw DomainError("spin must be +1 or -1, got '" + text + "'");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

OutputFormat parse_format(const std::string& f) {
  if (f == "csv") return OutputFormat::csv;
  if (f == "json") return OutputFormat::json;
  throw DomainError("output_format must be 'csv' or 'json', got '" + f + "'");
}

std::vector<StateLabel> parse_occupation_text(const std::string& text) {
  std::vector<StateLabel> states;
  for (const auto& triple : split(text, ';')) {
    const auto parts = split(triple, ',');
    if (parts.size() != 3) throw DomainError("occupation entries are 'n,l,s' triples separated by ';'");
    try {
      states.push_back({std::stoi(parts[0]), std::stoi(parts[1]), parse_spin_text(parts[2])});
    } catch (const std::logic_error&) {
      throw DomainError("malformed occupation entry '" + triple + "'");
    }
  }
  return states;
}

std::string method_or(const RunConfig& cfg, const std::string& fallback) {
  return cfg.method.empty() ? fallback : cfg.method;
}

WallConfig wall_of(const RunConfig& cfg) {
  if (!cfg.rho_b) throw DomainError("this command needs a wall radius (rho_b)");
  return WallConfig{*cfg.rho_b, cfg.bracket_step, cfg.root_tol};
}

std::vector<StateLabel> table_states(const RunConfig& cfg) {
  return enumerate_states(cfg.n_max, cfg.l_min, cfg.l_max, cfg.s_set);
}

unsigned threads_from_env() {
  const char* raw = std::getenv("ELASTIC_LANDAU_THREADS");
  if (raw == nullptr || *raw == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 0) throw DomainError("ELASTIC_LANDAU_THREADS must be a non-negative integer");
  return resolve_threads(static_cast<unsigned>(v));
}

// ---------------------------------------------------------------- commands

struct Context {
  RunConfig cfg;
  unsigned threads = 1;
  std::ostream& err;
};

int cmd_phase(const Context& ctx, Table& table) {
  const auto& p = ctx.cfg.params;
  const double phi = p.phi_ac();
  table.set_summary("omega", p.omega);
  table.set_summary("phi_ac", phi);
  for (int l = ctx.cfg.l_min; l <= ctx.cfg.l_max; ++l)
    for (Spin s : ctx.cfg.s_set)
      table.add_row({l, static_cast<long long>(sign(s)), phi, effective_angular(l, s, phi)});
  return 0;
}

void add_level_rows(Table& table, const std::vector<EnergyLevel>& levels, double phi) {
  for (const auto& lv : levels)
    table.add_row({lv.state.n, lv.state.l, static_cast<long long>(sign(lv.state.s)), phi,
                   to_string(lv.method), lv.energy});
}

std::vector<EnergyLevel> levels_for(const RunConfig& cfg, const SystemParams& p,
                                    const std::string& method, unsigned threads) {
  if (method == "landau")
    return spectrum_table(cfg.n_max, cfg.l_min, cfg.l_max, cfg.s_set, p, threads);
  const WallMethod wm = method == "exact" ? WallMethod::exact : WallMethod::asymptotic;
  return wall_spectrum_table(cfg.n_max, cfg.l_min, cfg.l_max, cfg.s_set, p, wall_of(cfg), wm,
                             threads);
}

int cmd_spectrum(const Context& ctx, Table& table) {
  const auto& p = ctx.cfg.params;
  add_level_rows(table, levels_for(ctx.cfg, p, "landau", ctx.threads), p.phi_ac());
  return 0;
}

int cmd_hardwall(const Context& ctx, Table& table) {
  const auto& p = ctx.cfg.params;
  add_level_rows(table, levels_for(ctx.cfg, p, method_or(ctx.cfg, "asymptotic"), ctx.threads),
                 p.phi_ac());
  return 0;
}

// Per-state -dE/dphi for the chosen spectrum.
double contribution(const RunConfig& cfg, const StateLabel& st, const SystemParams& p,
                    const std::string& method) {
  if (method == "landau") return landau_current_contribution(st, p);
  const WallConfig w = wall_of(cfg);
  if (method == "asymptotic") return hardwall_current_contribution(st, p, w);
  if (effective_angular(st, p.phi_ac()) == 0.0)
    throw NonDifferentiableError("gamma_s = 0 for state " + to_string(st) + ": current undefined");
  return -state_phase_derivative(st, p, cfg.derivative_step, Spectrum::hardwall_exact, &w);
}

OneSidedCurrent limits_of(const RunConfig& cfg, const StateLabel& st, const SystemParams& p,
                          const std::string& method) {
  if (method == "landau") return landau_current_limits(st, p);
  if (method == "asymptotic") return hardwall_current_limits(st, p, wall_of(cfg));
  throw DomainError("one-sided limits are available for the landau and asymptotic spectra only");
}

void add_current_rows(const RunConfig& cfg, Table& table, const std::vector<StateLabel>& states,
                      const SystemParams& p, const std::string& method) {
  const OccupationSet occ(states);
  const double phi = p.phi_ac();
  std::vector<double> contrib(occ.size(), std::nan(""));
  std::vector<OneSidedCurrent> sides(occ.size());
  double total = 0.0;
  for (std::size_t i = 0; i < occ.size(); ++i) {
    const auto& st = occ.states()[i];
    const bool kink = effective_angular(st, phi) == 0.0;
    if (cfg.one_sided) {
      if (kink) {
        sides[i] = limits_of(cfg, st, p, method);
        continue;
      }
      contrib[i] = contribution(cfg, st, p, method);
      sides[i] = {contrib[i], contrib[i]};
    } else {
      contrib[i] = contribution(cfg, st, p, method);
    }
    total += contrib[i];
  }
  for (std::size_t i = 0; i < occ.size(); ++i) {
    const auto& st = occ.states()[i];
    std::vector<Table::Cell> row{st.n, st.l, static_cast<long long>(sign(st.s)), phi, contrib[i], total};
    if (cfg.one_sided) {
      row.emplace_back(sides[i].left);
      row.emplace_back(sides[i].right);
    }
    table.add_row(std::move(row));
  }
}

std::vector<std::string> current_columns(const RunConfig& cfg) {
  std::vector<std::string> cols{"n", "l", "s", "phi_ac", "contribution", "total"};
  if (cfg.one_sided) {
    cols.emplace_back("left");
    cols.emplace_back("right");
  }
  return cols;
}

int cmd_current(const Context& ctx, Table& table) {
  const auto states = ctx.cfg.occupation.value_or(table_states(ctx.cfg));
  add_current_rows(ctx.cfg, table, states, ctx.cfg.params,
                   method_or(ctx.cfg, ctx.cfg.rho_b ? "asymptotic" : "landau"));
  return 0;
}

int cmd_sweep(const Context& ctx, Table& table) {
  const auto& cfg = ctx.cfg;
  if (!cfg.phi_sweep) throw DomainError("sweep needs phi_sweep {start, stop, steps}");
  const auto& sw = *cfg.phi_sweep;
  const std::string method = method_or(cfg, "landau");
  for (int i = 0; i < sw.steps; ++i) {
    const double phi = sw.start + (sw.stop - sw.start) * i / (sw.steps - 1);
    const SystemParams p = cfg.params.with_phase(phi);
    if (cfg.quantity == "current")
      add_current_rows(cfg, table, cfg.occupation.value_or(table_states(cfg)), p, method);
    else
      add_level_rows(table, levels_for(cfg, p, method, ctx.threads), phi);
  }
  return 0;
}

int cmd_oracle_verify(const Context& ctx, Table& table) {
  const auto& cfg = ctx.cfg;
  oracle::VerifyOptions opt;
  opt.tol = cfg.tol;
  opt.n_points = cfg.oracle_points;
  opt.rho_max = cfg.oracle_rho_max;
  opt.threads = ctx.threads;
  if (cfg.rho_b) opt.wall = wall_of(cfg);
  const auto report = oracle::verify_spectrum(table_states(cfg), cfg.params, opt);
  const double phi = cfg.params.phi_ac();
  for (const auto& c : report.checks) {
    const std::string status = !c.error.empty() ? "ERROR" : c.passed ? "PASS" : "FAIL";
    table.add_row({c.state.n, c.state.l, static_cast<long long>(sign(c.state.s)), phi,
                   to_string(report.reference), c.error.empty() ? c.analytic : std::nan(""),
                   c.error.empty() ? c.oracle : std::nan(""),
                   c.error.empty() ? c.rel_error : std::nan(""), status});
    if (!c.error.empty()) ctx.err << "state " << to_string(c.state) << ": " << c.error << '\n';
  }
  table.set_summary("tolerance", cfg.tol);
  table.set_summary("max_rel_error", report.max_rel_error());
  table.set_summary("passed", report.all_passed());
  return report.all_passed() ? 0 : 2;
}

int cmd_geometry_verify(const Context& ctx, Table& table) {
  const double omega = ctx.cfg.params.omega;
  const double rho = ctx.cfg.rho;
  const auto t = geometry::torsion_data(rho, omega, ctx.cfg.fd_step);
  const auto& d = t.decomposition;
  bool all = true;
  auto row = [&](const std::string& name, double value, double expected, double tol) {
    const double err = std::abs(value - expected);
    const bool ok = err <= tol;
    all = all && ok;
    table.add_row({name, value, expected, err, tol, std::string(ok ? "PASS" : "FAIL")});
  };
  double t1 = 0.0, t2 = 0.0, trace = 0.0, antisym = 0.0;
  for (int mu = 0; mu < 3; ++mu)
    for (int nu = 0; nu < 3; ++nu) {
      t1 = std::max(t1, std::abs(t.torsion_two_form[0][mu][nu]));
      t2 = std::max(t2, std::abs(t.torsion_two_form[1][mu][nu]));
      for (int a = 0; a < 3; ++a)
        antisym = std::max(antisym, std::abs(t.contortion[a][mu][nu] + t.contortion[a][nu][mu]));
    }
  for (double v : d.trace) trace = std::max(trace, std::abs(v));

  row("S0", d.axial[0], -4.0 * omega, 1e-7 * std::max(std::abs(omega), 1e-300));
  row("T3_rho_phi", t.torsion_two_form[2][0][1], 2.0 * omega * rho, 1e-7 * std::abs(2.0 * omega * rho));
  row("T1_max", t1, 0.0, 1e-7);
  row("T2_max", t2, 0.0, 1e-7);
  row("trace_vector_max", trace, 0.0, 1e-9);
  row("reconstruction_residual", d.reconstruction_residual, 0.0, 1e-9);
  row("q_trace_residual", d.q_trace_residual, 0.0, 1e-9);
  row("q_axial_residual", d.q_axial_residual, 0.0, 1e-9);
  row("contortion_antisymmetry", antisym, 0.0, 1e-12);
  row("spin_torsion_shift", std::abs(d.axial[0]) / 8.0, omega / 2.0, 1e-7 * std::max(omega, 1e-300));
  table.set_summary("omega", omega);
  table.set_summary("rho", rho);
  table.set_summary("passed", all);
  return all ? 0 : 2;
}

// ---------------------------------------------------------------- flags

struct Flags {
  std::string config_path;
  std::string out_path;
  std::string format;
  double m = 0, mu = 0, lambda = 0, k = 0, omega = 0, phi_ac = 0, b_z = 0, areal = 0;
  double rho_b = 0, tol = 0, oracle_rho_max = 0, bracket_step = 0, root_tol = 0;
  double phi_start = 0, phi_stop = 0, derivative_step = 0, rho = 0, fd_step = 0;
  int s = 1, n_max = 0, l_min = 0, l_max = 0, phi_steps = 0, points = 0;
  std::string s_set, occupation, method, quantity;
  bool one_sided = false;
  std::map<std::string, CLI::Option*> opts;
};

void register_flags(CLI::App& app, Flags& f) {
  auto add = [&](const std::string& name, auto& var, const std::string& help) {
    f.opts[name] = app.add_option("--" + name, var, help);
  };
  add("config", f.config_path, "flat JSON config file");
  add("out", f.out_path, "write output to FILE instead of stdout");
  add("format", f.format, "csv | json");
  add("m", f.m, "mass");
  add("mu", f.mu, "magnetic dipole moment");
  add("lambda", f.lambda, "linear charge density");
  add("k", f.k, "longitudinal wavenumber");
  add("s", f.s, "default spin (+1/-1)");
  add("omega", f.omega, "dislocation strength Omega");
  add("b-z", f.b_z, "Burgers vector z-component (with --areal-density defines Omega)");
  add("areal-density", f.areal, "areal dislocation density");
  add("phi-ac", f.phi_ac, "Aharonov-Casher phase override (radians)");
  add("rho-b", f.rho_b, "hard-wall radius");
  add("n-max", f.n_max, "largest radial quantum number");
  add("l-min", f.l_min, "smallest orbital number");
  add("l-max", f.l_max, "largest orbital number");
  add("s-set", f.s_set, "comma-separated spins, e.g. 1,-1");
  add("occupation", f.occupation, "occupied states 'n,l,s;n,l,s;...'");
  add("method", f.method, "landau | exact | asymptotic");
  add("quantity", f.quantity, "sweep output: energy | current");
  add("phi-start", f.phi_start, "sweep start phase");
  add("phi-stop", f.phi_stop, "sweep stop phase");
  add("phi-steps", f.phi_steps, "sweep sample count");
  add("tol", f.tol, "oracle relative tolerance");
  add("points", f.points, "oracle coarse grid points");
  add("oracle-rho-max", f.oracle_rho_max, "oracle natural-domain radius");
  add("bracket-step", f.bracket_step, "hard-wall root scan step (0 = auto)");
  add("root-tol", f.root_tol, "hard-wall root tolerance");
  add("derivative-step", f.derivative_step, "phase step for numerical currents");
  add("rho", f.rho, "geometry-verify sample radius");
  add("fd-step", f.fd_step, "geometry-verify finite-difference step");
  f.opts["one-sided"] = app.add_flag("--one-sided", f.one_sided, "report left/right current limits at kinks");
}

void apply_flags(const Flags& f, RunConfig& cfg) {
  auto set = [&](const std::string& name) { return f.opts.at(name)->count() > 0; };
  if (set("format")) cfg.output_format = parse_format(f.format);
  if (set("m")) cfg.params.m = f.m;
  if (set("mu")) cfg.params.mu = f.mu;
  if (set("lambda")) cfg.params.lambda = f.lambda;
  if (set("k")) cfg.params.k = f.k;
  if (set("s")) cfg.params.s = spin_from_int(f.s);
  if (set("omega")) cfg.params.omega = f.omega;
  if (set("b-z")) cfg.b_z = f.b_z;
  if (set("areal-density")) cfg.areal_density = f.areal;
  if (set("phi-ac")) cfg.params.phi_ac_override = f.phi_ac;
  if (set("rho-b")) cfg.rho_b = f.rho_b;
  if (set("n-max")) cfg.n_max = f.n_max;
  if (set("l-min")) cfg.l_min = f.l_min;
  if (set("l-max")) cfg.l_max = f.l_max;
  if (set("s-set")) {
    cfg.s_set.clear();
    for (const auto& part : split(f.s_set, ',')) cfg.s_set.push_back(parse_spin_text(part));
  }
  if (set("occupation")) cfg.occupation = parse_occupation_text(f.occupation);
  if (set("method")) cfg.method = f.method;
  if (set("quantity")) cfg.quantity = f.quantity;
  if (set("phi-start") || set("phi-stop") || set("phi-steps")) {
    PhaseSweep sw = cfg.phi_sweep.value_or(PhaseSweep{});
    if (set("phi-start")) sw.start = f.phi_start;
    if (set("phi-stop")) sw.stop = f.phi_stop;
    if (set("phi-steps")) sw.steps = f.phi_steps;
    cfg.phi_sweep = sw;
  }
  if (set("tol")) cfg.tol = f.tol;
  if (set("points")) cfg.oracle_points = f.points;
  if (set("oracle-rho-max")) cfg.oracle_rho_max = f.oracle_rho_max;
  if (set("bracket-step")) cfg.bracket_step = f.bracket_step;
  if (set("root-tol")) cfg.root_tol = f.root_tol;
  if (set("derivative-step")) cfg.derivative_step = f.derivative_step;
  if (set("rho")) cfg.rho = f.rho;
  if (set("fd-step")) cfg.fd_step = f.fd_step;
  if (f.one_sided) cfg.one_sided = true;
}

const std::map<std::string, std::pair<std::vector<std::string>, std::function<int(const Context&, Table&)>>>&
commands() {
  static const std::vector<std::string> level_cols{"n", "l", "s", "phi_ac", "method", "energy"};
  static const std::map<std::string,
                        std::pair<std::vector<std::string>, std::function<int(const Context&, Table&)>>>
      table{
          {"phase", {{"l", "s", "phi_ac", "gamma"}, cmd_phase}},
          {"spectrum", {level_cols, cmd_spectrum}},
          {"hardwall", {level_cols, cmd_hardwall}},
          {"current", {{}, cmd_current}},
          {"sweep", {level_cols, cmd_sweep}},
          {"oracle-verify",
           {{"n", "l", "s", "phi_ac", "method", "analytic", "oracle", "rel_error", "status"},
            cmd_oracle_verify}},
          {"geometry-verify",
           {{"quantity", "value", "expected", "abs_error", "tolerance", "status"}, cmd_geometry_verify}},
      };
  return table;
}

}  // namespace

void RunConfig::validate() const {
  params.validate();
  if (n_max < 0) throw DomainError("n_max must be >= 0");
  if (l_min > l_max) throw DomainError("l_min must not exceed l_max");
  if (s_set.empty()) throw DomainError("s_set must not be empty");
  if (std::set<Spin>(s_set.begin(), s_set.end()).size() != s_set.size())
    throw DomainError("s_set has duplicate spins");
  if (rho_b && !(*rho_b > 0.0)) throw DomainError("rho_b must be > 0");
  if (phi_sweep && phi_sweep->steps < 2) throw DomainError("phi_sweep.steps must be >= 2");
  if (oracle_points < 100) throw DomainError("oracle_points must be >= 100");
  if (oracle_rho_max && !(*oracle_rho_max > 0.0)) throw DomainError("oracle_rho_max must be > 0");
  if (!(tol > 0.0)) throw DomainError("tol must be > 0");
  if (bracket_step < 0.0) throw DomainError("bracket_step must be >= 0");
  if (!(root_tol > 0.0)) throw DomainError("root_tol must be > 0");
  if (!method.empty() && method != "landau" && method != "exact" && method != "asymptotic")
    throw DomainError("method must be landau, exact or asymptotic");
  if (quantity != "energy" && quantity != "current")
    throw DomainError("quantity must be energy or current");
  if (!(derivative_step > 0.0)) throw DomainError("derivative_step must be > 0");
  if (!(rho > 0.0)) throw DomainError("rho must be > 0");
  if (fd_step < 0.0) throw DomainError("fd_step must be >= 0");
  if (b_z.has_value() != areal_density.has_value())
    throw DomainError("b_z and areal_density must be given together");
  if (occupation) (void)OccupationSet(*occupation);
}

void apply_config_json(const nlohmann::json& j, RunConfig& cfg) {
  if (!j.is_object()) throw DomainError("config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "m") cfg.params.m = json_number(v, key);
    else if (key == "mu") cfg.params.mu = json_number(v, key);
    else if (key == "lambda") cfg.params.lambda = json_number(v, key);
    else if (key == "k") cfg.params.k = json_number(v, key);
    else if (key == "s") cfg.params.s = json_spin(v, key);
    else if (key == "omega") cfg.params.omega = json_number(v, key);
    else if (key == "phi_ac") cfg.params.phi_ac_override = json_number(v, key);
    else if (key == "b_z") cfg.b_z = json_number(v, key);
    else if (key == "areal_density") cfg.areal_density = json_number(v, key);
    else if (key == "rho_b") cfg.rho_b = json_number(v, key);
    else if (key == "n_max") cfg.n_max = json_int(v, key);
    else if (key == "l_min") cfg.l_min = json_int(v, key);
    else if (key == "l_max") cfg.l_max = json_int(v, key);
    else if (key == "s_set") {
      if (!v.is_array()) throw DomainError("config key 's_set' must be an array");
      cfg.s_set.clear();
      for (const auto& e : v) cfg.s_set.push_back(json_spin(e, key));
    } else if (key == "phi_sweep") {
      if (!v.is_object()) throw DomainError("config key 'phi_sweep' must be an object");
      PhaseSweep sw;
      for (const auto& [sk, sv] : v.items()) {
        const std::string full = "phi_sweep." + sk;
        if (sk == "start") sw.start = json_number(sv, full);
        else if (sk == "stop") sw.stop = json_number(sv, full);
        else if (sk == "steps") sw.steps = json_int(sv, full);
        else throw DomainError("unknown config key '" + full + "'");
      }
      cfg.phi_sweep = sw;
    } else if (key == "occupation") {
      if (!v.is_array()) throw DomainError("config key 'occupation' must be an array of [n,l,s]");
      std::vector<StateLabel> states;
      for (const auto& e : v) {
        if (!e.is_array() || e.size() != 3)
          throw DomainError("config key 'occupation' must be an array of [n,l,s]");
        states.push_back({json_int(e[0], key), json_int(e[1], key), json_spin(e[2], key)});
      }
      cfg.occupation = std::move(states);
    } else if (key == "output_format") {
      if (!v.is_string()) throw DomainError("config key 'output_format' must be a string");
      cfg.output_format = parse_format(v.get<std::string>());
    } else if (key == "oracle_points") cfg.oracle_points = json_int(v, key);
    else if (key == "oracle_rho_max") cfg.oracle_rho_max = json_number(v, key);
    else if (key == "tol") cfg.tol = json_number(v, key);
    else if (key == "bracket_step") cfg.bracket_step = json_number(v, key);
    else if (key == "root_tol") cfg.root_tol = json_number(v, key);
    else if (key == "method" || key == "quantity") {
      if (!v.is_string()) throw DomainError("config key '" + key + "' must be a string");
      (key == "method" ? cfg.method : cfg.quantity) = v.get<std::string>();
    } else if (key == "derivative_step") cfg.derivative_step = json_number(v, key);
    else if (key == "one_sided") {
      if (!v.is_boolean()) throw DomainError("config key 'one_sided' must be a boolean");
      cfg.one_sided = v.get<bool>();
    } else if (key == "rho") cfg.rho = json_number(v, key);
    else if (key == "fd_step") cfg.fd_step = json_number(v, key);
    else throw DomainError("unknown config key '" + key + "'");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elastic Landau levels and persistent spin currents", "elastic-landau"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;
  register_flags(app, flags);
  for (const auto& [name, entry] : commands()) app.add_subcommand(name, "");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  const std::string name = app.get_subcommands().front()->get_name();

  try {
    RunConfig cfg;
    if (!flags.config_path.empty()) {
      std::ifstream in(flags.config_path);
      if (!in) throw DomainError("cannot open config file '" + flags.config_path + "'");
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("config is not valid JSON: ") + e.what());
      }
      apply_config_json(j, cfg);
    }
    apply_flags(flags, cfg);
    if (cfg.b_z && cfg.areal_density) cfg.params.omega = dislocation_strength(*cfg.b_z, *cfg.areal_density);
    cfg.validate();

    const Context ctx{cfg, threads_from_env(), err};
    const auto& [columns, fn] = commands().at(name);
    Table table(name == "current" || (name == "sweep" && cfg.quantity == "current")
                    ? current_columns(cfg)
                    : columns);
    const int code = fn(ctx, table);

    if (flags.out_path.empty()) {
      table.write(out, cfg.output_format, name);
    } else {
      std::ofstream file(flags.out_path);
      if (!file) throw DomainError("cannot open output file '" + flags.out_path + "'");
      table.write(file, cfg.output_format, name);
    }
    if (code != 0) err << "error: " << name << " verification failed\n";
    return code;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace elastic_landau::cli
