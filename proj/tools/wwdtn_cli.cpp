#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wwdtn/wwdtn.h"

namespace {

using json = nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError {
  std::string what;
};

struct LibraryError {
  wwdtn_status status;
  std::string what;
};

void check(wwdtn_status st) {
  if (st != WWDTN_OK) throw LibraryError{st, std::string(wwdtn_status_name(st)) + ": " + wwdtn_last_error()};
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using Grid = std::unique_ptr<wwdtn_grid, Deleter<wwdtn_grid, wwdtn_grid_destroy>>;
using Trace = std::unique_ptr<wwdtn_trace, Deleter<wwdtn_trace, wwdtn_trace_destroy>>;
using Slab = std::unique_ptr<wwdtn_slab, Deleter<wwdtn_slab, wwdtn_slab_destroy>>;
using Pot = std::unique_ptr<wwdtn_potential, Deleter<wwdtn_potential, wwdtn_potential_destroy>>;
using Flow = std::unique_ptr<wwdtn_flow, Deleter<wwdtn_flow, wwdtn_flow_destroy>>;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string brief(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

struct Options {
  std::optional<double> a, s;
  std::optional<int> nx, my;
  std::optional<double> box, tol;
  std::string radii;
  std::uint64_t seed = 1;
  std::string out;
  bool as_json = false;
};

// Ordered parameter map; every output records it in full.
using ParamMap = std::map<std::string, std::string>;

wwdtn_params resolve_params(const Options& o, ParamMap& pm) {
  wwdtn_params p{};
  if (o.a)
    check(wwdtn_params_from_a(*o.a, &p));
  else
    check(wwdtn_params_from_s(o.s.value_or(0.5), &p));
  pm["a"] = num(p.a);
  pm["s"] = num(p.s);
  return p;
}

template <class T>
T pick(const std::optional<T>& v, T fallback, const char* key, ParamMap& pm) {
  const T x = v.value_or(fallback);
  if constexpr (std::is_floating_point_v<T>)
    pm[key] = num(x);
  else
    pm[key] = std::to_string(x);
  return x;
}

double positive_tol(const Options& o, double fallback, ParamMap& pm) {
  const double tol = pick(o.tol, fallback, "tol", pm);
  if (!(tol > 0.0) || !std::isfinite(tol)) throw UsageError{"--tol must be positive and finite"};
  return tol;
}

std::vector<double> parse_radii(const std::string& text) {
  std::vector<double> out;
  try {
    if (text.find(':') != std::string::npos) {
      std::vector<double> parts;
      std::stringstream ss(text);
      for (std::string tok; std::getline(ss, tok, ':');) parts.push_back(std::stod(tok));
      if (parts.size() != 3) throw UsageError{"--radii range must be start:stop:step"};
      const double lo = parts[0], hi = parts[1], step = parts[2];
      if (lo > hi) throw UsageError{"--radii range has start > stop"};
      if (!(step > 0.0)) throw UsageError{"--radii step must be positive"};
      const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
      for (int k = 0; k < count; ++k) out.push_back(lo + k * step);
    } else {
      std::stringstream ss(text);
      for (std::string tok; std::getline(ss, tok, ',');) out.push_back(std::stod(tok));
    }
  } catch (const std::logic_error&) {
    throw UsageError{"cannot parse --radii '" + text + "'"};
  }
  if (out.empty()) throw UsageError{"--radii is empty"};
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (!(out[k] > 0.0)) throw UsageError{"radii must be positive"};
    if (k > 0 && out[k] <= out[k - 1]) throw UsageError{"radii must be increasing"};
  }
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError{"cannot open output file " + path};
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& f) {
  if (f.find_first_of(",\"\n") == std::string::npos) return f;
  std::string q = "\"";
  for (char c : f) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void write_csv(std::ostream& os, const ParamMap& pm, const Table& t) {
  os << "#";
  for (const auto& [k, v] : pm) os << ' ' << k << '=' << v;
  os << "\r\n";
  for (std::size_t c = 0; c < t.header.size(); ++c) os << (c ? "," : "") << csv_field(t.header[c]);
  os << "\r\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(row[c]);
    os << "\r\n";
  }
}

json table_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r;
    for (std::size_t c = 0; c < row.size(); ++c) r[t.header[c]] = row[c];
    rows.push_back(r);
  }
  return rows;
}

struct Checks {
  json j = json::object();
  bool all = true;
  void add(const std::string& name, double value, const std::string& rule, bool passed) {
    j[name] = {{"value", value}, {"rule", rule}, {"passed", passed}};
    all = all && passed;
  }
};

void write_json(std::ostream& os, const std::string& command, const ParamMap& pm, const json& results, const Checks& checks) {
  json doc;
  doc["command"] = command;
  doc["params"] = pm;
  doc["results"] = results;
  doc["checks"] = checks.j;
  os << doc.dump(2) << "\n";
}

void emit_table(const Options& o, const std::string& command, const ParamMap& pm, const Table& t, json extra,
                const Checks& checks) {
  Output out(o.out);
  if (o.as_json) {
    extra["rows"] = table_json(t);
    write_json(out.stream(), command, pm, extra, checks);
  } else {
    write_csv(out.stream(), pm, t);
  }
}

Grid make_grid(int n, double box, int nx, int my, wwdtn_lateral lateral, const wwdtn_params& p) {
  const wwdtn_grid_spec spec{n, box, nx, my, 0.0, lateral};
  wwdtn_grid* g = nullptr;
  check(wwdtn_grid_create(&spec, &p, &g));
  return Grid(g);
}

std::vector<double> values_of(const wwdtn_trace* t) {
  std::vector<double> v(wwdtn_trace_size(t));
  check(wwdtn_trace_values(t, v.data(), v.size()));
  return v;
}

Trace trace_from(const wwdtn_grid* g, const std::vector<double>& v) {
  wwdtn_trace* t = nullptr;
  check(wwdtn_trace_create(g, v.data(), v.size(), &t));
  return Trace(t);
}

std::array<double, 2> position(const wwdtn_grid* g, std::size_t i) {
  std::array<double, 2> x{};
  check(wwdtn_grid_position(g, i, x.data()));
  return x;
}

// ---- subcommands ----

struct SymbolArgs {
  double xi_min = 1e-3, xi_max = 50.0;
  int samples = 200;
};

int cmd_symbol(const Options& o, const SymbolArgs& a) {
  ParamMap pm{{"command", "symbol"}};
  const auto p = resolve_params(o, pm);
  const int my = pick(o.my, 257, "my", pm);
  if (!(a.xi_min > 0.0) || a.xi_min > a.xi_max) throw UsageError{"xi range must satisfy 0 < xi-min <= xi-max"};
  if (a.samples < 2) throw UsageError{"--samples must be at least 2"};
  pm["xi_min"] = num(a.xi_min);
  pm["xi_max"] = num(a.xi_max);
  pm["samples"] = std::to_string(a.samples);
  const bool half = std::abs(p.s - 0.5) < 1e-15;
  Table t{{"xi", "closed_form", "ode_oracle", "half_case", "rel_err"}, {}};
  double worst = 0.0;
  for (int k = 0; k < a.samples; ++k) {
    const double xi = std::exp(std::log(a.xi_min) + (std::log(a.xi_max) - std::log(a.xi_min)) * k / (a.samples - 1));
    double cf = 0.0, ode = 0.0, hv = 0.0;
    check(wwdtn_symbol_closed_form(xi, &p, &cf));
    check(wwdtn_symbol_ode_extrapolated(xi, &p, my, &ode));
    double err = std::abs(cf - ode) / std::abs(ode);
    if (half) {
      check(wwdtn_symbol_half(xi, &hv));
      err = std::max(err, std::abs(cf - hv) / std::abs(hv));
    }
    worst = std::max(worst, err);
    t.rows.push_back({num(xi), num(cf), num(ode), half ? num(hv) : "", num(err)});
  }
  Checks c;
  c.add("max_rel_err", worst, "<= 1e-6", worst <= 1e-6);
  emit_table(o, "symbol", pm, t, json::object(), c);
  if (!c.all) std::cerr << "symbol: max rel_err " << num(worst) << " exceeds 1e-6\n";
  return c.all ? 0 : kExitFailure;
}

struct ExtendArgs {
  int k = 1;
  int n = 1;
};

int cmd_extend(const Options& o, const ExtendArgs& a) {
  ParamMap pm{{"command", "extend"}};
  const auto p = resolve_params(o, pm);
  const int nx = pick(o.nx, 64, "nx", pm), my = pick(o.my, 129, "my", pm);
  const double box = pick(o.box, 2 * M_PI, "box", pm);
  pm["k"] = std::to_string(a.k);
  pm["n"] = std::to_string(a.n);
  const auto g = make_grid(a.n, box, nx, my, WWDTN_PERIODIC, p);
  const std::size_t size = wwdtn_grid_trace_size(g.get());
  const double kk = 2 * M_PI * a.k / box;
  std::vector<double> u(size);
  std::size_t peak = 0;
  for (std::size_t i = 0; i < size; ++i) {
    u[i] = std::cos(kk * position(g.get(), i)[0]);
    if (u[i] > u[peak]) peak = i;
  }
  const auto tr = trace_from(g.get(), u);
  wwdtn_slab* vs = nullptr;
  check(wwdtn_solve_extension(tr.get(), &p, &vs));
  const Slab v(vs);
  double residual = 0.0;
  check(wwdtn_extension_residual(v.get(), &p, &residual));
  wwdtn_trace *fx = nullptr, *sp = nullptr;
  check(wwdtn_apply_La_flux(tr.get(), &p, &fx));
  const Trace flux(fx);
  check(wwdtn_apply_La_spectral(tr.get(), &p, &sp));
  const Trace spec(sp);
  const auto fv = values_of(flux.get()), sv = values_of(spec.get());
  double disc = 0.0;
  for (std::size_t i = 0; i < size; ++i) disc = std::max(disc, std::abs(fv[i] - sv[i]));
  double uu = 0.0, fu = 0.0, symbol = 0.0;
  check(wwdtn_trace_inner(tr.get(), tr.get(), &uu));
  check(wwdtn_trace_inner(flux.get(), tr.get(), &fu));
  check(wwdtn_symbol_closed_form(kk, &p, &symbol));

  std::vector<double> y(my), vals(wwdtn_slab_size(v.get()));
  check(wwdtn_grid_y_nodes(g.get(), y.data(), y.size()));
  check(wwdtn_slab_values(v.get(), vals.data(), vals.size()));
  json prof = {{"y", y}, {"v", json::array()}};
  double exact_err = 0.0;
  const bool flat = std::abs(p.a) < 1e-15;
  for (int j = 0; j < my; ++j) {
    const double vj = vals[static_cast<std::size_t>(j) * size + peak];
    prof["v"].push_back(vj);
    if (flat) exact_err = std::max(exact_err, std::abs(vj - u[peak] * std::cosh(kk * (1 - y[j])) / std::cosh(kk)));
  }
  json res = {{"extension_residual", residual},   {"flux_spectral_discrepancy", disc}, {"rayleigh_quotient", fu / uu},
              {"closed_form_symbol", symbol},     {"profile_x", position(g.get(), peak)[0]}, {"profile", prof}};
  Checks c;
  c.add("extension_residual", residual, "<= 1e-10", residual <= 1e-10);
  if (flat) {
    res["cosh_profile_sup_error"] = exact_err;
    c.add("cosh_profile_sup_error", exact_err, "<= 1e-3", exact_err <= 1e-3);
  }
  Output out(o.out);
  write_json(out.stream(), "extend", pm, res, c);
  return c.all ? 0 : kExitFailure;
}

int cmd_layer(const Options& o, int band) {
  ParamMap pm{{"command", "layer"}};
  const auto p = resolve_params(o, pm);
  const int nx = pick(o.nx, 1024, "nx", pm), my = pick(o.my, 128, "my", pm);
  const double box = pick(o.box, 80.0, "box", pm);
  const double tol = positive_tol(o, 1e-8, pm);
  pm["band"] = std::to_string(band);
  const auto g = make_grid(1, box, nx, my, WWDTN_REFLECTING, p);
  wwdtn_layer_result lr{};
  check(wwdtn_compute_layer(&p, g.get(), tol, band, &lr));
  const Trace tr(lr.trace);
  const Slab st(lr.state);
  std::vector<uint8_t> mask(wwdtn_grid_trace_size(g.get()));
  check(wwdtn_lateral_band(g.get(), band, mask.data(), mask.size()));
  Pot pot;
  {
    wwdtn_potential* pp = nullptr;
    check(wwdtn_potential_double_well(&pp));
    pot.reset(pp);
  }
  double eig = 0.0;
  check(wwdtn_second_variation_min_eig(st.get(), mask.data(), mask.size(), pot.get(), &p, 1e-8, 10000, o.seed, &eig));
  const auto u = values_of(tr.get());
  wwdtn_monotonicity m{};
  check(wwdtn_monotonicity_check(u.data(), u.size(), &m));
  std::vector<double> x(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) x[i] = position(g.get(), i)[0];
  const bool monotone = m == WWDTN_INCREASING;
  json res = {{"profile", {{"x", x}, {"u", u}}},
              {"el_residual", lr.el_residual},
              {"odd_defect", lr.odd_defect},
              {"iterations", lr.iterations},
              {"min_eig", eig},
              {"monotone", monotone},
              {"monotonicity", wwdtn_monotonicity_name(m)}};
  Checks c;
  c.add("monotone", monotone ? 1.0 : 0.0, "increasing", monotone);
  c.add("el_residual", lr.el_residual, "<= 1e-6", lr.el_residual <= 1e-6);
  c.add("min_eig", eig, ">= -1e-6", eig >= -1e-6);
  Output out(o.out);
  write_json(out.stream(), "layer", pm, res, c);
  return c.all ? 0 : kExitFailure;
}

struct SweepArgs {
  int n = 1;
  double angle = 30.0;
};

int cmd_energy_sweep(const Options& o, const SweepArgs& a) {
  ParamMap pm{{"command", "energy-sweep"}};
  const auto p = resolve_params(o, pm);
  if (a.n != 1 && a.n != 2) throw UsageError{"--n must be 1 or 2"};
  pm["n"] = std::to_string(a.n);
  const bool one = a.n == 1;
  const int nx = pick(o.nx, one ? 1024 : 256, "nx", pm), my = pick(o.my, one ? 128 : 64, "my", pm);
  const double box = pick(o.box, one ? 80.0 : 64.0, "box", pm);
  const double tol = positive_tol(o, 1e-8, pm);
  const std::string radii_text = o.radii.empty() ? (one ? "10:35:2.5" : "10:30:2.5") : o.radii;
  pm["radii"] = radii_text;
  const auto radii = parse_radii(radii_text);
  Pot pot;
  {
    wwdtn_potential* pp = nullptr;
    check(wwdtn_potential_double_well(&pp));
    pot.reset(pp);
  }
  Slab state;
  json extra = json::object();
  if (one) {
    const auto g = make_grid(1, box, nx, my, WWDTN_REFLECTING, p);
    wwdtn_layer_result lr{};
    check(wwdtn_compute_layer(&p, g.get(), tol, 2, &lr));
    wwdtn_trace_destroy(lr.trace);
    state.reset(lr.state);
  } else {
    pm["angle_deg"] = num(a.angle);
    // The 1D profile must cover omega . x over the whole square.
    const auto g1 = make_grid(1, box * 1.5625, nx * 8, my, WWDTN_REFLECTING, p);
    wwdtn_layer_result lr{};
    check(wwdtn_compute_layer(&p, g1.get(), tol, 2, &lr));
    const Trace profile(lr.trace);
    wwdtn_slab_destroy(lr.state);
    const auto g2 = make_grid(2, box, nx, my, WWDTN_REFLECTING, p);
    const double th = a.angle * M_PI / 180.0;
    const double omega[2] = {std::cos(th), std::sin(th)};
    wwdtn_trace* bt = nullptr;
    check(wwdtn_tilted_profile(profile.get(), g2.get(), omega, &bt));
    const Trace boundary(bt);
    std::vector<uint8_t> mask(wwdtn_grid_trace_size(g2.get()));
    check(wwdtn_lateral_band(g2.get(), 2, mask.data(), mask.size()));
    wwdtn_minimize_options mo;
    wwdtn_minimize_defaults(&mo);
    mo.tol = tol;
    wwdtn_minimize_result mr{};
    check(wwdtn_minimize_energy(boundary.get(), mask.data(), mask.size(), pot.get(), &p, &mo, &mr));
    wwdtn_trace_destroy(mr.trace);
    state.reset(mr.state);
    extra["iterations"] = mr.iterations;
    extra["minimizer_residual"] = mr.residual;
  }
  std::vector<wwdtn_energy> rows(radii.size());
  double slope = 0.0, hslope = 0.0;
  check(wwdtn_energy_scaling_sweep(state.get(), radii.data(), radii.size(), pot.get(), &p, radii.front(), rows.data(), &slope,
                                   &hslope));
  Table t{{"radius", "dirichlet", "horizontal_dirichlet", "potential", "total"}, {}};
  for (const auto& r : rows) t.rows.push_back({num(r.radius), num(r.dirichlet), num(r.horizontal_dirichlet), num(r.potential), num(r.total)});
  extra["slope"] = slope;
  extra["horizontal_slope"] = hslope;
  Checks c;
  const double limit = a.n - 1 + 0.05;
  c.add("slope", slope, "<= " + brief(limit), slope <= limit);
  emit_table(o, "energy-sweep", pm, t, extra, c);
  std::cerr << "energy-sweep: slope " << num(slope) << ", horizontal slope " << num(hslope) << "\n";
  return c.all ? 0 : kExitFailure;
}

struct SymmetryArgs {
  std::string input;
  double angle = 45.0;
};

std::vector<double> read_field(const std::string& path, int& nx) {
  std::ifstream in(path);
  if (!in) throw UsageError{"cannot open input field " + path};
  std::vector<double> v;
  int rows = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#' || line == "\r") continue;
    std::stringstream ss(line);
    int cols = 0;
    for (std::string tok; std::getline(ss, tok, ',');) {
      try {
        v.push_back(std::stod(tok));
      } catch (const std::logic_error&) {
        throw UsageError{"non-numeric entry in " + path};
      }
      ++cols;
    }
    if (rows == 0) nx = cols;
    if (cols != nx) throw UsageError{"ragged rows in " + path};
    ++rows;
  }
  if (rows != nx || nx == 0) throw UsageError{"input field must be a square table of values"};
  return v;
}

int cmd_symmetry(const Options& o, const SymmetryArgs& a) {
  ParamMap pm{{"command", "symmetry"}};
  const auto p = resolve_params(o, pm);
  const double box = pick(o.box, 20.0, "box", pm);
  int nx = 0;
  std::vector<double> field;
  const bool generated = a.input.empty();
  const double th = a.angle * M_PI / 180.0;
  const double target[2] = {std::cos(th), std::sin(th)};
  if (generated) {
    nx = pick(o.nx, 128, "nx", pm);
    pm["angle_deg"] = num(a.angle);
  } else {
    field = read_field(a.input, nx);
    pm["input"] = a.input;
    pm["nx"] = std::to_string(nx);
  }
  const auto g = make_grid(2, box, nx, 3, WWDTN_REFLECTING, p);
  if (generated) {
    field.resize(wwdtn_grid_trace_size(g.get()));
    for (std::size_t i = 0; i < field.size(); ++i) {
      const auto x = position(g.get(), i);
      field[i] = std::tanh(target[0] * x[0] + target[1] * x[1]);
    }
  }
  const auto tr = trace_from(g.get(), field);
  wwdtn_symmetry_report rep{};
  check(wwdtn_symmetry_report_of(tr.get(), &rep));
  std::size_t bins = 0;
  check(wwdtn_one_d_profile(tr.get(), rep.omega, nullptr, nullptr, 0, &bins));
  std::vector<double> t(bins), val(bins);
  check(wwdtn_one_d_profile(tr.get(), rep.omega, t.data(), val.data(), bins, &bins));
  json res = {{"omega", {rep.omega[0], rep.omega[1]}},
              {"residual", rep.residual},
              {"monotonicity", wwdtn_monotonicity_name(rep.monotone)},
              {"profile", {{"t", t}, {"value", val}}}};
  Checks c;
  if (generated) {
    const double dw = std::hypot(rep.omega[0] - target[0], rep.omega[1] - target[1]);
    c.add("residual", rep.residual, "<= 1e-6", rep.residual <= 1e-6);
    c.add("direction_error", dw, "<= 1e-3", dw <= 1e-3);
  }
  Output out(o.out);
  write_json(out.stream(), "symmetry", pm, res, c);
  return c.all ? 0 : kExitFailure;
}

struct FluidArgs {
  std::string example = "packing";
  int d = 3;
  double t = 0.0;
  int samples = 50;
};

int cmd_fluid_check(const Options& o, const FluidArgs& a) {
  ParamMap pm{{"command", "fluid-check"}, {"example", a.example}, {"d", std::to_string(a.d)}, {"t", num(a.t)},
              {"samples", std::to_string(a.samples)}, {"seed", std::to_string(o.seed)}};
  if (a.samples < 1) throw UsageError{"--samples must be positive"};
  std::vector<std::string> names;
  if (a.example == "all") {
    for (std::size_t k = 0; k < wwdtn_flow_example_count(); ++k) names.emplace_back(wwdtn_flow_example_name(k));
  } else {
    names.push_back(a.example);
  }
  Table t{{"example", "d", "t", "continuity_residual", "incompressibility_residual", "divergence"}, {}};
  Checks c;
  for (const auto& name : names) {
    const int d = (name == "shear" || name == "rotation") && a.example == "all" ? 2 : a.d;
    wwdtn_flow* fp = nullptr;
    check(wwdtn_flow_example(name.c_str(), d, &fp));
    const Flow flow(fp);
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> ud(-0.5, 0.5);
    std::vector<double> pts(static_cast<std::size_t>(a.samples) * d);
    for (auto& x : pts) x = ud(rng);
    double cont = 0.0, inc = 0.0, div = 0.0;
    check(wwdtn_continuity_residual(flow.get(), pts.data(), a.samples, a.t, &cont));
    check(wwdtn_incompressibility_residual(flow.get(), pts.data(), a.samples, a.t, &inc));
    check(wwdtn_divergence_free_check(flow.get(), pts.data(), a.samples, a.t, &div));
    t.rows.push_back({name, std::to_string(d), num(a.t), num(cont), num(inc), num(div)});
    if (name == "packing") {
      const double want = d * std::exp(d * a.t);
      c.add("packing_continuity", cont, "<= 1e-8", cont <= 1e-8);
      c.add("packing_incompressibility", inc, brief(want) + " +- 1e-6", std::abs(inc - want) <= 1e-6 * std::max(1.0, want));
    } else if (name == "leak") {
      c.add("leak_incompressibility", inc, "<= 1e-8", inc <= 1e-8);
      c.add("leak_continuity", cont, brief(d) + " +- 1e-6", std::abs(cont - d) <= 1e-6);
    }
  }
  emit_table(o, "fluid-check", pm, t, json::object(), c);
  return c.all ? 0 : kExitFailure;
}

int cmd_selftest(const Options& o, int only) {
  const int count = wwdtn_acceptance_count();
  if (only < 0 || only > count) throw UsageError{"--only must be between 1 and " + std::to_string(count)};
  json results = json::array();
  Checks c;
  for (int id = 1; id <= count; ++id) {
    if (only && id != only) continue;
    wwdtn_criterion r{};
    check(wwdtn_acceptance_run(id, &r));
    std::printf("%s [%d] %s: %s (%.2f s / %.0f s)\n", r.passed ? "PASS" : "FAIL", r.id, r.name, r.detail, r.seconds, r.budget);
    std::fflush(stdout);
    results.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed != 0}, {"detail", r.detail}, {"seconds", r.seconds},
                       {"budget", r.budget}});
    c.add("criterion_" + std::to_string(id), r.passed, "passed", r.passed != 0);
  }
  if (!o.out.empty()) {
    Output out(o.out);
    write_json(out.stream(), "selftest", {{"command", "selftest"}, {"only", std::to_string(only)}}, results, c);
  }
  return c.all ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional slab extension toolkit"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file supplying defaults for the flags");

  Options o;
  auto* opt_a = app.add_option("--a", o.a, "weight exponent a in (-1, 1)");
  auto* opt_s = app.add_option("--s", o.s, "fractional order s in (0, 1)");
  opt_a->excludes(opt_s);
  app.add_option("--nx", o.nx, "horizontal nodes per axis");
  app.add_option("--my", o.my, "vertical nodes");
  app.add_option("--box", o.box, "box side length");
  app.add_option("--radii", o.radii, "start:stop:step or comma-separated list");
  app.add_option("--tol", o.tol, "solver tolerance");
  app.add_option("--seed", o.seed, "seed for random samples");
  app.add_option("--out", o.out, "output file (default stdout)");
  app.add_flag("--json", o.as_json, "write tables as JSON reports");

  SymbolArgs sa;
  auto* symbol = app.add_subcommand("symbol", "closed-form symbol against the ODE oracle (CSV)");
  symbol->add_option("--xi-min", sa.xi_min, "smallest |xi|");
  symbol->add_option("--xi-max", sa.xi_max, "largest |xi|");
  symbol->add_option("--samples", sa.samples, "log-spaced sample count");

  ExtendArgs ea;
  auto* extend = app.add_subcommand("extend", "extension of a cosine mode (JSON)");
  extend->add_option("--k", ea.k, "mode number along the first axis");
  extend->add_option("--n", ea.n, "horizontal dimension");

  int band = 2;
  auto* layer = app.add_subcommand("layer", "heteroclinic layer with stability check (JSON)");
  layer->add_option("--band", band, "pinned cells at each end");

  SweepArgs wa;
  auto* sweep = app.add_subcommand("energy-sweep", "energy growth in the radius (CSV)");
  sweep->add_option("--n", wa.n, "horizontal dimension, 1 or 2");
  sweep->add_option("--angle", wa.angle, "layer direction in degrees (n = 2)");

  SymmetryArgs ya;
  auto* symmetry = app.add_subcommand("symmetry", "one-dimensional symmetry report (JSON)");
  symmetry->add_option("--input", ya.input, "square CSV table of field values");
  symmetry->add_option("--angle", ya.angle, "direction of the generated field in degrees");

  FluidArgs fa;
  auto* fluid = app.add_subcommand("fluid-check", "continuity and incompressibility residuals (CSV)");
  fluid->add_option("--example", fa.example, "flow name or 'all'");
  fluid->add_option("--d", fa.d, "ambient dimension");
  fluid->add_option("--time", fa.t, "evaluation time");
  fluid->add_option("--samples", fa.samples, "random sample points");

  int only = 0;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest->add_option("--only", only, "run a single criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*symbol) return cmd_symbol(o, sa);
    if (*extend) return cmd_extend(o, ea);
    if (*layer) return cmd_layer(o, band);
    if (*sweep) return cmd_energy_sweep(o, wa);
    if (*symmetry) return cmd_symmetry(o, ya);
    if (*fluid) return cmd_fluid_check(o, fa);
    if (*selftest) return cmd_selftest(o, only);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what << "\n";
    return kExitUsage;
  } catch (const LibraryError& e) {
    std::cerr << "error: " << e.what << "\n";
    return e.status == WWDTN_INVALID_ARGUMENT ? kExitUsage : kExitFailure;
  }
  return kExitUsage;
}
