#include "wwdtn/wwdtn.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <new>
#include <string>

#include "wwdtn/acceptance.hpp"
#include "wwdtn/energy.hpp"
#include "wwdtn/error.hpp"
#include "wwdtn/extension.hpp"
#include "wwdtn/fluid.hpp"
#include "wwdtn/symbol.hpp"
#include "wwdtn/symmetry.hpp"

struct wwdtn_grid {
  wwdtn::GridPtr g;
};
struct wwdtn_trace {
  wwdtn::TraceField f;
};
struct wwdtn_slab {
  wwdtn::SlabField f;
};
struct wwdtn_potential {
  wwdtn::Potential p;
};
struct wwdtn_flow {
  wwdtn::FlowSample f;
};

namespace {

using namespace wwdtn;

thread_local std::string g_last_error;

struct BufferTooSmall {
  std::string what;
};

wwdtn_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return WWDTN_INVALID_ARGUMENT;
    case ErrorKind::degenerate_weight: return WWDTN_DEGENERATE_WEIGHT;
    case ErrorKind::singular: return WWDTN_SINGULAR;
    case ErrorKind::not_converged: return WWDTN_NOT_CONVERGED;
    case ErrorKind::infeasible: return WWDTN_INFEASIBLE;
    case ErrorKind::overflow: return WWDTN_OVERFLOW;
    case ErrorKind::not_monotone: return WWDTN_NOT_MONOTONE;
  }
  return WWDTN_INTERNAL;
}

template <class Fn>
wwdtn_status guard(Fn&& fn) {
  try {
    fn();
    return WWDTN_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const BufferTooSmall& e) {
    g_last_error = e.what;
    return WWDTN_BUFFER_TOO_SMALL;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return WWDTN_OVERFLOW;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WWDTN_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return WWDTN_INTERNAL;
  }
}

template <class T>
const T& deref(const T* p, const char* what) {
  if (!p) fail(ErrorKind::invalid_argument, std::string("null ") + what);
  return *p;
}

template <class T>
T& out_ref(T* p) {
  if (!p) fail(ErrorKind::invalid_argument, "null output pointer");
  return *p;
}

FractionalParams params_of(const wwdtn_params* p) {
  const auto& q = deref(p, "params");
  const auto fp = FractionalParams::from_a(q.a);
  require(std::abs(fp.s() - q.s) <= 1e-12, "params: a and s are inconsistent; use wwdtn_params_from_a/from_s");
  return fp;
}

void copy_out(std::span<const double> src, double* out, std::size_t capacity) {
  if (!out && capacity > 0) fail(ErrorKind::invalid_argument, "null output buffer");
  if (capacity < src.size())
    throw BufferTooSmall{"output buffer holds " + std::to_string(capacity) + " values, " + std::to_string(src.size()) + " needed"};
  std::copy(src.begin(), src.end(), out);
}

std::span<const std::uint8_t> mask_of(const uint8_t* pinned, std::size_t count, const SlabGrid& grid) {
  if (!pinned) return {};
  require(count == grid.trace_size(), "pinned mask length must equal the trace size");
  return {pinned, count};
}

std::vector<Point> points_of(const double* pts, std::size_t count, int dim) {
  require(pts || count == 0, "null point buffer");
  require(dim >= 1, "dimension must be positive");
  std::vector<Point> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k].assign(pts + k * dim, pts + (k + 1) * dim);
  return out;
}

StaticField static_field(wwdtn_static_field v, void* user, int dim) {
  require(v != nullptr, "null field callback");
  return [v, user, dim](std::span<const double> X, std::span<double> out) { v(X.data(), dim, out.data(), user); };
}

void copy_string(const std::string& src, char* dst, std::size_t cap) { std::snprintf(dst, cap, "%s", src.c_str()); }

}  // namespace

extern "C" {

const char* wwdtn_last_error(void) { return g_last_error.c_str(); }

const char* wwdtn_status_name(wwdtn_status status) {
  switch (status) {
    case WWDTN_OK: return "ok";
    case WWDTN_INVALID_ARGUMENT: return "invalid_argument";
    case WWDTN_DEGENERATE_WEIGHT: return "degenerate_weight";
    case WWDTN_SINGULAR: return "singular";
    case WWDTN_NOT_CONVERGED: return "not_converged";
    case WWDTN_INFEASIBLE: return "infeasible";
    case WWDTN_OVERFLOW: return "overflow";
    case WWDTN_NOT_MONOTONE: return "not_monotone";
    case WWDTN_BUFFER_TOO_SMALL: return "buffer_too_small";
    case WWDTN_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* wwdtn_version(void) { return "1.0.0"; }

wwdtn_status wwdtn_params_from_a(double a, wwdtn_params* out) {
  return guard([&] {
    const auto p = FractionalParams::from_a(a);
    out_ref(out) = {p.a(), p.s()};
  });
}

wwdtn_status wwdtn_params_from_s(double s, wwdtn_params* out) {
  return guard([&] {
    const auto p = FractionalParams::from_s(s);
    out_ref(out) = {p.a(), p.s()};
  });
}

wwdtn_status wwdtn_grid_create(const wwdtn_grid_spec* spec, const wwdtn_params* params, wwdtn_grid** out) {
  return guard([&] {
    const auto& s = deref(spec, "grid spec");
    require(s.lateral == WWDTN_PERIODIC || s.lateral == WWDTN_REFLECTING, "unknown lateral closure");
    GridSpec g{s.n, s.box, s.nx, s.my, s.gamma, s.lateral == WWDTN_REFLECTING ? Lateral::reflecting : Lateral::periodic};
    auto& o = out_ref(out);
    o = new wwdtn_grid{make_grid(g, params_of(params))};
  });
}

void wwdtn_grid_destroy(wwdtn_grid* grid) { delete grid; }
size_t wwdtn_grid_trace_size(const wwdtn_grid* grid) { return grid ? grid->g->trace_size() : 0; }
size_t wwdtn_grid_slab_size(const wwdtn_grid* grid) { return grid ? grid->g->slab_size() : 0; }

wwdtn_status wwdtn_grid_spec_of(const wwdtn_grid* grid, wwdtn_grid_spec* out) {
  return guard([&] {
    const auto s = deref(grid, "grid").g->spec();
    out_ref(out) = {s.n, s.box, s.nx, s.my, s.gamma, s.lateral == Lateral::reflecting ? WWDTN_REFLECTING : WWDTN_PERIODIC};
  });
}

wwdtn_status wwdtn_grid_position(const wwdtn_grid* grid, size_t i, double out[2]) {
  return guard([&] {
    const auto& g = *deref(grid, "grid").g;
    require(i < g.trace_size(), "node index out of range");
    require(out != nullptr, "null output pointer");
    const auto p = g.position(i);
    out[0] = p[0];
    out[1] = g.n() == 2 ? p[1] : 0.0;
  });
}

wwdtn_status wwdtn_grid_y_nodes(const wwdtn_grid* grid, double* out, size_t capacity) {
  return guard([&] { copy_out(deref(grid, "grid").g->y_nodes(), out, capacity); });
}

wwdtn_status wwdtn_trace_create(const wwdtn_grid* grid, const double* values, size_t count, wwdtn_trace** out) {
  return guard([&] {
    const auto& g = deref(grid, "grid").g;
    require(values != nullptr, "null values");
    require(count == g->trace_size(), "value count must equal the trace size");
    out_ref(out) = new wwdtn_trace{TraceField(g, std::vector<double>(values, values + count))};
  });
}

void wwdtn_trace_destroy(wwdtn_trace* trace) { delete trace; }
size_t wwdtn_trace_size(const wwdtn_trace* trace) { return trace ? trace->f.size() : 0; }

wwdtn_status wwdtn_trace_values(const wwdtn_trace* trace, double* out, size_t capacity) {
  return guard([&] { copy_out(deref(trace, "trace").f.values(), out, capacity); });
}

void wwdtn_slab_destroy(wwdtn_slab* slab) { delete slab; }
size_t wwdtn_slab_size(const wwdtn_slab* slab) { return slab ? slab->f.values().size() : 0; }

wwdtn_status wwdtn_slab_values(const wwdtn_slab* slab, double* out, size_t capacity) {
  return guard([&] { copy_out(deref(slab, "slab").f.values(), out, capacity); });
}

wwdtn_status wwdtn_slab_trace(const wwdtn_slab* slab, wwdtn_trace** out) {
  return guard([&] { out_ref(out) = new wwdtn_trace{deref(slab, "slab").f.trace()}; });
}

wwdtn_status wwdtn_symbol_closed_form(double xi, const wwdtn_params* params, double* out) {
  return guard([&] { out_ref(out) = symbol_closed_form(xi, params_of(params)).value; });
}

wwdtn_status wwdtn_symbol_half(double xi, double* out) {
  return guard([&] { out_ref(out) = symbol_half(xi); });
}

wwdtn_status wwdtn_symbol_normalization(double s, double* out) {
  return guard([&] { out_ref(out) = symbol_normalization(s); });
}

wwdtn_status wwdtn_symbol_ode(double xi, const wwdtn_params* params, int my, double gamma, double* out) {
  return guard([&] { out_ref(out) = symbol_ode_oracle(xi, params_of(params), my, gamma); });
}

wwdtn_status wwdtn_symbol_ode_extrapolated(double xi, const wwdtn_params* params, int my, double* out) {
  return guard([&] { out_ref(out) = symbol_ode_extrapolated(xi, params_of(params), my); });
}

wwdtn_status wwdtn_symbol_exponent(const wwdtn_params* params, wwdtn_regime regime, double* out) {
  return guard([&] {
    require(regime == WWDTN_LOW || regime == WWDTN_HIGH, "unknown regime");
    out_ref(out) = fit_asymptotic_exponent(params_of(params), regime == WWDTN_LOW ? Regime::low : Regime::high);
  });
}

wwdtn_status wwdtn_solve_extension(const wwdtn_trace* u, const wwdtn_params* params, wwdtn_slab** out) {
  return guard([&] { out_ref(out) = new wwdtn_slab{solve_extension(deref(u, "trace").f, params_of(params))}; });
}

wwdtn_status wwdtn_apply_La_flux(const wwdtn_trace* u, const wwdtn_params* params, wwdtn_trace** out) {
  return guard([&] { out_ref(out) = new wwdtn_trace{apply_La_flux(deref(u, "trace").f, params_of(params))}; });
}

wwdtn_status wwdtn_apply_La_spectral(const wwdtn_trace* u, const wwdtn_params* params, wwdtn_trace** out) {
  return guard([&] { out_ref(out) = new wwdtn_trace{apply_La_spectral(deref(u, "trace").f, params_of(params))}; });
}

wwdtn_status wwdtn_extension_residual(const wwdtn_slab* v, const wwdtn_params* params, double* out) {
  return guard([&] { out_ref(out) = extension_residual(deref(v, "slab").f, params_of(params)); });
}

wwdtn_status wwdtn_trace_inner(const wwdtn_trace* u, const wwdtn_trace* w, double* out) {
  return guard([&] {
    const auto& a = deref(u, "trace").f;
    const auto& b = deref(w, "trace").f;
    require(a.size() == b.size(), "trace sizes differ");
    out_ref(out) = inner(a, b);
  });
}

wwdtn_status wwdtn_potential_double_well(wwdtn_potential** out) {
  return guard([&] { out_ref(out) = new wwdtn_potential{Potential::double_well()}; });
}

wwdtn_status wwdtn_potential_custom(wwdtn_scalar_fn F, wwdtn_scalar_fn f, wwdtn_scalar_fn df, void* user,
                                    const double* minimizers, size_t count, wwdtn_potential** out) {
  return guard([&] {
    require(F && f, "potential callbacks F and f are required");
    require(minimizers && count > 0, "at least one minimizer is required");
    Potential::Fn dfn;
    if (df) dfn = [df, user](double t) { return df(t, user); };
    auto p = Potential::custom([F, user](double t) { return F(t, user); }, [f, user](double t) { return f(t, user); },
                               std::move(dfn), std::vector<double>(minimizers, minimizers + count));
    out_ref(out) = new wwdtn_potential{std::move(p)};
  });
}

void wwdtn_potential_destroy(wwdtn_potential* pot) { delete pot; }

static wwdtn_energy energy_of(const EnergyBreakdown& e) {
  return {e.radius, e.dirichlet, e.horizontal_dirichlet, e.potential, e.total};
}

wwdtn_status wwdtn_energy_localized(const wwdtn_slab* v, double radius, const wwdtn_potential* pot,
                                    const wwdtn_params* params, wwdtn_energy* out) {
  return guard([&] {
    out_ref(out) = energy_of(energy_localized(deref(v, "slab").f, radius, deref(pot, "potential").p, params_of(params)));
  });
}

wwdtn_status wwdtn_energy_box(const wwdtn_slab* v, const wwdtn_potential* pot, const wwdtn_params* params, wwdtn_energy* out) {
  return guard([&] { out_ref(out) = energy_of(energy_box(deref(v, "slab").f, deref(pot, "potential").p, params_of(params))); });
}

wwdtn_status wwdtn_energy_localized_gradient(const wwdtn_slab* v, double radius, const wwdtn_potential* pot,
                                             const wwdtn_params* params, wwdtn_slab** out) {
  return guard([&] {
    out_ref(out) = new wwdtn_slab{energy_localized_gradient(deref(v, "slab").f, radius, deref(pot, "potential").p, params_of(params))};
  });
}

wwdtn_status wwdtn_trace_energy(const wwdtn_trace* u, const wwdtn_potential* pot, const wwdtn_params* params, double* out) {
  return guard([&] { out_ref(out) = trace_energy(deref(u, "trace").f, deref(pot, "potential").p, params_of(params)); });
}

wwdtn_status wwdtn_euler_lagrange_residual(const wwdtn_trace* u, const wwdtn_potential* pot, const wwdtn_params* params,
                                           wwdtn_trace** out) {
  return guard([&] {
    out_ref(out) = new wwdtn_trace{euler_lagrange_residual(deref(u, "trace").f, deref(pot, "potential").p, params_of(params))};
  });
}

wwdtn_status wwdtn_lateral_band(const wwdtn_grid* grid, int width, uint8_t* out, size_t capacity) {
  return guard([&] {
    const auto mask = lateral_band(*deref(grid, "grid").g, width);
    require(out != nullptr, "null output buffer");
    if (capacity < mask.size()) throw BufferTooSmall{"mask buffer too small"};
    std::memcpy(out, mask.data(), mask.size());
  });
}

void wwdtn_minimize_defaults(wwdtn_minimize_options* out) {
  if (!out) return;
  const MinimizeOptions d;
  *out = {d.tol, d.max_iter, d.lo, d.hi, d.odd_symmetry ? 1 : 0, d.shift};
}

wwdtn_status wwdtn_minimize_energy(const wwdtn_trace* boundary, const uint8_t* pinned, size_t pinned_count,
                                   const wwdtn_potential* pot, const wwdtn_params* params,
                                   const wwdtn_minimize_options* options, wwdtn_minimize_result* out) {
  return guard([&] {
    const auto& b = deref(boundary, "boundary").f;
    auto& o = out_ref(out);
    MinimizeOptions opt;
    if (options) opt = {options->tol, options->max_iter, options->lo, options->hi, options->odd_symmetry != 0, options->shift};
    const auto fp = params_of(params);
    const auto& p = deref(pot, "potential").p;
    auto r = minimize_energy(b, mask_of(pinned, pinned_count, b.grid()), p, fp, opt);
    const double energy = trace_energy(r.trace, p, fp);
    o = {new wwdtn_trace{std::move(r.trace)}, new wwdtn_slab{std::move(r.state)}, r.iterations, r.residual, energy};
  });
}

wwdtn_status wwdtn_compute_layer(const wwdtn_params* params, const wwdtn_grid* grid, double tol, int band,
                                 wwdtn_layer_result* out) {
  return guard([&] {
    auto& o = out_ref(out);
    auto r = compute_layer(params_of(params), *deref(grid, "grid").g, tol, band);
    o = {new wwdtn_trace{std::move(r.trace)}, new wwdtn_slab{std::move(r.state)}, r.iterations, r.el_residual, r.odd_defect, r.band};
  });
}

wwdtn_status wwdtn_second_variation_min_eig(const wwdtn_slab* v, const uint8_t* pinned, size_t pinned_count,
                                            const wwdtn_potential* pot, const wwdtn_params* params, double tol, int max_iter,
                                            uint64_t seed, double* out) {
  return guard([&] {
    const auto& f = deref(v, "slab").f;
    out_ref(out) = second_variation_min_eig(f, mask_of(pinned, pinned_count, f.grid()), deref(pot, "potential").p,
                                            params_of(params), EigenOptions{tol, max_iter, seed});
  });
}

wwdtn_status wwdtn_energy_scaling_sweep(const wwdtn_slab* v, const double* radii, size_t count, const wwdtn_potential* pot,
                                        const wwdtn_params* params, double fit_min_radius, wwdtn_energy* rows, double* slope,
                                        double* horizontal_slope) {
  return guard([&] {
    require(radii && count > 0, "radii are required");
    std::optional<double> fit;
    if (!std::isnan(fit_min_radius)) fit = fit_min_radius;
    const auto r = energy_scaling_sweep(deref(v, "slab").f, {radii, count}, deref(pot, "potential").p, params_of(params), fit);
    if (rows)
      for (std::size_t k = 0; k < r.rows.size(); ++k) rows[k] = energy_of(r.rows[k]);
    if (slope) *slope = r.slope;
    if (horizontal_slope) *horizontal_slope = r.horizontal_slope;
  });
}

wwdtn_status wwdtn_tilted_profile(const wwdtn_trace* profile, const wwdtn_grid* grid, const double omega[2], wwdtn_trace** out) {
  return guard([&] {
    require(omega != nullptr, "null direction");
    out_ref(out) = new wwdtn_trace{tilted_profile(deref(profile, "profile").f, deref(grid, "grid").g, {omega[0], omega[1]})};
  });
}

static wwdtn_monotonicity mono_of(Monotonicity m) {
  switch (m) {
    case Monotonicity::increasing: return WWDTN_INCREASING;
    case Monotonicity::constant: return WWDTN_CONSTANT;
    case Monotonicity::non_monotone: break;
  }
  return WWDTN_NON_MONOTONE;
}

wwdtn_status wwdtn_monotonicity_check(const double* profile, size_t count, wwdtn_monotonicity* out) {
  return guard([&] {
    require(profile != nullptr, "null profile");
    out_ref(out) = mono_of(monotonicity_check({profile, count}));
  });
}

const char* wwdtn_monotonicity_name(wwdtn_monotonicity m) {
  switch (m) {
    case WWDTN_INCREASING: return to_string(Monotonicity::increasing);
    case WWDTN_CONSTANT: return to_string(Monotonicity::constant);
    case WWDTN_NON_MONOTONE: return to_string(Monotonicity::non_monotone);
  }
  return "unknown";
}

wwdtn_status wwdtn_fit_direction(const wwdtn_trace* u, double omega[2]) {
  return guard([&] {
    require(omega != nullptr, "null output pointer");
    const auto w = fit_direction(deref(u, "trace").f);
    omega[0] = w[0];
    omega[1] = w[1];
  });
}

wwdtn_status wwdtn_one_d_residual(const wwdtn_trace* u, const double omega[2], double* out) {
  return guard([&] {
    require(omega != nullptr, "null direction");
    out_ref(out) = one_d_residual(deref(u, "trace").f, {omega[0], omega[1]});
  });
}

wwdtn_status wwdtn_one_d_profile(const wwdtn_trace* u, const double omega[2], double* t, double* value, size_t capacity,
                                 size_t* count) {
  return guard([&] {
    require(omega != nullptr, "null direction");
    const auto p = one_d_profile(deref(u, "trace").f, {omega[0], omega[1]});
    out_ref(count) = p.t.size();
    if (!t && !value && capacity == 0) return;
    copy_out(p.t, t, capacity);
    copy_out(p.value, value, capacity);
  });
}

wwdtn_status wwdtn_symmetry_report_of(const wwdtn_trace* u, wwdtn_symmetry_report* out) {
  return guard([&] {
    const auto r = symmetry_report(deref(u, "trace").f);
    out_ref(out) = {{r.omega[0], r.omega[1]}, r.residual, mono_of(r.monotone)};
  });
}

size_t wwdtn_flow_example_count(void) { return example_flow_names().size(); }

const char* wwdtn_flow_example_name(size_t index) {
  static const std::vector<std::string> names = example_flow_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

wwdtn_status wwdtn_flow_example(const char* name, int dim, wwdtn_flow** out) {
  return guard([&] {
    require(name != nullptr, "null flow name");
    out_ref(out) = new wwdtn_flow{example_flow(name, dim)};
  });
}

wwdtn_status wwdtn_flow_custom(int dim, wwdtn_flow_scalar rho, wwdtn_flow_vector v, void* user, double h, wwdtn_flow** out) {
  return guard([&] {
    require(rho && v, "density and velocity callbacks are required");
    FlowSample f;
    f.dim = dim;
    f.h = h;
    f.rho = [rho, user, dim](std::span<const double> X, double t) { return rho(X.data(), dim, t, user); };
    f.v = [v, user, dim](std::span<const double> X, double t, std::span<double> o) { v(X.data(), dim, t, o.data(), user); };
    validate(f);
    out_ref(out) = new wwdtn_flow{std::move(f)};
  });
}

void wwdtn_flow_destroy(wwdtn_flow* flow) { delete flow; }
int wwdtn_flow_dim(const wwdtn_flow* flow) { return flow ? flow->f.dim : 0; }

wwdtn_status wwdtn_continuity_residual(const wwdtn_flow* flow, const double* points, size_t count, double t, double* out) {
  return guard([&] {
    const auto& f = deref(flow, "flow").f;
    out_ref(out) = continuity_residual(f, points_of(points, count, f.dim), t);
  });
}

wwdtn_status wwdtn_incompressibility_residual(const wwdtn_flow* flow, const double* points, size_t count, double t,
                                              double* out) {
  return guard([&] {
    const auto& f = deref(flow, "flow").f;
    out_ref(out) = incompressibility_residual(f, points_of(points, count, f.dim), t);
  });
}

wwdtn_status wwdtn_divergence_free_check(const wwdtn_flow* flow, const double* points, size_t count, double t, double* out) {
  return guard([&] {
    const auto& f = deref(flow, "flow").f;
    out_ref(out) = divergence_free_check(f, points_of(points, count, f.dim), t);
  });
}

wwdtn_status wwdtn_bottom_flux_residual(const wwdtn_flow* flow, wwdtn_bottom_fn b, void* user, const double* xs, size_t count,
                                        double t, double* out) {
  return guard([&] {
    const auto& f = deref(flow, "flow").f;
    require(b != nullptr, "null bottom callback");
    require(f.dim >= 2, "bottom flux needs dim >= 2");
    const int m = f.dim - 1;
    const BottomProfile bp = [b, user, m](std::span<const double> x, double tt) { return b(x.data(), m, tt, user); };
    out_ref(out) = bottom_flux_residual(f, bp, points_of(xs, count, m), t);
  });
}

wwdtn_status wwdtn_potential_from_field(wwdtn_static_field v, void* user, const double* X, int dim, int nodes, double* out) {
  return guard([&] {
    require(X != nullptr && dim >= 1, "invalid point");
    out_ref(out) = potential_from_field(static_field(v, user, dim), {X, static_cast<std::size_t>(dim)}, nodes);
  });
}

wwdtn_status wwdtn_potential_gradient(wwdtn_static_field v, void* user, const double* X, int dim, int nodes, double* out) {
  return guard([&] {
    require(X != nullptr && dim >= 1 && out != nullptr, "invalid point or output");
    const auto g = potential_gradient(static_field(v, user, dim), {X, static_cast<std::size_t>(dim)}, nodes);
    std::copy(g.begin(), g.end(), out);
  });
}

wwdtn_status wwdtn_triangle_circulation(wwdtn_static_field v, void* user, const double* X, int dim, int j, double delta,
                                        int nodes, double* out) {
  return guard([&] {
    require(X != nullptr && dim >= 1, "invalid point");
    out_ref(out) = triangle_circulation(static_field(v, user, dim), {X, static_cast<std::size_t>(dim)}, j, delta, nodes);
  });
}

int wwdtn_acceptance_count(void) { return kCriterionCount; }

wwdtn_status wwdtn_acceptance_run(int id, wwdtn_criterion* out) {
  return guard([&] {
    auto& o = out_ref(out);
    const auto r = run_criterion(id);
    o.id = r.id;
    o.passed = r.passed ? 1 : 0;
    o.seconds = r.seconds;
    o.budget = r.budget;
    copy_string(r.name, o.name, sizeof o.name);
    copy_string(r.detail, o.detail, sizeof o.detail);
  });
}

}  // extern "C"
