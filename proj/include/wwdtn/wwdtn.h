#ifndef WWDTN_H
#define WWDTN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define WWDTN_API __declspec(dllexport)
#elif defined(__GNUC__)
#define WWDTN_API __attribute__((visibility("default")))
#else
#define WWDTN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every call returns a status; on failure a message is available from
   wwdtn_last_error() on the calling thread until its next failing call. */
typedef enum wwdtn_status {
  WWDTN_OK = 0,
  WWDTN_INVALID_ARGUMENT = 1,
  WWDTN_DEGENERATE_WEIGHT = 2,
  WWDTN_SINGULAR = 3,
  WWDTN_NOT_CONVERGED = 4,
  WWDTN_INFEASIBLE = 5,
  WWDTN_OVERFLOW = 6,
  WWDTN_NOT_MONOTONE = 7,
  WWDTN_BUFFER_TOO_SMALL = 8,
  WWDTN_INTERNAL = 9
} wwdtn_status;

WWDTN_API const char* wwdtn_last_error(void);
WWDTN_API const char* wwdtn_status_name(wwdtn_status status);
WWDTN_API const char* wwdtn_version(void);

/* ---- parameters and grids ---- */

typedef struct wwdtn_params {
  double a;
  double s;
} wwdtn_params;

WWDTN_API wwdtn_status wwdtn_params_from_a(double a, wwdtn_params* out);
WWDTN_API wwdtn_status wwdtn_params_from_s(double s, wwdtn_params* out);

typedef enum wwdtn_lateral { WWDTN_PERIODIC = 0, WWDTN_REFLECTING = 1 } wwdtn_lateral;

typedef struct wwdtn_grid_spec {
  int n;        /* 1 or 2 */
  double box;   /* side length */
  int nx;       /* nodes per horizontal axis */
  int my;       /* vertical nodes */
  double gamma; /* <= 0: default grading */
  wwdtn_lateral lateral;
} wwdtn_grid_spec;

typedef struct wwdtn_grid wwdtn_grid;
typedef struct wwdtn_trace wwdtn_trace;
typedef struct wwdtn_slab wwdtn_slab;
typedef struct wwdtn_potential wwdtn_potential;
typedef struct wwdtn_flow wwdtn_flow;

WWDTN_API wwdtn_status wwdtn_grid_create(const wwdtn_grid_spec* spec, const wwdtn_params* params, wwdtn_grid** out);
WWDTN_API void wwdtn_grid_destroy(wwdtn_grid* grid);
WWDTN_API size_t wwdtn_grid_trace_size(const wwdtn_grid* grid);
WWDTN_API size_t wwdtn_grid_slab_size(const wwdtn_grid* grid);
WWDTN_API wwdtn_status wwdtn_grid_spec_of(const wwdtn_grid* grid, wwdtn_grid_spec* out);
/* Horizontal position of flat trace index i (second entry 0 in 1D). */
WWDTN_API wwdtn_status wwdtn_grid_position(const wwdtn_grid* grid, size_t i, double out[2]);
WWDTN_API wwdtn_status wwdtn_grid_y_nodes(const wwdtn_grid* grid, double* out, size_t capacity);

/* ---- fields ---- */

WWDTN_API wwdtn_status wwdtn_trace_create(const wwdtn_grid* grid, const double* values, size_t count, wwdtn_trace** out);
WWDTN_API void wwdtn_trace_destroy(wwdtn_trace* trace);
WWDTN_API size_t wwdtn_trace_size(const wwdtn_trace* trace);
WWDTN_API wwdtn_status wwdtn_trace_values(const wwdtn_trace* trace, double* out, size_t capacity);

/* Slab values are level-major: index j * trace_size + i. */
WWDTN_API void wwdtn_slab_destroy(wwdtn_slab* slab);
WWDTN_API size_t wwdtn_slab_size(const wwdtn_slab* slab);
WWDTN_API wwdtn_status wwdtn_slab_values(const wwdtn_slab* slab, double* out, size_t capacity);
WWDTN_API wwdtn_status wwdtn_slab_trace(const wwdtn_slab* slab, wwdtn_trace** out);

/* ---- symbol ---- */

typedef enum wwdtn_regime { WWDTN_LOW = 0, WWDTN_HIGH = 1 } wwdtn_regime;

WWDTN_API wwdtn_status wwdtn_symbol_closed_form(double xi, const wwdtn_params* params, double* out);
WWDTN_API wwdtn_status wwdtn_symbol_half(double xi, double* out);
WWDTN_API wwdtn_status wwdtn_symbol_normalization(double s, double* out);
WWDTN_API wwdtn_status wwdtn_symbol_ode(double xi, const wwdtn_params* params, int my, double gamma, double* out);
WWDTN_API wwdtn_status wwdtn_symbol_ode_extrapolated(double xi, const wwdtn_params* params, int my, double* out);
WWDTN_API wwdtn_status wwdtn_symbol_exponent(const wwdtn_params* params, wwdtn_regime regime, double* out);

/* ---- extension ---- */

WWDTN_API wwdtn_status wwdtn_solve_extension(const wwdtn_trace* u, const wwdtn_params* params, wwdtn_slab** out);
WWDTN_API wwdtn_status wwdtn_apply_La_flux(const wwdtn_trace* u, const wwdtn_params* params, wwdtn_trace** out);
WWDTN_API wwdtn_status wwdtn_apply_La_spectral(const wwdtn_trace* u, const wwdtn_params* params, wwdtn_trace** out);
WWDTN_API wwdtn_status wwdtn_extension_residual(const wwdtn_slab* v, const wwdtn_params* params, double* out);
/* Discrete L2 inner product on the trace grid. */
WWDTN_API wwdtn_status wwdtn_trace_inner(const wwdtn_trace* u, const wwdtn_trace* w, double* out);

/* ---- potentials and energy ---- */

typedef double (*wwdtn_scalar_fn)(double t, void* user);

WWDTN_API wwdtn_status wwdtn_potential_double_well(wwdtn_potential** out);
/* df may be NULL (central differences). `user` must outlive the handle. */
WWDTN_API wwdtn_status wwdtn_potential_custom(wwdtn_scalar_fn F, wwdtn_scalar_fn f, wwdtn_scalar_fn df, void* user,
                                              const double* minimizers, size_t count, wwdtn_potential** out);
WWDTN_API void wwdtn_potential_destroy(wwdtn_potential* pot);

typedef struct wwdtn_energy {
  double radius;
  double dirichlet;
  double horizontal_dirichlet;
  double potential;
  double total;
} wwdtn_energy;

WWDTN_API wwdtn_status wwdtn_energy_localized(const wwdtn_slab* v, double radius, const wwdtn_potential* pot,
                                              const wwdtn_params* params, wwdtn_energy* out);
WWDTN_API wwdtn_status wwdtn_energy_box(const wwdtn_slab* v, const wwdtn_potential* pot, const wwdtn_params* params,
                                        wwdtn_energy* out);
WWDTN_API wwdtn_status wwdtn_energy_localized_gradient(const wwdtn_slab* v, double radius, const wwdtn_potential* pot,
                                                       const wwdtn_params* params, wwdtn_slab** out);
WWDTN_API wwdtn_status wwdtn_trace_energy(const wwdtn_trace* u, const wwdtn_potential* pot, const wwdtn_params* params,
                                          double* out);
WWDTN_API wwdtn_status wwdtn_euler_lagrange_residual(const wwdtn_trace* u, const wwdtn_potential* pot,
                                                     const wwdtn_params* params, wwdtn_trace** out);
/* Mask of length trace_size, 1 within `width` cells of the lateral boundary. */
WWDTN_API wwdtn_status wwdtn_lateral_band(const wwdtn_grid* grid, int width, uint8_t* out, size_t capacity);

typedef struct wwdtn_minimize_options {
  double tol;
  int max_iter;
  double lo;
  double hi;
  int odd_symmetry;
  double shift; /* <= 0: from the potential */
} wwdtn_minimize_options;

WWDTN_API void wwdtn_minimize_defaults(wwdtn_minimize_options* out);

typedef struct wwdtn_minimize_result {
  wwdtn_trace* trace; /* owned by the caller */
  wwdtn_slab* state;  /* owned by the caller */
  int iterations;
  double residual;
  double energy;
} wwdtn_minimize_result;

/* pinned: mask of length trace_size or NULL. options: NULL for defaults. */
WWDTN_API wwdtn_status wwdtn_minimize_energy(const wwdtn_trace* boundary, const uint8_t* pinned, size_t pinned_count,
                                             const wwdtn_potential* pot, const wwdtn_params* params,
                                             const wwdtn_minimize_options* options, wwdtn_minimize_result* out);

typedef struct wwdtn_layer_result {
  wwdtn_trace* trace; /* owned by the caller */
  wwdtn_slab* state;  /* owned by the caller */
  int iterations;
  double el_residual;
  double odd_defect;
  int band;
} wwdtn_layer_result;

WWDTN_API wwdtn_status wwdtn_compute_layer(const wwdtn_params* params, const wwdtn_grid* grid, double tol, int band,
                                           wwdtn_layer_result* out);

WWDTN_API wwdtn_status wwdtn_second_variation_min_eig(const wwdtn_slab* v, const uint8_t* pinned, size_t pinned_count,
                                                      const wwdtn_potential* pot, const wwdtn_params* params, double tol,
                                                      int max_iter, uint64_t seed, double* out);

/* rows must hold `count` entries; fit_min_radius NaN fits the upper half. */
WWDTN_API wwdtn_status wwdtn_energy_scaling_sweep(const wwdtn_slab* v, const double* radii, size_t count,
                                                  const wwdtn_potential* pot, const wwdtn_params* params,
                                                  double fit_min_radius, wwdtn_energy* rows, double* slope,
                                                  double* horizontal_slope);

WWDTN_API wwdtn_status wwdtn_tilted_profile(const wwdtn_trace* profile, const wwdtn_grid* grid, const double omega[2],
                                            wwdtn_trace** out);

/* ---- symmetry ---- */

typedef enum wwdtn_monotonicity { WWDTN_INCREASING = 0, WWDTN_CONSTANT = 1, WWDTN_NON_MONOTONE = 2 } wwdtn_monotonicity;

WWDTN_API wwdtn_status wwdtn_monotonicity_check(const double* profile, size_t count, wwdtn_monotonicity* out);
WWDTN_API const char* wwdtn_monotonicity_name(wwdtn_monotonicity m);
WWDTN_API wwdtn_status wwdtn_fit_direction(const wwdtn_trace* u, double omega[2]);
WWDTN_API wwdtn_status wwdtn_one_d_residual(const wwdtn_trace* u, const double omega[2], double* out);
/* *count receives the bin count; pass NULL buffers with capacity 0 to query it. */
WWDTN_API wwdtn_status wwdtn_one_d_profile(const wwdtn_trace* u, const double omega[2], double* t, double* value,
                                           size_t capacity, size_t* count);

typedef struct wwdtn_symmetry_report {
  double omega[2];
  double residual;
  wwdtn_monotonicity monotone;
} wwdtn_symmetry_report;

WWDTN_API wwdtn_status wwdtn_symmetry_report_of(const wwdtn_trace* u, wwdtn_symmetry_report* out);

/* ---- fluid ---- */

typedef double (*wwdtn_flow_scalar)(const double* X, int dim, double t, void* user);
typedef void (*wwdtn_flow_vector)(const double* X, int dim, double t, double* out, void* user);

WWDTN_API size_t wwdtn_flow_example_count(void);
WWDTN_API const char* wwdtn_flow_example_name(size_t index);
WWDTN_API wwdtn_status wwdtn_flow_example(const char* name, int dim, wwdtn_flow** out);
/* Derivatives are taken by central differences with step h. */
WWDTN_API wwdtn_status wwdtn_flow_custom(int dim, wwdtn_flow_scalar rho, wwdtn_flow_vector v, void* user, double h,
                                         wwdtn_flow** out);
WWDTN_API void wwdtn_flow_destroy(wwdtn_flow* flow);
WWDTN_API int wwdtn_flow_dim(const wwdtn_flow* flow);

/* points: `count` points of dimension dim, stored contiguously. */
WWDTN_API wwdtn_status wwdtn_continuity_residual(const wwdtn_flow* flow, const double* points, size_t count, double t,
                                                 double* out);
WWDTN_API wwdtn_status wwdtn_incompressibility_residual(const wwdtn_flow* flow, const double* points, size_t count,
                                                        double t, double* out);
WWDTN_API wwdtn_status wwdtn_divergence_free_check(const wwdtn_flow* flow, const double* points, size_t count, double t,
                                                   double* out);

/* Bottom y = b(x, t) with x in R^(dim - 1); abscissae stored contiguously. */
typedef double (*wwdtn_bottom_fn)(const double* x, int dim_minus_one, double t, void* user);
WWDTN_API wwdtn_status wwdtn_bottom_flux_residual(const wwdtn_flow* flow, wwdtn_bottom_fn b, void* user,
                                                  const double* xs, size_t count, double t, double* out);

typedef void (*wwdtn_static_field)(const double* X, int dim, double* out, void* user);

WWDTN_API wwdtn_status wwdtn_potential_from_field(wwdtn_static_field v, void* user, const double* X, int dim, int nodes,
                                                  double* out);
WWDTN_API wwdtn_status wwdtn_potential_gradient(wwdtn_static_field v, void* user, const double* X, int dim, int nodes,
                                                double* out);
WWDTN_API wwdtn_status wwdtn_triangle_circulation(wwdtn_static_field v, void* user, const double* X, int dim, int j,
                                                  double delta, int nodes, double* out);

/* ---- acceptance ---- */

typedef struct wwdtn_criterion {
  int id;
  int passed;
  double seconds;
  double budget;
  char name[96];
  char detail[1024];
} wwdtn_criterion;

WWDTN_API int wwdtn_acceptance_count(void);
WWDTN_API wwdtn_status wwdtn_acceptance_run(int id, wwdtn_criterion* out);

#ifdef __cplusplus
}
#endif

#endif
