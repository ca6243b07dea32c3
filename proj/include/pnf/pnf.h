/* pnf: differential-algebra and numerical toolkit for pseudo-null curve
 * flows. Exact symbolic engine for the Burgers/heat hierarchies of the
 * pseudo-torsion and pseudo-curvature, plus floating-point solvers for
 * the filament flow, curve reconstruction and the Hopf-Cole
 * correspondence.
 *
 * All handles are opaque; every fallible call returns a pnf_status and
 * leaves a thread-local message retrievable via pnf_last_error().
 * Strings returned through char** out-parameters are heap-allocated and
 * must be released with pnf_string_free().
 */
#ifndef PNF_H
#define PNF_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pnf_status {
  PNF_OK = 0,
  PNF_ERROR_PARSE = 1,
  PNF_ERROR_GENERATOR_MISMATCH = 2,
  PNF_ERROR_NOT_TOTAL_DERIVATIVE = 3,
  PNF_ERROR_INVALID_FIELD = 4,
  PNF_ERROR_INVALID_ARGUMENT = 5,
  PNF_ERROR_STABILITY = 6,
  PNF_ERROR_GRID_MISMATCH = 7,
  PNF_ERROR_NON_POSITIVE_SAMPLE = 8,
  PNF_ERROR_STEP_MISMATCH = 9,
  PNF_ERROR_INVALID_INITIAL_FRAME = 10,
  PNF_ERROR_OVERFLOW = 11,
  PNF_ERROR_INTERNAL = 12
} pnf_status;

typedef enum pnf_generator {
  PNF_GENERATOR_AUTO = -1,
  PNF_GENERATOR_TAU = 0,
  PNF_GENERATOR_KAPPA = 1
} pnf_generator;

/* Differential polynomial over one generator. */
typedef struct pnf_poly pnf_poly;
/* Vector field along a pseudo-null curve in the Frenet frame (f, g, h). */
typedef struct pnf_field pnf_field;
/* Vector field in the parallel frame (f, g, h over the KAPPA ring). */
typedef struct pnf_pfield pnf_pfield;

const char* pnf_version(void);
const char* pnf_status_name(pnf_status status);
/* Message from the most recent failing call on this thread. */
const char* pnf_last_error(void);
void pnf_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Differential polynomials                                            */

pnf_status pnf_poly_parse(const char* text, pnf_generator gen, pnf_poly** out);
pnf_status pnf_poly_format(const pnf_poly* p, char** out);
pnf_status pnf_poly_clone(const pnf_poly* p, pnf_poly** out);
void pnf_poly_free(pnf_poly* p);

pnf_generator pnf_poly_generator(const pnf_poly* p);
int pnf_poly_is_zero(const pnf_poly* p);
int pnf_poly_equal(const pnf_poly* a, const pnf_poly* b);

pnf_status pnf_poly_add(const pnf_poly* a, const pnf_poly* b, pnf_poly** out);
pnf_status pnf_poly_sub(const pnf_poly* a, const pnf_poly* b, pnf_poly** out);
pnf_status pnf_poly_mul(const pnf_poly* a, const pnf_poly* b, pnf_poly** out);
pnf_status pnf_poly_neg(const pnf_poly* a, pnf_poly** out);

pnf_status pnf_poly_total_derivative(const pnf_poly* p, pnf_poly** out);
pnf_status pnf_poly_evolution_derivation(const pnf_poly* a, const pnf_poly* p,
                                         pnf_poly** out);
pnf_status pnf_poly_frechet(const pnf_poly* a, const pnf_poly* b, pnf_poly** out);
pnf_status pnf_poly_commutator(const pnf_poly* a, const pnf_poly* b,
                               pnf_poly** out);
pnf_status pnf_poly_variational_derivative(const pnf_poly* p, pnf_poly** out);
/* Antiderivative normalized to zero constant term; fails with
 * PNF_ERROR_NOT_TOTAL_DERIVATIVE when p is not in Im(D). */
pnf_status pnf_poly_antiderivative(const pnf_poly* p, pnf_poly** out);
pnf_status pnf_poly_substitute_g(const pnf_poly* p, long long num,
                                 long long den, pnf_poly** out);
/* Evaluate at a numeric jet (jets[m] = value of the m-th derivative). */
pnf_status pnf_poly_eval(const pnf_poly* p, const double* jets, size_t njets,
                         double g, double* out);

/* ------------------------------------------------------------------ */
/* Frenet-frame fields and variation calculus                          */

/* Components are copied; the caller keeps ownership of the inputs. */
pnf_status pnf_field_new(const pnf_poly* f, const pnf_poly* g, const pnf_poly* h,
                         pnf_field** out);
/* Parse "f;g;h" where each part is a TAU expression (empty means 0). */
pnf_status pnf_field_parse(const char* triple, pnf_field** out);
pnf_status pnf_field_component(const pnf_field* v, int index, pnf_poly** out);
void pnf_field_free(pnf_field* v);
int pnf_field_is_evolution(const pnf_field* v);

/* rho, phi, psi, alpha of the first variation. */
pnf_status pnf_field_variation(const pnf_field* v, pnf_poly** rho,
                               pnf_poly** phi, pnf_poly** psi, pnf_poly** alpha);
pnf_status pnf_field_tangency(const pnf_field* v, int* pseudo_null_ok,
                              int* arclength_ok);
pnf_status pnf_field_torsion_variation(const pnf_field* v, pnf_poly** out);
/* Matrix of D_V on (T, N, B), row-major, 9 entries. */
pnf_status pnf_field_frame_derivation(const pnf_field* v, pnf_poly* out[9]);
pnf_status pnf_field_derive(const pnf_field* v, const pnf_field* u,
                            pnf_field** out);
pnf_status pnf_field_lie_bracket(const pnf_field* a, const pnf_field* b,
                                 pnf_field** out);
/* Residual of the ambient-curvature bracket identity; zero when the
 * identity holds. */
pnf_status pnf_field_curvature_identity(const pnf_field* v1, const pnf_field* v2,
                                        const pnf_field* u, pnf_field** out);

pnf_status pnf_pfield_new(const pnf_poly* f, const pnf_poly* g, const pnf_poly* h,
                          pnf_pfield** out);
void pnf_pfield_free(pnf_pfield* v);
/* Pseudo-curvature flow g'' + k' f + G g + d k with d = d_num/d_den. */
pnf_status pnf_pfield_curvature_variation(const pnf_pfield* v, long long d_num,
                                          long long d_den, pnf_poly** out);

/* ------------------------------------------------------------------ */
/* Hierarchy engine                                                    */

/* Apply the Burgers recursion operator tau_s D^{-1} + tau + D. */
pnf_status pnf_burgers_recursion(const pnf_poly* p, pnf_poly** out);
/* Torsion flow (R^2 + G)(g') for g with zero constant term. */
pnf_status pnf_eq37_flow(const pnf_poly* g, pnf_poly** out);
pnf_status pnf_is_symmetry(const pnf_poly* flow, const pnf_poly* candidate,
                           int* ok, pnf_poly** residual);

/* JSON array of {n, field, tau_flow, k_flow}; `levels` >= 1. */
pnf_status pnf_hierarchy_json(int levels, char** out);
pnf_status pnf_hierarchy_table(int levels, char** out);
/* Compare the generated hierarchy with the built-in transcription of
 * the published five levels; returns PNF_OK on an exact match and
 * writes a diagnostic otherwise. */
pnf_status pnf_hierarchy_check(char** diagnostics);

/* ------------------------------------------------------------------ */
/* Numerics. Frames are passed as 16 doubles: gamma, T, N, B, each     */
/* padded to four ambient components.                                  */

pnf_status pnf_default_frame(double g_curv, int* dim, double frame[16]);
pnf_status pnf_metric_signs(double g_curv, int* dim, double signs[4]);

pnf_status pnf_reconstruct_curve(const double* tau, size_t n, double s0,
                                 double ds, int periodic, double g_curv,
                                 const double* frame0 /* 16 doubles or NULL */,
                                 double h, double* out /* n*16 */);

/* Explicit solvers on periodic grids; `times` must be non-negative and
 * strictly increasing, `out` holds ntimes*n samples. */
pnf_status pnf_solve_burgers(const double* u0, size_t n, double s0, double ds,
                             double dt, const double* times, size_t ntimes,
                             double* out);
pnf_status pnf_solve_burgers_classic(const double* u0, size_t n, double x0,
                                     double dx, double dt, const double* times,
                                     size_t ntimes, double* out);
pnf_status pnf_solve_heat(const double* k0, size_t n, double s0, double ds,
                          double g_curv, double d, double dt,
                          const double* times, size_t ntimes, double* out);

pnf_status pnf_hopf_cole(const double* k, size_t n, double ds, int periodic,
                         double* tau_out);
pnf_status pnf_inverse_hopf_cole(const double* tau, size_t n, double ds,
                                 int periodic, double c, double* k_out);

/* Filament flow gamma_t = N: evolved torsion snapshots plus the
 * reconstructed curves (ntimes*n*16 doubles). */
pnf_status pnf_evolve_filament(const double* tau0, size_t n, double s0,
                               double ds, double g_curv, double dt,
                               const double* times, size_t ntimes,
                               double* tau_out, double* curves_out);

pnf_status pnf_cylinder_check(const double* curve /* n*16 */, const double* k,
                              size_t n, double g_curv,
                              double* parallelism_residual,
                              double* planarity_residual);
pnf_status pnf_parallel_frame_check(const double* curve, const double* k,
                                    size_t n, double ds, double g_curv,
                                    double* xi_residual, double* eta_residual);

/* Residual of the gauge-transformed Burgers equation for three
 * snapshots (t - dt, t, t + dt) of a solution of u_t = u_xx + u u_x. */
pnf_status pnf_burgers_gauge_check(const double* u_before, const double* u_mid,
                                   const double* u_after, size_t n, double x0,
                                   double dx, int periodic, double t_before,
                                   double t_after, double a, double b,
                                   double* max_residual);

/* ------------------------------------------------------------------ */
/* Verification driver                                                 */

#define PNF_VERIFY_SYMBOLIC 1u
#define PNF_VERIFY_NUMERIC 2u
#define PNF_VERIFY_ALL (PNF_VERIFY_SYMBOLIC | PNF_VERIFY_NUMERIC)
/* Negative-control fixture: flips a sign in the torsion-flow formula. */
#define PNF_VERIFY_INJECT_EQ21_SIGN_FLIP 4u

/* Runs the named check suites; writes a deterministic JSON report and
 * sets *all_passed. `format` selects "json" (default) or "table". */
pnf_status pnf_verify(unsigned flags, const char* format, char** report,
                      int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* PNF_H */
