/*
 * C API for the Lieb-Thirring constants laboratory.
 *
 * Conventions:
 *   - every function returns lt_status; results go through out-pointers
 *   - a non-LT_OK status leaves outputs untouched; lt_last_error() returns a
 *     thread-local message describing the most recent failure
 *   - objects returned through lt_*_create/parse calls are owned by the
 *     caller and released with the matching lt_*_free
 *   - strings returned through char** are released with lt_string_free
 */
#ifndef LT_LT_H
#define LT_LT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lt_status {
    LT_OK = 0,
    LT_ERR_DOMAIN = 1,   /* input outside the documented domain */
    LT_ERR_SOLVER = 2,   /* iteration failed to converge / bracket */
    LT_ERR_ACCURACY = 3, /* finished but missed its accuracy contract */
    LT_ERR_IO = 4,       /* file or parse problem */
    LT_ERR_INVALID = 5   /* null pointer, bad handle, size mismatch */
} lt_status;

const char* lt_version(void);
const char* lt_last_error(void);
void lt_string_free(char* s);

/* ---- constant metadata ------------------------------------------------ */

typedef enum lt_const_kind {
    LT_KIND_CLASSICAL = 0,
    LT_KIND_ONE_PARTICLE = 1,
    LT_KIND_IMPROVED_BOUND = 2,
    LT_KIND_CONJECTURED = 3,
    LT_KIND_LITERATURE = 4
} lt_const_kind;

typedef enum lt_bound_dir {
    LT_DIR_EXACT = 0,
    LT_DIR_UPPER = 1,
    LT_DIR_LOWER = 2
} lt_bound_dir;

/* ---- closed-form constants and dualities ------------------------------ */

lt_status lt_gamma_fn(double x, double* out);
lt_status lt_unit_ball_volume(int dim, double* out);
lt_status lt_sphere_area(int dim, double* out); /* |S^{dim-1}| */

lt_status lt_admissible(double gamma, int dim, int* out);
lt_status lt_classical_L(double gamma, int dim, double* out);
lt_status lt_classical_K(int dim, double* out);
lt_status lt_duality_K_from_L(double L, int dim, double* out);
lt_status lt_duality_L_from_K(double K, int dim, double* out);
lt_status lt_keller_duality(double p, int dim, double k1, double* out);
lt_status lt_one_particle_L_1d(double gamma, double* out);
lt_status lt_aizenman_lieb_constant(double gamma, double sigma, double* out);

/* literature bounds table; rows indexed 0..size-1 */
typedef struct lt_const_table lt_const_table;
lt_status lt_best_known_bounds(double gamma, int dim, lt_const_table** out);
int lt_const_table_size(const lt_const_table* t);
lt_status lt_const_table_get(const lt_const_table* t, int i, double* value, int* kind,
                             int* direction, const char** provenance);
void lt_const_table_free(lt_const_table* t);

/* believed-optimal constant; *has_value = 0 when no definite conjecture */
lt_status lt_conjectured_bound(double gamma, int dim, int* has_value, double* value, int* kind,
                               char** provenance);

/* ---- ground state ------------------------------------------------------ */

typedef struct lt_profile lt_profile;
lt_status lt_shoot_ground_state(int dim, double p, lt_profile** out);
lt_status lt_profile_q0(const lt_profile* pr, double* out);
lt_status lt_profile_mass(const lt_profile* pr, double* out);
lt_status lt_profile_kinetic(const lt_profile* pr, double* out);
lt_status lt_profile_norm2p(const lt_profile* pr, double* out);
lt_status lt_profile_pohozaev(const lt_profile* pr, double* res1, double* res2);
int lt_profile_size(const lt_profile* pr);
lt_status lt_profile_point(const lt_profile* pr, int i, double* r, double* q);
lt_status lt_profile_write_csv(const lt_profile* pr, const char* path);
void lt_profile_free(lt_profile* pr);

lt_status lt_one_particle_L(double gamma, int dim, double* out);
lt_status lt_one_particle_K(double p, int dim, double* out);
lt_status lt_gamma_crossing(int dim, double* out);

/* ---- variational kinetic bound ------------------------------------------ */

typedef struct lt_trial lt_trial;
lt_status lt_trial_paper(lt_trial** out);
lt_status lt_trial_family(double a, double b, double u, double v, lt_trial** out);
lt_status lt_trial_to_json(const lt_trial* t, char** json);
lt_status lt_trial_from_json(const char* json, lt_trial** out);
lt_status lt_trial_params(const lt_trial* t, double params[4]);
void lt_trial_free(lt_trial* t);

lt_status lt_convolve_g(const lt_trial* t, double s, double* out);
lt_status lt_rumin_functional(const lt_trial* t, int dim, double* value, double* err_estimate);

typedef struct lt_rumin_result {
    double i_value;
    double k_tilde;
    double excess_K;      /* k_tilde / K^cl_d */
    double excess_L_dual; /* implied L-side factor */
} lt_rumin_result;
lt_status lt_k_tilde(int dim, double i_d, lt_rumin_result* out);

/* d-dimensional bound from the 1D functional value; factor = bound / L^cl_{1,d} */
lt_status lt_lifting_chain(int dim, double i_1, double* bound, double* factor);

lt_status lt_optimize_trial(const lt_trial* seed, int dim, int budget, unsigned int rng_seed,
                            lt_trial** best, double* best_value);
lt_status lt_semiclassical_trial_bound(double ramp, double mu_l2, int dim, double* out);

/* ---- potentials and spectra ---------------------------------------------- */

typedef struct lt_potential lt_potential;
lt_status lt_potential_parse(const char* text, lt_potential** out);
lt_status lt_potential_eval(const lt_potential* V, double x, double* out);
int lt_potential_dim(const lt_potential* V);
lt_status lt_potential_text(const lt_potential* V, char** out);
lt_status lt_potential_norm(const lt_potential* V, double exponent, double* out);
void lt_potential_free(lt_potential* V);

typedef struct lt_grid_options {
    double half_width; /* 0 = automatic */
    double step;       /* 0 = automatic */
    int ell_max;
    int richardson;
    double hbar2;
    double coupling;
} lt_grid_options;
void lt_grid_options_default(lt_grid_options* opt);

typedef struct lt_spectrum lt_spectrum;
lt_status lt_spectrum_compute(const lt_potential* V, const lt_grid_options* opt /* nullable */,
                              lt_spectrum** out);
int lt_spectrum_size(const lt_spectrum* S);
lt_status lt_spectrum_eigenvalue(const lt_spectrum* S, int i, double* e, double* multiplicity);
lt_status lt_spectrum_count_below(const lt_spectrum* S, double threshold, double* count);
lt_status lt_spectrum_riesz_mean(const lt_spectrum* S, double gamma, double* out);
lt_status lt_spectrum_truncated(const lt_spectrum* S, int* out);
lt_status lt_spectrum_write_csv(const lt_spectrum* S, const char* path);
void lt_spectrum_free(lt_spectrum* S);

/* ratio table as a JSON document (rows with gamma, riesz, vnorm, ratio,
 * bounds and pass flags) */
lt_status lt_ratio_report_json(const lt_potential* V, const double* gammas, int n,
                               const lt_grid_options* opt /* nullable */, double slack,
                               char** json);

lt_status lt_weyl_table(const lt_potential* V, double gamma, const double* alphas, int n,
                        const lt_grid_options* opt /* nullable */, double* ratios);

/* closed-form oscillator scan; flags[i] = 1 when values[i] > values[i-1] */
lt_status lt_monotonicity_scan(int dim, double gamma, const double* hbars, int n, double* values,
                               int* flags, int* n_increases);
lt_status lt_monotonicity_weyl_limit(int dim, double gamma, double* out);

typedef struct lt_reverse_bound {
    double lhs;
    double rhs;
    double slack;
    int pass;
} lt_reverse_bound;
lt_status lt_reverse_bound_check(const lt_potential* V, const lt_grid_options* opt /* nullable */,
                                 lt_reverse_bound* out);

typedef struct lt_two_bump_row {
    double separation;
    double e1, e2;
    double ratio;
    double overlap_a;
    double predicted;
    int in_regime;
} lt_two_bump_row;
typedef struct lt_two_bump_meta {
    double gamma, p, soliton_mass, l_one;
} lt_two_bump_meta;
lt_status lt_two_bump(double gamma, const double* separations, int n, lt_two_bump_row* rows,
                      lt_two_bump_meta* meta);

/* us: nfun concatenated grid functions of length n each */
typedef struct lt_slater_check {
    double kinetic_det;
    double kinetic_sum;
    double rho_max_err;
    int pass;
} lt_slater_check;
lt_status lt_slater_identity_check(const double* us, int nfun, int n, double h,
                                   lt_slater_check* out);

/* ---- sphere counts -------------------------------------------------------- */

/* exact integers returned as decimal strings */
lt_status lt_sphere_multiplicity(int dim, long ell, char** decimal);
lt_status lt_sphere_count_leq(int dim, long L, char** decimal);
lt_status lt_count_constant_potential(int dim, double W, char** decimal);
lt_status lt_a_value(int dim, long L, double* out);
lt_status lt_ggm_constant(int dim, double* value, double* sup_a, long* argmax_L);
lt_status lt_ggm_potential(int dim, long L, lt_potential** out);
lt_status lt_ggm_potential_integral(int dim, long L, double* out);

/* ---- stability of matter ---------------------------------------------------- */

lt_status lt_k3_best(double* out);
lt_status lt_k3_conjectured(double* out);
lt_status lt_stability_bound(int n_electrons, int n_nuclei, double max_charge, double k3,
                             double* out);
lt_status lt_baxter_integral(double* out);

typedef struct lt_proof_chain {
    double t_star, t_grid;
    double mu_star, mu_grid;
    double value_kn, value_kn_grid;
    double value_final;
    double am_gm_lhs, am_gm_rhs;
} lt_proof_chain;
lt_status lt_proof_chain_optimizers(double t_range, double mu_range, double z, int n_nuclei,
                                    int n_electrons, double k3, lt_proof_chain* out);

/* ---- verification ------------------------------------------------------------ */

/* full acceptance catalog as a JSON document; *n_failures counts failing rows */
lt_status lt_verify_json(int quick, char** json, int* n_failures);

#ifdef __cplusplus
}
#endif

#endif /* LT_LT_H */
