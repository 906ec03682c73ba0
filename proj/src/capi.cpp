#include "lt/lt.h"

#include <cstring>
#include <fstream>
#include <string>

#include <json.hpp>

#include "constants.hpp"
#include "errors.hpp"
#include "ground_state.hpp"
#include "potentials.hpp"
#include "quadrature.hpp"
#include "rumin.hpp"
#include "special.hpp"
#include "spectral.hpp"
#include "sphere.hpp"
#include "stability.hpp"
#include "verify.hpp"

struct lt_profile {
    lt::RadialProfile p;
};
struct lt_trial {
    lt::TrialPair t;
};
struct lt_potential {
    lt::PotentialSpec v;
};
struct lt_spectrum {
    lt::SpectrumSummary s;
};
struct lt_const_table {
    std::vector<lt::ConstantValue> rows;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
lt_status guard(F&& body) {
    try {
        body();
        return LT_OK;
    } catch (const lt::domain_error& e) {
        g_last_error = e.what();
        return LT_ERR_DOMAIN;
    } catch (const lt::solver_error& e) {
        g_last_error = e.what();
        return LT_ERR_SOLVER;
    } catch (const lt::accuracy_error& e) {
        g_last_error = e.what();
        return LT_ERR_ACCURACY;
    } catch (const lt::io_error& e) {
        g_last_error = e.what();
        return LT_ERR_IO;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return LT_ERR_INVALID;
    }
}

lt_status invalid(const char* what) {
    g_last_error = what;
    return LT_ERR_INVALID;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int kind_code(lt::ConstKind k) { return (int)k; }

lt::GridOptions to_cpp(const lt_grid_options* opt) {
    lt::GridOptions g;
    if (opt) {
        g.half_width = opt->half_width;
        g.step = opt->step;
        g.ell_max = opt->ell_max;
        g.richardson = opt->richardson != 0;
        g.hbar2 = opt->hbar2;
        g.coupling = opt->coupling;
    }
    return g;
}

} // namespace

extern "C" {

const char* lt_version(void) { return "0.1.0"; }

const char* lt_last_error(void) { return g_last_error.c_str(); }

void lt_string_free(char* s) { delete[] s; }

/* ---- closed-form constants -------------------------------------------- */

lt_status lt_gamma_fn(double x, double* out) {
    if (!out) return invalid("lt_gamma_fn: null output");
    return guard([&] { *out = lt::gamma_fn(x); });
}

lt_status lt_unit_ball_volume(int dim, double* out) {
    if (!out) return invalid("lt_unit_ball_volume: null output");
    return guard([&] { *out = lt::unit_ball_volume(dim); });
}

lt_status lt_sphere_area(int dim, double* out) {
    if (!out) return invalid("lt_sphere_area: null output");
    return guard([&] { *out = lt::sphere_area(dim); });
}

lt_status lt_admissible(double gamma, int dim, int* out) {
    if (!out) return invalid("lt_admissible: null output");
    *out = lt::GammaDim::admissible(gamma, dim) ? 1 : 0;
    return LT_OK;
}

lt_status lt_classical_L(double gamma, int dim, double* out) {
    if (!out) return invalid("lt_classical_L: null output");
    return guard([&] { *out = lt::classical_L(lt::GammaDim(gamma, dim)).value(); });
}

lt_status lt_classical_K(int dim, double* out) {
    if (!out) return invalid("lt_classical_K: null output");
    return guard([&] { *out = lt::classical_K(dim).value(); });
}

lt_status lt_duality_K_from_L(double L, int dim, double* out) {
    if (!out) return invalid("lt_duality_K_from_L: null output");
    return guard([&] { *out = lt::duality_K_from_L(L, dim); });
}

lt_status lt_duality_L_from_K(double K, int dim, double* out) {
    if (!out) return invalid("lt_duality_L_from_K: null output");
    return guard([&] { *out = lt::duality_L_from_K(K, dim); });
}

lt_status lt_keller_duality(double p, int dim, double k1, double* out) {
    if (!out) return invalid("lt_keller_duality: null output");
    return guard([&] { *out = lt::keller_duality(p, dim, k1); });
}

lt_status lt_one_particle_L_1d(double gamma, double* out) {
    if (!out) return invalid("lt_one_particle_L_1d: null output");
    return guard([&] { *out = lt::one_particle_L_1d(gamma).value(); });
}

lt_status lt_aizenman_lieb_constant(double gamma, double sigma, double* out) {
    if (!out) return invalid("lt_aizenman_lieb_constant: null output");
    return guard([&] { *out = lt::aizenman_lieb_constant(gamma, sigma); });
}

lt_status lt_best_known_bounds(double gamma, int dim, lt_const_table** out) {
    if (!out) return invalid("lt_best_known_bounds: null output");
    return guard([&] {
        auto rows = lt::best_known_bounds(lt::GammaDim(gamma, dim));
        *out = new lt_const_table{std::move(rows)};
    });
}

int lt_const_table_size(const lt_const_table* t) { return t ? (int)t->rows.size() : 0; }

lt_status lt_const_table_get(const lt_const_table* t, int i, double* value, int* kind,
                             int* direction, const char** provenance) {
    if (!t || i < 0 || i >= (int)t->rows.size())
        return invalid("lt_const_table_get: bad index");
    const auto& c = t->rows[i];
    if (value) *value = c.value();
    if (kind) *kind = kind_code(c.kind());
    if (direction) *direction = (int)c.direction();
    if (provenance) *provenance = c.provenance().c_str();
    return LT_OK;
}

void lt_const_table_free(lt_const_table* t) { delete t; }

lt_status lt_conjectured_bound(double gamma, int dim, int* has_value, double* value, int* kind,
                               char** provenance) {
    if (!has_value) return invalid("lt_conjectured_bound: null output");
    return guard([&] {
        auto c = lt::conjectured_bound(lt::GammaDim(gamma, dim));
        *has_value = c.has_value() ? 1 : 0;
        if (c) {
            if (value) *value = c->value();
            if (kind) *kind = kind_code(c->kind());
            if (provenance) *provenance = dup_string(c->provenance());
        }
    });
}

/* ---- ground state -------------------------------------------------------- */

lt_status lt_shoot_ground_state(int dim, double p, lt_profile** out) {
    if (!out) return invalid("lt_shoot_ground_state: null output");
    return guard([&] { *out = new lt_profile{lt::shoot_ground_state(dim, p)}; });
}

lt_status lt_profile_q0(const lt_profile* pr, double* out) {
    if (!pr || !out) return invalid("lt_profile_q0: null argument");
    *out = pr->p.q0;
    return LT_OK;
}

lt_status lt_profile_mass(const lt_profile* pr, double* out) {
    if (!pr || !out) return invalid("lt_profile_mass: null argument");
    *out = pr->p.mass;
    return LT_OK;
}

lt_status lt_profile_kinetic(const lt_profile* pr, double* out) {
    if (!pr || !out) return invalid("lt_profile_kinetic: null argument");
    *out = pr->p.kinetic;
    return LT_OK;
}

lt_status lt_profile_norm2p(const lt_profile* pr, double* out) {
    if (!pr || !out) return invalid("lt_profile_norm2p: null argument");
    *out = pr->p.norm2p;
    return LT_OK;
}

lt_status lt_profile_pohozaev(const lt_profile* pr, double* res1, double* res2) {
    if (!pr) return invalid("lt_profile_pohozaev: null argument");
    if (res1) *res1 = pr->p.pohozaev1;
    if (res2) *res2 = pr->p.pohozaev2;
    return LT_OK;
}

int lt_profile_size(const lt_profile* pr) { return pr ? (int)pr->p.r.size() : 0; }

lt_status lt_profile_point(const lt_profile* pr, int i, double* r, double* q) {
    if (!pr || i < 0 || i >= (int)pr->p.r.size())
        return invalid("lt_profile_point: bad index");
    if (r) *r = pr->p.r[i];
    if (q) *q = pr->p.q[i];
    return LT_OK;
}

lt_status lt_profile_write_csv(const lt_profile* pr, const char* path) {
    if (!pr || !path) return invalid("lt_profile_write_csv: null argument");
    return guard([&] {
        std::ofstream os(path);
        if (!os)
            throw lt::io_error(std::string("cannot open '") + path + "'");
        pr->p.write_csv(os);
    });
}

void lt_profile_free(lt_profile* pr) { delete pr; }

lt_status lt_one_particle_L(double gamma, int dim, double* out) {
    if (!out) return invalid("lt_one_particle_L: null output");
    return guard([&] { *out = lt::one_particle_L(lt::GammaDim(gamma, dim)).value(); });
}

lt_status lt_one_particle_K(double p, int dim, double* out) {
    if (!out) return invalid("lt_one_particle_K: null output");
    return guard([&] { *out = lt::one_particle_K(p, dim).value(); });
}

lt_status lt_gamma_crossing(int dim, double* out) {
    if (!out) return invalid("lt_gamma_crossing: null output");
    return guard([&] { *out = lt::gamma_crossing(dim); });
}

/* ---- variational kinetic bound -------------------------------------------- */

lt_status lt_trial_paper(lt_trial** out) {
    if (!out) return invalid("lt_trial_paper: null output");
    return guard([&] { *out = new lt_trial{lt::paper_trial()}; });
}

lt_status lt_trial_family(double a, double b, double u, double v, lt_trial** out) {
    if (!out) return invalid("lt_trial_family: null output");
    return guard([&] { *out = new lt_trial{lt::family_trial(a, b, u, v)}; });
}

lt_status lt_trial_to_json(const lt_trial* t, char** json) {
    if (!t || !json) return invalid("lt_trial_to_json: null argument");
    return guard([&] { *json = dup_string(t->t.to_json()); });
}

lt_status lt_trial_from_json(const char* json, lt_trial** out) {
    if (!json || !out) return invalid("lt_trial_from_json: null argument");
    return guard([&] { *out = new lt_trial{lt::trial_from_json(json)}; });
}

lt_status lt_trial_params(const lt_trial* t, double params[4]) {
    if (!t || !params) return invalid("lt_trial_params: null argument");
    if (t->t.params.size() != 4)
        return invalid("lt_trial_params: not a parametric-family trial");
    for (int i = 0; i < 4; ++i)
        params[i] = t->t.params[i];
    return LT_OK;
}

void lt_trial_free(lt_trial* t) { delete t; }

lt_status lt_convolve_g(const lt_trial* t, double s, double* out) {
    if (!t || !out) return invalid("lt_convolve_g: null argument");
    return guard([&] { *out = lt::convolve_g(t->t, s); });
}

lt_status lt_rumin_functional(const lt_trial* t, int dim, double* value, double* err_estimate) {
    if (!t || !value) return invalid("lt_rumin_functional: null argument");
    return guard([&] {
        double err = 0.0;
        *value = lt::rumin_functional(t->t, dim, &err);
        if (err_estimate)
            *err_estimate = err;
    });
}

lt_status lt_k_tilde(int dim, double i_d, lt_rumin_result* out) {
    if (!out) return invalid("lt_k_tilde: null output");
    return guard([&] {
        lt::RuminResult r = lt::k_tilde(dim, i_d);
        out->i_value = r.i_value;
        out->k_tilde = r.k_tilde;
        out->excess_K = r.excess_K;
        out->excess_L_dual = r.excess_L_dual;
    });
}

lt_status lt_lifting_chain(int dim, double i_1, double* bound, double* factor) {
    if (!bound) return invalid("lt_lifting_chain: null output");
    return guard([&] {
        lt::ConstantValue c = lt::lifting_chain(dim, i_1);
        *bound = c.value();
        if (factor)
            *factor = c.value() / lt::classical_L(lt::GammaDim(1.0, dim)).value();
    });
}

lt_status lt_optimize_trial(const lt_trial* seed, int dim, int budget, unsigned int rng_seed,
                            lt_trial** best, double* best_value) {
    if (!seed || !best) return invalid("lt_optimize_trial: null argument");
    return guard([&] {
        double bv = 0.0;
        lt::TrialPair tp = lt::optimize_trial(seed->t, dim, budget, rng_seed, &bv);
        *best = new lt_trial{std::move(tp)};
        if (best_value)
            *best_value = bv;
    });
}

lt_status lt_semiclassical_trial_bound(double ramp, double mu_l2, int dim, double* out) {
    if (!out) return invalid("lt_semiclassical_trial_bound: null output");
    return guard([&] { *out = lt::semiclassical_trial_bound(ramp, mu_l2, dim); });
}

/* ---- potentials and spectra ------------------------------------------------ */

lt_status lt_potential_parse(const char* text, lt_potential** out) {
    if (!text || !out) return invalid("lt_potential_parse: null argument");
    return guard([&] { *out = new lt_potential{lt::PotentialSpec::parse(text)}; });
}

lt_status lt_potential_eval(const lt_potential* V, double x, double* out) {
    if (!V || !out) return invalid("lt_potential_eval: null argument");
    return guard([&] { *out = (V->v)(x); });
}

int lt_potential_dim(const lt_potential* V) { return V ? V->v.dim() : 0; }

lt_status lt_potential_text(const lt_potential* V, char** out) {
    if (!V || !out) return invalid("lt_potential_text: null argument");
    return guard([&] { *out = dup_string(V->v.text()); });
}

lt_status lt_potential_norm(const lt_potential* V, double exponent, double* out) {
    if (!V || !out) return invalid("lt_potential_norm: null argument");
    return guard([&] { *out = V->v.negative_part_norm(exponent); });
}

void lt_potential_free(lt_potential* V) { delete V; }

void lt_grid_options_default(lt_grid_options* opt) {
    if (!opt)
        return;
    opt->half_width = 0.0;
    opt->step = 0.0;
    opt->ell_max = 24;
    opt->richardson = 1;
    opt->hbar2 = 1.0;
    opt->coupling = 1.0;
}

lt_status lt_spectrum_compute(const lt_potential* V, const lt_grid_options* opt,
                              lt_spectrum** out) {
    if (!V || !out) return invalid("lt_spectrum_compute: null argument");
    return guard([&] { *out = new lt_spectrum{lt::compute_spectrum(V->v, to_cpp(opt))}; });
}

int lt_spectrum_size(const lt_spectrum* S) { return S ? (int)S->s.eigenvalues.size() : 0; }

lt_status lt_spectrum_eigenvalue(const lt_spectrum* S, int i, double* e, double* multiplicity) {
    if (!S || i < 0 || i >= (int)S->s.eigenvalues.size())
        return invalid("lt_spectrum_eigenvalue: bad index");
    if (e) *e = S->s.eigenvalues[i];
    if (multiplicity) *multiplicity = S->s.multiplicity[i];
    return LT_OK;
}

lt_status lt_spectrum_count_below(const lt_spectrum* S, double threshold, double* count) {
    if (!S || !count) return invalid("lt_spectrum_count_below: null argument");
    return guard([&] { *count = S->s.count_below(threshold); });
}

lt_status lt_spectrum_riesz_mean(const lt_spectrum* S, double gamma, double* out) {
    if (!S || !out) return invalid("lt_spectrum_riesz_mean: null argument");
    return guard([&] { *out = S->s.riesz_mean(gamma); });
}

lt_status lt_spectrum_truncated(const lt_spectrum* S, int* out) {
    if (!S || !out) return invalid("lt_spectrum_truncated: null argument");
    *out = S->s.truncated ? 1 : 0;
    return LT_OK;
}

lt_status lt_spectrum_write_csv(const lt_spectrum* S, const char* path) {
    if (!S || !path) return invalid("lt_spectrum_write_csv: null argument");
    return guard([&] {
        std::ofstream os(path);
        if (!os)
            throw lt::io_error(std::string("cannot open '") + path + "'");
        os << "index,eigenvalue,multiplicity\n";
        for (size_t i = 0; i < S->s.eigenvalues.size(); ++i)
            os << i << ',' << S->s.eigenvalues[i] << ',' << S->s.multiplicity[i] << '\n';
    });
}

void lt_spectrum_free(lt_spectrum* S) { delete S; }

lt_status lt_ratio_report_json(const lt_potential* V, const double* gammas, int n,
                               const lt_grid_options* opt, double slack, char** json) {
    if (!V || !gammas || n < 1 || !json)
        return invalid("lt_ratio_report_json: bad arguments");
    return guard([&] {
        std::vector<double> gs(gammas, gammas + n);
        auto rows = lt::lt_ratio_report(V->v, gs, to_cpp(opt), slack);
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json j;
            j["gamma"] = r.gamma;
            j["riesz_mean"] = r.riesz;
            j["potential_norm"] = r.vnorm;
            j["ratio"] = r.ratio;
            if (r.best_upper) {
                j["best_upper"] = *r.best_upper;
                j["pass_best"] = r.pass_best;
            }
            if (r.conjectured) {
                j["conjectured"] = *r.conjectured;
                j["conjectured_kind"] = r.conjectured_kind;
                j["pass_conjectured"] = r.pass_conjectured;
            }
            out.push_back(std::move(j));
        }
        *json = dup_string(out.dump());
    });
}

lt_status lt_weyl_table(const lt_potential* V, double gamma, const double* alphas, int n,
                        const lt_grid_options* opt, double* ratios) {
    if (!V || !alphas || n < 1 || !ratios)
        return invalid("lt_weyl_table: bad arguments");
    return guard([&] {
        std::vector<double> as(alphas, alphas + n);
        auto rows = lt::weyl_convergence(V->v, gamma, as, to_cpp(opt));
        for (int i = 0; i < n; ++i)
            ratios[i] = rows[i].ratio;
    });
}

lt_status lt_monotonicity_scan(int dim, double gamma, const double* hbars, int n, double* values,
                               int* flags, int* n_increases) {
    if (!hbars || n < 1 || !values)
        return invalid("lt_monotonicity_scan: bad arguments");
    return guard([&] {
        std::vector<double> hs(hbars, hbars + n);
        auto res = lt::monotonicity_experiment(dim, gamma, hs);
        for (int i = 0; i < n; ++i)
            values[i] = res.values[i];
        if (flags) {
            for (int i = 0; i < n; ++i)
                flags[i] = 0;
            for (int i : res.increases)
                flags[i] = 1;
        }
        if (n_increases)
            *n_increases = (int)res.increases.size();
    });
}

lt_status lt_monotonicity_weyl_limit(int dim, double gamma, double* out) {
    if (!out) return invalid("lt_monotonicity_weyl_limit: null output");
    return guard([&] { *out = lt::monotonicity_weyl_limit(dim, gamma); });
}

lt_status lt_reverse_bound_check(const lt_potential* V, const lt_grid_options* opt,
                                 lt_reverse_bound* out) {
    if (!V || !out) return invalid("lt_reverse_bound_check: null argument");
    return guard([&] {
        auto r = lt::reverse_bound_check(V->v, to_cpp(opt));
        out->lhs = r.lhs;
        out->rhs = r.rhs;
        out->slack = r.slack;
        out->pass = r.pass ? 1 : 0;
    });
}

lt_status lt_two_bump(double gamma, const double* separations, int n, lt_two_bump_row* rows,
                      lt_two_bump_meta* meta) {
    if (!separations || n < 1 || !rows)
        return invalid("lt_two_bump: bad arguments");
    return guard([&] {
        std::vector<double> rs(separations, separations + n);
        lt::TwoBumpResult res = lt::two_bump_experiment(gamma, rs);
        for (int i = 0; i < n; ++i) {
            const auto& r = res.rows[i];
            rows[i] = lt_two_bump_row{r.separation, r.e1,        r.e2,
                                      r.ratio,      r.overlap_a, r.predicted,
                                      r.in_regime ? 1 : 0};
        }
        if (meta)
            *meta = lt_two_bump_meta{res.gamma, res.p, res.soliton_mass, res.l_one};
    });
}

lt_status lt_slater_identity_check(const double* us, int nfun, int n, double h,
                                   lt_slater_check* out) {
    if (!us || nfun < 1 || n < 2 || !out)
        return invalid("lt_slater_identity_check: bad arguments");
    return guard([&] {
        std::vector<std::vector<double>> fs(nfun);
        for (int a = 0; a < nfun; ++a)
            fs[a].assign(us + (size_t)a * n, us + (size_t)(a + 1) * n);
        auto r = lt::slater_identity_check(fs, h);
        out->kinetic_det = r.kinetic_det;
        out->kinetic_sum = r.kinetic_sum;
        out->rho_max_err = r.rho_max_err;
        out->pass = r.pass ? 1 : 0;
    });
}

/* ---- sphere counts ------------------------------------------------------------ */

lt_status lt_sphere_multiplicity(int dim, long ell, char** decimal) {
    if (!decimal) return invalid("lt_sphere_multiplicity: null output");
    return guard([&] { *decimal = dup_string(lt::sphere_multiplicity(dim, ell).get_str()); });
}

lt_status lt_sphere_count_leq(int dim, long L, char** decimal) {
    if (!decimal) return invalid("lt_sphere_count_leq: null output");
    return guard([&] { *decimal = dup_string(lt::sphere_count_leq(dim, L).get_str()); });
}

lt_status lt_count_constant_potential(int dim, double W, char** decimal) {
    if (!decimal) return invalid("lt_count_constant_potential: null output");
    return guard([&] { *decimal = dup_string(lt::count_constant_potential(dim, W).get_str()); });
}

lt_status lt_a_value(int dim, long L, double* out) {
    if (!out) return invalid("lt_a_value: null output");
    return guard([&] { *out = lt::a_value(dim, L); });
}

lt_status lt_ggm_constant(int dim, double* value, double* sup_a, long* argmax_L) {
    if (!value) return invalid("lt_ggm_constant: null output");
    return guard([&] {
        lt::GgmConstant g = lt::ggm_conjectured_constant(dim);
        *value = g.value;
        if (sup_a) *sup_a = g.sup_a;
        if (argmax_L) *argmax_L = g.argmax_L;
    });
}

lt_status lt_ggm_potential(int dim, long L, lt_potential** out) {
    if (!out) return invalid("lt_ggm_potential: null output");
    return guard([&] {
        *out = new lt_potential{lt::PotentialSpec::make(
            lt::PotentialSpec::Family::ggm_sphere_image, {{"L", (double)L}}, dim)};
    });
}

lt_status lt_ggm_potential_integral(int dim, long L, double* out) {
    if (!out) return invalid("lt_ggm_potential_integral: null output");
    return guard([&] { *out = lt::ggm_potential_integral(dim, L); });
}

/* ---- stability of matter --------------------------------------------------------- */

lt_status lt_k3_best(double* out) {
    if (!out) return invalid("lt_k3_best: null output");
    return guard([&] { *out = lt::k3_best().value(); });
}

lt_status lt_k3_conjectured(double* out) {
    if (!out) return invalid("lt_k3_conjectured: null output");
    return guard([&] { *out = lt::k3_conjectured().value(); });
}

lt_status lt_stability_bound(int n_electrons, int n_nuclei, double max_charge, double k3,
                             double* out) {
    if (!out) return invalid("lt_stability_bound: null output");
    return guard([&] {
        lt::ConstantValue c(k3, lt::ConstKind::literature, lt::BoundDir::lower_bound, "caller");
        lt::MatterSystem sys(n_electrons, n_nuclei, max_charge, c);
        *out = lt::stability_bound(sys);
    });
}

lt_status lt_baxter_integral(double* out) {
    if (!out) return invalid("lt_baxter_integral: null output");
    return guard([&] { *out = lt::baxter_integral_check(); });
}

lt_status lt_proof_chain_optimizers(double t_range, double mu_range, double z, int n_nuclei,
                                    int n_electrons, double k3, lt_proof_chain* out) {
    if (!out) return invalid("lt_proof_chain_optimizers: null output");
    return guard([&] {
        lt::ProofChainResult r =
            lt::proof_chain_optimizers(t_range, mu_range, z, n_nuclei, n_electrons, k3);
        out->t_star = r.t_star;
        out->t_grid = r.t_grid;
        out->mu_star = r.mu_star;
        out->mu_grid = r.mu_grid;
        out->value_kn = r.value_kn;
        out->value_kn_grid = r.value_kn_grid;
        out->value_final = r.value_final;
        out->am_gm_lhs = r.am_gm_lhs;
        out->am_gm_rhs = r.am_gm_rhs;
    });
}

/* ---- verification -------------------------------------------------------------------- */

lt_status lt_verify_json(int quick, char** json, int* n_failures) {
    if (!json) return invalid("lt_verify_json: null output");
    return guard([&] {
        auto rows = lt::run_acceptance(quick != 0);
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        int failures = 0;
        for (const auto& r : rows) {
            nlohmann::ordered_json j;
            j["id"] = r.id;
            j["description"] = r.description;
            j["computed"] = r.computed;
            j["expected"] = r.expected;
            j["tolerance"] = r.tolerance;
            j["relative"] = r.relative;
            j["comparison"] = r.cmp == lt::CheckCmp::equal
                                  ? "equal"
                                  : (r.cmp == lt::CheckCmp::at_most ? "at_most" : "at_least");
            j["pass"] = r.pass;
            j["runtime_s"] = r.runtime_s;
            if (r.budget_s > 0.0)
                j["budget_s"] = r.budget_s;
            j["provenance"] = r.provenance;
            if (!r.pass)
                ++failures;
            out.push_back(std::move(j));
        }
        *json = dup_string(out.dump(2));
        if (n_failures)
            *n_failures = failures;
    });
}

} /* extern "C" */
