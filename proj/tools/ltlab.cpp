// Command-line front end for the Lieb-Thirring constants laboratory.
// Everything numerical happens behind the C API in lt/lt.h.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lt/lt.h"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComputeError = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitUsage = 64;

struct RunConfig {
    std::string subcommand;
    std::string format = "table";
    unsigned seed = 0;
    std::map<std::string, double> tolerances;
    ordered_json parameters = ordered_json::object();

    ordered_json to_json() const {
        ordered_json j;
        j["subcommand"] = subcommand;
        j["format"] = format;
        j["seed"] = seed;
        ordered_json t = ordered_json::object();
        for (const auto& [k, v] : tolerances)
            t[k] = v;
        j["tolerances"] = t;
        j["parameters"] = parameters;
        return j;
    }
};

struct ComputeError {
    lt_status status;
    std::string message;
};

void check(lt_status st, const char* what) {
    if (st != LT_OK)
        throw ComputeError{st, std::string(what) + ": " + lt_last_error()};
}

std::string fmt_double(double v) {
    // shortest round-trip form, deterministic across runs
    ordered_json j = v;
    return j.dump();
}

void render_scalar_block(std::ostream& os, const std::string& prefix, const ordered_json& obj);

void render_table(std::ostream& os, const ordered_json& rows) {
    if (rows.empty())
        return;
    std::vector<std::string> cols;
    for (const auto& [k, v] : rows[0].items()) {
        (void)v;
        cols.push_back(k);
    }
    std::vector<size_t> width(cols.size());
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : rows) {
        std::vector<std::string> line;
        for (size_t c = 0; c < cols.size(); ++c) {
            ordered_json v = row.contains(cols[c]) ? row[cols[c]] : ordered_json();
            std::string s = v.is_string() ? v.get<std::string>() : v.dump();
            line.push_back(s);
        }
        cells.push_back(std::move(line));
    }
    for (size_t c = 0; c < cols.size(); ++c) {
        width[c] = cols[c].size();
        for (const auto& line : cells)
            width[c] = std::max(width[c], line[c].size());
    }
    for (size_t c = 0; c < cols.size(); ++c)
        os << (c ? "  " : "") << cols[c] << std::string(width[c] - cols[c].size(), ' ');
    os << '\n';
    for (const auto& line : cells) {
        for (size_t c = 0; c < cols.size(); ++c)
            os << (c ? "  " : "") << line[c] << std::string(width[c] - line[c].size(), ' ');
        os << '\n';
    }
}

void render_scalar_block(std::ostream& os, const std::string& prefix, const ordered_json& obj) {
    for (const auto& [k, v] : obj.items()) {
        std::string name = prefix.empty() ? k : prefix + "." + k;
        if (v.is_object()) {
            render_scalar_block(os, name, v);
        } else if (v.is_array() && !v.empty() && v[0].is_object()) {
            os << name << ":\n";
            render_table(os, v);
        } else if (v.is_string()) {
            os << name << " = " << v.get<std::string>() << '\n';
        } else {
            os << name << " = " << v.dump() << '\n';
        }
    }
}

void render_csv(std::ostream& os, const std::string& prefix, const ordered_json& obj) {
    for (const auto& [k, v] : obj.items()) {
        std::string name = prefix.empty() ? k : prefix + "." + k;
        if (v.is_object()) {
            render_csv(os, name, v);
        } else if (v.is_array() && !v.empty() && v[0].is_object()) {
            os << "# " << name << '\n';
            bool first = true;
            for (const auto& [ck, cv] : v[0].items()) {
                (void)cv;
                os << (first ? "" : ",") << ck;
                first = false;
            }
            os << '\n';
            for (const auto& row : v) {
                first = true;
                for (const auto& [ck, cv] : row.items()) {
                    (void)ck;
                    std::string s = cv.is_string() ? cv.get<std::string>() : cv.dump();
                    os << (first ? "" : ",") << s;
                    first = false;
                }
                os << '\n';
            }
        } else {
            os << name << ',' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
        }
    }
}

void emit(const RunConfig& cfg, const ordered_json& results) {
    if (cfg.format == "json") {
        ordered_json doc;
        doc["config"] = cfg.to_json();
        doc["results"] = results;
        std::cout << doc.dump(2) << '\n';
        return;
    }
    // header carrying the resolved configuration
    std::cout << "# ltlab " << cfg.subcommand << " (format=" << cfg.format
              << ", seed=" << cfg.seed << ")\n";
    std::cout << "# config " << cfg.to_json().dump() << '\n';
    if (cfg.format == "csv")
        render_csv(std::cout, "", results);
    else
        render_scalar_block(std::cout, "", results);
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    lt_string_free(s);
    return out;
}

const char* kind_name(int k) {
    switch (k) {
        case LT_KIND_CLASSICAL: return "classical";
        case LT_KIND_ONE_PARTICLE: return "one_particle";
        case LT_KIND_IMPROVED_BOUND: return "improved_bound";
        case LT_KIND_CONJECTURED: return "conjectured";
        case LT_KIND_LITERATURE: return "literature";
    }
    return "?";
}

const char* dir_name(int d) {
    switch (d) {
        case LT_DIR_EXACT: return "exact";
        case LT_DIR_UPPER: return "upper_bound";
        case LT_DIR_LOWER: return "lower_bound";
    }
    return "?";
}

struct PotentialHandle {
    lt_potential* p = nullptr;
    ~PotentialHandle() { lt_potential_free(p); }
};

lt_grid_options make_grid(double half_width, double step, int ell_max, bool no_richardson,
                          double hbar2) {
    lt_grid_options g;
    lt_grid_options_default(&g);
    g.half_width = half_width;
    g.step = step;
    g.ell_max = ell_max;
    g.richardson = no_richardson ? 0 : 1;
    g.hbar2 = hbar2;
    return g;
}

// ---- subcommand implementations -------------------------------------------

int run_constants(RunConfig& cfg, double gamma, int dim) {
    cfg.parameters["gamma"] = gamma;
    cfg.parameters["dim"] = dim;
    ordered_json res;
    int adm = 0;
    check(lt_admissible(gamma, dim, &adm), "admissible");
    res["admissible"] = adm != 0;
    if (!adm) {
        emit(cfg, res);
        return kExitComputeError;
    }
    double lcl, kcl;
    check(lt_classical_L(gamma, dim, &lcl), "classical_L");
    check(lt_classical_K(dim, &kcl), "classical_K");
    res["classical_L"] = lcl;
    res["classical_K"] = kcl;
    if (dim == 1) {
        double l1;
        check(lt_one_particle_L_1d(gamma, &l1), "one_particle_L_1d");
        res["one_particle_L"] = l1;
    }
    double kd, ld;
    check(lt_duality_K_from_L(lcl, dim, &kd), "duality_K_from_L");
    check(lt_duality_L_from_K(kcl, dim, &ld), "duality_L_from_K");
    res["duality"] = {{"K_of_classical_L", kd}, {"L_of_classical_K", ld}};

    lt_const_table* table = nullptr;
    check(lt_best_known_bounds(gamma, dim, &table), "best_known_bounds");
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < lt_const_table_size(table); ++i) {
        double v;
        int kind, dir;
        const char* prov;
        lt_const_table_get(table, i, &v, &kind, &dir, &prov);
        rows.push_back({{"value", v},
                        {"kind", kind_name(kind)},
                        {"direction", dir_name(dir)},
                        {"provenance", prov}});
    }
    lt_const_table_free(table);
    res["bounds"] = rows;

    int has = 0;
    double cv = 0.0;
    int ck = 0;
    char* cp = nullptr;
    check(lt_conjectured_bound(gamma, dim, &has, &cv, &ck, &cp), "conjectured_bound");
    if (has) {
        res["conjectured_optimal"] = {{"value", cv},
                                      {"kind", kind_name(ck)},
                                      {"provenance", take_string(cp)}};
    }
    emit(cfg, res);
    return kExitOk;
}

int run_ground_state(RunConfig& cfg, int dim, double p, double gamma, const std::string& csv) {
    if (p <= 0.0 && gamma < 0.0)
        throw CLI::ValidationError("ground-state", "provide --p or --gamma");
    if (p <= 0.0) {
        double pp = gamma + 0.5 * dim;
        p = pp / (pp - 1.0);
    }
    cfg.parameters["dim"] = dim;
    cfg.parameters["p"] = p;
    if (!csv.empty())
        cfg.parameters["csv"] = csv;

    lt_profile* pr = nullptr;
    check(lt_shoot_ground_state(dim, p, &pr), "shoot_ground_state");
    double q0, mass, kin, n2p, r1, r2;
    lt_profile_q0(pr, &q0);
    lt_profile_mass(pr, &mass);
    lt_profile_kinetic(pr, &kin);
    lt_profile_norm2p(pr, &n2p);
    lt_profile_pohozaev(pr, &r1, &r2);
    ordered_json res;
    res["q0"] = q0;
    res["mass"] = mass;
    res["kinetic"] = kin;
    res["norm_2p"] = n2p;
    res["pohozaev_residuals"] = {{"first", r1}, {"second", r2}};
    res["one_particle_L"] = 1.0 / n2p;
    res["samples"] = lt_profile_size(pr);
    if (!csv.empty()) {
        check(lt_profile_write_csv(pr, csv.c_str()), "profile_write_csv");
        res["csv"] = csv;
    }
    lt_profile_free(pr);
    emit(cfg, res);
    return kExitOk;
}

int run_gamma_c(RunConfig& cfg, int dim) {
    cfg.parameters["dim"] = dim;
    double g;
    check(lt_gamma_crossing(dim, &g), "gamma_crossing");
    ordered_json res;
    res["gamma_c"] = g;
    emit(cfg, res);
    return kExitOk;
}

int run_rumin(RunConfig& cfg, int dim, const std::string& params_csv,
              const std::string& trial_json_path, int budget, const std::string& save_path,
              double ramp, double mu_l2) {
    cfg.parameters["dim"] = dim;
    lt_trial* trial = nullptr;
    if (!params_csv.empty()) {
        std::istringstream ss(params_csv);
        std::vector<double> ps;
        std::string tok;
        while (std::getline(ss, tok, ','))
            ps.push_back(std::stod(tok));
        if (ps.size() != 4)
            throw CLI::ValidationError("rumin", "--params takes 4 comma-separated exponents");
        check(lt_trial_family(ps[0], ps[1], ps[2], ps[3], &trial), "trial_family");
        cfg.parameters["params"] = ps;
    } else if (!trial_json_path.empty()) {
        std::ifstream in(trial_json_path);
        if (!in)
            throw ComputeError{LT_ERR_IO, "cannot open " + trial_json_path};
        std::stringstream buf;
        buf << in.rdbuf();
        check(lt_trial_from_json(buf.str().c_str(), &trial), "trial_from_json");
        cfg.parameters["trial_json"] = trial_json_path;
    } else {
        check(lt_trial_paper(&trial), "trial_paper");
        cfg.parameters["trial"] = "paper";
    }
    if (budget > 0)
        cfg.parameters["optimize_budget"] = budget;

    ordered_json res;
    {
        char* tj = nullptr;
        check(lt_trial_to_json(trial, &tj), "trial_to_json");
        res["trial"] = ordered_json::parse(take_string(tj));
    }
    double value, err;
    check(lt_rumin_functional(trial, dim, &value, &err), "rumin_functional");
    res["i_value"] = value;
    res["quadrature_error_estimate"] = err;

    lt_rumin_result kr;
    check(lt_k_tilde(dim, value, &kr), "k_tilde");
    res["k_tilde"] = kr.k_tilde;
    res["excess_K"] = kr.excess_K;
    res["excess_L_dual"] = kr.excess_L_dual;

    if (dim == 1) {
        double bound, factor;
        check(lt_lifting_chain(3, value, &bound, &factor), "lifting_chain");
        res["lifted_bound_d3"] = {{"bound", bound}, {"factor_over_classical", factor}};
        // the published chain rounds the factor; report both and flag the gap
        res["published_chain"] = {
            {"factor", 1.456},
            {"excess_K", 0.471851},
            {"note", "published factor is a rounded presentation; raw computed values differ "
                     "in the fourth digit"}};
    }

    if (budget > 0) {
        lt_trial* best = nullptr;
        double best_value = 0.0;
        check(lt_optimize_trial(trial, dim, budget, cfg.seed, &best, &best_value),
              "optimize_trial");
        char* bj = nullptr;
        check(lt_trial_to_json(best, &bj), "trial_to_json");
        res["optimized"] = {{"value", best_value}, {"trial", ordered_json::parse(take_string(bj))}};
        if (!save_path.empty()) {
            char* sj = nullptr;
            check(lt_trial_to_json(best, &sj), "trial_to_json");
            std::ofstream out(save_path);
            out << take_string(sj) << '\n';
            res["saved_trial"] = save_path;
        }
        lt_trial_free(best);
    }
    if (ramp > 0.0) {
        double bound, kcl;
        check(lt_semiclassical_trial_bound(ramp, mu_l2, dim, &bound), "semiclassical_trial_bound");
        check(lt_classical_K(dim, &kcl), "classical_K");
        res["semiclassical_trial"] = {{"ramp", ramp},
                                      {"muL2", mu_l2},
                                      {"bound", bound},
                                      {"classical_K", kcl},
                                      {"excess", bound / kcl}};
        cfg.parameters["ramp"] = ramp;
        cfg.parameters["muL2"] = mu_l2;
    }
    lt_trial_free(trial);
    emit(cfg, res);
    return kExitOk;
}

int run_spectrum(RunConfig& cfg, const std::string& pot, const std::string& gammas_csv,
                 double half_width, double step, int ell_max, bool no_richardson, double hbar2,
                 const std::string& csv, double slack) {
    cfg.parameters["potential"] = pot;
    PotentialHandle V;
    check(lt_potential_parse(pot.c_str(), &V.p), "potential_parse");
    lt_grid_options grid = make_grid(half_width, step, ell_max, no_richardson, hbar2);
    cfg.parameters["grid"] = {{"half_width", grid.half_width},
                              {"step", grid.step},
                              {"ell_max", grid.ell_max},
                              {"richardson", grid.richardson != 0},
                              {"hbar2", grid.hbar2}};

    lt_spectrum* S = nullptr;
    check(lt_spectrum_compute(V.p, &grid, &S), "spectrum_compute");
    ordered_json res;
    res["dim"] = lt_potential_dim(V.p);
    ordered_json evs = ordered_json::array();
    for (int i = 0; i < lt_spectrum_size(S); ++i) {
        double e, m;
        lt_spectrum_eigenvalue(S, i, &e, &m);
        evs.push_back({{"index", i}, {"eigenvalue", e}, {"multiplicity", m}});
    }
    res["eigenvalues"] = evs;
    int trunc;
    lt_spectrum_truncated(S, &trunc);
    res["channel_truncated"] = trunc != 0;
    if (!csv.empty()) {
        check(lt_spectrum_write_csv(S, csv.c_str()), "spectrum_write_csv");
        res["csv"] = csv;
        cfg.parameters["csv"] = csv;
    }
    lt_spectrum_free(S);

    bool all_pass = true;
    if (!gammas_csv.empty()) {
        std::istringstream ss(gammas_csv);
        std::vector<double> gs;
        std::string tok;
        while (std::getline(ss, tok, ','))
            gs.push_back(std::stod(tok));
        cfg.parameters["gammas"] = gs;
        char* rj = nullptr;
        check(lt_ratio_report_json(V.p, gs.data(), (int)gs.size(), &grid, slack, &rj),
              "ratio_report");
        ordered_json rows = ordered_json::parse(take_string(rj));
        res["ratios"] = rows;
        for (const auto& r : rows) {
            if (r.contains("pass_best") && !r["pass_best"].get<bool>())
                all_pass = false;
            if (r.contains("pass_conjectured") && !r["pass_conjectured"].get<bool>())
                all_pass = false;
        }
    }
    emit(cfg, res);
    return all_pass ? kExitOk : kExitCheckFailed;
}

int run_weyl(RunConfig& cfg, const std::string& pot, double gamma, const std::string& alphas_csv,
             double half_width, double step) {
    cfg.parameters["potential"] = pot;
    cfg.parameters["gamma"] = gamma;
    PotentialHandle V;
    check(lt_potential_parse(pot.c_str(), &V.p), "potential_parse");
    std::vector<double> alphas;
    {
        std::istringstream ss(alphas_csv);
        std::string tok;
        while (std::getline(ss, tok, ','))
            alphas.push_back(std::stod(tok));
    }
    if (alphas.empty())
        throw CLI::ValidationError("weyl", "--alphas must list at least one coupling");
    cfg.parameters["alphas"] = alphas;
    lt_grid_options grid = make_grid(half_width, step, 24, false, 1.0);
    std::vector<double> ratios(alphas.size());
    check(lt_weyl_table(V.p, gamma, alphas.data(), (int)alphas.size(), &grid, ratios.data()),
          "weyl_table");
    ordered_json rows = ordered_json::array();
    for (size_t i = 0; i < alphas.size(); ++i)
        rows.push_back({{"alpha", alphas[i]}, {"ratio", ratios[i]}});
    ordered_json res;
    res["rows"] = rows;
    emit(cfg, res);
    return kExitOk;
}

int run_monotonicity(RunConfig& cfg, int dim, double gamma, double lo, double hi, int points,
                     const std::string& csv) {
    cfg.parameters["dim"] = dim;
    cfg.parameters["gamma"] = gamma;
    cfg.parameters["hbar_min"] = lo;
    cfg.parameters["hbar_max"] = hi;
    cfg.parameters["points"] = points;
    if (points < 2 || !(lo > 0.0) || !(hi > lo))
        throw CLI::ValidationError("monotonicity", "need 0 < hbar-min < hbar-max, points >= 2");
    std::vector<double> hb(points), vals(points);
    std::vector<int> flags(points);
    for (int i = 0; i < points; ++i)
        hb[i] = lo + (hi - lo) * i / (points - 1);
    int n_inc = 0;
    check(lt_monotonicity_scan(dim, gamma, hb.data(), points, vals.data(), flags.data(), &n_inc),
          "monotonicity_scan");
    double limit;
    check(lt_monotonicity_weyl_limit(dim, gamma, &limit), "monotonicity_weyl_limit");

    ordered_json res;
    res["increases_flagged"] = n_inc;
    res["weyl_limit"] = limit;
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < points; ++i)
        rows.push_back({{"hbar", hb[i]}, {"value", vals[i]}, {"increase", flags[i] != 0}});
    if (cfg.format != "table")
        res["rows"] = rows;
    if (!csv.empty()) {
        std::ofstream os(csv);
        os << "hbar,value,increase\n";
        for (int i = 0; i < points; ++i)
            os << fmt_double(hb[i]) << ',' << fmt_double(vals[i]) << ',' << flags[i] << '\n';
        res["csv"] = csv;
    }
    emit(cfg, res);
    return kExitOk;
}

int run_two_bump(RunConfig& cfg, double gamma, const std::string& seps_csv) {
    cfg.parameters["gamma"] = gamma;
    std::vector<double> seps;
    {
        std::istringstream ss(seps_csv);
        std::string tok;
        while (std::getline(ss, tok, ','))
            seps.push_back(std::stod(tok));
    }
    if (seps.empty())
        throw CLI::ValidationError("two-bump", "--separations must list at least one value");
    cfg.parameters["separations"] = seps;
    std::vector<lt_two_bump_row> rows(seps.size());
    lt_two_bump_meta meta;
    check(lt_two_bump(gamma, seps.data(), (int)seps.size(), rows.data(), &meta), "two_bump");
    ordered_json res;
    res["p"] = meta.p;
    res["soliton_mass"] = meta.soliton_mass;
    res["one_particle_L"] = meta.l_one;
    ordered_json table = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json j;
        j["R"] = r.separation;
        j["in_regime"] = r.in_regime != 0;
        if (r.in_regime) {
            j["E1"] = r.e1;
            j["E2"] = r.e2;
            j["ratio"] = r.ratio;
            j["exceeds_L1"] = r.ratio > meta.l_one;
        }
        j["overlap_A"] = r.overlap_a;
        j["predicted_ratio"] = r.predicted;
        table.push_back(std::move(j));
    }
    res["rows"] = table;
    emit(cfg, res);
    return kExitOk;
}

int run_sphere(RunConfig& cfg, int dim, long l_max, const std::string& csv) {
    cfg.parameters["dim"] = dim;
    cfg.parameters["l_max"] = l_max;
    ordered_json rows = ordered_json::array();
    double sup = 0.0;
    for (long L = 0; L <= l_max; ++L) {
        char* nu = nullptr;
        char* cnt = nullptr;
        double a;
        check(lt_sphere_multiplicity(dim, L, &nu), "sphere_multiplicity");
        check(lt_sphere_count_leq(dim, L, &cnt), "sphere_count_leq");
        check(lt_a_value(dim, L, &a), "a_value");
        sup = std::max(sup, a);
        rows.push_back({{"L", L},
                        {"nu_L", take_string(nu)},
                        {"N_leq", take_string(cnt)},
                        {"a_L", a},
                        {"sup_running", sup}});
    }
    double value, sup_a;
    long argmax;
    check(lt_ggm_constant(dim, &value, &sup_a, &argmax), "ggm_constant");
    ordered_json res;
    res["rows"] = rows;
    res["conjectured_constant"] = {{"value", value},
                                   {"sup_a", sup_a},
                                   {"argmax_L", argmax},
                                   {"kind", "conjectured"}};
    if (!csv.empty()) {
        std::ofstream os(csv);
        os << "d,L,nu_L,N_leq,a_L,sup_running\n";
        for (const auto& r : rows)
            os << dim << ',' << r["L"] << ',' << r["nu_L"].get<std::string>() << ','
               << r["N_leq"].get<std::string>() << ',' << fmt_double(r["a_L"].get<double>())
               << ',' << fmt_double(r["sup_running"].get<double>()) << '\n';
        res["csv"] = csv;
        cfg.parameters["csv"] = csv;
    }
    emit(cfg, res);
    return kExitOk;
}

int run_stability(RunConfig& cfg, int electrons, int nuclei, double z, const std::string& k3_sel) {
    cfg.parameters["electrons"] = electrons;
    cfg.parameters["nuclei"] = nuclei;
    cfg.parameters["z"] = z;
    cfg.parameters["k3"] = k3_sel;
    double k3;
    std::string k3_kind;
    if (k3_sel == "best") {
        check(lt_k3_best(&k3), "k3_best");
        k3_kind = "improved_bound";
    } else if (k3_sel == "conjectured") {
        check(lt_k3_conjectured(&k3), "k3_conjectured");
        k3_kind = "conjectured";
    } else {
        k3 = std::stod(k3_sel);
        k3_kind = "user";
    }
    double bound, baxter;
    check(lt_stability_bound(electrons, nuclei, z, k3, &bound), "stability_bound");
    check(lt_baxter_integral(&baxter), "baxter_integral");
    lt_proof_chain pc;
    check(lt_proof_chain_optimizers(4.0, 4.0, z, nuclei, electrons, k3, &pc),
          "proof_chain_optimizers");
    ordered_json res;
    res["k3"] = {{"value", k3}, {"kind", k3_kind}};
    res["energy_bound"] = bound;
    res["short_range_integral"] = baxter;
    res["proof_chain"] = {{"t_star", pc.t_star},
                          {"t_grid", pc.t_grid},
                          {"mu_star", pc.mu_star},
                          {"mu_grid", pc.mu_grid},
                          {"bound_KN", pc.value_kn},
                          {"bound_KN_grid", pc.value_kn_grid},
                          {"bound_final", pc.value_final},
                          {"am_gm_lhs", pc.am_gm_lhs},
                          {"am_gm_rhs", pc.am_gm_rhs}};
    emit(cfg, res);
    return kExitOk;
}

int run_verify(RunConfig& cfg, bool quick) {
    cfg.parameters["quick"] = quick;
    char* json = nullptr;
    int failures = 0;
    check(lt_verify_json(quick ? 1 : 0, &json, &failures), "verify");
    ordered_json rows = ordered_json::parse(take_string(json));
    ordered_json res;
    res["failures"] = failures;
    res["checks"] = rows;
    if (cfg.format == "table") {
        std::cout << "# ltlab verify-all (seed=" << cfg.seed << ")\n";
        std::cout << "# config " << cfg.to_json().dump() << '\n';
        for (const auto& r : rows) {
            std::printf("%-4s %-4s computed=%-16.10g expected=%-12.6g tol=%-8.2g %6.2fs [%s] %s\n",
                        r["pass"].get<bool>() ? "PASS" : "FAIL",
                        r["id"].get<std::string>().c_str(), r["computed"].get<double>(),
                        r["expected"].get<double>(), r["tolerance"].get<double>(),
                        r["runtime_s"].get<double>(),
                        r["provenance"].get<std::string>().c_str(),
                        r["description"].get<std::string>().c_str());
        }
        std::printf("%d check(s) failed\n", failures);
    } else {
        emit(cfg, res);
    }
    return failures == 0 ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical laboratory for Lieb-Thirring constants and bound-state inequalities"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("ltlab ") + lt_version());

    RunConfig cfg;
    std::vector<std::string> tol_kv;
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for stochastic searches")->capture_default_str();
    app.add_option("--tol", tol_kv, "tolerance override key=value (known keys: slack)");

    // constants
    double gamma = 1.0;
    int dim = 1;
    auto* c_const = app.add_subcommand("constants", "closed-form constants, dualities, bounds");
    c_const->add_option("--gamma", gamma, "Riesz exponent")->required();
    c_const->add_option("--dim", dim, "dimension")->required();

    // ground-state
    int gs_dim = 1;
    double gs_p = 0.0, gs_gamma = -1.0;
    std::string gs_csv;
    auto* c_gs = app.add_subcommand("ground-state", "radial ground state by shooting");
    c_gs->add_option("--dim", gs_dim, "dimension")->required();
    c_gs->add_option("--p", gs_p, "nonlinearity exponent p");
    c_gs->add_option("--gamma", gs_gamma, "Riesz exponent (sets p = p'/(p'-1), p' = gamma+d/2)");
    c_gs->add_option("--csv", gs_csv, "write the sampled profile (columns r,Q)");

    // gamma-c
    int gc_dim = 2;
    auto* c_gc = app.add_subcommand("gamma-c", "crossing exponent gamma_c(d)");
    c_gc->add_option("--dim", gc_dim, "dimension (1..7)")->required();

    // rumin
    int ru_dim = 1;
    std::string ru_params, ru_trial_json, ru_save;
    int ru_budget = 0;
    double ru_ramp = 0.0, ru_mul2 = 1e8;
    auto* c_ru = app.add_subcommand("rumin", "variational kinetic functional and derived bounds");
    c_ru->add_option("--dim", ru_dim, "dimension")->capture_default_str();
    c_ru->add_flag("--paper-trial", "use the published trial pair (default)");
    c_ru->add_option("--params", ru_params, "family exponents a,b,u,v");
    c_ru->add_option("--trial-json", ru_trial_json, "load trial pair from a JSON file");
    c_ru->add_option("--optimize", ru_budget, "simplex search with this evaluation budget");
    c_ru->add_option("--save-trial", ru_save, "write the best trial pair JSON here");
    c_ru->add_option("--ramp", ru_ramp, "also evaluate the plane-wave trial bound (cutoff ramp)");
    c_ru->add_option("--muL2", ru_mul2, "plane-wave trial parameter mu L^2")->capture_default_str();

    // spectrum
    std::string sp_pot, sp_gammas, sp_csv;
    double sp_X = 0.0, sp_h = 0.0, sp_hbar2 = 1.0;
    int sp_lmax = 24;
    bool sp_noirich = false;
    auto* c_sp = app.add_subcommand("spectrum", "negative spectrum of -hbar2 Lap + V");
    c_sp->add_option("--potential", sp_pot, "potential text, e.g. 'poschl_teller nu=2'")
        ->required();
    c_sp->add_option("--gammas", sp_gammas, "comma-separated Riesz exponents for the ratio table");
    c_sp->add_option("--half-width", sp_X, "domain half-width (0 = auto)");
    c_sp->add_option("--step", sp_h, "grid step (0 = auto)");
    c_sp->add_option("--ell-max", sp_lmax, "radial channel cap")->capture_default_str();
    c_sp->add_flag("--no-richardson", sp_noirich, "disable eigenvalue extrapolation");
    c_sp->add_option("--hbar2", sp_hbar2, "kinetic coefficient")->capture_default_str();
    c_sp->add_option("--csv", sp_csv, "write the spectrum as CSV");

    // weyl
    std::string wy_pot, wy_alphas = "10,100,1000,10000";
    double wy_gamma = 1.0, wy_X = 0.0, wy_h = 0.0;
    auto* c_wy = app.add_subcommand("weyl", "strong-coupling convergence to the phase-space value");
    c_wy->add_option("--potential", wy_pot, "potential text")->required();
    c_wy->add_option("--gamma", wy_gamma, "Riesz exponent")->capture_default_str();
    c_wy->add_option("--alphas", wy_alphas, "comma-separated couplings")->capture_default_str();
    c_wy->add_option("--half-width", wy_X, "domain half-width (0 = auto)");
    c_wy->add_option("--step", wy_h, "grid step (0 = per-coupling auto)");

    // monotonicity
    int mo_dim = 1, mo_points = 1000;
    double mo_gamma = 2.0, mo_lo = 1e-3, mo_hi = 1.0;
    std::string mo_csv;
    auto* c_mo = app.add_subcommand("monotonicity", "oscillator Riesz-mean scan in hbar");
    c_mo->add_option("--dim", mo_dim, "dimension")->capture_default_str();
    c_mo->add_option("--gamma", mo_gamma, "Riesz exponent")->capture_default_str();
    c_mo->add_option("--hbar-min", mo_lo, "scan start")->capture_default_str();
    c_mo->add_option("--hbar-max", mo_hi, "scan end")->capture_default_str();
    c_mo->add_option("--points", mo_points, "grid size")->capture_default_str();
    c_mo->add_option("--csv", mo_csv, "write hbar,value,increase rows");

    // two-bump
    double tb_gamma = 2.0;
    std::string tb_seps = "5,6,8,10,12";
    auto* c_tb = app.add_subcommand("two-bump", "two-eigenvalue excess over the one-bump optimum");
    c_tb->add_option("--gamma", tb_gamma, "Riesz exponent (> 3/2)")->capture_default_str();
    c_tb->add_option("--separations", tb_seps, "comma-separated bump separations")
        ->capture_default_str();

    // sphere
    int sh_dim = 3;
    long sh_lmax = 10;
    std::string sh_csv;
    auto* c_sh = app.add_subcommand("sphere", "sphere counts and the conjectured counting constant");
    c_sh->add_option("--dim", sh_dim, "dimension (>= 3)")->capture_default_str();
    c_sh->add_option("--l-max", sh_lmax, "table rows L = 0..l_max")->capture_default_str();
    c_sh->add_option("--csv", sh_csv, "write the table as CSV");

    // stability
    int st_e = 1, st_k = 1;
    double st_z = 1.0;
    std::string st_k3 = "best";
    auto* c_st = app.add_subcommand("stability", "stability-of-matter energy bound");
    c_st->add_option("--electrons", st_e, "electron count")->capture_default_str();
    c_st->add_option("--nuclei", st_k, "nucleus count")->capture_default_str();
    c_st->add_option("--z", st_z, "maximal nuclear charge")->capture_default_str();
    c_st->add_option("--k3", st_k3, "kinetic constant: best | conjectured | <value>")
        ->capture_default_str();

    // verify-all
    bool vf_quick = false;
    auto* c_vf = app.add_subcommand("verify-all", "recompute and check every pinned number");
    c_vf->add_flag("--quick", vf_quick, "skip the three slowest suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    for (const auto& kv : tol_kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) {
            std::cerr << "ltlab: --tol expects key=value\n";
            return kExitUsage;
        }
        std::string key = kv.substr(0, eq);
        if (key != "slack") {
            std::cerr << "ltlab: unknown tolerance key '" << key << "'\n";
            return kExitUsage;
        }
        try {
            cfg.tolerances[key] = std::stod(kv.substr(eq + 1));
        } catch (const std::exception&) {
            std::cerr << "ltlab: bad tolerance value in '" << kv << "'\n";
            return kExitUsage;
        }
    }
    double slack = cfg.tolerances.count("slack") ? cfg.tolerances["slack"] : 5e-3;

    try {
        if (c_const->parsed()) {
            cfg.subcommand = "constants";
            return run_constants(cfg, gamma, dim);
        }
        if (c_gs->parsed()) {
            cfg.subcommand = "ground-state";
            return run_ground_state(cfg, gs_dim, gs_p, gs_gamma, gs_csv);
        }
        if (c_gc->parsed()) {
            cfg.subcommand = "gamma-c";
            return run_gamma_c(cfg, gc_dim);
        }
        if (c_ru->parsed()) {
            cfg.subcommand = "rumin";
            return run_rumin(cfg, ru_dim, ru_params, ru_trial_json, ru_budget, ru_save, ru_ramp,
                             ru_mul2);
        }
        if (c_sp->parsed()) {
            cfg.subcommand = "spectrum";
            return run_spectrum(cfg, sp_pot, sp_gammas, sp_X, sp_h, sp_lmax, sp_noirich, sp_hbar2,
                                sp_csv, slack);
        }
        if (c_wy->parsed()) {
            cfg.subcommand = "weyl";
            return run_weyl(cfg, wy_pot, wy_gamma, wy_alphas, wy_X, wy_h);
        }
        if (c_mo->parsed()) {
            cfg.subcommand = "monotonicity";
            return run_monotonicity(cfg, mo_dim, mo_gamma, mo_lo, mo_hi, mo_points, mo_csv);
        }
        if (c_tb->parsed()) {
            cfg.subcommand = "two-bump";
            return run_two_bump(cfg, tb_gamma, tb_seps);
        }
        if (c_sh->parsed()) {
            cfg.subcommand = "sphere";
            return run_sphere(cfg, sh_dim, sh_lmax, sh_csv);
        }
        if (c_st->parsed()) {
            cfg.subcommand = "stability";
            return run_stability(cfg, st_e, st_k, st_z, st_k3);
        }
        if (c_vf->parsed()) {
            cfg.subcommand = "verify-all";
            return run_verify(cfg, vf_quick);
        }
    } catch (const ComputeError& e) {
        std::cerr << "ltlab: " << e.message << '\n';
        return kExitComputeError;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "ltlab: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "ltlab: " << e.what() << '\n';
        return kExitComputeError;
    }
    return kExitUsage;
}
