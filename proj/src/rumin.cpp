#include "rumin.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <json.hpp>

#include "errors.hpp"
#include "nelder_mead.hpp"
#include "quadrature.hpp"
#include "special.hpp"

namespace lt {

namespace {

const char* kFamilyName = "power_family";

double interp_linear(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
    if (x <= xs.front() || x >= xs.back()) {
        if (x == xs.front()) return ys.front();
        if (x == xs.back()) return ys.back();
        return 0.0;
    }
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    size_t i = it - xs.begin();
    double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return ys[i - 1] + t * (ys[i] - ys[i - 1]);
}

} // namespace

std::string TrialPair::to_json() const {
    nlohmann::ordered_json j;
    j["family"] = family;
    j["params"] = params;
    return j.dump();
}

TrialPair trial_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw io_error(std::string("trial_from_json: ") + e.what());
    }
    if (!j.contains("family") || !j.contains("params"))
        throw io_error("trial_from_json: missing family/params");
    std::string fam = j["family"];
    std::vector<double> p = j["params"].get<std::vector<double>>();
    if (fam != kFamilyName)
        throw io_error("trial_from_json: unknown family '" + fam + "'");
    if (p.size() != 4)
        throw io_error("trial_from_json: family takes 4 parameters");
    return family_trial(p[0], p[1], p[2], p[3]);
}

TrialPair family_trial(double a, double b, double u, double v) {
    if (!(a > 0.0) || !(b > 0.0) || !(u > 0.0) || !(v > 0.0))
        throw domain_error("family_trial: exponents must be positive");
    if (!(2.0 * a * b > 1.02))
        throw domain_error("family_trial: f is not square integrable (need 2ab > 1)");

    // int f^2 with f = (1 + mu s^a)^{-b}, decreasing in mu; bisection on
    // ln(mu) for int f^2 = 1.
    auto f_norm = [a, b](double mu) {
        return integrate_to_infinity(
                   [a, b, mu](double s) { return std::pow(1.0 + mu * std::pow(s, a), -2.0 * b); },
                   0.0, {1e-14, 1e-12})
            .value;
    };
    double llo = -40.0, lhi = 40.0;
    if (f_norm(std::exp(llo)) < 1.0 || f_norm(std::exp(lhi)) > 1.0)
        throw solver_error("family_trial: normalization root not bracketed");
    for (int it = 0; it < 200 && lhi - llo > 1e-13; ++it) {
        double mid = 0.5 * (llo + lhi);
        (f_norm(std::exp(mid)) > 1.0 ? llo : lhi) = mid;
    }
    const double mu0 = std::exp(0.5 * (llo + lhi));

    auto w_raw = [u, v](double s) {
        if (s <= 0.0 || s >= 1.0)
            return (s == 0.0) ? 1.0 : 0.0;
        return std::pow(1.0 - std::pow(s, u), v) / (1.0 + s);
    };
    double w_int = integrate(w_raw, 0.0, 1.0, {1e-14, 1e-12}).value;
    const double c0 = 1.0 / w_int;

    TrialPair tp;
    tp.family = kFamilyName;
    tp.params = {a, b, u, v};
    tp.f = [a, b, mu0](double s) { return std::pow(1.0 + mu0 * std::pow(s, a), -b); };
    tp.w = [w_raw, c0](double s) { return c0 * w_raw(s); };
    tp.w_support = 1.0;
    tp.f_tail = std::pow((std::pow(1e14, 0.5 / b) - 1.0) / mu0, 1.0 / a);
    tp.f_norm2 = f_norm(mu0);
    tp.w_l1 = 1.0;
    tp.w_l2sq = integrate([&tp](double s) { return tp.w(s) * tp.w(s); }, 0.0, 1.0,
                          {1e-14, 1e-12})
                    .value;
    return tp;
}

TrialPair paper_trial() { return family_trial(4.5, 0.25, 0.36, 2.1); }

TrialPair tabulated_trial(const std::vector<double>& s, const std::vector<double>& fv,
                          const std::vector<double>& sw, const std::vector<double>& wv) {
    if (s.size() != fv.size() || sw.size() != wv.size() || s.size() < 2 || sw.size() < 2)
        throw domain_error("tabulated_trial: inconsistent tables");
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i] <= s[i - 1])
            throw domain_error("tabulated_trial: abscissae must be strictly increasing");
    for (size_t i = 1; i < sw.size(); ++i)
        if (sw[i] <= sw[i - 1])
            throw domain_error("tabulated_trial: abscissae must be strictly increasing");
    for (double y : fv)
        if (y < 0.0)
            throw domain_error("tabulated_trial: f must be nonnegative");
    for (double y : wv)
        if (y < 0.0)
            throw domain_error("tabulated_trial: w must be nonnegative");

    auto f_raw = [s, fv](double x) { return interp_linear(s, fv, x); };
    double n2 = integrate([f_raw](double x) {
        double y = f_raw(x);
        return y * y;
    }, s.front(), s.back(), {1e-14, 1e-12}).value;
    if (!(n2 > 0.0))
        throw domain_error("tabulated_trial: f vanishes identically");
    double scale = 1.0 / std::sqrt(n2);

    TrialPair tp;
    tp.family = "tabulated";
    tp.f = [f_raw, scale](double x) { return scale * f_raw(x); };
    tp.w = [sw, wv](double x) { return interp_linear(sw, wv, x); };
    tp.w_support = sw.back();
    tp.f_tail = s.back();
    tp.f_norm2 = 1.0;
    tp.w_l1 = integrate(tp.w, sw.front(), sw.back(), {1e-14, 1e-12}).value;
    tp.w_l2sq = integrate([&tp](double x) { return tp.w(x) * tp.w(x); }, sw.front(), sw.back(),
                          {1e-14, 1e-12})
                    .value;
    return tp;
}

double convolve_g(const TrialPair& tp, double t) {
    if (!(t > 0.0))
        throw domain_error("convolve_g: t must be positive");
    QuadOptions opt;
    opt.abs_tol = 1e-15;
    opt.rel_tol = 1e-10;
    return integrate([&tp, t](double s) { return tp.w(s) * tp.f(s * t); }, 0.0, tp.w_support, opt)
        .value;
}

double rumin_functional(const TrialPair& tp, int d, double* err_estimate) {
    if (d < 1)
        throw domain_error("rumin_functional: dimension must be >= 1");
    if (std::fabs(tp.f_norm2 - 1.0) > 1e-10)
        throw domain_error("rumin_functional: trial f is not normalized");

    // Integrability at t -> 0 requires 1 - g(t) -> 0 (g(0) = f(0) int w).
    {
        double probe = std::fabs(1.0 - convolve_g(tp, 1e-6));
        if (probe > 1e-3)
            throw domain_error("rumin_functional: (1-g)^2/t^{1+d/2} diverges at t->0 "
                               "(1-g(1e-6) = " + std::to_string(probe) + "); "
                               "check f(0) * int w = 1");
    }

    auto integrand = [&tp](double t) {
        double one_m_g = 1.0 - convolve_g(tp, t);
        return one_m_g * one_m_g;
    };

    QuadOptions opt;
    opt.abs_tol = 1e-13;
    opt.rel_tol = 2e-9;
    opt.max_intervals = 20000;
    double total = 0.0, err = 0.0;

    // t in (0,1]: t = e^{-x}
    {
        auto g_small = [&](double x) { return integrand(std::exp(-x)) * std::exp(0.5 * d * x); };
        double acc = 0.0;
        for (double x0 = 0.0; x0 < 80.0; x0 += 10.0) {
            QuadResult q = integrate(g_small, x0, x0 + 10.0, opt);
            acc += q.value;
            err += q.error;
            if (std::fabs(q.value) < 1e-15 * std::fabs(acc) + 1e-18)
                break;
        }
        total += acc;
    }
    // t in [1,inf): t = e^{x}
    {
        auto g_large = [&](double x) { return integrand(std::exp(x)) * std::exp(-0.5 * d * x); };
        double acc = 0.0;
        for (double x0 = 0.0; x0 < 400.0; x0 += 10.0) {
            QuadResult q = integrate(g_large, x0, x0 + 10.0, opt);
            acc += q.value;
            err += q.error;
            if (std::fabs(q.value) < 1e-12 * std::fabs(acc) + 1e-18)
                break;
        }
        total += acc;
    }

    double factor = std::pow(tp.w_l2sq, 0.5 * d);
    if (err_estimate)
        *err_estimate = factor * err;
    return factor * total;
}

RuminResult k_tilde(int d, double i_d) {
    if (d < 1)
        throw domain_error("k_tilde: dimension must be >= 1");
    if (!(i_d > 0.0))
        throw domain_error("k_tilde: the functional value must be positive");
    const double dd = d;
    double kcl = classical_K(d).value();
    double form1 = std::pow(2.0, 6.0 / dd) * std::pow(dd, 1.0 - 2.0 / dd) /
                   std::pow(dd + 2.0, 1.0 + 4.0 / dd) * std::pow(i_d, -2.0 / dd) * kcl;
    double form2 = std::pow(2.0, 6.0 / dd) * dd * dd * 4.0 * M_PI * M_PI /
                   (std::pow(dd + 2.0, 2.0 + 4.0 / dd) * std::pow(sphere_area(d), 2.0 / dd)) *
                   std::pow(i_d, -2.0 / dd);
    if (std::fabs(form1 - form2) > 1e-12 * form1)
        throw accuracy_error("k_tilde: the two closed forms disagree");
    RuminResult r;
    r.i_value = i_d;
    r.k_tilde = form1;
    r.excess_K = form1 / kcl;
    r.excess_L_dual = std::pow(kcl / form1, 0.5 * dd);
    return r;
}

ConstantValue lifting_chain(int d, double i_1) {
    if (d < 1)
        throw domain_error("lifting_chain: dimension must be >= 1");
    RuminResult one = k_tilde(1, i_1);
    double factor = std::sqrt(classical_K(1).value() / one.k_tilde);
    // splitting of the phase-space constant used by the lifting step
    if (d >= 2) {
        double lhs = classical_L(GammaDim(1.0, 1)).value() *
                     classical_L(GammaDim(1.5, d - 1)).value();
        double rhs = classical_L(GammaDim(1.0, d)).value();
        if (std::fabs(lhs - rhs) > 1e-12 * rhs)
            throw accuracy_error("lifting_chain: L^cl product identity failed");
    }
    double bound = factor * classical_L(GammaDim(1.0, d)).value();
    return ConstantValue(bound, ConstKind::improved_bound, BoundDir::upper_bound,
                         "lifted one-dimensional kinetic bound");
}

TrialPair optimize_trial(const TrialPair& seed, int d, int budget, unsigned rng_seed,
                         double* best_value) {
    if (seed.family != kFamilyName)
        throw domain_error("optimize_trial: search is over the parametric family only");
    double seed_value = rumin_functional(seed, d); // surfaces divergence before the search
    if (budget < 1) {
        if (best_value)
            *best_value = seed_value;
        return seed;
    }

    int evals = 0;
    auto objective = [&](const std::vector<double>& lx) {
        ++evals;
        try {
            TrialPair tp = family_trial(std::exp(lx[0]), std::exp(lx[1]), std::exp(lx[2]),
                                        std::exp(lx[3]));
            double v = rumin_functional(tp, d);
            return std::isfinite(v) ? v : 1e6;
        } catch (const std::exception&) {
            return 1e6;
        }
    };

    std::vector<double> x0 = {std::log(seed.params[0]), std::log(seed.params[1]),
                              std::log(seed.params[2]), std::log(seed.params[3])};
    std::vector<double> best_x = x0;
    double best = seed_value;
    std::mt19937 rng(rng_seed);
    std::normal_distribution<double> jitter(0.0, 0.03);

    while (evals < budget) {
        std::vector<double> start = best_x;
        if (evals > budget / 2) { // restart with a jittered simplex
            for (auto& c : start)
                c += jitter(rng);
        }
        NelderMeadResult r = nelder_mead(objective, start, {0.08, 0.08, 0.08, 0.08},
                                         budget - evals);
        if (r.value < best) {
            best = r.value;
            best_x = r.x;
        }
        if (r.evaluations == 0)
            break;
    }

    if (best_value)
        *best_value = best;
    if (best >= seed_value)
        return seed;
    return family_trial(std::exp(best_x[0]), std::exp(best_x[1]), std::exp(best_x[2]),
                        std::exp(best_x[3]));
}

double semiclassical_trial_bound(double ramp, double mu_l2, int d) {
    if (!(ramp > 0.0) || !(ramp < 1.0))
        throw domain_error("semiclassical_trial_bound: ramp must lie in (0,1)");
    if (!(mu_l2 > 0.0))
        throw domain_error("semiclassical_trial_bound: muL2 must be positive");
    if (d < 1)
        throw domain_error("semiclassical_trial_bound: dimension must be >= 1");

    const double b = 1.0 - ramp;
    const double dd = d;
    const double area = sphere_area(d);
    auto chi = [b, ramp](double r) {
        if (r <= b)
            return 1.0;
        if (r >= 1.0)
            return 0.0;
        return (1.0 - r) / ramp;
    };
    QuadOptions opt{1e-14, 1e-11, 4000};
    double chi2 = area * (std::pow(b, dd) / dd +
                          integrate([&](double r) {
                              double c = chi(r);
                              return c * c * std::pow(r, dd - 1.0);
                          }, b, 1.0, opt).value);
    double grad2 = area * (1.0 - std::pow(b, dd)) / (dd * ramp * ramp);
    double chi_hi = area * (std::pow(b, dd) / dd +
                            integrate([&](double r) {
                                return std::pow(chi(r), 2.0 + 4.0 / dd) * std::pow(r, dd - 1.0);
                            }, b, 1.0, opt).value);
    double phase = std::pow(unit_ball_volume(d) / std::pow(2.0 * M_PI, dd), 2.0 / dd);
    return (dd / (dd + 2.0) * chi2 + grad2 / mu_l2) / (phase * chi_hi);
}

} // namespace lt
