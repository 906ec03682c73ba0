#include "spectral.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "ground_state.hpp"
#include "quadrature.hpp"
#include "special.hpp"
#include "sphere.hpp"

namespace lt {

namespace {

double resolve_half_width(const PotentialSpec& V, const GridOptions& opt) {
    return opt.half_width > 0.0 ? opt.half_width : V.suggested_half_width();
}

double resolve_step(const PotentialSpec& V, const GridOptions& opt, double extent) {
    double h = opt.step > 0.0 ? opt.step : V.suggested_step();
    // snap so the extent is an integer number of cells
    long cells = std::lround(extent / h);
    if (cells < 8)
        cells = 8;
    return extent / (double)cells;
}

std::vector<double> richardson_merge(const std::vector<double>& coarse,
                                     const std::vector<double>& fine) {
    std::vector<double> out;
    out.reserve(fine.size());
    for (size_t i = 0; i < fine.size(); ++i) {
        if (i < coarse.size())
            out.push_back((4.0 * fine[i] - coarse[i]) / 3.0);
        else
            out.push_back(fine[i]); // near-threshold state only on the fine grid
    }
    return out;
}

} // namespace

double SpectrumSummary::count_below(double threshold) const {
    double c = 0.0;
    for (size_t k = 0; k < ops.size(); ++k)
        c += op_mult[k] * sturm_count_below(ops[k], threshold);
    return c;
}

double SpectrumSummary::riesz_mean(double gamma) const {
    double s = 0.0;
    for (size_t i = 0; i < eigenvalues.size(); ++i)
        if (eigenvalues[i] < 0.0)
            s += multiplicity[i] * std::pow(-eigenvalues[i], gamma);
    return s;
}

double SpectrumSummary::riesz_mean_raw(double gamma) const {
    double s = 0.0;
    for (size_t i = 0; i < eigenvalues_raw.size(); ++i)
        if (eigenvalues_raw[i] < 0.0)
            s += multiplicity_raw[i] * std::pow(-eigenvalues_raw[i], gamma);
    return s;
}

Tridiag discretize_1d(const PotentialSpec& V, double half_width, double step, double hbar2,
                      double coupling) {
    if (!(step > 0.0) || !(half_width > 0.0))
        throw domain_error("discretize_1d: domain and step must be positive");
    double cells_f = 2.0 * half_width / step;
    long cells = std::lround(cells_f);
    if (std::fabs(cells_f - cells) > 1e-6 || cells < 2)
        throw domain_error("discretize_1d: 2X/h must be integral");
    const int n = (int)cells - 1;
    Tridiag T;
    T.diag.resize(n);
    T.off.assign(n - 1, -hbar2 / (step * step));
    for (int i = 0; i < n; ++i) {
        double x = -half_width + (i + 1) * step;
        double v = coupling * V.sampled(x, step);
        if (!std::isfinite(v))
            throw domain_error("discretize_1d: potential sample not finite at x=" +
                               std::to_string(x));
        T.diag[i] = 2.0 * hbar2 / (step * step) + v;
    }
    return T;
}

Tridiag discretize_radial_channel(const PotentialSpec& V, int d, int ell, double r_max,
                                  double step, double hbar2, double coupling) {
    if (d < 2)
        throw domain_error("discretize_radial_channel: requires d >= 2");
    if (ell < 0)
        throw domain_error("discretize_radial_channel: requires ell >= 0");
    if (!(step > 0.0) || !(r_max > step))
        throw domain_error("discretize_radial_channel: bad grid");
    long cells = std::lround(r_max / step);
    const int n = (int)cells - 1;
    const double c_ell = (2.0 * ell + d - 1.0) * (2.0 * ell + d - 3.0) / 4.0;
    Tridiag T;
    T.diag.resize(n);
    T.off.assign(n - 1, -hbar2 / (step * step));
    for (int i = 0; i < n; ++i) {
        double r = (i + 1) * step;
        double v = coupling * V.sampled(r, step) + hbar2 * c_ell / (r * r);
        if (!std::isfinite(v))
            throw domain_error("discretize_radial_channel: potential sample not finite");
        T.diag[i] = 2.0 * hbar2 / (step * step) + v;
    }
    return T;
}

long long harmonic_multiplicity(int d, int ell) {
    if (d < 2 || ell < 0)
        throw domain_error("harmonic_multiplicity: need d >= 2, ell >= 0");
    if (ell == 0)
        return 1;
    if (d == 2)
        return 2; // cos and sin modes
    // (2l+d-2) (l+d-3)! / (l! (d-2)!)
    long long num = 2 * ell + d - 2;
    // (l+d-3)!/(l!) = product of (l+1)..(l+d-3)
    for (int j = 1; j <= d - 3; ++j)
        num *= (ell + j);
    long long den = 1;
    for (int j = 2; j <= d - 2; ++j)
        den *= j;
    return num / den;
}

SpectrumSummary compute_spectrum(const PotentialSpec& V, const GridOptions& opt) {
    SpectrumSummary S;
    S.dim = V.dim();
    const double X = resolve_half_width(V, opt);
    const double h = resolve_step(V, opt, V.dim() == 1 ? 2.0 * X : X);
    S.half_width = X;

    auto solve_1d = [&](double step) {
        Tridiag T = discretize_1d(V, X, step, opt.hbar2, opt.coupling);
        return std::make_pair(eigenvalues_below(T, 0.0), std::move(T));
    };
    auto solve_channel = [&](int ell, double step) {
        Tridiag T = discretize_radial_channel(V, V.dim(), ell, X, step, opt.hbar2, opt.coupling);
        return std::make_pair(eigenvalues_below(T, 0.0), std::move(T));
    };

    if (V.dim() == 1) {
        if (opt.richardson) {
            auto [coarse, Tc] = solve_1d(h);
            auto [fine, Tf] = solve_1d(0.5 * h);
            S.eigenvalues = richardson_merge(coarse, fine);
            S.eigenvalues_raw = fine;
            S.step = 0.5 * h;
            S.ops.push_back(std::move(Tf));
        } else {
            auto [vals, T] = solve_1d(h);
            S.eigenvalues = vals;
            S.eigenvalues_raw = vals;
            S.step = h;
            S.ops.push_back(std::move(T));
        }
        S.op_mult.assign(1, 1.0);
        S.multiplicity.assign(S.eigenvalues.size(), 1.0);
        S.multiplicity_raw.assign(S.eigenvalues_raw.size(), 1.0);
        S.channels_used = 1;
        return S;
    }

    // radial: iterate channels until one contributes nothing (the effective
    // potential is increasing in ell, so no later channel can bind)
    struct Entry {
        double e;
        double mult;
    };
    std::vector<Entry> ext, raw;
    for (int ell = 0; ell <= opt.ell_max; ++ell) {
        double mult = (double)harmonic_multiplicity(V.dim(), ell);
        std::vector<double> vals, vals_raw;
        if (opt.richardson) {
            auto [coarse, Tc] = solve_channel(ell, h);
            auto [fine, Tf] = solve_channel(ell, 0.5 * h);
            vals = richardson_merge(coarse, fine);
            vals_raw = fine;
            S.ops.push_back(std::move(Tf));
        } else {
            auto [v, T] = solve_channel(ell, h);
            vals = v;
            vals_raw = v;
            S.ops.push_back(std::move(T));
        }
        S.op_mult.push_back(mult);
        S.step = opt.richardson ? 0.5 * h : h;
        if (vals.empty()) {
            S.channels_used = ell;
            break;
        }
        for (double e : vals)
            ext.push_back({e, mult});
        for (double e : vals_raw)
            raw.push_back({e, mult});
        S.channels_used = ell + 1;
        if (ell == opt.ell_max)
            S.truncated = true;
    }

    std::sort(ext.begin(), ext.end(), [](const Entry& a, const Entry& b) { return a.e < b.e; });
    std::sort(raw.begin(), raw.end(), [](const Entry& a, const Entry& b) { return a.e < b.e; });
    for (const auto& en : ext) {
        S.eigenvalues.push_back(en.e);
        S.multiplicity.push_back(en.mult);
    }
    for (const auto& en : raw) {
        S.eigenvalues_raw.push_back(en.e);
        S.multiplicity_raw.push_back(en.mult);
    }
    return S;
}

std::optional<ConstantValue> conjectured_bound(const GammaDim& gd) {
    const double g = gd.gamma();
    const int d = gd.dim();
    if (g >= 1.5) {
        ConstantValue c = classical_L(gd);
        return ConstantValue(c.value(), ConstKind::classical, BoundDir::exact,
                             d == 1 ? "Lieb-Thirring 1976; Aizenman-Lieb 1978"
                                    : "Laptev-Weidl 2000");
    }
    if (d == 1) {
        double l1 = one_particle_L_1d(g).value();
        double lcl = classical_L(gd).value();
        if (g == 0.5)
            return ConstantValue(l1, ConstKind::one_particle, BoundDir::exact,
                                 "Hundertmark-Lieb-Thomas 1998");
        return ConstantValue(std::max(l1, lcl), ConstKind::conjectured, BoundDir::exact,
                             "max of one-particle and semiclassical (1D conjecture)");
    }
    if (d == 2) {
        if (g <= 1.0)
            return ConstantValue(one_particle_L(gd).value(), ConstKind::conjectured,
                                 BoundDir::exact, "one-particle value (numerics-backed conjecture)");
        return std::nullopt; // 1 < gamma < 3/2 in d=2: open, no definite conjecture
    }
    // d >= 3
    if (g >= 1.0)
        return ConstantValue(classical_L(gd).value(), ConstKind::conjectured, BoundDir::exact,
                             "semiclassical value (conjectured)");
    if (g == 0.0) {
        GgmConstant gg = ggm_conjectured_constant(d);
        return ConstantValue(gg.value, ConstKind::conjectured, BoundDir::exact,
                             "Glaser-Grosse-Martin sphere construction");
    }
    if (d == 3 && g <= 0.5)
        return ConstantValue(one_particle_L(gd).value(), ConstKind::conjectured, BoundDir::exact,
                             "one-particle value (conjectured range)");
    return std::nullopt;
}

std::vector<RatioRow> lt_ratio_report(const PotentialSpec& V, const std::vector<double>& gammas,
                                      const GridOptions& opt, double slack) {
    SpectrumSummary S = compute_spectrum(V, opt);
    std::vector<RatioRow> rows;
    rows.reserve(gammas.size());
    for (double g : gammas) {
        GammaDim gd(g, V.dim()); // throws on inadmissible pairs
        RatioRow row;
        row.gamma = g;
        row.riesz = S.riesz_mean(g);
        row.vnorm = V.negative_part_norm(g + 0.5 * V.dim());
        row.ratio = row.riesz / row.vnorm;

        double best = std::numeric_limits<double>::infinity();
        for (const ConstantValue& c : best_known_bounds(gd))
            if (c.direction() != BoundDir::lower_bound)
                best = std::min(best, c.value());
        if (std::isfinite(best)) {
            row.best_upper = best;
            row.pass_best = row.ratio <= best + slack;
        }
        if (auto c = conjectured_bound(gd)) {
            row.conjectured = c->value();
            row.conjectured_kind = to_string(c->kind());
            row.pass_conjectured = row.ratio <= c->value() + slack;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<WeylRow> weyl_convergence(const PotentialSpec& V, double gamma,
                                      const std::vector<double>& alphas,
                                      const GridOptions& opt) {
    GammaDim gd(gamma, V.dim());
    const double lcl = classical_L(gd).value();
    const double vnorm = V.negative_part_norm(gamma + 0.5 * V.dim());

    // potential sup for the resolution rule
    double vmax = 0.0;
    {
        double X = resolve_half_width(V, opt);
        for (int i = 0; i <= 4000; ++i) {
            double x = (V.dim() == 1) ? -X + 2.0 * X * i / 4000.0 : X * i / 4000.0;
            vmax = std::max(vmax, -V(x));
        }
    }

    std::vector<WeylRow> rows;
    for (double alpha : alphas) {
        if (!(alpha > 0.0))
            throw domain_error("weyl_convergence: couplings must be positive");
        GridOptions local = opt;
        local.coupling = alpha;
        if (opt.step > 0.0) {
            if (opt.step * std::sqrt(alpha * vmax) > 0.1)
                throw accuracy_error("weyl_convergence: grid too coarse for coupling " +
                                     std::to_string(alpha) +
                                     " (h sqrt(alpha |V|) > 0.1); refine the step");
        } else {
            local.step = std::min(V.suggested_step(), 0.08 / std::sqrt(alpha * vmax + 1.0));
        }
        SpectrumSummary S = compute_spectrum(V, local);
        double ratio = S.riesz_mean(gamma) /
                       (std::pow(alpha, gamma + 0.5 * V.dim()) * lcl * vnorm);
        rows.push_back({alpha, ratio});
    }
    return rows;
}

MonotonicityResult monotonicity_experiment(int d, double gamma,
                                           const std::vector<double>& hbars) {
    if (d < 1)
        throw domain_error("monotonicity_experiment: dimension must be >= 1");
    if (!(gamma > 0.0))
        throw domain_error("monotonicity_experiment: gamma must be positive");
    for (size_t i = 0; i < hbars.size(); ++i) {
        if (!(hbars[i] > 0.0))
            throw domain_error("monotonicity_experiment: hbar must be positive");
        if (i > 0 && hbars[i] <= hbars[i - 1])
            throw domain_error("monotonicity_experiment: hbar grid must be increasing");
    }

    MonotonicityResult res;
    res.hbars = hbars;
    res.values.reserve(hbars.size());
    for (double hb : hbars) {
        // oscillator levels hbar(2k+d)-1 with binomial shell degeneracy
        double s = 0.0;
        long kmax = (long)std::floor((1.0 / hb - d) / 2.0);
        double binom = 1.0; // C(k+d-1, d-1) at k=0
        for (long k = 0; k <= kmax; ++k) {
            double e = 1.0 - hb * (2.0 * k + d);
            if (e > 0.0)
                s += binom * std::pow(e, gamma);
            binom *= (double)(k + d) / (double)(k + 1);
        }
        res.values.push_back(std::pow(hb, d) * s);
    }
    for (size_t i = 1; i < res.values.size(); ++i)
        if (res.values[i] > res.values[i - 1] * (1.0 + 1e-12) + 1e-15)
            res.increases.push_back((int)i);
    return res;
}

double monotonicity_weyl_limit(int d, double gamma) {
    double q = gamma + 0.5 * d;
    return classical_L(GammaDim(gamma, d)).value() * sphere_area(d) * 0.5 *
           beta_fn(0.5 * d, q + 1.0);
}

ReverseBoundResult reverse_bound_check(const PotentialSpec& V, const GridOptions& opt) {
    if (V.dim() != 1)
        throw domain_error("reverse_bound_check: one-dimensional bound");
    const double X = resolve_half_width(V, opt);
    for (int i = 0; i <= 4000; ++i) {
        double x = -X + 2.0 * X * i / 4000.0;
        if (V(x) > 1e-12)
            throw domain_error("reverse_bound_check: potential must be nonpositive");
    }
    SpectrumSummary S = compute_spectrum(V, opt);
    ReverseBoundResult r;
    r.lhs = S.riesz_mean(0.5);
    r.rhs = 0.25 * V.negative_part_norm(1.0);
    r.slack = std::fabs(r.lhs - S.riesz_mean_raw(0.5)) + 1e-9 * (r.rhs + 1.0);
    r.pass = r.lhs >= r.rhs - r.slack;
    return r;
}

TwoBumpResult two_bump_experiment(double gamma, const std::vector<double>& separations,
                                  const GridOptions& opt) {
    if (!(gamma > 1.5))
        throw domain_error("two_bump_experiment: gamma must exceed 3/2 in one dimension");
    TwoBumpResult res;
    res.gamma = gamma;
    const double pp = gamma + 0.5;
    const double p = pp / (pp - 1.0);
    res.p = p;

    // soliton integrals in closed form; Pohozaev gives int Q^{2p} = 2pm/(p+1)
    QuadOptions qo{1e-14, 1e-12, 8000};
    double half_mass = integrate([p](double x) {
        double q = soliton_1d(p, x);
        return q * q;
    }, 0.0, 60.0, qo).value;
    const double m = 2.0 * half_mass;
    const double norm2p = 2.0 * p * m / (p + 1.0);
    res.soliton_mass = m;
    res.l_one = 1.0 / norm2p;

    for (double R : separations) {
        if (!(R > 0.0))
            throw domain_error("two_bump_experiment: separations must be positive");
        TwoBumpRow row;
        row.separation = R;

        PotentialSpec V = PotentialSpec::make(PotentialSpec::Family::two_bump,
                                              {{"gamma", gamma}, {"R", R}});
        GridOptions local = opt;
        if (local.half_width <= 0.0)
            local.half_width = 0.5 * R + 25.0;
        if (local.step <= 0.0)
            local.step = 1.0 / 1024.0;
        SpectrumSummary S = compute_spectrum(V, local);

        // overlap term A, concentrated between the bumps
        double A = integrate([p, R](double x) {
            double qp = soliton_1d(p, x + 0.5 * R);
            double qm = soliton_1d(p, x - 0.5 * R);
            double s = qp * qp + qm * qm;
            return std::pow(s, p) - std::pow(qp, 2.0 * p) - std::pow(qm, 2.0 * p);
        }, 0.0, 0.5 * R + 60.0, QuadOptions{1e-18, 1e-9, 8000}).value;
        row.overlap_a = A;
        row.predicted = res.l_one * (1.0 + gamma / p * A / m);

        if (S.eigenvalues.size() >= 2 && S.eigenvalues[1] < 0.0) {
            row.in_regime = true;
            row.e1 = S.eigenvalues[0];
            row.e2 = S.eigenvalues[1];
            // int V_-^{gamma+1/2} = int (Q_+^2 + Q_-^2)^p = 2 int Q^{2p} + 2A
            double denom = 2.0 * norm2p + 2.0 * A;
            row.ratio = (std::pow(-row.e1, gamma) + std::pow(-row.e2, gamma)) / denom;
        }
        res.rows.push_back(row);
    }
    return res;
}

SlaterCheck slater_identity_check(const std::vector<std::vector<double>>& us, double h) {
    const int N = (int)us.size();
    if (N < 1 || N > 3)
        throw domain_error("slater_identity_check: 1 to 3 functions supported");
    if (!(h > 0.0))
        throw domain_error("slater_identity_check: h must be positive");
    const int n = (int)us[0].size();
    for (const auto& u : us)
        if ((int)u.size() != n)
            throw domain_error("slater_identity_check: inconsistent grid sizes");
    if (N == 3 && n > 260)
        throw domain_error("slater_identity_check: grid too large for the N=3 tensor check");

    for (int a = 0; a < N; ++a)
        for (int b = a; b < N; ++b) {
            double ip = 0.0;
            for (int i = 0; i < n; ++i)
                ip += us[a][i] * us[b][i];
            ip *= h;
            if (std::fabs(ip - (a == b ? 1.0 : 0.0)) > 1e-10)
                throw domain_error("slater_identity_check: functions are not orthonormal "
                                   "on the grid (deviation " + std::to_string(ip) + ")");
        }

    // central differences with Dirichlet padding
    auto deriv = [n, h](const std::vector<double>& u) {
        std::vector<double> du(n);
        for (int i = 0; i < n; ++i) {
            double up = (i + 1 < n) ? u[i + 1] : 0.0;
            double um = (i > 0) ? u[i - 1] : 0.0;
            du[i] = (up - um) / (2.0 * h);
        }
        return du;
    };
    std::vector<std::vector<double>> dus;
    for (const auto& u : us)
        dus.push_back(deriv(u));

    SlaterCheck out;
    for (int a = 0; a < N; ++a) {
        double k = 0.0;
        for (int i = 0; i < n; ++i)
            k += dus[a][i] * dus[a][i];
        out.kinetic_sum += h * k;
    }

    const double norm = 1.0 / std::sqrt((double)std::tgamma(N + 1.0));
    // det(u_a(x_b)) with column dcol (if >= 0) replaced by the derivatives:
    // the determinant is linear in each column, so d/dx_c differentiates
    // column c only.
    auto det_at = [&](const std::vector<int>& id, int dcol) {
        auto col = [&](int a, int b) { return (b == dcol) ? dus[a][id[b]] : us[a][id[b]]; };
        if (N == 1)
            return norm * col(0, 0);
        if (N == 2)
            return norm * (col(0, 0) * col(1, 1) - col(0, 1) * col(1, 0));
        double d0 = col(1, 1) * col(2, 2) - col(1, 2) * col(2, 1);
        double d1 = col(1, 0) * col(2, 2) - col(1, 2) * col(2, 0);
        double d2 = col(1, 0) * col(2, 1) - col(1, 1) * col(2, 0);
        return norm * (col(0, 0) * d0 - col(0, 1) * d1 + col(0, 2) * d2);
    };

    double kin_det = 0.0;
    std::vector<double> rho(n, 0.0);
    const double cell = std::pow(h, N);
    std::vector<int> counter(N, 0);
    while (true) {
        double psi = det_at(counter, -1);
        for (int c = 0; c < N; ++c) {
            double dpsi = det_at(counter, c);
            kin_det += dpsi * dpsi;
        }
        rho[counter[0]] += (double)N * psi * psi;

        int c = N - 1;
        while (c >= 0 && ++counter[c] == n) {
            counter[c] = 0;
            --c;
        }
        if (c < 0)
            break;
    }
    out.kinetic_det = kin_det * cell;
    for (int i = 0; i < n; ++i) {
        double expect = 0.0;
        for (int a = 0; a < N; ++a)
            expect += us[a][i] * us[a][i];
        double got = rho[i] * std::pow(h, N - 1);
        out.rho_max_err = std::max(out.rho_max_err, std::fabs(got - expect));
    }
    double rel = std::fabs(out.kinetic_det - out.kinetic_sum) /
                 std::max(out.kinetic_sum, 1e-300);
    out.pass = rel <= 1e-8 && out.rho_max_err <= 1e-8;
    return out;
}

} // namespace lt
