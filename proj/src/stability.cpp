#include "stability.hpp"

#include <cmath>

#include "errors.hpp"
#include "quadrature.hpp"

namespace lt {

MatterSystem::MatterSystem(int n, int k, double z, ConstantValue k3_)
    : n_electrons(n), n_nuclei(k), max_charge(z), k3(std::move(k3_)) {
    if (n < 1 || k < 1)
        throw domain_error("MatterSystem: need at least one electron and one nucleus");
    if (!(max_charge >= 0.0))
        throw domain_error("MatterSystem: charge must be nonnegative");
    if (k3.direction() == BoundDir::upper_bound)
        throw domain_error("MatterSystem: K3 must be a lower bound or exact value");
}

ConstantValue k3_best() {
    double v = std::pow(0.471851, 1.0 / 3.0) * classical_K(3).value();
    return ConstantValue(v, ConstKind::improved_bound, BoundDir::lower_bound,
                         "Frank-Hundertmark-Jex-Nam 2021");
}

ConstantValue k3_conjectured() {
    return ConstantValue(classical_K(3).value(), ConstKind::conjectured, BoundDir::lower_bound,
                         "Lieb-Thirring conjecture (K_3 = K_3^cl)");
}

double stability_bound(const MatterSystem& sys) {
    double z = sys.max_charge;
    return -(3.0 * std::pow(M_PI, 4.0 / 3.0) / (std::pow(2.0, 2.0 / 3.0) * 5.0)) /
           sys.k3.value() * (2.0 * z + 1.0) * (2.0 * z + 1.0) *
           (sys.n_electrons + sys.n_nuclei);
}

double baxter_integral_check() {
    // substitution r = t^2 removes the r^{-1/2} endpoint and collapses the
    // integrand to 2 (1 - t^2)^{5/2}
    QuadResult q = integrate([](double t) {
        return 2.0 * std::pow(1.0 - t * t, 2.5);
    }, 0.0, 1.0, {1e-14, 1e-12});
    double value = 4.0 * M_PI * q.value;
    double expect = 5.0 * M_PI * M_PI / 4.0;
    if (std::fabs(value - expect) > 1e-9 * expect)
        throw accuracy_error("baxter_integral_check: quadrature does not match 5 pi^2/4");
    return value;
}

ProofChainResult proof_chain_optimizers(double t_range, double mu_range, double z, int K, int N,
                                        double k3) {
    if (!(t_range > 1.0) || !(mu_range > 1.0))
        throw domain_error("proof_chain_optimizers: ranges are factors > 1");
    if (K < 1 || N < 1 || !(z >= 0.0) || !(k3 > 0.0))
        throw domain_error("proof_chain_optimizers: bad system parameters");

    const double baxter = 5.0 * M_PI * M_PI / 4.0;
    const double zz = 2.0 * z + 1.0;

    ProofChainResult res;

    // Stage 2 objective after the T optimization:
    //   G(mu) = -(2 3^{3/2}/5^{5/2}) k3^{-3/2} I(mu) - mu N,
    //   I(mu) = (2z+1)^3 mu^{-1/2} baxter K.
    const double c_t = 2.0 * std::pow(3.0, 1.5) / std::pow(5.0, 2.5);
    auto I_of = [&](double mu) { return std::pow(zz, 3.0) / std::sqrt(mu) * baxter * K; };
    auto G_of = [&](double mu) { return -c_t * std::pow(k3, -1.5) * I_of(mu) - mu * N; };

    const double a_coef = c_t * std::pow(k3, -1.5) * std::pow(zz, 3.0) * baxter * K;
    res.mu_star = std::pow(a_coef / (2.0 * N), 2.0 / 3.0);

    // Stage 1 objective at mu = mu_star:
    //   F(T) = k3 T - I(mu*)^{2/5} T^{3/5} - mu* N.
    const double c5 = std::pow(I_of(res.mu_star), 0.4);
    auto F_of = [&](double T) { return k3 * T - c5 * std::pow(T, 0.6) - res.mu_star * N; };
    res.t_star = std::pow(0.6 * c5 / k3, 2.5);

    // grid searches (log-spaced) around the closed forms: the T stage is a
    // minimization (the bound must hold for the worst T), the mu stage a
    // maximization (the best lower bound over the free parameter mu)
    auto grid_opt = [](auto&& f, double center, double range, double sign) {
        const int n = 6001;
        double best_x = center, best_f = sign * f(center);
        for (int i = 0; i <= n; ++i) {
            double x = center * std::pow(range, -1.0 + 2.0 * i / n);
            double v = sign * f(x);
            if (v < best_f) {
                best_f = v;
                best_x = x;
            }
        }
        return std::make_pair(best_x, best_f);
    };
    auto [tg, ftg] = grid_opt(F_of, res.t_star, t_range, 1.0);
    auto [mg, fmg] = grid_opt(G_of, res.mu_star, mu_range, -1.0);
    res.t_grid = tg;
    res.mu_grid = mg;
    res.value_kn_grid = -fmg;
    (void)ftg;

    res.value_kn = -(9.0 * std::pow(M_PI, 4.0 / 3.0) / (std::pow(2.0, 4.0 / 3.0) * 5.0)) / k3 *
                   zz * zz * std::pow((double)K, 2.0 / 3.0) * std::pow((double)N, 1.0 / 3.0);
    res.am_gm_lhs = std::pow((double)K, 2.0 / 3.0) * std::pow((double)N, 1.0 / 3.0);
    res.am_gm_rhs = std::pow(2.0, 2.0 / 3.0) / 3.0 * (K + N);
    res.value_final = -(3.0 * std::pow(M_PI, 4.0 / 3.0) / (std::pow(2.0, 2.0 / 3.0) * 5.0)) / k3 *
                      zz * zz * (N + K);
    return res;
}

} // namespace lt
