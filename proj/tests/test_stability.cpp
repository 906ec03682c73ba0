#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "constants.hpp"
#include "errors.hpp"
#include "stability.hpp"

using namespace lt;

TEST_CASE("energy bound formula") {
    // z=1, N=K=1 with the best kinetic constant, from first principles
    double k3 = std::pow(0.471851, 1.0 / 3.0) * classical_K(3).value();
    CHECK(k3_best().value() == doctest::Approx(k3).epsilon(1e-14));
    MatterSystem sys(1, 1, 1.0, k3_best());
    double expect = -(3.0 * std::pow(M_PI, 4.0 / 3.0) / (std::pow(2.0, 2.0 / 3.0) * 5.0)) / k3 *
                    9.0 * 2.0;
    CHECK(stability_bound(sys) == doctest::Approx(expect).epsilon(1e-10));

    // charge-free system: (2z+1)^2 = 1
    MatterSystem neutral(2, 3, 0.0, k3_best());
    CHECK(stability_bound(neutral) ==
          doctest::Approx(expect / (9.0 * 2.0) * 5.0).epsilon(1e-12));

    // linear in N+K
    MatterSystem doubled(2, 2, 1.0, k3_best());
    CHECK(stability_bound(doubled) == doctest::Approx(2.0 * stability_bound(sys)).epsilon(1e-12));

    // monotonicity sweeps
    double prev = 0.0;
    for (double z : {0.0, 0.5, 1.0, 2.0, 4.0}) {
        MatterSystem s(1, 1, z, k3_best());
        double b = stability_bound(s);
        CHECK(b < prev + 1e-15); // decreases (more negative) with charge
        prev = b;
    }
    // a larger (better) kinetic constant never worsens the bound
    MatterSystem better(1, 1, 1.0, k3_conjectured()); // K^cl_3 > best lower bound
    CHECK(stability_bound(better) > stability_bound(sys));

    // an upper-bound constant is rejected
    ConstantValue bad(1.0, ConstKind::literature, BoundDir::upper_bound, "");
    CHECK_THROWS_AS(MatterSystem(1, 1, 1.0, bad), domain_error);
    CHECK_THROWS_AS(MatterSystem(0, 1, 1.0, k3_best()), domain_error);
}

TEST_CASE("short-range integral") {
    double v = baxter_integral_check();
    CHECK(v == doctest::Approx(5.0 * M_PI * M_PI / 4.0).epsilon(1e-9));
    CHECK(v == doctest::Approx(12.337).epsilon(1e-4));

    // pointwise max <= sum over nuclei (the step that yields the factor K)
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    const double R1[3] = {0.7, 0.0, 0.0}, R2[3] = {-0.7, 0.3, 0.0};
    auto phi = [](double dx, double dy, double dz) {
        double r = std::sqrt(dx * dx + dy * dy + dz * dz);
        double t = 1.0 / r - 1.0;
        return t > 0.0 ? std::pow(t, 2.5) : 0.0;
    };
    for (int i = 0; i < 1000; ++i) {
        double x = u(rng), y = u(rng), z = u(rng);
        double p1 = phi(x - R1[0], y - R1[1], z - R1[2]);
        double p2 = phi(x - R2[0], y - R2[1], z - R2[2]);
        CHECK(std::max(p1, p2) <= p1 + p2 + 1e-15);
    }
}

TEST_CASE("proof chain optimizers") {
    ProofChainResult r = proof_chain_optimizers(4.0, 4.0, 1.0, 2, 3, k3_best().value());
    CHECK(r.t_grid == doctest::Approx(r.t_star).epsilon(1e-3));
    CHECK(r.mu_grid == doctest::Approx(r.mu_star).epsilon(1e-3));
    // the closed-form intermediate bound agrees with the mu-stage maximum
    CHECK(r.value_kn == doctest::Approx(r.value_kn_grid).epsilon(1e-6));
    // AM-GM step: K^{2/3} N^{1/3} <= (2^{2/3}/3)(K+N), strict off K=N
    CHECK(r.am_gm_lhs < r.am_gm_rhs);
    ProofChainResult eq = proof_chain_optimizers(2.0, 2.0, 0.5, 4, 4, 5.0);
    CHECK(eq.am_gm_lhs < eq.am_gm_rhs); // strict slack remains at K=N
    CHECK(eq.am_gm_rhs / eq.am_gm_lhs ==
          doctest::Approx(std::pow(2.0, 2.0 / 3.0) * 2.0 / 3.0).epsilon(1e-12));
    // final bound is weaker (more negative) than the K^{2/3} N^{1/3} form
    CHECK(r.value_final <= r.value_kn + 1e-12);
    CHECK_THROWS_AS(proof_chain_optimizers(0.5, 2.0, 1.0, 1, 1, 1.0), domain_error);
    CHECK_THROWS_AS(proof_chain_optimizers(2.0, 2.0, 1.0, 0, 1, 1.0), domain_error);
}
