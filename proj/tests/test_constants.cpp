#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "constants.hpp"
#include "errors.hpp"
#include "oracles.hpp"
#include "special.hpp"

using namespace lt;

TEST_CASE("gamma function examples") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK_THROWS_AS(gamma_fn(0.0), domain_error);
    CHECK_THROWS_AS(gamma_fn(-2.5), domain_error);
    // accuracy across the working range, against exact integer factorials
    double fact = 1.0;
    for (int n = 1; n <= 20; ++n) {
        fact *= n;
        CHECK(gamma_fn(n + 1.0) == doctest::Approx(fact).epsilon(1e-13));
    }
}

TEST_CASE("unit ball and sphere measures") {
    CHECK(unit_ball_volume(1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(unit_ball_volume(2) == doctest::Approx(M_PI).epsilon(1e-14));
    CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-14));
    CHECK(sphere_area(1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(sphere_area(2) == doctest::Approx(2.0 * M_PI).epsilon(1e-14));
    CHECK(sphere_area(3) == doctest::Approx(4.0 * M_PI).epsilon(1e-14));
    CHECK_THROWS_AS(unit_ball_volume(0), domain_error);
    CHECK_THROWS_AS(sphere_area(-1), domain_error);
}

TEST_CASE("admissible region") {
    CHECK(GammaDim::admissible(0.5, 1));
    CHECK_FALSE(GammaDim::admissible(0.49, 1));
    CHECK(GammaDim::admissible(1e-8, 2));
    CHECK_FALSE(GammaDim::admissible(0.0, 2));
    CHECK(GammaDim::admissible(0.0, 3));
    CHECK_THROWS_AS(GammaDim(0.3, 1), domain_error);
    CHECK_THROWS_AS(GammaDim(0.0, 2), domain_error);
}

TEST_CASE("constant value invariants") {
    CHECK_THROWS_AS(ConstantValue(0.0, ConstKind::classical, BoundDir::exact, ""), domain_error);
    CHECK_THROWS_AS(ConstantValue(-1.0, ConstKind::classical, BoundDir::exact, ""), domain_error);
    ConstantValue c(2.0, ConstKind::literature, BoundDir::upper_bound, "source");
    CHECK(c.value() == 2.0);
    CHECK(c.kind() == ConstKind::literature);
    CHECK(c.direction() == BoundDir::upper_bound);
}

TEST_CASE("classical constants") {
    CHECK(classical_L(GammaDim(0.5, 1)).value() == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(classical_L(GammaDim(1.0, 1)).value() ==
          doctest::Approx(2.0 / (3.0 * M_PI)).epsilon(1e-14));
    CHECK(classical_K(1).value() == doctest::Approx(M_PI * M_PI / 3.0).epsilon(1e-14));
    CHECK(classical_K(2).value() == doctest::Approx(2.0 * M_PI).epsilon(1e-14));

    // cross-formula agreement: L^cl_{1,d} = (2/(d+2)) omega_d / (2 pi)^d
    for (int d = 1; d <= 10; ++d) {
        double direct = 2.0 / (d + 2.0) * unit_ball_volume(d) / std::pow(2.0 * M_PI, d);
        CHECK(classical_L(GammaDim(1.0, d)).value() == doctest::Approx(direct).epsilon(1e-12));
    }
    // K^cl_3 through the duality from L^cl_{1,3}
    CHECK(duality_K_from_L(classical_L(GammaDim(1.0, 3)).value(), 3) ==
          doctest::Approx(classical_K(3).value()).epsilon(1e-13));
}

TEST_CASE("duality round trips and the lifted factor") {
    for (int d = 1; d <= 10; ++d)
        for (int k = -3; k <= 3; ++k) {
            double L = std::pow(10.0, k);
            CHECK(duality_L_from_K(duality_K_from_L(L, d), d) ==
                  doctest::Approx(L).epsilon(1e-12));
        }
    // scaling: K(1.456 L^cl) = 1.456^{-2/d} K^cl, numerically the published
    // 0.471851^{1/d} to three significant digits
    for (int d = 1; d <= 3; ++d) {
        double K = duality_K_from_L(1.456 * classical_L(GammaDim(1.0, d)).value(), d);
        double factor = K / classical_K(d).value();
        CHECK(factor == doctest::Approx(std::pow(0.471851, 1.0 / d)).epsilon(5e-4));
    }
    CHECK_THROWS_AS(duality_K_from_L(0.0, 3), domain_error);
    CHECK_THROWS_AS(duality_L_from_K(-1.0, 3), domain_error);
}

TEST_CASE("one-eigenvalue duality") {
    // p=3, d=1 with K1 = pi^2/4 reproduces the closed-form L^(1)_{1,1}
    double L = keller_duality(3.0, 1, M_PI * M_PI / 4.0);
    CHECK(L == doctest::Approx(one_particle_L_1d(1.0).value()).epsilon(1e-12));

    // round trip through both directions
    for (double p : {1.2, 1.9, 2.5, 3.0}) {
        double rhs = keller_rhs(p, 1);
        double K1 = 2.0;
        double L1 = keller_duality(p, 1, K1);
        CHECK(rhs / std::pow(K1, 0.5) == doctest::Approx(L1).epsilon(1e-13));
        CHECK(keller_duality_K(p, 1, L1) == doctest::Approx(K1).epsilon(1e-12));
    }

    // p -> 1+2/d endpoint reproduces the gamma=1 correspondence
    for (int d = 1; d <= 4; ++d) {
        double p = 1.0 + 2.0 / d;
        double K1 = classical_K(d).value(); // any positive value works
        double L1 = keller_duality(p, d, K1);
        double lhs = std::pow((1.0 + 0.5 * d) * L1, 1.0 + 2.0 / d) *
                     std::pow((1.0 + 2.0 / d) * K1, 1.0 + 0.5 * d);
        CHECK(lhs == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(keller_duality(1.0, 1, 1.0), domain_error);
    CHECK_THROWS_AS(keller_duality(3.5, 1, 1.0), domain_error); // beyond 1+2/d
    CHECK_THROWS_AS(keller_duality(2.0, 1, -1.0), domain_error);
}

TEST_CASE("one-particle constant in 1D") {
    CHECK(one_particle_L_1d(0.5).value() == doctest::Approx(0.5).epsilon(1e-14));
    // crossing with the semiclassical curve at gamma = 3/2
    CHECK(one_particle_L_1d(1.5).value() ==
          doctest::Approx(classical_L(GammaDim(1.5, 1)).value()).epsilon(1e-10));
    CHECK(one_particle_L_1d(2.0).value() == doctest::Approx(0.15782).epsilon(2e-4));
    CHECK_THROWS_AS(one_particle_L_1d(0.4), domain_error);

    // the ratio to the semiclassical constant decreases strictly
    double prev = 1e300;
    for (double g = 0.5; g <= 3.0 + 1e-9; g += 0.1) {
        double r = one_particle_L_1d(g).value() / classical_L(GammaDim(g, 1)).value();
        CHECK(r < prev);
        prev = r;
    }
}

TEST_CASE("layer-cake constant") {
    CHECK(aizenman_lieb_constant(0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(aizenman_lieb_constant(1.0, 2.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_THROWS_AS(aizenman_lieb_constant(2.0, 2.0), domain_error);
    CHECK_THROWS_AS(aizenman_lieb_constant(-0.1, 1.0), domain_error);

    // identity at E=-2, gamma=1/2, sigma=3/2 against the Simpson oracle
    {
        double C = aizenman_lieb_constant(0.5, 1.5);
        double E = 2.0; // |E|
        double integral = oracle::simpson(
            [E](double tau) { return std::sqrt(E - tau) * std::pow(tau, 0.0); }, 0.0, E, 1e-12);
        // tau^{sigma-gamma-1} = tau^0
        CHECK(C * integral == doctest::Approx(std::pow(2.0, 1.5)).epsilon(1e-8));
    }

    // 20 seeded random triples: C * int_0^|E| (|E|-tau)^g tau^{s-g-1} dtau = |E|^s.
    // The cubic substitution tau = E t^2 (3-2t) flattens both endpoint
    // singularities so the Simpson oracle converges cleanly.
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ug(0.05, 2.5), ds(0.3, 2.0), ue(0.2, 5.0);
    for (int i = 0; i < 20; ++i) {
        double g = ug(rng), s = g + ds(rng), E = ue(rng);
        double C = aizenman_lieb_constant(g, s);
        double integral = oracle::simpson(
            [&](double t) {
                double tau = E * t * t * (3.0 - 2.0 * t);
                double jac = 6.0 * E * t * (1.0 - t);
                if (tau <= 0.0 || tau >= E)
                    return 0.0;
                return std::pow(E - tau, g) * std::pow(tau, s - g - 1.0) * jac;
            },
            0.0, 1.0, 1e-12);
        CHECK(C * integral == doctest::Approx(std::pow(E, s)).epsilon(1e-8));
    }
}

TEST_CASE("literature bounds table") {
    // gamma = 1, d = 3: single upper bound 1.456 L^cl
    {
        auto rows = best_known_bounds(GammaDim(1.0, 3));
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].value() ==
              doctest::Approx(1.456 * classical_L(GammaDim(1.0, 3)).value()).epsilon(1e-13));
        CHECK(rows[0].direction() == BoundDir::upper_bound);
    }
    // gamma = 0, d = 3: Lieb's upper bound and the one-particle lower bound
    {
        auto rows = best_known_bounds(GammaDim(0.0, 3));
        REQUIRE(rows.size() == 2);
        double lcl = classical_L(GammaDim(0.0, 3)).value();
        CHECK(rows[0].value() == doctest::Approx(6.86924 * lcl).epsilon(1e-13));
        CHECK(rows[0].direction() == BoundDir::upper_bound);
        CHECK(rows[1].value() == doctest::Approx(8.0 / std::sqrt(3.0) * lcl).epsilon(1e-13));
        CHECK(rows[1].direction() == BoundDir::lower_bound);
        CHECK(rows[1].value() / lcl == doctest::Approx(4.6188).epsilon(1e-4));
    }
    // gamma = 2, d = 1: exact semiclassical value
    {
        auto rows = best_known_bounds(GammaDim(2.0, 1));
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].direction() == BoundDir::exact);
        CHECK(rows[0].value() ==
              doctest::Approx(classical_L(GammaDim(2.0, 1)).value()).epsilon(1e-14));
    }
    // gamma = 1/2, d = 1: exact one-particle value plus the 2 L^cl row
    {
        auto rows = best_known_bounds(GammaDim(0.5, 1));
        REQUIRE(rows.size() == 2);
        CHECK(rows[0].value() == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(rows[0].direction() == BoundDir::exact);
        CHECK(rows[1].value() == doctest::Approx(0.5).epsilon(1e-14)); // 2 * (1/4)
    }
    // d=2 gammas in (0, 1/2) carry no literature row (no extrapolation)
    CHECK(best_known_bounds(GammaDim(0.3, 2)).empty());
    // gamma in [1/2,1): dimension-dependent factors
    CHECK(best_known_bounds(GammaDim(0.7, 1))[0].value() ==
          doctest::Approx(2.0 * classical_L(GammaDim(0.7, 1)).value()).epsilon(1e-13));
    CHECK(best_known_bounds(GammaDim(0.7, 2))[0].value() ==
          doctest::Approx(2.912 * classical_L(GammaDim(0.7, 2)).value()).epsilon(1e-13));
}
