#pragma once

#include <vector>

#include "constants.hpp"

namespace lt {

// Coulomb system size/charge data plus the kinetic-inequality constant the
// bound is computed from (a lower bound on the optimal K_3, or a conjectured
// exact value).
struct MatterSystem {
    int n_electrons = 1;
    int n_nuclei = 1;
    double max_charge = 1.0;
    ConstantValue k3;

    MatterSystem(int n, int k, double z, ConstantValue k3_);
};

// Best proven lower bound on K_3: (0.471851)^{1/3} K^cl_3.
ConstantValue k3_best();
// Conjectured optimal K_3 = K^cl_3 (labeled conjectured).
ConstantValue k3_conjectured();

// Ground-state energy bound
//   E >= -(3 pi^{4/3} / (2^{2/3} 5)) k3^{-1} (2z+1)^2 (N+K).
double stability_bound(const MatterSystem& sys);

// 4 pi int_0^1 (1/r - 1)^{5/2} r^2 dr, asserted equal to 5 pi^2/4 to 1e-9.
double baxter_integral_check();

struct ProofChainResult {
    double t_star = 0.0;       // closed-form minimizer over T
    double t_grid = 0.0;       // grid-search argmin
    double mu_star = 0.0;      // closed-form minimizer over mu
    double mu_grid = 0.0;      // grid-search argmin
    double value_kn = 0.0;     // -(3^2 pi^{4/3}/(2^{4/3} 5)) k3^{-1} (2z+1)^2 K^{2/3} N^{1/3}
    double value_kn_grid = 0.0;
    double value_final = 0.0;  // after K^{2/3} N^{1/3} <= (2^{2/3}/3)(K+N)
    double am_gm_lhs = 0.0;    // K^{2/3} N^{1/3}
    double am_gm_rhs = 0.0;    // (2^{2/3}/3)(K+N)
};

// The two sequential closed-form optimizations in the stability proof,
// verified against grid searches over T and mu. Ranges are multiplicative
// factors around the closed-form optimizers (must exceed 1).
ProofChainResult proof_chain_optimizers(double t_range, double mu_range, double z, int K, int N,
                                        double k3);

} // namespace lt
