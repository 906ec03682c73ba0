#pragma once

#include <functional>
#include <string>
#include <vector>

#include "constants.hpp"

namespace lt {

// Trial pair (f, w) for the kinetic-energy variational functional
//   I_d[f,w] = (int w^2)^{d/2} int_0^inf (1 - g(t))^2 / t^{1+d/2} dt,
//   g(t) = int_0^inf w(s) f(s t) ds,  int f^2 = 1.
// f is normalized at construction; w is kept as given (its integrals are
// recorded). The descriptor carries family name + parameters for
// serialization and reproducible re-construction.
struct TrialPair {
    std::function<double(double)> f;
    std::function<double(double)> w;
    double w_support = 1.0;  // w vanishes beyond this point
    double f_tail = 100.0;   // f(s)^2 < 1e-14 beyond this point
    double f_norm2 = 1.0;    // int f^2 after normalization
    double w_l1 = 0.0;       // int w
    double w_l2sq = 0.0;     // int w^2
    std::string family;
    std::vector<double> params;

    std::string to_json() const;
};

// The four-exponent family
//   f(s) = (1 + mu0 s^{a})^{-b},  w(s) = c0 (1 - s^{u})^{v} / (1+s) on [0,1],
// with mu0 fixed by int f^2 = 1 (root-finding) and c0 by int w = 1.
TrialPair family_trial(double a, double b, double u, double v);

// Published exponents (4.5, 0.25, 0.36, 2.1).
TrialPair paper_trial();

// Tabulated pair: linear interpolation, f amplitude-normalized to unit L2.
TrialPair tabulated_trial(const std::vector<double>& s, const std::vector<double>& fv,
                          const std::vector<double>& sw, const std::vector<double>& wv);

TrialPair trial_from_json(const std::string& json_text);

// g(t) by adaptive quadrature.
double convolve_g(const TrialPair& tp, double t);

// I_d evaluation; improper ends handled by exponential substitutions split at
// t = 1. err_estimate (optional) receives the quadrature error estimate.
double rumin_functional(const TrialPair& tp, int d, double* err_estimate = nullptr);

struct RuminResult {
    double i_value;       // I_d
    double k_tilde;       // improved kinetic constant
    double excess_K;      // k_tilde / K^cl_d
    double excess_L_dual; // implied L-side factor = excess_K^{-d/2}
};

// K~_d = 2^{6/d} d^{1-2/d} / (d+2)^{1+4/d} * I_d^{-2/d} * K^cl_d; also checks
// the equivalent |S^{d-1}| form to 1e-12.
RuminResult k_tilde(int d, double i_d);

// d-dimensional bound L_d <= (K^cl_1 / K~_1)^{1/2} L^cl_d obtained by lifting
// the one-dimensional bound; verifies L^cl_{1,1} L^cl_{3/2,d-1} = L^cl_{1,d}.
ConstantValue lifting_chain(int d, double i_1);

// Derivative-free search over the family exponents (log-parametrized,
// renormalizing each step). Returns a pair no worse than the seed.
TrialPair optimize_trial(const TrialPair& seed, int d, int budget, unsigned rng_seed = 0,
                         double* best_value = nullptr);

// Upper bound on K_d from the plane-wave trial state with a trapezoidal
// radial cutoff: chi = 1 on [0, 1-ramp], linear to 0 at 1.
//   [ d/(d+2) int chi^2 + (muL2)^{-1} int |grad chi|^2 ]
//     / [ (omega_d/(2pi)^d)^{2/d} int chi^{2+4/d} ]
double semiclassical_trial_bound(double ramp, double mu_l2, int d);

} // namespace lt
