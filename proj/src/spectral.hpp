#pragma once

#include <optional>
#include <string>
#include <vector>

#include "constants.hpp"
#include "potentials.hpp"
#include "tridiag.hpp"

namespace lt {

struct GridOptions {
    double half_width = 0.0; // domain [-X,X] (1D) or (0,X] (radial); 0 = auto
    double step = 0.0;       // grid step; 0 = auto
    int ell_max = 24;        // radial channel cap
    bool richardson = true;  // extrapolate eigenvalues from h and h/2
    double hbar2 = 1.0;      // kinetic coefficient in -hbar2 * Laplacian
    double coupling = 1.0;   // potential multiplier (coupling constant)
};

// Negative spectrum of a discretized Schroedinger operator, with enough state
// to re-evaluate Sturm counts on the fine grid.
struct SpectrumSummary {
    int dim = 1;
    std::vector<double> eigenvalues;     // Richardson-extrapolated, ascending
    std::vector<double> multiplicity;    // parallel weights (radial degeneracy)
    std::vector<double> eigenvalues_raw; // fine-grid values (Sturm-consistent)
    std::vector<double> multiplicity_raw;
    double step = 0.0;
    double half_width = 0.0;
    int channels_used = 0;
    bool truncated = false; // ell_max reached while channels still contribute

    std::vector<Tridiag> ops; // fine-grid operators (one per channel)
    std::vector<double> op_mult;

    // number of states below the threshold, from Sturm counts (weighted)
    double count_below(double threshold) const;
    // sum mult * |E|^gamma over negative eigenvalues (extrapolated values)
    double riesz_mean(double gamma) const;
    double riesz_mean_raw(double gamma) const;
};

// Symmetric tridiagonal representation of -hbar2 d^2/dx^2 + coupling*V on
// [-X, X] with Dirichlet ends; requires 2X/step integral.
Tridiag discretize_1d(const PotentialSpec& V, double half_width, double step,
                      double hbar2 = 1.0, double coupling = 1.0);

// Half-line channel operator after the Liouville substitution u = r^{(d-1)/2} psi:
//   -hbar2 u'' + hbar2 (2l+d-1)(2l+d-3)/(4 r^2) u + V u, u(0) = 0.
Tridiag discretize_radial_channel(const PotentialSpec& V, int d, int ell, double r_max,
                                  double step, double hbar2 = 1.0, double coupling = 1.0);

// Spherical-harmonic multiplicity in R^d: (2l+d-2)(l+d-3)!/(l!(d-2)!), with
// the l=0 convention 1.
long long harmonic_multiplicity(int d, int ell);

// Full negative spectrum (1D or radial by V.dim()).
SpectrumSummary compute_spectrum(const PotentialSpec& V, const GridOptions& opt = {});

// Believed-optimal constant where the literature states a definite
// conjecture (exact where proven); nullopt otherwise.
std::optional<ConstantValue> conjectured_bound(const GammaDim& gd);

struct RatioRow {
    double gamma = 0.0;
    double riesz = 0.0;
    double vnorm = 0.0;
    double ratio = 0.0;
    std::optional<double> best_upper;
    bool pass_best = true;
    std::optional<double> conjectured;
    std::string conjectured_kind;
    bool pass_conjectured = true;
};

// Riesz-mean / potential-norm ratios with pass/fail against the literature
// bounds and the conjectured constants (slack absorbs discretization error).
std::vector<RatioRow> lt_ratio_report(const PotentialSpec& V, const std::vector<double>& gammas,
                                      const GridOptions& opt = {}, double slack = 5e-3);

struct WeylRow {
    double alpha = 0.0;
    double ratio = 0.0; // alpha^{-gamma-d/2} riesz / (L^cl int V_-^{gamma+d/2})
};

std::vector<WeylRow> weyl_convergence(const PotentialSpec& V, double gamma,
                                      const std::vector<double>& alphas,
                                      const GridOptions& opt = {});

struct MonotonicityResult {
    std::vector<double> hbars;
    std::vector<double> values;
    std::vector<int> increases; // indices i with values[i] > values[i-1]
};

// Closed-form scan of h(hbar) = hbar^d sum_n (1 - hbar(2|n|_1+d))_+^gamma for
// the shifted harmonic potential |x|^2 - 1.
MonotonicityResult monotonicity_experiment(int d, double gamma, const std::vector<double>& hbars);

// Its hbar -> 0 limit L^cl_{gamma,d} int (|x|^2-1)_-^{gamma+d/2} dx (Beta function).
double monotonicity_weyl_limit(int d, double gamma);

struct ReverseBoundResult {
    double lhs = 0.0;   // sum |E_n|^{1/2}
    double rhs = 0.0;   // (1/4) int V_-
    double slack = 0.0; // discretization allowance
    bool pass = false;
};

// 1D lower bound sum |E_n|^{1/2} >= (1/4) int V_- for V <= 0.
ReverseBoundResult reverse_bound_check(const PotentialSpec& V, const GridOptions& opt = {});

struct TwoBumpRow {
    double separation = 0.0;
    double e1 = 0.0, e2 = 0.0;
    double ratio = 0.0;     // (|E1|^g + |E2|^g) / int V_-^{g+1/2}
    double overlap_a = 0.0; // A = (1/2) int ((Q+^2+Q-^2)^p - Q+^{2p} - Q-^{2p})
    double predicted = 0.0; // L^(1) (1 + (g/p) A/m)
    bool in_regime = false; // two bound states resolved
};

struct TwoBumpResult {
    double gamma = 0.0, p = 0.0;
    double soliton_mass = 0.0;
    double l_one = 0.0; // L^(1)_{gamma,1}
    std::vector<TwoBumpRow> rows;
};

// Two-bump construction in d = 1; requires gamma > 3/2.
TwoBumpResult two_bump_experiment(double gamma, const std::vector<double>& separations,
                                  const GridOptions& opt = {});

struct SlaterCheck {
    double kinetic_det = 0.0; // int |grad psi|^2 over the tensor grid
    double kinetic_sum = 0.0; // sum int |u_n'|^2
    double rho_max_err = 0.0; // max_i |rho_psi - sum |u_n|^2|
    bool pass = false;
};

// Determinant identities on a uniform grid (spacing h, Dirichlet ends):
// kinetic additivity and density splitting for 1-3 orthonormal functions.
SlaterCheck slater_identity_check(const std::vector<std::vector<double>>& us, double h);

} // namespace lt
