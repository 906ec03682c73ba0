#pragma once

#include <iosfwd>
#include <vector>

#include "constants.hpp"

namespace lt {

struct ShootOptions {
    double ode_tol = 1e-12;        // per-step tolerance of the embedded RK pair
    double bisect_rel_tol = 1e-15; // relative tolerance of the Q(0) bisection
    double bracket_lo = 0.0;       // 0 = automatic
    double bracket_hi = 0.0;       // 0 = automatic
    double profile_cut = 1e-6;     // profile kept while Q > cut * Q(0)
    double max_step = 0.05;        // output resolution of the sampled profile
    double residual_tol = 1e-6;    // Pohozaev residual contract
};

// Sampled decaying positive radial solution of
//   Q'' + (d-1)/r Q' = Q - Q^{2p-1},  Q'(0) = 0,
// with its integrals over R^d and Pohozaev residuals (relative to the mass).
struct RadialProfile {
    int dim = 0;
    double p = 0.0;
    double q0 = 0.0; // Q(0)
    std::vector<double> r;
    std::vector<double> q;
    double mass = 0.0;    // int Q^2 dx
    double kinetic = 0.0; // int |grad Q|^2 dx
    double norm2p = 0.0;  // int Q^{2p} dx
    double pohozaev1 = 0.0;
    double pohozaev2 = 0.0;
    void write_csv(std::ostream& os) const; // columns r,Q
};

// Largest admissible nonlinearity exponent: inf for d = 1, 2 and d/(d-2) for
// d >= 3 (excluded endpoint = critical Sobolev power).
double admissible_p_max(int d);

// Shooting solve. Throws solver_error when the bracket cannot be established
// and accuracy_error when the residual contract fails.
RadialProfile shoot_ground_state(int d, double p, const ShootOptions& opt = {});

// 1D soliton in closed form, same normalization:
//   Q(x) = (p sech^2((p-1) x))^{1/(2p-2)}.
double soliton_1d(double p, double x);

// L^(1)_{gamma,d}: closed form for d = 1; 1/int Q^{2p} from shooting for
// d >= 2 (p' = gamma + d/2, p = p'/(p'-1)); Sobolev-optimizer value for
// gamma = 0, d >= 3.
ConstantValue one_particle_L(const GammaDim& gd);

// K^(1)_{p,d}: (d/(d+2)) m^{2/d} at p = 1+2/d, one-eigenvalue duality otherwise.
ConstantValue one_particle_K(double p, int d);

// Crossing exponent gamma_c(d) of L^(1)_{gamma,d} = L^cl_{gamma,d}, 1 <= d <= 7.
double gamma_crossing(int d);

} // namespace lt
