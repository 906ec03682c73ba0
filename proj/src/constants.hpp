#pragma once

#include <string>
#include <vector>

namespace lt {

// Riesz exponent / dimension pair restricted to the admissible region of the
// Lieb-Thirring family: gamma >= 1/2 if d=1, gamma > 0 if d=2, gamma >= 0 if d>=3.
class GammaDim {
public:
    GammaDim(double gamma, int dim);
    double gamma() const { return gamma_; }
    int dim() const { return dim_; }
    static bool admissible(double gamma, int dim);

private:
    double gamma_;
    int dim_;
};

enum class ConstKind { classical, one_particle, improved_bound, conjectured, literature };
enum class BoundDir { exact, upper_bound, lower_bound };

const char* to_string(ConstKind k);
const char* to_string(BoundDir d);

// A numeric constant together with what it is (kind) and which way it bounds
// the optimal constant (direction). Immutable after construction.
class ConstantValue {
public:
    ConstantValue(double value, ConstKind kind, BoundDir direction, std::string provenance);
    double value() const { return value_; }
    ConstKind kind() const { return kind_; }
    BoundDir direction() const { return direction_; }
    const std::string& provenance() const { return provenance_; }

private:
    double value_;
    ConstKind kind_;
    BoundDir direction_;
    std::string provenance_;
};

// Semiclassical constants.
//   L^cl_{gamma,d} = (4 pi)^{-d/2} Gamma(gamma+1) / Gamma(gamma+1+d/2)
//   K^cl_d         = d/(d+2) * (2 pi)^2 / omega_d^{2/d}
ConstantValue classical_L(const GammaDim& gd);
ConstantValue classical_K(int dim);

// Exact K <-> L correspondence for the gamma = 1 pair:
//   ((1+d/2) L)^{1+2/d} ((1+2/d) K)^{1+d/2} = 1.
double duality_K_from_L(double L, int dim);
double duality_L_from_K(double K, int dim);

// One-eigenvalue (Keller) duality: given the optimal constant K1 of the
// Sobolev interpolation inequality with exponent 2p, returns L^(1)_{p'-d/2,d}
// from  L * K1^{d/2} = (d/(2p'))^{d/2} ((2p'-d)/(2p'))^{(2p'-d)/2},  p' = p/(p-1).
// Requires p in (1, 1+2/d].
double keller_duality(double p, int dim, double K1);
// Inverse direction (K from L); same right-hand side.
double keller_duality_K(double p, int dim, double L1);
// The right-hand side above, exposed for cross-checks.
double keller_rhs(double p, int dim);

// Closed form for the 1D one-eigenvalue constant, gamma >= 1/2
// (0^0 := 1 at gamma = 1/2, giving the known value 1/2).
ConstantValue one_particle_L_1d(double gamma);

// C_{gamma,sigma} with E_-^sigma = C * int_0^inf (E+tau)_-^gamma tau^{sigma-gamma-1} dtau,
// i.e. 1/B(sigma-gamma, gamma+1). Requires 0 <= gamma < sigma.
double aizenman_lieb_constant(double gamma, double sigma);

// Published bounds on the optimal L_{gamma,d}, returned as data. Rows exist
// only where the literature table has an entry; other (gamma,d) give an
// empty list (no extrapolation).
std::vector<ConstantValue> best_known_bounds(const GammaDim& gd);

} // namespace lt
