#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lt {

// Combinatorics of the Laplace-Beltrami spectrum on the d-sphere (ambient
// dimension d+1) behind the Glaser-Grosse-Martin construction. Counts are
// exact integers (GMP); only a_L uses floating point (log-Gamma).

// Multiplicity of the eigenvalue l(l+d-1) of -Delta_{S^d}:
//   nu_l = (2l+d-1) (l+d-2)! / ((d-1)! l!),  d >= 2, l >= 0.
mpz_class sphere_multiplicity(int d, long ell);

// Closed-form count N_<= for the potential W^(L):
//   (2/d!) (L+d-1)! (L+d/2) / L!  ==  (2L+d) (L+d-1)! / (d! L!),  d >= 3.
mpz_class sphere_count_leq(int d, long L);

// Same count as the explicit sum over shells l = 0..L.
mpz_class sphere_count_sum(int d, long L);

// Number of eigenvalues of -Delta_{S^d} + d(d-2)/4 + W that are <= 0 for a
// constant potential W < 0, with multiplicity; d >= 3.
mpz_class count_constant_potential(int d, double W);

// a_L = (L+d-1)! (L+d/2) / (L! ((L+(d-2)/2)(L+d/2))^{d/2}), evaluated via
// log-Gamma; d >= 3.
double a_value(int d, long L);
std::vector<double> a_sequence(int d, long L_max);

struct GgmConstant {
    double value;   // L^cl_{0,d} * sup_L a_L
    double sup_a;   // sup_L a_L
    long argmax_L;  // maximizing L
};

// Conjectured optimal CLR constant, d >= 3. The sup over L is located by
// scanning until the tail expansion ln a_L = (d/2)/L + O(1/L^2) rules out
// any further increase.
GgmConstant ggm_conjectured_constant(int d);

// Strength parameter of the GGM potential V^(L):
//   V^(L)(x) = -(L+(d-2)/2)(L+d/2) (2/(1+|x|^2))^2.
double ggm_potential_strength(int d, long L);

// Closed form of int (V^(L))_-^{d/2} dx = ((L+(d-2)/2)(L+d/2))^{d/2} |S^d|.
double ggm_potential_integral(int d, long L);

} // namespace lt
