#include "sphere.hpp"

#include <cmath>

#include "constants.hpp"
#include "errors.hpp"
#include "special.hpp"

namespace lt {

namespace {

mpz_class factorial_ratio(long hi, long lo) {
    // hi! / lo!, hi >= lo >= 0
    mpz_class r = 1;
    for (long k = lo + 1; k <= hi; ++k)
        r *= k;
    return r;
}

mpz_class factorial(long n) { return factorial_ratio(n, 0); }

} // namespace

mpz_class sphere_multiplicity(int d, long ell) {
    if (d < 2)
        throw domain_error("sphere_multiplicity: need d >= 2");
    if (ell < 0)
        throw domain_error("sphere_multiplicity: need ell >= 0");
    // (2l+d-1) * (l+d-2)!/l! / (d-1)!
    mpz_class num = (2 * ell + d - 1) * factorial_ratio(ell + d - 2, ell);
    mpz_class den = factorial(d - 1);
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
        throw accuracy_error("sphere_multiplicity: non-integer result (internal)");
    return q;
}

mpz_class sphere_count_leq(int d, long L) {
    if (d < 3)
        throw domain_error("sphere_count_leq: need d >= 3");
    if (L < 0)
        throw domain_error("sphere_count_leq: need L >= 0");
    // (2L+d) (L+d-1)!/(L!) / d!
    mpz_class num = (2 * L + d) * factorial_ratio(L + d - 1, L);
    mpz_class den = factorial(d);
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
        throw accuracy_error("sphere_count_leq: non-integer result (internal)");
    return q;
}

mpz_class sphere_count_sum(int d, long L) {
    if (d < 3)
        throw domain_error("sphere_count_sum: need d >= 3");
    if (L < 0)
        throw domain_error("sphere_count_sum: need L >= 0");
    mpz_class s = 0;
    for (long ell = 0; ell <= L; ++ell)
        s += sphere_multiplicity(d, ell);
    return s;
}

mpz_class count_constant_potential(int d, double W) {
    if (d < 3)
        throw domain_error("count_constant_potential: need d >= 3");
    if (!(W < 0.0))
        throw domain_error("count_constant_potential: need W < 0");
    // l(l+d-1) + d(d-2)/4 + W <= 0, i.e. (l+(d-2)/2)(l+d/2) <= -W
    mpz_class s = 0;
    for (long ell = 0;; ++ell) {
        double lhs = (ell + 0.5 * (d - 2.0)) * (ell + 0.5 * d);
        if (lhs + W > 0.0)
            break;
        s += sphere_multiplicity(d, ell);
    }
    return s;
}

double a_value(int d, long L) {
    if (d < 3)
        throw domain_error("a_value: need d >= 3");
    if (L < 0)
        throw domain_error("a_value: need L >= 0");
    double lg = std::lgamma(L + (double)d) - std::lgamma(L + 1.0);
    double prod = (L + 0.5 * (d - 2.0)) * (L + 0.5 * d);
    return std::exp(lg + std::log(L + 0.5 * d) - 0.5 * d * std::log(prod));
}

std::vector<double> a_sequence(int d, long L_max) {
    std::vector<double> out;
    out.reserve(L_max + 1);
    for (long L = 0; L <= L_max; ++L)
        out.push_back(a_value(d, L));
    return out;
}

GgmConstant ggm_conjectured_constant(int d) {
    if (d < 3)
        throw domain_error("ggm_conjectured_constant: need d >= 3");
    double sup = 0.0;
    long arg = 0;
    const long hard_cap = 2000000;
    long L = 0;
    for (; L <= hard_cap; ++L) {
        double a = a_value(d, L);
        if (a > sup) {
            sup = a;
            arg = L;
        }
        // Tail rule: beyond the scan window, ln a_L = (d/2)/L + O(1/L^2), so
        // a_L is bounded by exp((d/2)/L * margin); stop once that bound and
        // the local decrease both sit below the running sup. The 1/L^2 term
        // carries an O(d^3) coefficient, hence the L > d^2 gate.
        if (L > std::max({(long)d * d, 10L * d, 40L}) && L > 2 * arg) {
            double envelope = std::exp(0.75 * d / (double)L);
            if (envelope < sup && a < sup)
                break;
        }
    }
    if (L > hard_cap)
        throw solver_error("ggm_conjectured_constant: sup scan did not terminate");
    double lcl0 = classical_L(GammaDim(0.0, d)).value();
    return GgmConstant{lcl0 * sup, sup, arg};
}

double ggm_potential_strength(int d, long L) {
    if (d < 3)
        throw domain_error("ggm_potential_strength: need d >= 3");
    if (L < 0)
        throw domain_error("ggm_potential_strength: need L >= 0");
    return (L + 0.5 * (d - 2.0)) * (L + 0.5 * d);
}

double ggm_potential_integral(int d, long L) {
    double s = ggm_potential_strength(d, L);
    // |S^d| is the area of the d-sphere in R^{d+1}
    return std::pow(s, 0.5 * d) * sphere_area(d + 1);
}

} // namespace lt
