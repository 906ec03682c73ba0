#pragma once

// Test-side oracles, kept independent of the library's numerical paths:
// - adaptive Simpson quadrature (the library integrates with Gauss-Kronrod)
// - LAPACK dstev for dense tridiagonal diagonalization (the library uses
//   Sturm counts + bisection)

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include <lapacke.h>

#include "tridiag.hpp"

namespace oracle {

inline double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                          double fm, double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0)
        return left + right;
    if (std::fabs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double tol = 1e-10) {
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

// all eigenvalues of a symmetric tridiagonal matrix, ascending
inline std::vector<double> dstev_eigenvalues(const lt::Tridiag& T) {
    std::vector<double> d = T.diag, e = T.off;
    lapack_int n = (lapack_int)d.size();
    lapack_int info = LAPACKE_dstev(LAPACK_COL_MAJOR, 'N', n, d.data(), e.data(), nullptr,
                                    n > 0 ? n : 1);
    if (info != 0)
        throw std::runtime_error("dstev failed");
    return d;
}

} // namespace oracle
