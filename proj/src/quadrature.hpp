#pragma once

#include <functional>

namespace lt {

struct QuadOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_intervals = 4000;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0; // estimated absolute error
    int evaluations = 0;
};

// Adaptive Gauss-Kronrod (G7, K15) on a finite interval. Subdivides the
// interval with the worst error estimate until the global estimate meets
// max(abs_tol, rel_tol * |value|). Throws accuracy_error on non-convergence.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& opt = {});

// Integral over [a, inf), mapped through x = a + u/(1-u).
QuadResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                 const QuadOptions& opt = {});

// Integral over the whole real line (split at 0, mapped tails).
QuadResult integrate_real_line(const std::function<double(double)>& f,
                               const QuadOptions& opt = {});

} // namespace lt
