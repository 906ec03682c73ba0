#pragma once

namespace lt {

// Euler Gamma function, x > 0. Relative error well below 1e-12 on [0.1, 50].
double gamma_fn(double x);

// log Gamma, x > 0.
double log_gamma(double x);

// Beta function B(a, b), a, b > 0.
double beta_fn(double a, double b);

// Volume of the unit ball in R^d.
double unit_ball_volume(int d);

// Surface measure |S^{d-1}| of the unit sphere in R^d (= d * omega_d).
// For the area of the d-sphere sitting in R^{d+1} call sphere_area(d+1).
double sphere_area(int d);

} // namespace lt
