#include "special.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace lt {

double gamma_fn(double x) {
    if (!(x > 0.0))
        throw domain_error("gamma_fn: argument must be positive, got " + std::to_string(x));
    return std::tgamma(x);
}

double log_gamma(double x) {
    if (!(x > 0.0))
        throw domain_error("log_gamma: argument must be positive, got " + std::to_string(x));
    return std::lgamma(x);
}

double beta_fn(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw domain_error("beta_fn: arguments must be positive");
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double unit_ball_volume(int d) {
    if (d < 1)
        throw domain_error("unit_ball_volume: dimension must be >= 1");
    return std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

double sphere_area(int d) {
    if (d < 1)
        throw domain_error("sphere_area: dimension must be >= 1");
    return d * unit_ball_volume(d);
}

} // namespace lt
