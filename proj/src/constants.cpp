#include "constants.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"
#include "special.hpp"

namespace lt {

bool GammaDim::admissible(double gamma, int dim) {
    if (dim < 1 || !std::isfinite(gamma))
        return false;
    if (dim == 1)
        return gamma >= 0.5;
    if (dim == 2)
        return gamma > 0.0;
    return gamma >= 0.0;
}

GammaDim::GammaDim(double gamma, int dim) : gamma_(gamma), dim_(dim) {
    if (!admissible(gamma, dim))
        throw domain_error("GammaDim: (gamma=" + std::to_string(gamma) + ", d=" +
                           std::to_string(dim) + ") outside the admissible region");
}

const char* to_string(ConstKind k) {
    switch (k) {
        case ConstKind::classical: return "classical";
        case ConstKind::one_particle: return "one_particle";
        case ConstKind::improved_bound: return "improved_bound";
        case ConstKind::conjectured: return "conjectured";
        case ConstKind::literature: return "literature";
    }
    return "?";
}

const char* to_string(BoundDir d) {
    switch (d) {
        case BoundDir::exact: return "exact";
        case BoundDir::upper_bound: return "upper_bound";
        case BoundDir::lower_bound: return "lower_bound";
    }
    return "?";
}

ConstantValue::ConstantValue(double value, ConstKind kind, BoundDir direction,
                             std::string provenance)
    : value_(value), kind_(kind), direction_(direction), provenance_(std::move(provenance)) {
    if (!std::isfinite(value_) || value_ <= 0.0)
        throw domain_error("ConstantValue: value must be finite and positive");
}

ConstantValue classical_L(const GammaDim& gd) {
    const double g = gd.gamma();
    const int d = gd.dim();
    double v = std::pow(4.0 * M_PI, -0.5 * d) * gamma_fn(g + 1.0) / gamma_fn(g + 1.0 + 0.5 * d);
    return ConstantValue(v, ConstKind::classical, BoundDir::exact, "semiclassical phase-space value");
}

ConstantValue classical_K(int dim) {
    if (dim < 1)
        throw domain_error("classical_K: dimension must be >= 1");
    const double d = dim;
    double v = d / (d + 2.0) * (4.0 * M_PI * M_PI) / std::pow(unit_ball_volume(dim), 2.0 / d);
    return ConstantValue(v, ConstKind::classical, BoundDir::exact, "semiclassical phase-space value");
}

double duality_K_from_L(double L, int dim) {
    if (!(L > 0.0))
        throw domain_error("duality_K_from_L: L must be positive");
    if (dim < 1)
        throw domain_error("duality_K_from_L: dimension must be >= 1");
    const double d = dim;
    return d / (d + 2.0) * std::pow(0.5 * (d + 2.0) * L, -2.0 / d);
}

double duality_L_from_K(double K, int dim) {
    if (!(K > 0.0))
        throw domain_error("duality_L_from_K: K must be positive");
    if (dim < 1)
        throw domain_error("duality_L_from_K: dimension must be >= 1");
    const double d = dim;
    return 2.0 / (d + 2.0) * std::pow((d + 2.0) / d * K, -0.5 * d);
}

double keller_rhs(double p, int dim) {
    const double d = dim;
    const double pp = p / (p - 1.0);
    return std::pow(d / (2.0 * pp), 0.5 * d) *
           std::pow((2.0 * pp - d) / (2.0 * pp), 0.5 * (2.0 * pp - d));
}

double keller_duality(double p, int dim, double K1) {
    if (dim < 1)
        throw domain_error("keller_duality: dimension must be >= 1");
    const double d = dim;
    if (!(p > 1.0) || !(p <= 1.0 + 2.0 / d))
        throw domain_error("keller_duality: p must lie in (1, 1+2/d]");
    if (!(K1 > 0.0))
        throw domain_error("keller_duality: K1 must be positive");
    return keller_rhs(p, dim) / std::pow(K1, 0.5 * d);
}

double keller_duality_K(double p, int dim, double L1) {
    if (dim < 1)
        throw domain_error("keller_duality_K: dimension must be >= 1");
    const double d = dim;
    if (!(p > 1.0) || !(p <= 1.0 + 2.0 / d))
        throw domain_error("keller_duality_K: p must lie in (1, 1+2/d]");
    if (!(L1 > 0.0))
        throw domain_error("keller_duality_K: L1 must be positive");
    return std::pow(keller_rhs(p, dim) / L1, 2.0 / d);
}

ConstantValue one_particle_L_1d(double gamma) {
    if (!(gamma >= 0.5))
        throw domain_error("one_particle_L_1d: gamma must be >= 1/2");
    // pow(0,0) = 1 covers the endpoint gamma = 1/2.
    double v = (1.0 / std::sqrt(M_PI)) * gamma_fn(gamma + 1.0) / gamma_fn(gamma + 0.5) *
               std::pow(gamma - 0.5, gamma - 0.5) / std::pow(gamma + 0.5, gamma + 0.5);
    return ConstantValue(v, ConstKind::one_particle, BoundDir::exact,
                         "Keller problem in 1D, closed form (Nagy)");
}

double aizenman_lieb_constant(double gamma, double sigma) {
    if (!(gamma >= 0.0) || !(sigma > gamma))
        throw domain_error("aizenman_lieb_constant: need 0 <= gamma < sigma");
    return 1.0 / beta_fn(sigma - gamma, gamma + 1.0);
}

std::vector<ConstantValue> best_known_bounds(const GammaDim& gd) {
    const double g = gd.gamma();
    const int d = gd.dim();
    std::vector<ConstantValue> out;
    const double lcl = classical_L(gd).value();

    if (g >= 1.5) {
        out.emplace_back(lcl, ConstKind::classical, BoundDir::exact,
                         d == 1 ? "Lieb-Thirring 1976; Aizenman-Lieb 1978"
                                : "Laptev-Weidl 2000");
        return out;
    }
    if (d == 1 && g == 0.5) {
        out.emplace_back(one_particle_L_1d(0.5).value(), ConstKind::one_particle, BoundDir::exact,
                         "Hundertmark-Lieb-Thomas 1998");
    }
    if (g >= 1.0 && g < 1.5) {
        out.emplace_back(1.456 * lcl, ConstKind::improved_bound, BoundDir::upper_bound,
                         "Frank-Hundertmark-Jex-Nam 2021");
    } else if (g >= 0.5 && g < 1.0) {
        if (d == 1)
            out.emplace_back(2.0 * lcl, ConstKind::improved_bound, BoundDir::upper_bound,
                             "Hundertmark-Lieb-Thomas 1998");
        else
            out.emplace_back(2.912 * lcl, ConstKind::improved_bound, BoundDir::upper_bound,
                             "Hundertmark-Laptev-Weidl 2000 lifting of Frank-Hundertmark-Jex-Nam");
    } else if (g == 0.0 && d == 3) {
        out.emplace_back(6.86924 * lcl, ConstKind::literature, BoundDir::upper_bound,
                         "Lieb 1976/1980");
        out.emplace_back(8.0 / std::sqrt(3.0) * lcl, ConstKind::one_particle, BoundDir::lower_bound,
                         "Sobolev optimizers (Glaser-Grosse-Martin)");
    }
    return out;
}

} // namespace lt
