#pragma once

#include <map>
#include <string>
#include <vector>

namespace lt {

// Declarative potential description. 1D potentials live on the line; for
// dim >= 2 the potential is radial, V = V(r). Families and the compact text
// form they parse from:
//   square_well depth=1 halfwidth=1 [dim=1]
//   gaussian depth=1 width=1 [dim=1]          V = -depth exp(-(x/width)^2)
//   poschl_teller nu=2                        V = -nu(nu+1) sech^2 x  (1D)
//   shifted_harmonic                          V = x^2 - 1             (1D)
//   ggm_sphere_image dim=3 L=0                V = -(L+(d-2)/2)(L+d/2)(2/(1+r^2))^2
//   two_bump gamma=2 R=6                      V = -(Q_+^2+Q_-^2)^{p-1} (1D)
//   tabulated file=path.csv [dim=1]           CSV rows: abscissa,value
class PotentialSpec {
public:
    enum class Family {
        square_well,
        gaussian,
        poschl_teller,
        shifted_harmonic,
        ggm_sphere_image,
        two_bump,
        tabulated
    };

    static PotentialSpec parse(const std::string& text);
    static PotentialSpec make(Family f, std::map<std::string, double> params, int dim = 1);
    static PotentialSpec make_tabulated(std::vector<double> xs, std::vector<double> vs, int dim = 1);

    Family family() const { return family_; }
    int dim() const { return dim_; }
    bool radial() const { return dim_ >= 2; }
    double param(const std::string& key) const;
    const std::map<std::string, double>& params() const { return params_; }

    // V(x) on the line (dim 1) or V(r), r >= 0 (radial).
    double operator()(double x) const;

    // Grid sample over the cell [x-h/2, x+h/2]: the pointwise value for
    // smooth families, the exact cell average across the square-well jump
    // (keeps the h^2 eigenvalue expansion clean for Richardson).
    double sampled(double x, double h) const;

    // int_{R^d} V_-(x)^q dx, adaptive quadrature (closed form for the square
    // well). Throws accuracy_error when the integral does not converge.
    double negative_part_norm(double q) const;

    // reasonable discretization defaults for this potential
    double suggested_half_width() const;
    double suggested_step() const;

    // round-trip text form
    std::string text() const;

    // scaled copy V(x) -> s2 * V(s * x)
    PotentialSpec scaled(double s) const;

private:
    PotentialSpec() = default;
    Family family_ = Family::square_well;
    int dim_ = 1;
    std::map<std::string, double> params_;
    std::vector<double> tab_x_, tab_v_;
    double scale_arg_ = 1.0, scale_val_ = 1.0;
    std::string source_;
};

const char* to_string(PotentialSpec::Family f);

} // namespace lt
