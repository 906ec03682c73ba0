#include "potentials.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "ground_state.hpp"
#include "quadrature.hpp"
#include "special.hpp"
#include "sphere.hpp"

namespace lt {

namespace {

const std::map<std::string, PotentialSpec::Family> kFamilies = {
    {"square_well", PotentialSpec::Family::square_well},
    {"gaussian", PotentialSpec::Family::gaussian},
    {"poschl_teller", PotentialSpec::Family::poschl_teller},
    {"shifted_harmonic", PotentialSpec::Family::shifted_harmonic},
    {"ggm_sphere_image", PotentialSpec::Family::ggm_sphere_image},
    {"two_bump", PotentialSpec::Family::two_bump},
    {"tabulated", PotentialSpec::Family::tabulated},
};

// allowed keys and their defaults, per family
std::map<std::string, double> default_params(PotentialSpec::Family f) {
    using F = PotentialSpec::Family;
    switch (f) {
        case F::square_well: return {{"depth", 1.0}, {"halfwidth", 1.0}};
        case F::gaussian: return {{"depth", 1.0}, {"width", 1.0}};
        case F::poschl_teller: return {{"nu", 1.0}};
        case F::shifted_harmonic: return {};
        case F::ggm_sphere_image: return {{"L", 0.0}};
        case F::two_bump: return {{"gamma", 2.0}, {"R", 6.0}};
        case F::tabulated: return {};
    }
    return {};
}

double two_bump_p(double gamma) {
    if (!(gamma > 1.5))
        throw domain_error("two_bump: gamma must exceed 3/2 in one dimension");
    double pp = gamma + 0.5;
    return pp / (pp - 1.0);
}

} // namespace

const char* to_string(PotentialSpec::Family f) {
    for (const auto& [name, fam] : kFamilies)
        if (fam == f)
            return name.c_str();
    return "?";
}

PotentialSpec PotentialSpec::make(Family f, std::map<std::string, double> params, int dim) {
    PotentialSpec p;
    p.family_ = f;
    p.dim_ = dim;
    p.params_ = default_params(f);
    for (const auto& [k, v] : params) {
        if (!p.params_.count(k))
            throw io_error("potential: unknown parameter '" + k + "' for family " +
                           to_string(f));
        p.params_[k] = v;
    }

    if (dim < 1)
        throw domain_error("potential: dimension must be >= 1");
    switch (f) {
        case Family::poschl_teller:
        case Family::shifted_harmonic:
        case Family::two_bump:
            if (dim != 1)
                throw domain_error(std::string("potential: ") + to_string(f) +
                                   " is one-dimensional");
            break;
        case Family::ggm_sphere_image:
            if (dim < 3)
                throw domain_error("potential: ggm_sphere_image requires dim >= 3");
            if (p.params_["L"] < 0 || p.params_["L"] != std::floor(p.params_["L"]))
                throw domain_error("potential: ggm_sphere_image L must be a nonnegative integer");
            break;
        default:
            break;
    }
    if (f == Family::square_well &&
        (!(p.params_["depth"] > 0.0) || !(p.params_["halfwidth"] > 0.0)))
        throw domain_error("potential: square_well needs positive depth and halfwidth");
    if (f == Family::gaussian && (!(p.params_["depth"] > 0.0) || !(p.params_["width"] > 0.0)))
        throw domain_error("potential: gaussian needs positive depth and width");
    if (f == Family::poschl_teller && !(p.params_["nu"] > 0.0))
        throw domain_error("potential: poschl_teller needs nu > 0");
    if (f == Family::two_bump) {
        two_bump_p(p.params_["gamma"]);
        if (!(p.params_["R"] > 0.0))
            throw domain_error("potential: two_bump needs R > 0");
    }
    return p;
}

PotentialSpec PotentialSpec::make_tabulated(std::vector<double> xs, std::vector<double> vs,
                                            int dim) {
    if (xs.size() != vs.size() || xs.size() < 2)
        throw domain_error("potential: tabulated needs >= 2 samples");
    for (size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw domain_error("potential: tabulated abscissae must be strictly increasing");
    for (double v : vs)
        if (!std::isfinite(v))
            throw domain_error("potential: tabulated values must be finite");
    PotentialSpec p;
    p.family_ = Family::tabulated;
    p.dim_ = dim;
    p.tab_x_ = std::move(xs);
    p.tab_v_ = std::move(vs);
    return p;
}

PotentialSpec PotentialSpec::parse(const std::string& text) {
    std::istringstream iss(text);
    std::string fam_name;
    if (!(iss >> fam_name))
        throw io_error("potential: empty specification");
    auto it = kFamilies.find(fam_name);
    if (it == kFamilies.end())
        throw io_error("potential: unknown family '" + fam_name + "'");

    std::map<std::string, double> params;
    int dim = 1;
    std::string file;
    std::string tok;
    while (iss >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw io_error("potential: expected key=value, got '" + tok + "'");
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "file") {
            file = val;
            continue;
        }
        double x;
        try {
            size_t used = 0;
            x = std::stod(val, &used);
            if (used != val.size())
                throw std::invalid_argument(val);
        } catch (const std::exception&) {
            throw io_error("potential: bad numeric value in '" + tok + "'");
        }
        if (key == "dim")
            dim = (int)x;
        else
            params[key] = x;
    }

    if (it->second == Family::tabulated) {
        if (file.empty())
            throw io_error("potential: tabulated requires file=path.csv");
        std::ifstream in(file);
        if (!in)
            throw io_error("potential: cannot open '" + file + "'");
        std::vector<double> xs, vs;
        std::string line;
        size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty())
                continue;
            std::replace(line.begin(), line.end(), ',', ' ');
            std::istringstream ls(line);
            double a, b;
            if (!(ls >> a >> b)) {
                if (lineno == 1)
                    continue; // header row
                throw io_error("potential: bad CSV row " + std::to_string(lineno) + " in " + file);
            }
            xs.push_back(a);
            vs.push_back(b);
        }
        PotentialSpec p = make_tabulated(std::move(xs), std::move(vs), dim);
        p.source_ = text;
        return p;
    }

    PotentialSpec p = make(it->second, params, dim);
    p.source_ = text;
    return p;
}

double PotentialSpec::param(const std::string& key) const {
    auto it = params_.find(key);
    if (it == params_.end())
        throw domain_error("potential: no parameter '" + key + "'");
    return it->second;
}

double PotentialSpec::operator()(double x) const {
    const double u = scale_arg_ * x;
    double v;
    switch (family_) {
        case Family::square_well:
            v = (std::fabs(u) < params_.at("halfwidth")) ? -params_.at("depth") : 0.0;
            break;
        case Family::gaussian: {
            double w = params_.at("width");
            v = -params_.at("depth") * std::exp(-(u / w) * (u / w));
            break;
        }
        case Family::poschl_teller: {
            double nu = params_.at("nu");
            double s = 1.0 / std::cosh(u);
            v = -nu * (nu + 1.0) * s * s;
            break;
        }
        case Family::shifted_harmonic:
            v = u * u - 1.0;
            break;
        case Family::ggm_sphere_image: {
            double s = ggm_potential_strength(dim_, (long)params_.at("L"));
            double c = 2.0 / (1.0 + u * u);
            v = -s * c * c;
            break;
        }
        case Family::two_bump: {
            double p = two_bump_p(params_.at("gamma"));
            double R = params_.at("R");
            double qp = soliton_1d(p, u + 0.5 * R);
            double qm = soliton_1d(p, u - 0.5 * R);
            v = -std::pow(qp * qp + qm * qm, p - 1.0);
            break;
        }
        case Family::tabulated: {
            if (u <= tab_x_.front() || u >= tab_x_.back()) {
                v = (u == tab_x_.front()) ? tab_v_.front()
                                          : (u == tab_x_.back() ? tab_v_.back() : 0.0);
            } else {
                auto it = std::upper_bound(tab_x_.begin(), tab_x_.end(), u);
                size_t i = it - tab_x_.begin();
                double t = (u - tab_x_[i - 1]) / (tab_x_[i] - tab_x_[i - 1]);
                v = tab_v_[i - 1] + t * (tab_v_[i] - tab_v_[i - 1]);
            }
            break;
        }
        default:
            throw domain_error("potential: unhandled family");
    }
    return scale_val_ * v;
}

double PotentialSpec::sampled(double x, double h) const {
    if (family_ != Family::square_well || !(h > 0.0))
        return (*this)(x);
    // exact average of the step over [x-h/2, x+h/2]
    const double a = params_.at("halfwidth") / scale_arg_;
    const double depth = scale_val_ * params_.at("depth");
    const double lo = x - 0.5 * h, hi = x + 0.5 * h;
    const double inside = std::max(0.0, std::min(hi, a) - std::max(lo, -a));
    return -depth * inside / h;
}

double PotentialSpec::negative_part_norm(double q) const {
    if (!(q > 0.0))
        throw domain_error("negative_part_norm: exponent must be positive");
    const int d = dim_;
    const double area = (d == 1) ? 2.0 : sphere_area(d);
    auto neg_pow = [this, q](double r) {
        double v = (*this)(r);
        return v < 0.0 ? std::pow(-v, q) : 0.0;
    };
    QuadOptions opt{1e-13, 1e-10, 8000};

    if (family_ == Family::square_well) {
        double depth = scale_val_ * params_.at("depth");
        double a = params_.at("halfwidth") / scale_arg_;
        return std::pow(depth, q) * ((d == 1) ? 2.0 * a : unit_ball_volume(d) * std::pow(a, (double)d));
    }
    if (family_ == Family::ggm_sphere_image && 4.0 * q <= d)
        throw domain_error("negative_part_norm: algebraic tail not integrable at this exponent");

    auto weighted = [&](double r) {
        double rad = (d == 1) ? 1.0 : std::pow(r, d - 1.0);
        return neg_pow(r) * rad;
    };

    if (family_ == Family::tabulated) {
        // 1D table over its own support (no symmetry assumed)
        if (d == 1) {
            return integrate(weighted, tab_x_.front() / scale_arg_, tab_x_.back() / scale_arg_, opt)
                .value;
        }
        return area * integrate(weighted, std::max(0.0, tab_x_.front() / scale_arg_),
                                tab_x_.back() / scale_arg_, opt)
                          .value;
    }
    if (family_ == Family::shifted_harmonic)
        return integrate(weighted, -1.0 / scale_arg_, 1.0 / scale_arg_, opt).value;

    // remaining families are even / radial with decaying tails
    double cut;
    switch (family_) {
        case Family::gaussian: cut = 10.0 * params_.at("width") / scale_arg_; break;
        case Family::poschl_teller: cut = (40.0 / std::max(1.0, 2.0 * q)) + 20.0; break;
        case Family::two_bump: cut = 0.5 * params_.at("R") + 60.0; break;
        default: cut = 10.0; break;
    }
    cut = std::max(cut, 1.0);
    QuadResult head = integrate(weighted, 0.0, cut, opt);
    QuadResult tail = integrate_to_infinity(weighted, cut, opt);
    return area * (head.value + tail.value);
}

double PotentialSpec::suggested_half_width() const {
    switch (family_) {
        case Family::square_well: return params_.at("halfwidth") / scale_arg_ + 30.0;
        case Family::gaussian: return 3.0 * params_.at("width") / scale_arg_ + 30.0;
        case Family::poschl_teller: return 25.0 / scale_arg_ + 5.0;
        case Family::shifted_harmonic: return 6.0;
        case Family::ggm_sphere_image: return 60.0;
        case Family::two_bump: return 0.5 * params_.at("R") + 25.0;
        case Family::tabulated:
            return std::max(std::fabs(tab_x_.front()), std::fabs(tab_x_.back())) / scale_arg_ + 10.0;
    }
    return 30.0;
}

double PotentialSpec::suggested_step() const {
    double depth = 1.0;
    switch (family_) {
        case Family::square_well: depth = params_.at("depth"); break;
        case Family::gaussian: depth = params_.at("depth"); break;
        case Family::poschl_teller: {
            double nu = params_.at("nu");
            depth = nu * (nu + 1.0);
            break;
        }
        case Family::shifted_harmonic: depth = 1.0; break;
        case Family::ggm_sphere_image:
            depth = 4.0 * ggm_potential_strength(dim_, (long)params_.at("L"));
            break;
        case Family::two_bump: depth = 2.0; break;
        case Family::tabulated: {
            for (double v : tab_v_)
                depth = std::max(depth, -v);
            break;
        }
    }
    depth *= scale_val_;
    return std::min(0.01, 0.05 / std::sqrt(std::max(1.0, depth))) / scale_arg_;
}

std::string PotentialSpec::text() const {
    if (!source_.empty() && scale_arg_ == 1.0 && scale_val_ == 1.0)
        return source_;
    std::ostringstream os;
    os << to_string(family_);
    for (const auto& [k, v] : params_)
        os << ' ' << k << '=' << v;
    if (dim_ != 1)
        os << " dim=" << dim_;
    if (scale_arg_ != 1.0)
        os << " (scaled by " << scale_arg_ << ")";
    return os.str();
}

PotentialSpec PotentialSpec::scaled(double s) const {
    if (!(s > 0.0))
        throw domain_error("potential: scale factor must be positive");
    PotentialSpec p = *this;
    p.scale_arg_ *= s;
    p.scale_val_ *= s * s;
    p.source_.clear();
    return p;
}

} // namespace lt
