#include "tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"

namespace lt {

int sturm_count_below(const Tridiag& T, double lambda) {
    const int n = T.size();
    if ((int)T.off.size() != n - 1)
        throw domain_error("sturm_count_below: off-diagonal size mismatch");
    int count = 0;
    double d = 1.0;
    const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    for (int i = 0; i < n; ++i) {
        double off2 = (i > 0) ? T.off[i - 1] * T.off[i - 1] : 0.0;
        d = T.diag[i] - lambda - off2 / d;
        if (d == 0.0)
            d = -tiny;
        if (d < 0.0)
            ++count;
    }
    return count;
}

void gershgorin_bounds(const Tridiag& T, double& lo, double& hi) {
    const int n = T.size();
    lo = std::numeric_limits<double>::infinity();
    hi = -lo;
    for (int i = 0; i < n; ++i) {
        double r = (i > 0 ? std::fabs(T.off[i - 1]) : 0.0) +
                   (i < n - 1 ? std::fabs(T.off[i]) : 0.0);
        lo = std::min(lo, T.diag[i] - r);
        hi = std::max(hi, T.diag[i] + r);
    }
}

std::vector<double> eigenvalues_below(const Tridiag& T, double threshold, double abs_tol) {
    std::vector<double> out;
    if (T.size() == 0)
        return out;
    const int m = sturm_count_below(T, threshold);
    if (m == 0)
        return out;
    double glo, ghi;
    gershgorin_bounds(T, glo, ghi);
    out.reserve(m);
    for (int k = 0; k < m; ++k) {
        // invariant: count(lo) <= k < count(hi)
        double lo = glo, hi = threshold;
        while (hi - lo > abs_tol) {
            double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi)
                break;
            if (sturm_count_below(T, mid) > k)
                hi = mid;
            else
                lo = mid;
        }
        out.push_back(0.5 * (lo + hi));
    }
    return out;
}

} // namespace lt
