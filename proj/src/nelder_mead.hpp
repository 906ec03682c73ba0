#pragma once

#include <algorithm>
#include <functional>
#include <vector>

namespace lt {

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int evaluations = 0;
};

// Downhill simplex minimizer with a fixed evaluation budget. Returns the best
// point seen (which is never worse than the starting point).
inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                    const std::vector<double>& x0,
                                    const std::vector<double>& step, int max_evals,
                                    double ftol = 1e-10) {
    const int n = (int)x0.size();
    std::vector<std::vector<double>> x(n + 1, x0);
    std::vector<double> fx(n + 1);
    NelderMeadResult res;
    res.x = x0;

    for (int i = 0; i < n; ++i)
        x[i + 1][i] += step[i];
    for (int i = 0; i <= n && res.evaluations < max_evals; ++i) {
        fx[i] = f(x[i]);
        ++res.evaluations;
    }
    auto record = [&]() {
        int b = (int)(std::min_element(fx.begin(), fx.end()) - fx.begin());
        if (res.evaluations == n + 1 || fx[b] < res.value) {
            res.x = x[b];
            res.value = fx[b];
        }
    };
    res.value = fx[0];
    record();

    while (res.evaluations < max_evals) {
        // order: lo = best, hi = worst, nh = second worst
        int lo = 0, hi = 0, nh = 0;
        for (int i = 1; i <= n; ++i) {
            if (fx[i] < fx[lo]) lo = i;
            if (fx[i] > fx[hi]) { nh = hi; hi = i; }
            else if (fx[i] > fx[nh] && i != hi) nh = i;
        }
        if (std::fabs(fx[hi] - fx[lo]) <= ftol * (std::fabs(fx[hi]) + std::fabs(fx[lo]) + 1e-300))
            break;

        std::vector<double> centroid(n, 0.0);
        for (int i = 0; i <= n; ++i)
            if (i != hi)
                for (int j = 0; j < n; ++j)
                    centroid[j] += x[i][j] / n;

        auto blend = [&](double t) {
            std::vector<double> p(n);
            for (int j = 0; j < n; ++j)
                p[j] = centroid[j] + t * (x[hi][j] - centroid[j]);
            return p;
        };

        std::vector<double> xr = blend(-1.0);
        double fr = f(xr);
        ++res.evaluations;
        if (fr < fx[lo]) {
            std::vector<double> xe = blend(-2.0);
            double fe = f(xe);
            ++res.evaluations;
            if (fe < fr) { x[hi] = xe; fx[hi] = fe; }
            else { x[hi] = xr; fx[hi] = fr; }
        } else if (fr < fx[nh]) {
            x[hi] = xr;
            fx[hi] = fr;
        } else {
            std::vector<double> xc = blend(0.5);
            double fc = f(xc);
            ++res.evaluations;
            if (fc < fx[hi]) { x[hi] = xc; fx[hi] = fc; }
            else {
                // shrink toward the best vertex
                for (int i = 0; i <= n && res.evaluations < max_evals; ++i) {
                    if (i == lo) continue;
                    for (int j = 0; j < n; ++j)
                        x[i][j] = x[lo][j] + 0.5 * (x[i][j] - x[lo][j]);
                    fx[i] = f(x[i]);
                    ++res.evaluations;
                }
            }
        }
        record();
    }
    record();
    return res;
}

} // namespace lt
