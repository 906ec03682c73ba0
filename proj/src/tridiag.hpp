#pragma once

#include <vector>

namespace lt {

// Symmetric tridiagonal matrix: diag has n entries, off has n-1.
struct Tridiag {
    std::vector<double> diag;
    std::vector<double> off;
    int size() const { return (int)diag.size(); }
};

// Number of eigenvalues strictly below lambda (Sturm sequence / LDL^T sign
// count). Exact in the absence of breakdown; zero pivots are nudged.
int sturm_count_below(const Tridiag& T, double lambda);

// Gershgorin bounds [lo, hi] containing the whole spectrum.
void gershgorin_bounds(const Tridiag& T, double& lo, double& hi);

// All eigenvalues < threshold, each located by bisection to abs_tol and
// consistent with the Sturm counts. Sorted ascending.
std::vector<double> eigenvalues_below(const Tridiag& T, double threshold,
                                      double abs_tol = 1e-12);

} // namespace lt
