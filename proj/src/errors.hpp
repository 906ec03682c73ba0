#pragma once

#include <stdexcept>
#include <string>

namespace lt {

// Invalid input: argument outside the documented domain of an operation.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An iterative solver (bisection, shooting, channel sweep) failed to converge
// or could not bracket a root.
struct solver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation finished but did not reach its accuracy contract
// (quadrature non-convergence, residuals above tolerance).
struct accuracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File / parse problems.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace lt
