#pragma once

#include <functional>

namespace kelly::quad {

// A definite integral over a finite interval. Improper integrals must be
// mapped onto a finite interval by the caller before they get here.
struct Integral {
    std::function<double(double)> integrand;
    double lo = 0.0;
    double hi = 1.0;
    double abs_tol = 1e-10;
    int max_depth = 50;  // maximum number of bisections applied to any subinterval
};

struct Result {
    double value = 0.0;
    double err_estimate = 0.0;
    int evaluations = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod integration.
///
/// The subinterval with the largest error estimate is bisected until the
/// summed estimate drops below abs_tol (or below what double rounding can
/// resolve for the running total). Nodes are interior, so integrable endpoint
/// singularities are never evaluated.
///
/// Throws InvalidArgument for lo >= hi, non-finite bounds, abs_tol <= 0 or
/// max_depth < 1, and NonConvergence when a subinterval would exceed
/// max_depth before the tolerance is met.
Result integrate(const Integral& spec);

// Single 15-point Kronrod panel on [lo, hi], no adaptation. Exact for
// polynomials up to degree 22. Exposed for tests and benchmarks.
Result kronrod15(const std::function<double(double)>& fn, double lo, double hi);

}  // namespace kelly::quad
