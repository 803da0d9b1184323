#pragma once

// Test-only reference computations. Nothing here calls the library's
// quadrature, transforms or solver: densities go through Boost's integrators,
// discrete parts are summed by hand, and roots come from a plain bisection.

#include "kelly/payoff_dist.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <variant>

namespace kelly::oracle {

// Plain bisection for a decreasing function with f(lo) > 0 > f(hi).
inline double bisect_decreasing(const std::function<double(double)>& fn, double lo, double hi,
                                int iterations = 200) {
    for (int i = 0; i < iterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (fn(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

inline double gk_integrate(const std::function<double(double)>& fn, double lo, double hi) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(fn, lo, hi, 30, 1e-14);
}

inline double ts_integrate(const std::function<double(double)>& fn, double lo, double hi) {
    static boost::math::quadrature::tanh_sinh<double> ts;
    return ts.integrate([&fn](double x) { return fn(x); }, lo, hi, 1e-13);
}

// E[kernel(b)] with the Pareto integral written through v = (xmin / b)^alpha,
// a different change of variables from the library's.
inline double expect(const PayoffDistribution& dist, const std::function<double(double)>& kernel) {
    struct V {
        const std::function<double(double)>& k;
        double operator()(const Dirac& d) const { return k(d.b0); }
        double operator()(const Atoms& a) const {
            double s = 0.0;
            for (const Atom& at : a.points) s += at.weight * k(at.payoff);
            return s;
        }
        double operator()(const Uniform& u) const {
            return gk_integrate(k, u.lo, u.hi) / (u.hi - u.lo);
        }
        double operator()(const Histogram& h) const {
            double s = 0.0;
            for (std::size_t i = 0; i < h.masses.size(); ++i) {
                if (h.masses[i] == 0.0) continue;
                const double w = h.edges[i + 1] - h.edges[i];
                s += h.masses[i] / w * gk_integrate(k, h.edges[i], h.edges[i + 1]);
            }
            return s;
        }
        double operator()(const Pareto& p) const {
            auto fn = [&](double v) { return k(p.xmin * std::pow(v, -1.0 / p.alpha)); };
            return ts_integrate(fn, 0.0, 1.0);
        }
        double operator()(const Mixture& m) const {
            double s = 0.0;
            for (const MixtureComponent& c : m.parts) s += c.weight * expect(c.dist, k);
            return s;
        }
    };
    return std::visit(V{kernel}, dist.variant());
}

// Closed-form first and second moments.
inline double mean(const PayoffDistribution& dist) {
    struct V {
        double operator()(const Dirac& d) const { return d.b0; }
        double operator()(const Atoms& a) const {
            double s = 0.0;
            for (const Atom& at : a.points) s += at.weight * at.payoff;
            return s;
        }
        double operator()(const Uniform& u) const { return 0.5 * (u.lo + u.hi); }
        double operator()(const Histogram& h) const {
            double s = 0.0;
            for (std::size_t i = 0; i < h.masses.size(); ++i) {
                s += h.masses[i] * 0.5 * (h.edges[i] + h.edges[i + 1]);
            }
            return s;
        }
        double operator()(const Pareto& p) const { return p.alpha * p.xmin / (p.alpha - 1.0); }
        double operator()(const Mixture& m) const {
            double s = 0.0;
            for (const MixtureComponent& c : m.parts) s += c.weight * mean(c.dist);
            return s;
        }
    };
    return std::visit(V{}, dist.variant());
}

inline double second_moment(const PayoffDistribution& dist) {
    struct V {
        double operator()(const Dirac& d) const { return d.b0 * d.b0; }
        double operator()(const Atoms& a) const {
            double s = 0.0;
            for (const Atom& at : a.points) s += at.weight * at.payoff * at.payoff;
            return s;
        }
        double operator()(const Uniform& u) const {
            return (u.lo * u.lo + u.lo * u.hi + u.hi * u.hi) / 3.0;
        }
        double operator()(const Histogram& h) const {
            double s = 0.0;
            for (std::size_t i = 0; i < h.masses.size(); ++i) {
                const double a = h.edges[i];
                const double b = h.edges[i + 1];
                s += h.masses[i] * (a * a + a * b + b * b) / 3.0;
            }
            return s;
        }
        double operator()(const Pareto& p) const {
            if (p.alpha <= 2.0) return std::numeric_limits<double>::infinity();
            return p.alpha * p.xmin * p.xmin / (p.alpha - 2.0);
        }
        double operator()(const Mixture& m) const {
            double s = 0.0;
            for (const MixtureComponent& c : m.parts) s += c.weight * second_moment(c.dist);
            return s;
        }
    };
    return std::visit(V{}, dist.variant());
}

inline double variance(const PayoffDistribution& dist) {
    const double m = mean(dist);
    const double s2 = second_moment(dist);
    if (std::isinf(s2)) return s2;
    return std::max(0.0, s2 - m * m);
}

// E[b / (1 + b f)].
inline double transform(const PayoffDistribution& dist, double f) {
    if (f == 0.0) return mean(dist);
    return expect(dist, [f](double b) { return b / (1.0 + b * f); });
}

// E[log(1 + b f)].
inline double log_win(const PayoffDistribution& dist, double f) {
    if (f == 0.0) return 0.0;
    return expect(dist, [f](double b) { return std::log1p(b * f); });
}

// Independently solved optimum: bisection on p T(f) - q / (1 - f).
inline double solve(double p, const PayoffDistribution& dist) {
    auto deriv = [&](double f) { return p * transform(dist, f) - (1.0 - p) / (1.0 - f); };
    return bisect_decreasing(deriv, 0.0, 1.0 - 1e-12);
}

}  // namespace kelly::oracle
