#include "kelly/quadrature.hpp"

#include "kelly/errors.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace kelly::quad {

namespace {

// Kronrod abscissae on [-1, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double lo;
    double hi;
    double value;
    double err;
    int depth;
};

struct ByError {
    bool operator()(const Panel& a, const Panel& b) const { return a.err < b.err; }
};

constexpr int kMaxPanels = 20000;

}  // namespace

Result kronrod15(const std::function<double(double)>& fn, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    const double fc = fn(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kNodes[j];
        const double sum = fn(center - dx) + fn(center + dx);
        kronrod += kKronrodWeights[j] * sum;
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * sum;
    }
    kronrod *= half;
    gauss *= half;
    return {kronrod, std::abs(kronrod - gauss), 15};
}

Result integrate(const Integral& spec) {
    if (!spec.integrand) throw InvalidArgument("integrate: empty integrand");
    if (!std::isfinite(spec.lo) || !std::isfinite(spec.hi) || !(spec.lo < spec.hi)) {
        throw InvalidArgument("integrate: interval must be finite with lo < hi");
    }
    if (!(spec.abs_tol > 0.0)) throw InvalidArgument("integrate: abs_tol must be positive");
    if (spec.max_depth < 1) throw InvalidArgument("integrate: max_depth must be >= 1");

    constexpr double eps = std::numeric_limits<double>::epsilon();

    Result first = kronrod15(spec.integrand, spec.lo, spec.hi);
    int evaluations = first.evaluations;
    if (!std::isfinite(first.value)) {
        throw NonConvergence("integrate: integrand not finite on interval", first.value,
                             first.err_estimate);
    }

    std::priority_queue<Panel, std::vector<Panel>, ByError> panels;
    panels.push({spec.lo, spec.hi, first.value, first.err_estimate, 0});
    double total = first.value;
    double total_err = first.err_estimate;

    auto resolved = [&] {
        return total_err <= spec.abs_tol || total_err <= 50.0 * eps * std::abs(total);
    };

    while (!resolved()) {
        Panel worst = panels.top();
        // Nothing left to gain once the worst panel is at rounding level.
        if (worst.err <= 50.0 * eps * std::abs(worst.value)) break;
        if (worst.depth >= spec.max_depth ||
            static_cast<int>(panels.size()) >= kMaxPanels) {
            throw NonConvergence("integrate: subdivision budget exhausted on [" +
                                     std::to_string(worst.lo) + ", " + std::to_string(worst.hi) +
                                     "]",
                                 total, total_err);
        }
        panels.pop();

        const double mid = 0.5 * (worst.lo + worst.hi);
        const Result left = kronrod15(spec.integrand, worst.lo, mid);
        const Result right = kronrod15(spec.integrand, mid, worst.hi);
        evaluations += left.evaluations + right.evaluations;
        if (!std::isfinite(left.value) || !std::isfinite(right.value)) {
            throw NonConvergence("integrate: integrand not finite on interval", total, total_err);
        }

        total += left.value + right.value - worst.value;
        total_err += left.err_estimate + right.err_estimate - worst.err;
        panels.push({worst.lo, mid, left.value, left.err_estimate, worst.depth + 1});
        panels.push({mid, worst.hi, right.value, right.err_estimate, worst.depth + 1});
    }

    // Recompute the sums from the panels to shed the drift of the running updates.
    double value = 0.0;
    double comp = 0.0;
    double err = 0.0;
    while (!panels.empty()) {
        const Panel& p = panels.top();
        const double y = p.value - comp;
        const double t = value + y;
        comp = (t - value) - y;
        value = t;
        err += p.err;
        panels.pop();
    }
    return {value, err, evaluations};
}

}  // namespace kelly::quad
