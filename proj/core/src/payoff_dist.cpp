#include "kelly/payoff_dist.hpp"

#include "kelly/errors.hpp"
#include "kelly/numeric.hpp"
#include "kelly/quadrature.hpp"
#include "kelly/random.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace kelly {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

void check_fraction(double f, const char* where) {
    if (!std::isfinite(f) || f < 0.0 || f >= 1.0) {
        throw DomainError(std::string(where) + ": fraction " + format_significant(f, 17) +
                          " outside [0, 1)");
    }
}

void check_mass(double total, const DistOptions& opts, const std::string& prefix,
                std::vector<std::string>& out) {
    if (std::abs(total - 1.0) > opts.mass_tol) {
        out.push_back(prefix + "mass sums to " + format_significant(total, 12));
    }
}

void validate_into(const PayoffDistribution& dist, const DistOptions& opts,
                   const std::string& prefix, std::vector<std::string>& out) {
    std::visit(
        overloaded{
            [&](const Dirac& d) {
                if (!finite_nonneg(d.b0)) out.push_back(prefix + "dirac payoff must be finite and >= 0");
            },
            [&](const Atoms& a) {
                if (a.points.empty()) {
                    out.push_back(prefix + "atoms list is empty");
                    return;
                }
                CompensatedSum mass;
                for (const Atom& atom : a.points) {
                    if (!finite_nonneg(atom.payoff)) {
                        out.push_back(prefix + "atom payoff " + format_significant(atom.payoff) +
                                      " must be finite and >= 0");
                    }
                    if (!finite_nonneg(atom.weight)) {
                        out.push_back(prefix + "atom weight " + format_significant(atom.weight) +
                                      " must be finite and >= 0");
                    }
                    mass.add(atom.weight);
                }
                check_mass(mass.value(), opts, prefix, out);
            },
            [&](const Uniform& u) {
                if (!finite_nonneg(u.lo) || !std::isfinite(u.hi) || !(u.lo < u.hi)) {
                    out.push_back(prefix + "uniform support needs 0 <= lo < hi");
                }
            },
            [&](const Histogram& h) {
                if (h.edges.size() < 2) {
                    out.push_back(prefix + "histogram needs at least two edges");
                    return;
                }
                if (h.masses.size() + 1 != h.edges.size()) {
                    out.push_back(prefix + "histogram needs one mass per bin");
                    return;
                }
                for (std::size_t i = 0; i < h.edges.size(); ++i) {
                    if (!finite_nonneg(h.edges[i])) {
                        out.push_back(prefix + "histogram edges must be finite and >= 0");
                        break;
                    }
                    if (i > 0 && !(h.edges[i - 1] < h.edges[i])) {
                        out.push_back(prefix + "histogram edges must be strictly increasing");
                        break;
                    }
                }
                CompensatedSum mass;
                for (double m : h.masses) {
                    if (!finite_nonneg(m)) {
                        out.push_back(prefix + "histogram masses must be finite and >= 0");
                        return;
                    }
                    mass.add(m);
                }
                check_mass(mass.value(), opts, prefix, out);
            },
            [&](const Pareto& p) {
                if (!std::isfinite(p.alpha) || p.alpha <= 1.0) {
                    out.push_back(prefix + "infinite mean, alpha <= 1");
                }
                if (!std::isfinite(p.xmin) || p.xmin <= 0.0) {
                    out.push_back(prefix + "pareto xmin must be finite and > 0");
                }
            },
            [&](const Mixture& m) {
                if (m.parts.empty()) {
                    out.push_back(prefix + "mixture has no parts");
                    return;
                }
                CompensatedSum mass;
                for (std::size_t i = 0; i < m.parts.size(); ++i) {
                    const MixtureComponent& c = m.parts[i];
                    if (!std::isfinite(c.weight) || c.weight <= 0.0) {
                        out.push_back(prefix + "mixture weights must be positive");
                    }
                    mass.add(c.weight);
                    validate_into(c.dist, opts, prefix + "part " + std::to_string(i) + ": ", out);
                }
                check_mass(mass.value(), opts, prefix, out);
            },
        },
        dist.variant());
}

// Integrates density * kernel(b) over [lo, hi] for a constant density.
template <class Kernel>
double integrate_flat(double lo, double hi, double density, Kernel kernel,
                      const DistOptions& opts) {
    quad::Integral spec;
    spec.integrand = [=](double b) { return density * kernel(b); };
    spec.lo = lo;
    spec.hi = hi;
    spec.abs_tol = opts.quad_abs_tol;
    return quad::integrate(spec).value;
}

// Integrates kernel(b) against the Pareto density over [xmin, inf) after the
// change of variables u = xmin / b, which turns it into
//   int_0^1 alpha u^(alpha - 1) kernel(xmin / u) du.
// The split at `knee` isolates the region where kernel(xmin / u) bends.
template <class Kernel>
double integrate_pareto(const Pareto& p, double knee, Kernel kernel, const DistOptions& opts) {
    const double alpha = p.alpha;
    const double xmin = p.xmin;
    auto integrand = [=](double u) { return alpha * std::pow(u, alpha - 1.0) * kernel(xmin, u); };

    quad::Integral spec;
    spec.integrand = integrand;
    spec.abs_tol = opts.quad_abs_tol;
    if (knee > 0.0 && knee < 1.0) {
        spec.abs_tol = 0.5 * opts.quad_abs_tol;
        spec.lo = 0.0;
        spec.hi = knee;
        const double head = quad::integrate(spec).value;
        spec.lo = knee;
        spec.hi = 1.0;
        return head + quad::integrate(spec).value;
    }
    spec.lo = 0.0;
    spec.hi = 1.0;
    return quad::integrate(spec).value;
}

double pareto_mean(const Pareto& p) {
    if (!(p.alpha > 1.0)) throw InfiniteMean("pareto alpha " + format_significant(p.alpha) + " <= 1");
    return p.alpha * p.xmin / (p.alpha - 1.0);
}

}  // namespace

std::string_view to_string(DistKind kind) noexcept {
    switch (kind) {
        case DistKind::Dirac: return "dirac";
        case DistKind::Atoms: return "atoms";
        case DistKind::Uniform: return "uniform";
        case DistKind::Histogram: return "histogram";
        case DistKind::Pareto: return "pareto";
        case DistKind::Mixture: return "mixture";
    }
    return "unknown";
}

PayoffDistribution PayoffDistribution::dirac(double b0) { return PayoffDistribution(Dirac{b0}); }

PayoffDistribution PayoffDistribution::atoms(std::vector<Atom> points) {
    return PayoffDistribution(Atoms{std::move(points)});
}

PayoffDistribution PayoffDistribution::uniform(double lo, double hi) {
    return PayoffDistribution(Uniform{lo, hi});
}

PayoffDistribution PayoffDistribution::histogram(std::vector<double> edges,
                                                 std::vector<double> masses) {
    return PayoffDistribution(Histogram{std::move(edges), std::move(masses)});
}

PayoffDistribution PayoffDistribution::pareto(double alpha, double xmin) {
    return PayoffDistribution(Pareto{alpha, xmin});
}

PayoffDistribution PayoffDistribution::mixture(std::vector<MixtureComponent> parts) {
    return PayoffDistribution(Mixture{std::move(parts)});
}

ValidationReport validate(const PayoffDistribution& dist, const DistOptions& opts) {
    ValidationReport report;
    validate_into(dist, opts, "", report.violations);
    return report;
}

void require_valid(const PayoffDistribution& dist, const DistOptions& opts) {
    const ValidationReport report = validate(dist, opts);
    if (report.ok()) return;
    std::ostringstream os;
    os << "invalid " << to_string(dist.kind()) << " distribution: ";
    for (std::size_t i = 0; i < report.violations.size(); ++i) {
        if (i > 0) os << "; ";
        os << report.violations[i];
    }
    throw InvalidDistribution(os.str());
}

double mean_payoff(const PayoffDistribution& dist, const DistOptions& opts) {
    return std::visit(
        overloaded{
            [](const Dirac& d) { return d.b0; },
            [](const Atoms& a) {
                CompensatedSum s;
                for (const Atom& atom : a.points) s.add(atom.payoff * atom.weight);
                return s.value();
            },
            [](const Uniform& u) { return 0.5 * (u.lo + u.hi); },
            [&](const Histogram& h) {
                CompensatedSum s;
                for (std::size_t i = 0; i < h.masses.size(); ++i) {
                    if (h.masses[i] == 0.0) continue;
                    const double lo = h.edges[i];
                    const double hi = h.edges[i + 1];
                    s.add(integrate_flat(lo, hi, h.masses[i] / (hi - lo),
                                         [](double b) { return b; }, opts));
                }
                return s.value();
            },
            [](const Pareto& p) { return pareto_mean(p); },
            [&](const Mixture& m) {
                CompensatedSum s;
                for (const MixtureComponent& c : m.parts) s.add(c.weight * mean_payoff(c.dist, opts));
                return s.value();
            },
        },
        dist.variant());
}

double payoff_transform(const PayoffDistribution& dist, double f, const DistOptions& opts) {
    check_fraction(f, "payoff_transform");
    if (f == 0.0) return mean_payoff(dist, opts);

    const auto kernel = [f](double b) { return b / (1.0 + b * f); };
    return std::visit(
        overloaded{
            [&](const Dirac& d) { return kernel(d.b0); },
            [&](const Atoms& a) {
                CompensatedSum s;
                for (const Atom& atom : a.points) s.add(atom.weight * kernel(atom.payoff));
                return s.value();
            },
            [&](const Uniform& u) {
                return integrate_flat(u.lo, u.hi, 1.0 / (u.hi - u.lo), kernel, opts);
            },
            [&](const Histogram& h) {
                CompensatedSum s;
                for (std::size_t i = 0; i < h.masses.size(); ++i) {
                    if (h.masses[i] == 0.0) continue;
                    const double lo = h.edges[i];
                    const double hi = h.edges[i + 1];
                    s.add(integrate_flat(lo, hi, h.masses[i] / (hi - lo), kernel, opts));
                }
                return s.value();
            },
            [&](const Pareto& p) {
                // b / (1 + b f) with b = xmin / u becomes xmin / (u + xmin f).
                return integrate_pareto(
                    p, p.xmin * f, [f](double xmin, double u) { return xmin / (u + xmin * f); },
                    opts);
            },
            [&](const Mixture& m) {
                CompensatedSum s;
                for (const MixtureComponent& c : m.parts) {
                    s.add(c.weight * payoff_transform(c.dist, f, opts));
                }
                return s.value();
            },
        },
        dist.variant());
}

double log_growth_win(const PayoffDistribution& dist, double f, const DistOptions& opts) {
    check_fraction(f, "log_growth_win");
    if (f == 0.0) return 0.0;

    const auto kernel = [f](double b) { return std::log1p(b * f); };
    return std::visit(
        overloaded{
            [&](const Dirac& d) { return kernel(d.b0); },
            [&](const Atoms& a) {
                CompensatedSum s;
                for (const Atom& atom : a.points) s.add(atom.weight * kernel(atom.payoff));
                return s.value();
            },
            [&](const Uniform& u) {
                return integrate_flat(u.lo, u.hi, 1.0 / (u.hi - u.lo), kernel, opts);
            },
            [&](const Histogram& h) {
                CompensatedSum s;
                for (std::size_t i = 0; i < h.masses.size(); ++i) {
                    if (h.masses[i] == 0.0) continue;
                    const double lo = h.edges[i];
                    const double hi = h.edges[i + 1];
                    s.add(integrate_flat(lo, hi, h.masses[i] / (hi - lo), kernel, opts));
                }
                return s.value();
            },
            [&](const Pareto& p) {
                return integrate_pareto(
                    p, p.xmin * f,
                    [f](double xmin, double u) { return std::log1p(xmin * f / u); }, opts);
            },
            [&](const Mixture& m) {
                CompensatedSum s;
                for (const MixtureComponent& c : m.parts) {
                    s.add(c.weight * log_growth_win(c.dist, f, opts));
                }
                return s.value();
            },
        },
        dist.variant());
}

namespace {

// Collects the support of a discrete distribution; false if any part is continuous.
bool collect_points(const PayoffDistribution& dist, std::vector<double>& out) {
    return std::visit(
        overloaded{
            [&](const Dirac& d) {
                out.push_back(d.b0);
                return true;
            },
            [&](const Atoms& a) {
                for (const Atom& atom : a.points) {
                    if (atom.weight > 0.0) out.push_back(atom.payoff);
                }
                return true;
            },
            [](const Uniform&) { return false; },
            [](const Histogram&) { return false; },
            [](const Pareto&) { return false; },
            [&](const Mixture& m) {
                for (const MixtureComponent& c : m.parts) {
                    if (!collect_points(c.dist, out)) return false;
                }
                return true;
            },
        },
        dist.variant());
}

}  // namespace

bool is_point_mass(const PayoffDistribution& dist) {
    std::vector<double> points;
    if (!collect_points(dist, points) || points.empty()) return false;
    return std::all_of(points.begin(), points.end(), [&](double b) { return b == points.front(); });
}

double draw_from_uniform(const PayoffDistribution& dist, double u) {
    u = std::clamp(u, 0x1.0p-53, 1.0);
    return std::visit(
        overloaded{
            [](const Dirac& d) { return d.b0; },
            [&](const Atoms& a) {
                double cum = 0.0;
                for (const Atom& atom : a.points) {
                    cum += atom.weight;
                    if (atom.weight > 0.0 && u <= cum) return atom.payoff;
                }
                // Rounding left u just above the last cumulative weight.
                for (auto it = a.points.rbegin(); it != a.points.rend(); ++it) {
                    if (it->weight > 0.0) return it->payoff;
                }
                return a.points.back().payoff;
            },
            [&](const Uniform& r) { return r.lo + u * (r.hi - r.lo); },
            [&](const Histogram& h) {
                double cum = 0.0;
                std::size_t last = 0;
                for (std::size_t i = 0; i < h.masses.size(); ++i) {
                    if (h.masses[i] <= 0.0) continue;
                    last = i;
                    if (u <= cum + h.masses[i]) {
                        const double t = std::clamp((u - cum) / h.masses[i], 0.0, 1.0);
                        return h.edges[i] + t * (h.edges[i + 1] - h.edges[i]);
                    }
                    cum += h.masses[i];
                }
                return h.edges[last + 1];
            },
            [&](const Pareto& p) { return p.xmin * std::pow(u, -1.0 / p.alpha); },
            [&](const Mixture& m) {
                double cum = 0.0;
                for (std::size_t i = 0; i < m.parts.size(); ++i) {
                    const MixtureComponent& c = m.parts[i];
                    if (u <= cum + c.weight || i + 1 == m.parts.size()) {
                        return draw_from_uniform(c.dist, (u - cum) / c.weight);
                    }
                    cum += c.weight;
                }
                return 0.0;  // unreachable for non-empty mixtures
            },
        },
        dist.variant());
}

double sample(const PayoffDistribution& dist, RandomState& rng) {
    return draw_from_uniform(dist, rng.uniform());
}

double mixture_linearity_check(const std::vector<MixtureComponent>& parts, double f, double tol,
                               const DistOptions& opts) {
    const PayoffDistribution mix = PayoffDistribution::mixture(parts);
    require_valid(mix, opts);
    const double whole = payoff_transform(mix, f, opts);
    CompensatedSum weighted;
    for (const MixtureComponent& c : parts) weighted.add(c.weight * payoff_transform(c.dist, f, opts));
    const double split = weighted.value();
    if (!(std::abs(whole - split) <= tol)) {
        throw ConsistencyFailure("mixture transform is not affine in its weights", whole, split);
    }
    return whole;
}

}  // namespace kelly
