#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace kelly {

class RandomState;

// Tolerances shared by every payoff transform.
struct DistOptions {
    double quad_abs_tol = 1e-10;
    double mass_tol = 1e-12;
};

// Point mass at b0 (b0-to-1 odds).
struct Dirac {
    double b0 = 0.0;
};

struct Atom {
    double payoff = 0.0;
    double weight = 0.0;
};

struct Atoms {
    std::vector<Atom> points;
};

struct Uniform {
    double lo = 0.0;
    double hi = 1.0;
};

// Piecewise constant density; masses[i] covers [edges[i], edges[i+1]].
struct Histogram {
    std::vector<double> edges;
    std::vector<double> masses;
};

// Density alpha * xmin^alpha / b^(alpha + 1) on [xmin, inf).
struct Pareto {
    double alpha = 2.0;
    double xmin = 1.0;
};

struct MixtureComponent;

struct Mixture {
    std::vector<MixtureComponent> parts;
};

enum class DistKind { Dirac, Atoms, Uniform, Histogram, Pareto, Mixture };

std::string_view to_string(DistKind kind) noexcept;

// The distribution of the win payoff b >= 0. Immutable value type; construct
// through the named factories. Construction does not validate (see validate()),
// so invalid inputs can still be reported on rather than rejected outright.
class PayoffDistribution {
public:
    using Variant = std::variant<Dirac, Atoms, Uniform, Histogram, Pareto, Mixture>;

    static PayoffDistribution dirac(double b0);
    static PayoffDistribution atoms(std::vector<Atom> points);
    static PayoffDistribution uniform(double lo, double hi);
    static PayoffDistribution histogram(std::vector<double> edges, std::vector<double> masses);
    static PayoffDistribution pareto(double alpha, double xmin);
    static PayoffDistribution mixture(std::vector<MixtureComponent> parts);

    DistKind kind() const noexcept { return static_cast<DistKind>(v_.index()); }
    const Variant& variant() const noexcept { return v_; }

    template <typename T>
    const T* get_if() const noexcept {
        return std::get_if<T>(&v_);
    }

private:
    explicit PayoffDistribution(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

struct MixtureComponent {
    double weight = 0.0;
    PayoffDistribution dist;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate(const PayoffDistribution& dist, const DistOptions& opts = {});

// Throws InvalidDistribution listing every violation when validate() fails.
void require_valid(const PayoffDistribution& dist, const DistOptions& opts = {});

/// Mean payoff b-bar. Closed form for every family except Histogram, which is
/// integrated bin by bin. Throws InfiniteMean for a Pareto part with alpha <= 1.
double mean_payoff(const PayoffDistribution& dist, const DistOptions& opts = {});

/// M(f) = E[b / (1 + b f)], the payoff term of the first-order condition.
/// M(0) is the mean. Requires 0 <= f < 1.
double payoff_transform(const PayoffDistribution& dist, double f, const DistOptions& opts = {});

/// L(f) = E[log(1 + b f)], the win-side part of the growth rate. L(0) = 0.
double log_growth_win(const PayoffDistribution& dist, double f, const DistOptions& opts = {});

// True when all mass sits on a single payoff value (Dirac, or atoms / mixtures
// that collapse to one point).
bool is_point_mass(const PayoffDistribution& dist);

/// Maps one uniform variate u in (0, 1] to a payoff draw by inverse transform.
/// Pareto uses xmin * u^(-1/alpha); mixtures pick a component by cumulative
/// weight and rescale u into it, so every draw consumes exactly one variate.
double draw_from_uniform(const PayoffDistribution& dist, double u);

double sample(const PayoffDistribution& dist, RandomState& rng);

// Checks payoff_transform(Mixture(parts), f) against the weighted sum of the
// part transforms. Throws ConsistencyFailure when they differ by more than tol.
double mixture_linearity_check(const std::vector<MixtureComponent>& parts, double f,
                               double tol = 1e-9, const DistOptions& opts = {});

}  // namespace kelly
