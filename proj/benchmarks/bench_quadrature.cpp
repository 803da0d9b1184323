#include "kelly/quadrature.hpp"

#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>

namespace {

void BM_IntegrateSmooth(benchmark::State& state) {
    kelly::quad::Integral spec;
    spec.integrand = [](double x) { return std::exp(-x) * std::cos(8.0 * x); };
    spec.abs_tol = 1e-12;
    for (auto _ : state) benchmark::DoNotOptimize(kelly::quad::integrate(spec).value);
}
BENCHMARK(BM_IntegrateSmooth);

void BM_IntegrateKnee(benchmark::State& state) {
    // log(1 + x / u) style kernel with a sharp bend near u = 1e-3.
    kelly::quad::Integral spec;
    spec.integrand = [](double u) { return std::log1p(1e-3 / std::max(u, 1e-300)); };
    spec.abs_tol = 1e-10;
    for (auto _ : state) benchmark::DoNotOptimize(kelly::quad::integrate(spec).value);
}
BENCHMARK(BM_IntegrateKnee);

}  // namespace
