#include <benchmark/benchmark.h>

#include <cmath>

#include "pcf/api.hpp"

namespace {

struct Case {
    pcf::Func func;
    double a, t;
};

// One representative point per regime.
constexpr Case kCases[] = {
    {pcf::Func::U, 0.3, 2.0},   {pcf::Func::U, 5.0, 0.7},   {pcf::Func::U, -5.0, 0.5},  {pcf::Func::U, -5.0, 0.95},
    {pcf::Func::U, -5.0, 2.0},  {pcf::Func::U, -5.0, -2.0}, {pcf::Func::W, -5.0, 0.5},  {pcf::Func::W, 5.0, 2.0},
    {pcf::Func::W, 5.0, 0.998}, {pcf::Func::W, 5.0, 0.5},
};

double x_of(const Case& c) {
    return std::fabs(c.a) < 0.5 ? c.t : 2.0 * c.t * std::sqrt(std::fabs(c.a));
}

void BM_Evaluate(benchmark::State& state) {
    const Case& c = kCases[state.range(0)];
    pcf::EvalRequest req{c.func, c.a, x_of(c), true, true, pcf::kDefaultTol};
    state.SetLabel(std::string(pcf::regime_name(pcf::classify(c.func, c.a, req.x))));
    for (auto _ : state) benchmark::DoNotOptimize(pcf::evaluate(req));
}
BENCHMARK(BM_Evaluate)->DenseRange(0, std::size(kCases) - 1);

void BM_EvaluatePair(benchmark::State& state) {
    const Case& c = kCases[state.range(0)];
    double x = x_of(c);
    state.SetLabel(std::string(pcf::regime_name(pcf::classify(c.func, c.a, x))));
    for (auto _ : state) benchmark::DoNotOptimize(pcf::evaluate_pair(c.func, c.a, x));
}
BENCHMARK(BM_EvaluatePair)->DenseRange(0, std::size(kCases) - 1);

void BM_EvaluateLargeA(benchmark::State& state) {
    double a = double(state.range(0));
    pcf::EvalRequest req{pcf::Func::W, a, 2.0 * 0.5 * std::sqrt(a), true, true, pcf::kDefaultTol};
    for (auto _ : state) benchmark::DoNotOptimize(pcf::evaluate(req));
}
BENCHMARK(BM_EvaluateLargeA)->RangeMultiplier(10)->Range(10, 100000);

}  // namespace

BENCHMARK_MAIN();
