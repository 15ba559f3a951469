#include <benchmark/benchmark.h>

#include "wsat/certificate.hpp"
#include "wsat/constructions.hpp"
#include "wsat/percolation.hpp"

namespace {

void BM_q_value(benchmark::State& state) {
    const wsat::ParamVec n{5, 5};
    const std::vector<wsat::ParamVec> S{{1, 1}, {2, 0}};
    const std::vector<wsat::ParamVec> R{{2, 2}, {3, 2}};
    for (auto _ : state) benchmark::DoNotOptimize(wsat::q_value(n, S, R));
}
BENCHMARK(BM_q_value);

void BM_closure_from_witness(benchmark::State& state) {
    const wsat::ParamVec n{4, 4};
    const std::vector<wsat::ParamVec> S{{2, 1}};
    const std::vector<wsat::ParamVec> R{{2, 2}};
    const auto host = wsat::build_host(n, S);
    const auto witness = wsat::construct_max_s(n, S, R);
    for (auto _ : state) {
        auto res = wsat::closure(host, S, R, witness.surviving, wsat::CopyMode::colored);
        benchmark::DoNotOptimize(res.edges.size());
    }
}
BENCHMARK(BM_closure_from_witness);

void BM_colored_oracle(benchmark::State& state) {
    const wsat::ParamVec n{4};
    const std::vector<wsat::ParamVec> S{{2}};
    const std::vector<wsat::ParamVec> R{{3}};
    const auto host = wsat::build_host(n, S);
    for (auto _ : state)
        benchmark::DoNotOptimize(wsat::cwsat_bruteforce(host, S, R));
}
BENCHMARK(BM_colored_oracle);

void BM_certificate_dim(benchmark::State& state) {
    const wsat::ParamVec n{4, 4};
    const std::vector<wsat::ParamVec> S{{1, 0}, {0, 1}};
    const std::vector<wsat::ParamVec> R{{2, 1}, {1, 2}};
    const auto host = wsat::build_host(n, S);
    const auto basis = wsat::colorful_generic_basis(n, 7);
    for (auto _ : state) {
        auto gens = wsat::span_generators(n, S, R, basis);
        benchmark::DoNotOptimize(wsat::dim_U(gens, host));
    }
}
BENCHMARK(BM_certificate_dim);

void BM_generic_block(benchmark::State& state) {
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wsat::generic_block(5, seed++));
    }
}
BENCHMARK(BM_generic_block);

} // namespace

BENCHMARK_MAIN();
