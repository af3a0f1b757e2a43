// Copyright 2026 The qangle developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Microbenchmarks for the hot paths: the angle itself, triple
// canonicalization, applying the unitary group, and the two spectral
// setups (dense eigendecomposition, momentum operator assembly).

#include <random>

#include <benchmark/benchmark.h>

#include "qangle/canonical.hpp"
#include "qangle/curve.hpp"
#include "qangle/evolution.hpp"
#include "qangle/generator.hpp"
#include "qangle/geodesic.hpp"
#include "qangle/line.hpp"
#include "qangle/state.hpp"

namespace {

using namespace qangle;

CMatrix random_hermitian(Eigen::Index n, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    CMatrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            g(i, j) = Complex(gauss(rng), gauss(rng));
        }
    }
    return 0.5 * (g + g.adjoint()).eval();
}

void BM_QuantumAngle(benchmark::State &state) {
    std::mt19937_64 rng(1);
    const auto dim = static_cast<Eigen::Index>(state.range(0));
    const StateVector a = random_state(dim, rng);
    const StateVector b = random_state(dim, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(quantum_angle(a, b).radians());
    }
}
BENCHMARK(BM_QuantumAngle)->Arg(8)->Arg(64)->Arg(1024);

void BM_CanonicalizeTriple(benchmark::State &state) {
    std::mt19937_64 rng(2);
    const auto dim = static_cast<Eigen::Index>(state.range(0));
    const StateVector a = random_state(dim, rng);
    const StateVector b = random_state(dim, rng);
    const StateVector c = random_state(dim, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonicalize_triple(a, b, c));
    }
}
BENCHMARK(BM_CanonicalizeTriple)->Arg(8)->Arg(64);

void BM_GeneratorDecomposition(benchmark::State &state) {
    std::mt19937_64 rng(3);
    const auto dim = static_cast<Eigen::Index>(state.range(0));
    const CMatrix h = random_hermitian(dim, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(HermitianGenerator(h));
    }
}
BENCHMARK(BM_GeneratorDecomposition)->Arg(16)->Arg(64)->Arg(256);

void BM_Evolve(benchmark::State &state) {
    std::mt19937_64 rng(4);
    const auto dim = static_cast<Eigen::Index>(state.range(0));
    const EvolutionContext ctx(HermitianGenerator(random_hermitian(dim, rng)), 1.0);
    const StateVector psi = random_state(dim, rng);
    double delta = 0.0;
    for (auto _ : state) {
        delta += 0.01;
        benchmark::DoNotOptimize(evolve(ctx, psi, delta));
    }
}
BENCHMARK(BM_Evolve)->Arg(16)->Arg(64)->Arg(256);

void BM_MomentumOperator(benchmark::State &state) {
    const LineGrid grid(static_cast<int>(state.range(0)), 40.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(momentum_operator(grid));
    }
}
BENCHMARK(BM_MomentumOperator)->Arg(128)->Arg(512);

void BM_GeodesicArc(benchmark::State &state) {
    std::mt19937_64 rng(5);
    const StateVector a = random_state(16, rng);
    const StateVector b = random_state(16, rng);
    const auto segments = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(arc_length(geodesic(a, b, segments)));
    }
}
BENCHMARK(BM_GeodesicArc)->Arg(100)->Arg(1000);

void BM_MinimalShift(benchmark::State &state) {
    std::mt19937_64 rng(6);
    const EvolutionContext ctx(HermitianGenerator(random_hermitian(8, rng)), 1.0);
    const StateVector psi = random_state(8, rng);
    const double limit = 20.0 / std_dev(ctx.generator(), psi);
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimal_substantial_shift(ctx, psi, limit));
    }
}
BENCHMARK(BM_MinimalShift);

}  // namespace

BENCHMARK_MAIN();
