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

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"

#include "qangle/evolution.hpp"
#include "qangle/generator.hpp"
#include "qangle/state.hpp"
#include "test_support.hpp"

using namespace qangle;
using qangle::testing::random_hermitian;

namespace {

HermitianGenerator pauli_z() {
    CMatrix a = CMatrix::Zero(2, 2);
    a(0, 0) = Complex(1.0, 0.0);
    a(1, 1) = Complex(-1.0, 0.0);
    return HermitianGenerator(a);
}

StateVector plus_state() {
    CVector v(2);
    const double s = std::numbers::sqrt2 / 2.0;
    v << Complex(s, 0.0), Complex(s, 0.0);
    return StateVector(v);
}

}  // namespace

TEST_CASE("evolve applies the diagonal phase factors") {
    const EvolutionContext ctx(pauli_z());
    const StateVector psi = plus_state();
    const double t = 0.83;
    const StateVector moved = evolve(ctx, psi, t);

    const double s = std::numbers::sqrt2 / 2.0;
    CHECK(std::abs(moved.amplitudes()(0) - s * std::polar(1.0, -t)) < 1e-14);
    CHECK(std::abs(moved.amplitudes()(1) - s * std::polar(1.0, t)) < 1e-14);
}

TEST_CASE("hbar rescales the group parameter") {
    const EvolutionContext slow(pauli_z(), 2.0);
    const EvolutionContext fast(pauli_z(), 1.0);
    const StateVector psi = plus_state();
    // Half the action scale, twice the shift: same motion.
    const StateVector a = evolve(slow, psi, 1.0);
    const StateVector b = evolve(fast, psi, 0.5);
    CHECK((a.amplitudes() - b.amplitudes()).norm() < 1e-14);

    CHECK_THROWS_AS(EvolutionContext(pauli_z(), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(EvolutionContext(pauli_z(), -1.0), std::invalid_argument);
}

TEST_CASE("evolution preserves norm and composes additively") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 10; ++trial) {
        const EvolutionContext ctx(HermitianGenerator(random_hermitian(8, rng)));
        const StateVector psi = random_state(8, rng);

        const StateVector one = evolve(ctx, psi, 0.4);
        CHECK(std::abs(one.amplitudes().norm() - 1.0) < 1e-13);

        const StateVector split = evolve(ctx, evolve(ctx, psi, 0.25), 0.15);
        CHECK((split.amplitudes() - one.amplitudes()).norm() < 1e-12);
    }
}

TEST_CASE("mean and std_dev match hand-computed spectra") {
    const HermitianGenerator z = pauli_z();
    CHECK(std::abs(mean(z, plus_state())) < 1e-14);
    CHECK(std_dev(z, plus_state()) == doctest::Approx(1.0).epsilon(1e-14));

    CVector v(2);
    v << Complex(std::sqrt(0.9), 0.0), Complex(std::sqrt(0.1), 0.0);
    const StateVector tilted{v};
    // Projector spectrum {1, -1}: mean 0.8, variance 1 - 0.64.
    CHECK(mean(z, tilted) == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(std_dev(z, tilted) == doctest::Approx(0.6).epsilon(1e-13));
}

TEST_CASE("spread statistics are constant along the orbit") {
    std::mt19937_64 rng(52);
    const EvolutionContext ctx(HermitianGenerator(random_hermitian(8, rng)));
    const StateVector psi = random_state(8, rng);
    const double m0 = mean(ctx.generator(), psi);
    const double s0 = std_dev(ctx.generator(), psi);

    for (double t : {0.3, 1.7, 4.0}) {
        const StateVector moved = evolve(ctx, psi, t);
        CHECK(std::abs(mean(ctx.generator(), moved) - m0) < 1e-11);
        CHECK(std::abs(std_dev(ctx.generator(), moved) - s0) < 1e-11);
    }
}

TEST_CASE("orbit_stats ties the angular speed to the spread") {
    const EvolutionContext ctx(pauli_z(), 2.0);
    const OrbitStats stats = orbit_stats(ctx, plus_state());
    CHECK(std::abs(stats.mean) < 1e-14);
    CHECK(stats.std_dev == doctest::Approx(1.0).epsilon(1e-13));
    // The ray moves at speed spread/hbar.
    CHECK(stats.omega == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("angle_profile reports the opened angle against the linear bound") {
    const EvolutionContext ctx(pauli_z());
    const StateVector psi = plus_state();
    const std::vector<double> deltas{0.0, 0.25, 0.5, 1.0, 1.4};
    const auto profile = angle_profile(ctx, psi, deltas);

    REQUIRE(profile.size() == deltas.size());
    for (std::size_t i = 0; i < profile.size(); ++i) {
        CHECK(profile[i].delta_s == deltas[i]);
        // Equal two-level superposition: angle grows exactly linearly, so
        // the profile sits on its own bound.
        CHECK(std::abs(profile[i].angle - deltas[i]) < 1e-12);
        CHECK(std::abs(profile[i].bound - deltas[i]) < 1e-12);
        CHECK(profile[i].angle <= profile[i].bound + 1e-9);
    }
}

TEST_CASE("certainty_report grades the bound") {
    // Substantial change with a healthy product: holds.
    CHECK(certainty_report(1.0, 1.2, 1.5).holds);
    // Substantial change with a product below hbar: the report must say no.
    const BoundReport bad = certainty_report(1.0, 1.2, 0.5);
    CHECK_FALSE(bad.holds);
    CHECK(bad.lhs == 1.0);
    CHECK(bad.rhs == 0.5);
    // Borderline product within tolerance still passes.
    CHECK(certainty_report(1.0, 1.1, 1.0 - 1e-12).holds);
    // Below the substantial threshold the claim is vacuous.
    const BoundReport vac = certainty_report(1.0, 0.5, 0.01);
    CHECK(vac.holds);
    CHECK(vac.context.find("vacuously") != std::string::npos);
}

TEST_CASE("certainty_verdict evaluates one shift of the orbit") {
    const EvolutionContext ctx(pauli_z());
    const StateVector psi = plus_state();

    const BoundReport hit = certainty_verdict(ctx, psi, 1.2);
    CHECK(hit.holds);
    CHECK(hit.lhs == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(hit.rhs == doctest::Approx(1.2).epsilon(1e-12));

    const BoundReport vac = certainty_verdict(ctx, psi, 0.5);
    CHECK(vac.holds);
    CHECK(vac.context.find("not applicable") != std::string::npos);
}

TEST_CASE("minimal_substantial_shift brackets the first substantial shift") {
    const EvolutionContext ctx(pauli_z());
    const auto star = minimal_substantial_shift(ctx, plus_state(), 20.0);

    REQUIRE(star.has_value());
    CHECK(std::abs(*star - 1.0) < 1e-6);
    // The returned shift itself is substantial...
    CHECK(differ_substantially(evolve(ctx, plus_state(), *star), plus_state()));
    // ...and it satisfies the product bound.
    CHECK(*star * std_dev(ctx.generator(), plus_state()) >= ctx.hbar() - 1e-9);
}

TEST_CASE("minimal_substantial_shift reports absence honestly") {
    // Eigenstates never move.
    CVector v = CVector::Zero(2);
    v(0) = Complex(1.0, 0.0);
    const EvolutionContext ctx(pauli_z());
    CHECK_FALSE(minimal_substantial_shift(ctx, StateVector(v), 50.0).has_value());

    // A search window too small to reach the threshold.
    CHECK_FALSE(minimal_substantial_shift(ctx, plus_state(), 0.5).has_value());
}

TEST_CASE("substantial change implies the product bound on random orbits") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        const Eigen::Index dim = 2 + static_cast<Eigen::Index>(rng() % 5);
        const EvolutionContext ctx(HermitianGenerator(random_hermitian(dim, rng)));
        const StateVector psi = random_state(dim, rng);
        const double spread = std_dev(ctx.generator(), psi);
        if (spread < 1e-9) {
            continue;
        }
        std::uniform_real_distribution<double> pick(0.0, 3.0 / spread);
        const double shift = pick(rng);
        if (differ_substantially(evolve(ctx, psi, shift), psi)) {
            CHECK(shift * spread >= 1.0 - 1e-12);
        }
    }
}
