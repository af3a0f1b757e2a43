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

#include "doctest.h"

#include "qangle/lifetime.hpp"
#include "qangle/state.hpp"

using namespace qangle;

TEST_CASE("LevelModel validates its spectrum and weights") {
    RVector e(2), w(2);
    e << -1.0, 1.0;
    w << 0.5, 0.5;
    CHECK_NOTHROW(LevelModel(e, w));

    RVector neg(2);
    neg << 0.7, -0.2;  // negative probability (sums to 0.5 anyway)
    CHECK_THROWS_AS(LevelModel(e, neg), std::invalid_argument);

    RVector off(2);
    off << 0.5, 0.6;  // does not sum to one
    CHECK_THROWS_AS(LevelModel(e, off), std::invalid_argument);

    RVector w3(3);
    w3 << 0.2, 0.3, 0.5;
    CHECK_THROWS_AS(LevelModel(e, w3), std::invalid_argument);
}

TEST_CASE("initial_state carries square-root-of-weight amplitudes") {
    RVector e(3), w(3);
    e << 0.0, 1.0, 2.0;
    w << 0.25, 0.25, 0.5;
    const StateVector psi = LevelModel(e, w).initial_state();
    CHECK(std::abs(psi.amplitudes()(0) - Complex(0.5, 0.0)) < 1e-15);
    CHECK(std::abs(psi.amplitudes()(2) - Complex(std::sqrt(0.5), 0.0)) < 1e-15);
}

TEST_CASE("gaussian_levels builds a symmetric normalized spectrum") {
    const LevelModel model = gaussian_levels(61, 2.0, 1.0);
    CHECK(model.levels() == 61);
    CHECK(std::abs(model.weights().sum() - 1.0) < 1e-12);
    // Symmetric grid around the center.
    CHECK(std::abs(model.energies()(0) + model.energies()(60) - 4.0) < 1e-12);
    CHECK(std::abs(model.energies()(30) - 2.0) < 1e-12);
    CHECK(std::abs(model.weights()(0) - model.weights()(60)) < 1e-15);
    // Center level dominates.
    for (Eigen::Index i = 0; i < 61; ++i) {
        CHECK(model.weights()(30) >= model.weights()(i));
    }
}

TEST_CASE("two sharp levels make the bound an equality") {
    RVector e(2), w(2);
    e << -1.0, 1.0;
    w << 0.5, 0.5;
    const LifetimeReport rep = lifetime_demo(LevelModel(e, w));

    CHECK(rep.decays);
    CHECK(rep.delta_h == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(rep.t_star.has_value());
    // Survival amplitude |cos t|: the angle reaches 1 radian at t = 1.
    CHECK(*rep.t_star == doctest::Approx(1.0).epsilon(1e-6));
    REQUIRE(rep.product.has_value());
    CHECK(std::abs(*rep.product - 1.0) < 1e-9);
    CHECK(rep.verdict.holds);
}

TEST_CASE("the 61-level Gaussian spectrum reproduces frozen decay numbers") {
    const LifetimeReport rep = lifetime_demo(gaussian_levels(61, 0.0, 1.0, 4.0));

    CHECK(rep.decays);
    // Discrete spread of the +-4 sigma truncated Gaussian comb.
    CHECK(rep.delta_h == doctest::Approx(0.999588121283559).epsilon(1e-10));
    REQUIRE(rep.t_star.has_value());
    CHECK(*rep.t_star == doctest::Approx(1.1096569817912176).epsilon(1e-6));
    REQUIRE(rep.product.has_value());
    CHECK(*rep.product == doctest::Approx(1.1091999376978676).epsilon(1e-6));
    CHECK(rep.verdict.holds);
}

TEST_CASE("energy shifts and hbar rescaling act as expected") {
    // Shifting every level by a constant shifts only phases: same lifetime.
    const LifetimeReport base = lifetime_demo(gaussian_levels(31, 0.0, 0.5));
    const LifetimeReport shifted = lifetime_demo(gaussian_levels(31, 7.0, 0.5));
    REQUIRE(base.t_star.has_value());
    REQUIRE(shifted.t_star.has_value());
    CHECK(*base.t_star == doctest::Approx(*shifted.t_star).epsilon(1e-9));

    // Doubling hbar doubles the change time, keeping product/hbar fixed.
    const LifetimeReport slow = lifetime_demo(gaussian_levels(31, 0.0, 0.5), 2.0);
    REQUIRE(slow.t_star.has_value());
    CHECK(*slow.t_star == doctest::Approx(2.0 * *base.t_star).epsilon(1e-6));
    REQUIRE(slow.product.has_value());
    CHECK(*slow.product == doctest::Approx(*base.product).epsilon(1e-6));
}

TEST_CASE("a single level is stationary and never decays") {
    const LifetimeReport rep = lifetime_demo(gaussian_levels(1, 3.0, 1.0));
    CHECK_FALSE(rep.decays);
    CHECK_FALSE(rep.t_star.has_value());
    CHECK_FALSE(rep.product.has_value());
    CHECK(rep.delta_h < 1e-12);
    CHECK(rep.verdict.holds);
}

TEST_CASE("a too-small search window reports no decay") {
    RVector e(2), w(2);
    e << -1.0, 1.0;
    w << 0.5, 0.5;
    const LifetimeReport rep = lifetime_demo(LevelModel(e, w), 1.0, 0.5);
    CHECK_FALSE(rep.t_star.has_value());
    CHECK_FALSE(rep.decays);
    CHECK(rep.verdict.holds);
}
