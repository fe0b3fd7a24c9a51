// Copyright 2026 The quftisim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quftisim/conjecture.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "quftisim/permanent.hpp"
#include "quftisim/unitary.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

TEST_CASE("two modes reduce to a plain cosine-squared fringe") {
    for (double phi : {0.0, 0.1, 0.7, 1.3, 2.9, -0.4}) {
        const double c = std::cos(phi);
        CHECK(qufti::q_conjecture(2, phi) == doctest::Approx(c * c).epsilon(1e-14));
    }
    CHECK(qufti::q_conjecture(2, 0.1) == doctest::Approx(0.9900332889206209).epsilon(1e-14));
}

TEST_CASE("unit peak at zero gradient for every mode count") {
    for (int m = 2; m <= 16; ++m) {
        CHECK(qufti::q_conjecture(m, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("hand-derived off-peak values") {
    // M=3 at phi = pi/3: every factor is ((M-2j)/M)^2 -> (1/9)(1/9).
    CHECK(qufti::q_conjecture(3, kPi / 3.0) == doctest::Approx(1.0 / 81.0).epsilon(1e-12));
    // M=4 at phi = pi/4: the j=2 factor vanishes.
    CHECK(qufti::q_conjecture(4, kPi / 4.0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("fringe is even and 2 pi / M periodic, with values in [0, 1]") {
    for (int m : {2, 3, 5, 8, 13}) {
        for (int i = 0; i <= 40; ++i) {
            const double phi = -2.0 + 0.1 * i;
            const double q = qufti::q_conjecture(m, phi);
            CHECK(q >= 0.0);
            CHECK(q <= 1.0 + 1e-12);
            CHECK(qufti::q_conjecture(m, -phi) == doctest::Approx(q).epsilon(1e-12));
            CHECK(qufti::q_conjecture(m, phi + 2.0 * kPi / m) ==
                  doctest::Approx(q).epsilon(1e-9));
        }
    }
}

TEST_CASE("closed form matches the exact permanent fringe") {
    // The defining property: |perm V|^2 of the M-mode interferometer.
    for (int m = 2; m <= 10; ++m) {
        for (int i = 0; i < 50; ++i) {
            const double phi = 2.0 * kPi / m * i / 49.0;
            const qufti::UnitaryMatrix v =
                qufti::build_qufti(m, qufti::PhaseProfile::noiseless(m, phi));
            const double exact = std::norm(qufti::permanent_ryser(v.matrix()));
            const double closed = qufti::q_conjecture(m, phi);
            CHECK(std::abs(closed - exact) < 1e-9 * (1.0 + exact));
        }
    }
}

TEST_CASE("mode count below two is rejected") {
    CHECK_THROWS_AS(qufti::q_conjecture(1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(qufti::q_conjecture(0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(qufti::q_conjecture(-3, 0.0), std::invalid_argument);
}

} // namespace
