// SPDX-License-Identifier: Apache-2.0
//
// thztrack - beam tracking and cooperative localization for THz pencil-beam links
// Copyright (C) 2026 thztrack contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "thztrack/geometry.hpp"
#include "thztrack/rng.hpp"

using namespace thztrack;

TEST_CASE("wrap_angle - normalization to (-pi, pi]")
{
    CHECK(wrap_angle(0.0) == 0.0);
    CHECK(wrap_angle(3.0 * M_PI) == Catch::Approx(M_PI));          // 3*pi wraps to pi
    CHECK(wrap_angle(-1.5 * M_PI) == Catch::Approx(0.5 * M_PI));   // -3*pi/2 wraps to pi/2
    CHECK(wrap_angle(M_PI) == Catch::Approx(M_PI));                // pi itself stays pi
    CHECK(wrap_angle(-M_PI) == Catch::Approx(M_PI));               // -pi maps to the +pi end
    CHECK(wrap_angle(2.0 * M_PI + 0.25) == Catch::Approx(0.25));

    // result always lands in the half-open interval
    Rng rng(11);
    for (int i = 0; i < 1000; ++i)
    {
        const double w = wrap_angle((rng.uniform() - 0.5) * 50.0);
        CHECK(w > -M_PI);
        CHECK(w <= M_PI);
    }

    CHECK_THROWS_AS(wrap_angle(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(wrap_angle(INFINITY), std::invalid_argument);
}

TEST_CASE("aoa_from_position - boresight and sign convention")
{
    const BaseStationGeometry up{1, {0.0, 0.0}, M_PI / 2.0};   // facing +y
    const BaseStationGeometry down{2, {0.0, 0.0}, -M_PI / 2.0}; // facing -y

    CHECK(aoa_from_position({0.0, 10.0}, up) == Catch::Approx(0.0).margin(1e-15));
    CHECK(aoa_from_position({0.0, -10.0}, down) == Catch::Approx(0.0).margin(1e-15));

    // target on the +x side of a +y-facing station: positive local angle
    CHECK(aoa_from_position({10.0, 10.0}, up) == Catch::Approx(M_PI / 4.0));
    CHECK(aoa_from_position({-10.0, 10.0}, up) == Catch::Approx(-M_PI / 4.0));
    CHECK(aoa_from_position({10.0, 0.0}, up) == Catch::Approx(M_PI / 2.0));

    CHECK_THROWS_AS(aoa_from_position({0.0, 0.0}, up), std::invalid_argument);
}

TEST_CASE("global_from_local and position_from_polar")
{
    CHECK(global_from_local(M_PI / 2.0, 0.0) == Catch::Approx(M_PI / 2.0));
    CHECK(global_from_local(M_PI / 2.0, M_PI / 4.0) == Catch::Approx(M_PI / 4.0));

    const Position2D p = position_from_polar(std::sqrt(2.0), M_PI / 4.0, {0.0, 0.0});
    CHECK(p.x == Catch::Approx(1.0));
    CHECK(p.y == Catch::Approx(1.0));

    const Position2D q = position_from_polar(5.0, M_PI, {3.0, 1.0});
    CHECK(q.x == Catch::Approx(-2.0));
    CHECK(q.y == Catch::Approx(1.0));

    CHECK_THROWS_AS(position_from_polar(0.0, 0.0, {0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(position_from_polar(-1.0, 0.0, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("geometry round trip - angle and range reconstruct the position")
{
    Rng rng(42);
    for (int i = 0; i < 1000; ++i)
    {
        BaseStationGeometry bs{1,
                               {(rng.uniform() - 0.5) * 100.0, (rng.uniform() - 0.5) * 100.0},
                               wrap_angle((rng.uniform() - 0.5) * 2.0 * M_PI)};
        // target somewhere in front of the array (|local angle| < pi/2)
        const double local = (rng.uniform() - 0.5) * 0.98 * M_PI;
        const double range = 1.0 + rng.uniform() * 99.0;
        const Position2D target =
            position_from_polar(range, global_from_local(bs.orientation_rad, local), bs.position);

        const double aoa = aoa_from_position(target, bs);
        CHECK(aoa == Catch::Approx(local).margin(1e-12));

        const Position2D back =
            position_from_polar(distance(target, bs.position),
                                global_from_local(bs.orientation_rad, aoa), bs.position);
        CHECK(back.x == Catch::Approx(target.x).margin(1e-9));
        CHECK(back.y == Catch::Approx(target.y).margin(1e-9));
    }
}

TEST_CASE("aoa_from_position - translation invariance")
{
    Rng rng(7);
    for (int i = 0; i < 200; ++i)
    {
        const Position2D shift{(rng.uniform() - 0.5) * 1000.0, (rng.uniform() - 0.5) * 1000.0};
        const BaseStationGeometry bs{1, {1.0, 2.0}, 0.7};
        const BaseStationGeometry moved{1, bs.position + shift, 0.7};
        const Position2D target{(rng.uniform() - 0.5) * 50.0, (rng.uniform() - 0.5) * 50.0};
        if (std::abs(target.x - 1.0) < 1e-6 && std::abs(target.y - 2.0) < 1e-6)
            continue;
        CHECK(aoa_from_position(target, bs) ==
              Catch::Approx(aoa_from_position(target + shift, moved)).margin(1e-12));
    }
}
