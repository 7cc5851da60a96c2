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

#include "thztrack/motion.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace thztrack
{

Position2D Trajectory::sample(int k) const
{
    if (k < 0)
        throw std::invalid_argument("Trajectory::sample: negative slot index");
    const double along = along_step_ * k;
    double cross = 0.0;
    if (kind_ == Kind::Sinusoidal)
        cross = amplitude_ * std::sin(2.0 * M_PI * k / period_);
    const double c = std::cos(heading_);
    const double s = std::sin(heading_);
    // cross-track axis is the base heading rotated +90 degrees
    return {start_.x + along * c - cross * s, start_.y + along * s + cross * c};
}

namespace
{

void check_common(double speed_mps, double dt_s)
{
    if (speed_mps < 0.0)
        throw std::invalid_argument("trajectory: speed must be nonnegative");
    if (!(dt_s > 0.0))
        throw std::invalid_argument("trajectory: timeslot duration must be positive");
}

} // namespace

Trajectory linear_trajectory(Position2D start, double heading_rad, double speed_mps, double dt_s)
{
    check_common(speed_mps, dt_s);
    Trajectory t;
    t.kind_ = Trajectory::Kind::Linear;
    t.start_ = start;
    t.heading_ = heading_rad;
    t.speed_ = speed_mps;
    t.dt_ = dt_s;
    t.along_step_ = speed_mps * dt_s;
    return t;
}

Trajectory sinusoidal_trajectory(Position2D start, double heading_rad, double speed_mps,
                                 double amplitude_m, int period_slots, double dt_s)
{
    check_common(speed_mps, dt_s);
    if (amplitude_m < 0.0)
        throw std::invalid_argument("sinusoidal_trajectory: amplitude must be nonnegative");
    if (period_slots < 2)
        throw std::invalid_argument("sinusoidal_trajectory: period must be at least two slots");

    // Per-slot cross-track displacements over one full cycle.
    std::vector<double> dc(static_cast<std::size_t>(period_slots));
    const double w = 2.0 * M_PI / period_slots;
    double cross_only = 0.0;
    for (int k = 0; k < period_slots; ++k)
    {
        dc[static_cast<std::size_t>(k)] = amplitude_m * (std::sin(w * (k + 1)) - std::sin(w * k));
        cross_only += std::abs(dc[static_cast<std::size_t>(k)]);
    }
    cross_only /= period_slots;

    const double target = speed_mps * dt_s; // mean path length per slot
    if (cross_only > target * (1.0 + 1e-12))
        throw std::invalid_argument(
            "sinusoidal_trajectory: cross-track motion alone exceeds the average speed");

    // Mean slot path length grows monotonically with the along-track step;
    // bisect for the step that hits the target exactly.
    auto mean_step = [&](double du) {
        double acc = 0.0;
        for (double d : dc)
            acc += std::hypot(du, d);
        return acc / period_slots;
    };
    double lo = 0.0;
    double hi = target;
    for (int it = 0; it < 200; ++it)
    {
        const double mid = 0.5 * (lo + hi);
        if (mean_step(mid) < target)
            lo = mid;
        else
            hi = mid;
    }

    Trajectory t;
    t.kind_ = Trajectory::Kind::Sinusoidal;
    t.start_ = start;
    t.heading_ = heading_rad;
    t.speed_ = speed_mps;
    t.dt_ = dt_s;
    t.amplitude_ = amplitude_m;
    t.period_ = period_slots;
    t.along_step_ = 0.5 * (lo + hi);
    return t;
}

} // namespace thztrack
