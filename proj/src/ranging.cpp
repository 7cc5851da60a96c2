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

#include "thztrack/ranging.hpp"

#include <stdexcept>

namespace thztrack
{

double two_way_toa_distance(const ToATimestamps &ts)
{
    const double round_trip = (ts.t4 - ts.t1) - (ts.t3 - ts.t2);
    if (round_trip < 0.0)
        throw std::invalid_argument("two_way_toa_distance: negative round-trip residual");
    return 0.5 * round_trip * kSpeedOfLight;
}

ToATimestamps generate_timestamps(double true_distance_m, const RangingConfig &config,
                                  const std::array<double, 4> &jitter)
{
    if (!(true_distance_m > 0.0))
        throw std::invalid_argument("generate_timestamps: distance must be positive");
    if (config.timestamp_jitter_std_s < 0.0)
        throw std::invalid_argument("generate_timestamps: jitter std must be nonnegative");
    if (config.processing_delay_s < 0.0)
        throw std::invalid_argument("generate_timestamps: processing delay must be nonnegative");

    const double tof = true_distance_m / kSpeedOfLight;
    const double s = config.timestamp_jitter_std_s;
    const double off = config.clock_offset_s;
    ToATimestamps ts;
    ts.t1 = 0.0 + s * jitter[0];
    ts.t2 = tof + off + s * jitter[1];
    ts.t3 = tof + off + config.processing_delay_s + s * jitter[2];
    ts.t4 = 2.0 * tof + config.processing_delay_s + s * jitter[3];
    if (ts.t4 <= ts.t1)
        throw std::runtime_error("generate_timestamps: jitter exceeded the round-trip time");
    return ts;
}

ToATimestamps generate_timestamps(double true_distance_m, const RangingConfig &config, Rng &rng)
{
    const std::array<double, 4> jitter = {rng.gaussian(), rng.gaussian(), rng.gaussian(),
                                          rng.gaussian()};
    return generate_timestamps(true_distance_m, config, jitter);
}

bool in_beam(double theta_true_rad, double theta_est_rad, const ArrayConfig &array,
             BeamwidthConvention convention)
{
    return deafness_pct(theta_true_rad, theta_est_rad, array, convention) < 100.0;
}

} // namespace thztrack
