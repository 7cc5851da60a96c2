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

#pragma once

#include <array>

#include "thztrack/channel.hpp"
#include "thztrack/metrics.hpp"
#include "thztrack/rng.hpp"

namespace thztrack
{

// Two-way exchange: the station transmits at t1, the terminal receives at t2
// and replies at t3 (applying its processing delay), the station receives at
// t4. t1/t4 run on the station clock, t2/t3 on the terminal clock, so a
// constant clock offset between the two cancels out of the range estimate.
struct ToATimestamps
{
    double t1 = 0.0; // s
    double t2 = 0.0;
    double t3 = 0.0;
    double t4 = 0.0;
};

struct RangingConfig
{
    double timestamp_jitter_std_s = 0.0; // per-timestamp Gaussian error
    double processing_delay_s = 1e-6;    // terminal turnaround time
    double clock_offset_s = 0.0;         // terminal clock minus station clock
};

// Range from the round trip: alpha = ((t4 - t1) - (t3 - t2)) / 2 * c.
// The terminal's processing delay and any constant clock offset drop out.
double two_way_toa_distance(const ToATimestamps &ts);

// Synthesize the four timestamps for a true range. Each timestamp gets an
// independent jitter draw (the four entries of `jitter` are consumed in t1..t4
// order and scaled by the configured standard deviation).
ToATimestamps generate_timestamps(double true_distance_m, const RangingConfig &config,
                                  const std::array<double, 4> &jitter);

ToATimestamps generate_timestamps(double true_distance_m, const RangingConfig &config, Rng &rng);

// Whether a pencil beam pointed at the estimated angle still covers the true
// direction: misalignment strictly below half the beam width. Exactly on the
// beam edge counts as out of beam, matching the failure rule of the
// misalignment metric.
bool in_beam(double theta_true_rad, double theta_est_rad, const ArrayConfig &array,
             BeamwidthConvention convention = BeamwidthConvention::Psi);

} // namespace thztrack
