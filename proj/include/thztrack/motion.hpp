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

#include "thztrack/geometry.hpp"

namespace thztrack
{

// Deterministic terminal trajectory, sampled once per timeslot. sample(0) is
// the start position; sample(k) the position k timeslot durations later.
class Trajectory
{
  public:
    enum class Kind
    {
        Linear,
        Sinusoidal
    };

    Position2D sample(int k) const;

    Kind kind() const { return kind_; }
    double average_speed_mps() const { return speed_; }
    double timeslot_duration_s() const { return dt_; }

    friend Trajectory linear_trajectory(Position2D start, double heading_rad, double speed_mps,
                                        double dt_s);
    friend Trajectory sinusoidal_trajectory(Position2D start, double heading_rad, double speed_mps,
                                            double amplitude_m, int period_slots, double dt_s);

  private:
    Trajectory() = default;

    Kind kind_ = Kind::Linear;
    Position2D start_;
    double heading_ = 0.0; // rad, base direction of travel
    double speed_ = 0.0;   // m/s, average over one period
    double dt_ = 1.0;      // s per timeslot
    double amplitude_ = 0.0;
    int period_ = 1;          // timeslots per sinusoid cycle
    double along_step_ = 0.0; // calibrated along-track advance per slot, m
};

// Straight line at constant speed.
Trajectory linear_trajectory(Position2D start, double heading_rad, double speed_mps, double dt_s);

// Sinusoidal weave: constant along-track advance plus a cross-track sinusoid
// of the given amplitude and period. The along-track rate is calibrated
// numerically so that the mean path speed over one period equals speed_mps.
// Throws if the cross-track motion alone already exceeds that speed.
Trajectory sinusoidal_trajectory(Position2D start, double heading_rad, double speed_mps,
                                 double amplitude_m, int period_slots, double dt_s);

} // namespace thztrack
