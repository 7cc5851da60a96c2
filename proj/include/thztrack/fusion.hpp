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

#include <stdexcept>
#include <vector>

#include "thztrack/geometry.hpp"

namespace thztrack
{

// One station's localization output for a timeslot. Stations that missed the
// terminal contribute an invalid entry so the fusion step can see how many
// inputs it actually has.
struct PositionEstimate
{
    int bs_id = 0;
    int timeslot = 0;
    Position2D position;
    bool valid = false;
};

struct FusedPosition
{
    Position2D position;
    int contributing = 0; // number of valid inputs
    int timeslot = 0;
};

// Raised when a fusion round has no valid input at all; the whole deployment
// has lost the terminal and must reacquire from scratch.
struct TotalTrackingLoss : std::runtime_error
{
    TotalTrackingLoss() : std::runtime_error("total tracking loss: no valid position estimate") {}
};

// Unweighted center of gravity of the valid estimates.
inline FusedPosition center_of_gravity(const std::vector<PositionEstimate> &estimates)
{
    FusedPosition fused;
    bool have_slot = false;
    for (const auto &e : estimates)
    {
        if (!e.valid)
            continue;
        if (!have_slot)
        {
            fused.timeslot = e.timeslot;
            have_slot = true;
        }
        else if (e.timeslot != fused.timeslot)
        {
            throw std::invalid_argument("center_of_gravity: estimates from different timeslots");
        }
        fused.position = fused.position + e.position;
        fused.contributing += 1;
    }
    if (fused.contributing == 0)
        throw TotalTrackingLoss();
    fused.position = fused.position * (1.0 / fused.contributing);
    return fused;
}

// Arrival angle a station derives from the shared fused position; this is
// what it broadcasts back into its own tracking loop.
inline double broadcast_aoa(const FusedPosition &fused, const BaseStationGeometry &bs)
{
    return aoa_from_position(fused.position, bs);
}

} // namespace thztrack
