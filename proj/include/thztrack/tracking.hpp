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
#include <deque>
#include <utility>
#include <vector>

#include "thztrack/channel.hpp"
#include "thztrack/geometry.hpp"

namespace thztrack
{

// Beam index (1-based) of the strongest estimated entry. Ties break toward
// the lowest beam index. Throws if the observation carries no energy at all.
int strongest_element(const PilotObservation &obs);

// Boresight angle of beam n: arcsin(lambda/(N*d) * (n - (N+1)/2)).
// Throws std::domain_error when the arcsin argument leaves [-1, 1], which can
// only happen for element spacings below half a wavelength.
double aoa_from_beam_index(int n, const ArrayConfig &array);

// Nearest beam to a physical angle: argmin_n |psi_n - (d/lambda)*sin(theta)|.
// Ties break toward the lower index.
int beam_index_from_aoa(double theta_rad, const ArrayConfig &array);

// Contiguous window of v beams centered on beam n, wrapped cyclically onto
// 1..n_elements. Even v places n at position v/2 + 1; odd v centers exactly.
std::vector<int> support_set(int n, int v, int n_elements);

// One-step position extrapolation from the last three fixes (oldest first):
// the newest fix plus the mean of the last two displacements. Equals
// r2 + (r2 - r0) / 2, so the middle sample drops out of the result.
Position2D predict_position(const std::array<Position2D, 3> &history);

// Angle under which a station would see the predicted position.
double predict_aoa(const Position2D &predicted, const BaseStationGeometry &bs);

// Beam-domain counterpart of predict_position used by the conventional
// tracker: linear extrapolation on raw beam indices (oldest first), rounded
// half away from zero and clamped to the grid.
int fct_predict_beam(const std::array<int, 3> &beam_history, int n_elements);

// Received-energy sanity check: an estimation whose captured energy falls
// below a fraction of the expectation is treated as a miss.
struct EnergyCheck
{
    double estimated_energy_w = 0.0; // E_r
    double expected_energy_w = 0.0;  // under perfect alignment at the ranged distance
};

bool energy_gate(const EnergyCheck &check, double threshold_fraction);

// Energy captured around the detected beam: sum of |entry|^2 over the v-wide
// window centered on beam n, restricted to what was actually observed, with
// the known per-element noise floor subtracted (clamped at zero).
double estimated_signal_energy(const PilotObservation &obs, int n, int v, int n_elements);

// Per-station tracker memory. Mode is fully determined by how much history
// the active predictor has: fewer than three samples means the station has to
// run full acquisition scans until the pipeline is primed again.
struct TrackState
{
    enum class Mode
    {
        Acquisition,
        Tracking
    };

    std::deque<std::pair<int, Position2D>> position_history; // (timeslot, fix), newest last
    std::deque<int> beam_history;                            // detected beams, newest last
    int current_beam = 0;                                    // 0 = none yet
    int consecutive_failures = 0;

    static constexpr int kHistoryDepth = 3;

    void push_position(int timeslot, const Position2D &p);
    void push_beam(int n);
    void reset_to_acquisition();

    bool position_primed() const { return position_history.size() >= kHistoryDepth; }
    bool beam_primed() const { return beam_history.size() >= kHistoryDepth; }

    std::array<Position2D, 3> recent_positions() const; // oldest first
    std::array<int, 3> recent_beams() const;            // oldest first
};

} // namespace thztrack
