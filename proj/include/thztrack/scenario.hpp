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

#include <cstdint>
#include <string>
#include <vector>

#include "thztrack/channel.hpp"
#include "thztrack/geometry.hpp"
#include "thztrack/metrics.hpp"
#include "thztrack/motion.hpp"
#include "thztrack/ranging.hpp"

namespace thztrack
{

struct ConfigError : std::runtime_error
{
    explicit ConfigError(const std::string &what) : std::runtime_error(what) {}
};

struct MotionConfig
{
    Trajectory::Kind kind = Trajectory::Kind::Linear;
    // Default path starts inside the station triangle and runs up-left across
    // it. Chosen so every timeslot keeps at least one station close (low
    // misdetection odds) and the station distances balanced (a far station's
    // beam-quantized fix is the dominant fused-position error, and its reach
    // scales with distance^2 / boresight-depth). Millimetre-level placement
    // matters: it sets where the true direction falls within each station's
    // beam grid along the path.
    Position2D start{33.86, 2.46};
    double heading_rad = 2.316592654; // pi - 0.825, config round-trip stable
    double speed_mps = 10.0 / 3.6; // 10 km/h
    double amplitude_m = 2.0;      // sinusoidal cross-track amplitude
    int period_slots = 6;          // sinusoid period in timeslots
    double dt_s = 1.0;             // one estimation round per second

    Trajectory build() const;
};

// Full description of one simulation campaign. The default constructor holds
// the reference deployment: three stations on an equilateral triangle of side
// 50 m, the outer two facing +y and the middle one facing -y, a 256-element
// half-wavelength array at 275 GHz, and a terminal crossing the triangle at
// 10 km/h.
struct Scenario
{
    std::vector<BaseStationGeometry> base_stations = {
        {1, {0.0, 0.0}, M_PI / 2.0},
        {2, {25.0, 43.30127018922193}, -M_PI / 2.0},
        {3, {50.0, 0.0}, M_PI / 2.0},
    };
    ArrayConfig array;
    LinkBudget budget;
    RangingConfig ranging;
    MotionConfig motion;

    int timeslots = 20;
    int support_beams = 16; // V, window size of a tracking-mode scan
    int acquisition_pilots = 128;
    int tracking_pilots = 16;
    bool energy_gate_enabled = false;
    double energy_threshold = 0.5;
    BeamwidthConvention convention = BeamwidthConvention::Psi;

    std::vector<std::uint64_t> seeds = default_seeds();
    std::vector<Algorithm> algorithms = {Algorithm::Fct, Algorithm::ProposedNoCoop,
                                         Algorithm::ProposedCoop};

    static std::vector<std::uint64_t> default_seeds(); // 1..100
    void validate() const;                             // throws ConfigError
};

// Parse "1:100", "7", or "1,4,9:12" into an explicit seed list.
std::vector<std::uint64_t> parse_seed_list(const std::string &text);

// Parse a comma-separated algorithm list ("fct,proposed-coop").
std::vector<Algorithm> parse_algorithm_list(const std::string &text);

// Set a single dotted configuration key ("motion.speed_mps = 2.5" style).
// Unknown keys raise ConfigError so typos surface instead of being ignored.
void apply_override(Scenario &scenario, const std::string &key, const std::string &value);

// Load a flat key = value file on top of the defaults. '#' starts a comment.
// An empty path or empty file yields the default scenario.
Scenario load_scenario(const std::string &path);

// Effective configuration as a parseable key = value listing.
std::string describe(const Scenario &scenario);

} // namespace thztrack
