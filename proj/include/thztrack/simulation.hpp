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

#include <string>
#include <vector>

#include "thztrack/fusion.hpp"
#include "thztrack/metrics.hpp"
#include "thztrack/scenario.hpp"
#include "thztrack/tracking.hpp"

namespace thztrack
{

// Ground truth for one timeslot, shared by every algorithm variant.
struct SlotTruth
{
    Position2D ue;
    std::vector<double> theta;               // true arrival angle per station
    std::vector<double> dist;                // true range per station, m
    std::vector<Eigen::VectorXcd> beamspace; // noiseless beamspace channel per station
};

SlotTruth slot_truth(const Scenario &scenario, const Eigen::MatrixXcd &lens,
                     const Trajectory &trajectory, int timeslot);

// Tracker memory of one algorithm variant across all stations.
struct AlgorithmState
{
    Algorithm algorithm = Algorithm::Fct;
    std::vector<TrackState> stations;
};

// Advance one algorithm variant by one timeslot: per-station estimation,
// validation, localization, and (for the cooperative variant) fusion. Returns
// one record per station. All variants must be fed the same `draws` so they
// face common random numbers.
std::vector<TimeslotRecord> run_timeslot(AlgorithmState &state, const SlotTruth &truth,
                                         const std::vector<SlotDraws> &draws,
                                         const Scenario &scenario, std::uint64_t seed,
                                         int timeslot);

struct RunResult
{
    std::vector<TimeslotRecord> records; // sorted by seed, timeslot, station, algorithm
    std::vector<RunSummary> summaries;
};

RunResult run_scenario(const Scenario &scenario);

std::string render_summary(const std::vector<RunSummary> &summaries);

// Write records.csv and summary.txt into out_dir (created if missing).
void emit_results(const RunResult &result, const std::string &out_dir);

} // namespace thztrack
