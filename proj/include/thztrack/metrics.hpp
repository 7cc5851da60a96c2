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
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "thztrack/channel.hpp"

namespace thztrack
{

enum class Algorithm
{
    Fct,            // conventional tracker: linear predictor on beam indices
    ProposedNoCoop, // localization-aided tracker, each station on its own
    ProposedCoop    // localization-aided tracker with position fusion
};

std::string to_string(Algorithm alg);
Algorithm parse_algorithm(const std::string &name);

// How "half a beam width" is measured for the misalignment metric. The beam
// grid is uniform in psi, so the psi convention gives every beam the same
// width; the physical-angle convention exists for sensitivity checks and uses
// the local angular width around the estimated direction.
enum class BeamwidthConvention
{
    Psi,
    PhysicalAngle
};

// Misalignment between truth and estimate as a percentage of half the beam
// width. 100% means the user sits exactly on the beam edge; values at or
// above 100% count as a lost beam.
double deafness_pct(double theta_true_rad, double theta_est_rad, const ArrayConfig &array,
                    BeamwidthConvention convention = BeamwidthConvention::Psi);

// One station's outcome in one timeslot under one algorithm.
struct TimeslotRecord
{
    std::uint64_t seed = 0;
    int timeslot = 0; // 1-based
    int bs_id = 0;    // 1-based
    Algorithm algorithm = Algorithm::Fct;
    std::optional<double> deafness_pct; // empty iff the estimation failed
    bool success = false;               // deafness < 100%
    int pilots_used = 0;
    bool fused = false; // estimate came out of a valid fusion round
};

// Aggregates per (algorithm, station) over a record set.
struct RunSummary
{
    Algorithm algorithm = Algorithm::Fct;
    int bs_id = 0;
    int total_slots = 0;
    int successful_slots = 0;
    double avg_deafness_pct = 0.0; // over successful slots only
    double success_probability = 0.0;
    long long total_pilots = 0;
};

std::vector<RunSummary> summarize(const std::vector<TimeslotRecord> &records);

// Success fraction for one (algorithm, station) pair, optionally restricted
// to a single timeslot across seeds (the per-slot curves of the evaluation).
double success_probability(const std::vector<TimeslotRecord> &records, Algorithm alg, int bs_id,
                           std::optional<int> timeslot = std::nullopt);

// Pilot accounting recomputed from scratch for one station's record sequence
// (single seed, single algorithm, timeslot-ascending). The schedule starts
// with three acquisition slots at `acquisition_pilots`, then tracking slots
// at `tracking_pilots`. A failed slot sends the station back to three
// acquisition slots; under the cooperative algorithm only a slot with no
// valid fusion (fused = false) does.
struct PilotLedger
{
    std::vector<int> per_slot;
    long long total = 0;
};

PilotLedger pilot_ledger(const std::vector<TimeslotRecord> &records, int acquisition_pilots = 128,
                         int tracking_pilots = 16);

// CSV serialization. Column order is part of the tool's contract:
// seed,timeslot,bs_id,algorithm,deafness_pct,success,pilots_used,fused
void write_csv(std::ostream &os, const std::vector<TimeslotRecord> &records);
std::string to_csv(const std::vector<TimeslotRecord> &records);

} // namespace thztrack
