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

#include "thztrack/simulation.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "thztrack/ranging.hpp"

namespace thztrack
{

SlotTruth slot_truth(const Scenario &sc, const Eigen::MatrixXcd &lens,
                     const Trajectory &trajectory, int timeslot)
{
    if (timeslot < 1)
        throw std::invalid_argument("slot_truth: timeslots are 1-based");
    SlotTruth truth;
    truth.ue = trajectory.sample(timeslot - 1);
    truth.theta.reserve(sc.base_stations.size());
    truth.dist.reserve(sc.base_stations.size());
    truth.beamspace.reserve(sc.base_stations.size());
    for (const auto &bs : sc.base_stations)
    {
        const double theta = aoa_from_position(truth.ue, bs);
        const double d = distance(truth.ue, bs.position);
        const double psi = spatial_direction(theta, sc.array);
        const Eigen::VectorXcd h = los_channel(path_gain(d, sc.budget), psi, sc.array);
        truth.theta.push_back(theta);
        truth.dist.push_back(d);
        truth.beamspace.push_back(lens * h);
    }
    return truth;
}

namespace
{

// Outcome of one station's estimation round, before any fusion.
struct StationSlot
{
    int pilots = 0;
    int detected_beam = 0;
    double theta_est = 0.0;
    double deafness = 0.0;
    bool success = false;  // misalignment below the beam edge
    bool valid = false;    // success and, if enabled, the energy gate
    Position2D fix;
    bool have_fix = false;
};

StationSlot estimate_station(TrackState &st, const BaseStationGeometry &bs, Algorithm alg,
                             const SlotTruth &truth, const SlotDraws &draws, const Scenario &sc,
                             int station_index)
{
    const bool beam_domain = alg == Algorithm::Fct;
    const bool primed = beam_domain ? st.beam_primed() : st.position_primed();

    StationSlot out;
    out.pilots = primed ? sc.tracking_pilots : sc.acquisition_pilots;

    PilotObservation obs;
    if (!primed)
    {
        obs = observe_from_beamspace(truth.beamspace[station_index], sc.budget,
                                     sc.acquisition_pilots, std::nullopt, draws);
    }
    else
    {
        int center = 0;
        if (beam_domain)
        {
            center = fct_predict_beam(st.recent_beams(), sc.array.elements);
        }
        else
        {
            try
            {
                const Position2D predicted = predict_position(st.recent_positions());
                center = beam_index_from_aoa(predict_aoa(predicted, bs), sc.array);
            }
            catch (const std::invalid_argument &)
            {
                // prediction collapsed onto the station itself; reuse the last beam
                center = st.current_beam > 0 ? st.current_beam : 1;
            }
        }
        obs = observe_from_beamspace(truth.beamspace[station_index], sc.budget,
                                     sc.tracking_pilots,
                                     support_set(center, sc.support_beams, sc.array.elements),
                                     draws);
    }

    try
    {
        out.detected_beam = strongest_element(obs);
    }
    catch (const std::runtime_error &)
    {
        // nothing but silence in the scanned window: certain miss
        return out;
    }
    out.theta_est = aoa_from_beam_index(out.detected_beam, sc.array);
    out.deafness = deafness_pct(truth.theta[station_index], out.theta_est, sc.array, sc.convention);
    out.success = out.deafness < 100.0;
    out.valid = out.success;

    // Ranging and localization run only when the terminal actually heard the
    // message, i.e. when the beam still covers it. The conventional tracker
    // stops after the angle estimate.
    if (out.valid && !beam_domain)
    {
        const ToATimestamps ts =
            generate_timestamps(truth.dist[station_index], sc.ranging, draws.timestamp_jitter);
        const double alpha = two_way_toa_distance(ts);
        if (sc.energy_gate_enabled)
        {
            const EnergyCheck check{
                estimated_signal_energy(obs, out.detected_beam, sc.support_beams,
                                        sc.array.elements),
                std::norm(path_gain(alpha, sc.budget))};
            out.valid = energy_gate(check, sc.energy_threshold);
        }
        if (out.valid)
        {
            const double theta_global = global_from_local(bs.orientation_rad, out.theta_est);
            out.fix = position_from_polar(alpha, theta_global, bs.position);
            out.have_fix = true;
        }
    }
    return out;
}

} // namespace

std::vector<TimeslotRecord> run_timeslot(AlgorithmState &state, const SlotTruth &truth,
                                         const std::vector<SlotDraws> &draws, const Scenario &sc,
                                         std::uint64_t seed, int timeslot)
{
    const std::size_t n_bs = sc.base_stations.size();
    if (state.stations.size() != n_bs || draws.size() != n_bs)
        throw std::invalid_argument("run_timeslot: state/draws sized for a different deployment");

    std::vector<StationSlot> slot(n_bs);
    for (std::size_t i = 0; i < n_bs; ++i)
        slot[i] = estimate_station(state.stations[i], sc.base_stations[i], state.algorithm, truth,
                                   draws[i], sc, static_cast<int>(i));

    std::vector<TimeslotRecord> records(n_bs);
    for (std::size_t i = 0; i < n_bs; ++i)
    {
        records[i].seed = seed;
        records[i].timeslot = timeslot;
        records[i].bs_id = sc.base_stations[i].id;
        records[i].algorithm = state.algorithm;
        records[i].pilots_used = slot[i].pilots;
    }

    if (state.algorithm != Algorithm::ProposedCoop)
    {
        for (std::size_t i = 0; i < n_bs; ++i)
        {
            TrackState &st = state.stations[i];
            records[i].success = slot[i].success;
            if (slot[i].success)
                records[i].deafness_pct = slot[i].deafness;
            if (slot[i].valid)
            {
                st.push_beam(slot[i].detected_beam);
                st.current_beam = slot[i].detected_beam;
                if (slot[i].have_fix)
                    st.push_position(timeslot, slot[i].fix);
                st.consecutive_failures = 0;
            }
            else
            {
                st.reset_to_acquisition();
                st.consecutive_failures += 1;
            }
        }
        return records;
    }

    // Cooperative variant: pool the valid fixes. A station that missed this
    // slot inherits the fused position and keeps tracking at the low pilot
    // budget; only a slot with no valid fix anywhere forces everyone back to
    // acquisition.
    std::vector<PositionEstimate> estimates;
    estimates.reserve(n_bs);
    for (std::size_t i = 0; i < n_bs; ++i)
        estimates.push_back({sc.base_stations[i].id, timeslot, slot[i].fix,
                             slot[i].valid && slot[i].have_fix});

    const bool any_valid =
        std::any_of(estimates.begin(), estimates.end(), [](const auto &e) { return e.valid; });

    if (!any_valid)
    {
        for (std::size_t i = 0; i < n_bs; ++i)
        {
            state.stations[i].reset_to_acquisition();
            state.stations[i].consecutive_failures += 1;
        }
        return records; // all stations: failed slot, no fusion
    }

    const FusedPosition fused = center_of_gravity(estimates);
    for (std::size_t i = 0; i < n_bs; ++i)
    {
        TrackState &st = state.stations[i];
        records[i].fused = true;
        try
        {
            const double theta_bc = broadcast_aoa(fused, sc.base_stations[i]);
            const double d = deafness_pct(truth.theta[i], theta_bc, sc.array, sc.convention);
            if (d < 100.0)
            {
                records[i].success = true;
                records[i].deafness_pct = d;
                st.current_beam = beam_index_from_aoa(theta_bc, sc.array);
            }
        }
        catch (const std::invalid_argument &)
        {
            // fused position fell onto the station itself; no usable angle
        }
        st.push_position(timeslot, fused.position);
        if (slot[i].valid)
        {
            st.push_beam(slot[i].detected_beam);
            st.consecutive_failures = 0;
        }
        else
        {
            st.consecutive_failures += 1;
        }
    }
    return records;
}

RunResult run_scenario(const Scenario &sc)
{
    sc.validate();
    const Eigen::MatrixXcd lens = lens_matrix(sc.array);
    const Trajectory trajectory = sc.motion.build();
    const std::size_t n_bs = sc.base_stations.size();

    // Truth does not depend on the seed; compute each slot once.
    std::vector<SlotTruth> truth;
    truth.reserve(static_cast<std::size_t>(sc.timeslots));
    for (int t = 1; t <= sc.timeslots; ++t)
        truth.push_back(slot_truth(sc, lens, trajectory, t));

    RunResult result;
    result.records.reserve(sc.seeds.size() * static_cast<std::size_t>(sc.timeslots) * n_bs *
                           sc.algorithms.size());

    for (const std::uint64_t seed : sc.seeds)
    {
        std::vector<AlgorithmState> states;
        states.reserve(sc.algorithms.size());
        for (const Algorithm alg : sc.algorithms)
            states.push_back({alg, std::vector<TrackState>(n_bs)});

        for (int t = 1; t <= sc.timeslots; ++t)
        {
            std::vector<SlotDraws> draws;
            draws.reserve(n_bs);
            for (std::size_t i = 0; i < n_bs; ++i)
            {
                Rng stream = derive_stream(seed, static_cast<std::uint64_t>(t),
                                           static_cast<std::uint64_t>(sc.base_stations[i].id));
                draws.push_back(draw_slot_noise(stream, sc.array.elements));
            }
            for (auto &alg_state : states)
            {
                auto slot_records =
                    run_timeslot(alg_state, truth[static_cast<std::size_t>(t - 1)], draws, sc,
                                 seed, t);
                result.records.insert(result.records.end(), slot_records.begin(),
                                      slot_records.end());
            }
        }
    }

    std::sort(result.records.begin(), result.records.end(),
              [](const TimeslotRecord &a, const TimeslotRecord &b) {
                  return std::tie(a.seed, a.timeslot, a.bs_id, a.algorithm) <
                         std::tie(b.seed, b.timeslot, b.bs_id, b.algorithm);
              });
    result.summaries = summarize(result.records);
    return result;
}

std::string render_summary(const std::vector<RunSummary> &summaries)
{
    std::string out = "algorithm           bs  slots  success_prob  avg_deafness_pct  pilots\n";
    char buf[160];
    for (const auto &s : summaries)
    {
        std::snprintf(buf, sizeof(buf), "%-18s %3d  %5d  %12.4f  %16.4f  %6lld\n",
                      to_string(s.algorithm).c_str(), s.bs_id, s.total_slots,
                      s.success_probability, s.avg_deafness_pct, s.total_pilots);
        out += buf;
    }
    return out;
}

void emit_results(const RunResult &result, const std::string &out_dir)
{
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    const fs::path csv_path = fs::path(out_dir) / "records.csv";
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv)
        throw std::runtime_error("emit_results: cannot write " + csv_path.string());
    write_csv(csv, result.records);

    const fs::path summary_path = fs::path(out_dir) / "summary.txt";
    std::ofstream summary(summary_path, std::ios::binary);
    if (!summary)
        throw std::runtime_error("emit_results: cannot write " + summary_path.string());
    summary << render_summary(result.summaries);
}

} // namespace thztrack
