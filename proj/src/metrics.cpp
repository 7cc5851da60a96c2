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

#include "thztrack/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace thztrack
{

std::string to_string(Algorithm alg)
{
    switch (alg)
    {
    case Algorithm::Fct:
        return "fct";
    case Algorithm::ProposedNoCoop:
        return "proposed-no-coop";
    case Algorithm::ProposedCoop:
        return "proposed-coop";
    }
    throw std::logic_error("to_string: unknown algorithm");
}

Algorithm parse_algorithm(const std::string &name)
{
    if (name == "fct")
        return Algorithm::Fct;
    if (name == "proposed-no-coop")
        return Algorithm::ProposedNoCoop;
    if (name == "proposed-coop")
        return Algorithm::ProposedCoop;
    throw std::invalid_argument("parse_algorithm: unknown algorithm '" + name + "'");
}

namespace
{

// Local angular half width of the beam whose boresight sits at theta_est:
// map the psi-domain beam edges back through arcsin.
double half_beamwidth_theta(double theta_est_rad, const ArrayConfig &array)
{
    const double ratio = array.spacing_over_wavelength;
    const double psi = spatial_direction(theta_est_rad, array);
    const double half = half_beamwidth_psi(array);
    const double lo = std::clamp((psi - half) / ratio, -1.0, 1.0);
    const double hi = std::clamp((psi + half) / ratio, -1.0, 1.0);
    return 0.5 * (std::asin(hi) - std::asin(lo));
}

} // namespace

double deafness_pct(double theta_true_rad, double theta_est_rad, const ArrayConfig &array,
                    BeamwidthConvention convention)
{
    array.validate();
    if (convention == BeamwidthConvention::Psi)
    {
        const double err = std::abs(spatial_direction(theta_true_rad, array) -
                                    spatial_direction(theta_est_rad, array));
        return 100.0 * err / half_beamwidth_psi(array);
    }
    const double half = half_beamwidth_theta(theta_est_rad, array);
    if (!(half > 0.0))
        throw std::domain_error("deafness_pct: degenerate beam width at the estimate");
    return 100.0 * std::abs(theta_true_rad - theta_est_rad) / half;
}

std::vector<RunSummary> summarize(const std::vector<TimeslotRecord> &records)
{
    std::map<std::pair<int, int>, RunSummary> groups;
    for (const auto &r : records)
    {
        auto &g = groups[{static_cast<int>(r.algorithm), r.bs_id}];
        g.algorithm = r.algorithm;
        g.bs_id = r.bs_id;
        g.total_slots += 1;
        g.total_pilots += r.pilots_used;
        if (r.success)
        {
            g.successful_slots += 1;
            g.avg_deafness_pct += r.deafness_pct.value();
        }
    }
    std::vector<RunSummary> out;
    out.reserve(groups.size());
    for (auto &[key, g] : groups)
    {
        if (g.successful_slots > 0)
            g.avg_deafness_pct /= g.successful_slots;
        g.success_probability =
            g.total_slots > 0 ? static_cast<double>(g.successful_slots) / g.total_slots : 0.0;
        out.push_back(g);
    }
    return out;
}

double success_probability(const std::vector<TimeslotRecord> &records, Algorithm alg, int bs_id,
                           std::optional<int> timeslot)
{
    int total = 0;
    int good = 0;
    for (const auto &r : records)
    {
        if (r.algorithm != alg || r.bs_id != bs_id)
            continue;
        if (timeslot && r.timeslot != *timeslot)
            continue;
        ++total;
        good += r.success ? 1 : 0;
    }
    if (total == 0)
        throw std::invalid_argument("success_probability: no matching records");
    return static_cast<double>(good) / total;
}

PilotLedger pilot_ledger(const std::vector<TimeslotRecord> &records, int acquisition_pilots,
                         int tracking_pilots)
{
    if (records.empty())
        throw std::invalid_argument("pilot_ledger: no records");
    for (std::size_t i = 1; i < records.size(); ++i)
    {
        const bool same_run = records[i].seed == records[0].seed &&
                              records[i].bs_id == records[0].bs_id &&
                              records[i].algorithm == records[0].algorithm;
        if (!same_run || records[i].timeslot <= records[i - 1].timeslot)
            throw std::invalid_argument(
                "pilot_ledger: records must be one station's run in timeslot order");
    }

    PilotLedger ledger;
    ledger.per_slot.reserve(records.size());
    int acquisition_left = 3;
    for (const auto &r : records)
    {
        const int cost = acquisition_left > 0 ? acquisition_pilots : tracking_pilots;
        if (acquisition_left > 0)
            --acquisition_left;
        ledger.per_slot.push_back(cost);
        ledger.total += cost;

        const bool restart =
            r.algorithm == Algorithm::ProposedCoop ? !r.fused : !r.success;
        if (restart)
            acquisition_left = 3;
    }
    return ledger;
}

namespace
{

void append_row(std::string &out, const TimeslotRecord &r)
{
    char buf[160];
    if (r.deafness_pct)
        std::snprintf(buf, sizeof(buf), "%llu,%d,%d,%s,%.6f,%d,%d,%d\n",
                      static_cast<unsigned long long>(r.seed), r.timeslot, r.bs_id,
                      to_string(r.algorithm).c_str(), *r.deafness_pct, r.success ? 1 : 0,
                      r.pilots_used, r.fused ? 1 : 0);
    else
        std::snprintf(buf, sizeof(buf), "%llu,%d,%d,%s,,%d,%d,%d\n",
                      static_cast<unsigned long long>(r.seed), r.timeslot, r.bs_id,
                      to_string(r.algorithm).c_str(), r.success ? 1 : 0, r.pilots_used,
                      r.fused ? 1 : 0);
    out += buf;
}

} // namespace

std::string to_csv(const std::vector<TimeslotRecord> &records)
{
    std::string out = "seed,timeslot,bs_id,algorithm,deafness_pct,success,pilots_used,fused\n";
    for (const auto &r : records)
        append_row(out, r);
    return out;
}

void write_csv(std::ostream &os, const std::vector<TimeslotRecord> &records)
{
    os << to_csv(records);
}

} // namespace thztrack
