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

#include "thztrack/scenario.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace thztrack
{

Trajectory MotionConfig::build() const
{
    if (kind == Trajectory::Kind::Linear)
        return linear_trajectory(start, heading_rad, speed_mps, dt_s);
    return sinusoidal_trajectory(start, heading_rad, speed_mps, amplitude_m, period_slots, dt_s);
}

std::vector<std::uint64_t> Scenario::default_seeds()
{
    std::vector<std::uint64_t> s(100);
    for (std::size_t i = 0; i < s.size(); ++i)
        s[i] = i + 1;
    return s;
}

void Scenario::validate() const
{
    if (base_stations.empty())
        throw ConfigError("scenario: at least one base station required");
    for (std::size_t i = 0; i < base_stations.size(); ++i)
        if (base_stations[i].id != static_cast<int>(i) + 1)
            throw ConfigError("scenario: station ids must be 1..count in order");
    try
    {
        array.validate();
    }
    catch (const std::exception &e)
    {
        throw ConfigError(std::string("scenario: ") + e.what());
    }
    if (support_beams < 1 || support_beams > array.elements)
        throw ConfigError("scenario: support window must have between 1 and N beams");
    if (timeslots < 1)
        throw ConfigError("scenario: need at least one timeslot");
    if (acquisition_pilots < 1 || tracking_pilots < 1)
        throw ConfigError("scenario: pilot counts must be positive");
    if (!(energy_threshold > 0.0) || energy_threshold > 1.0)
        throw ConfigError("scenario: energy threshold must lie in (0, 1]");
    if (seeds.empty())
        throw ConfigError("scenario: seed list is empty");
    if (algorithms.empty())
        throw ConfigError("scenario: algorithm list is empty");
    if (!(budget.carrier_hz > 0.0) || !(budget.bandwidth_hz > 0.0) ||
        !(budget.temperature_k > 0.0))
        throw ConfigError("scenario: carrier, bandwidth and temperature must be positive");
    if (budget.absorption_per_m < 0.0)
        throw ConfigError("scenario: absorption coefficient must be nonnegative");
    if (motion.speed_mps < 0.0 || !(motion.dt_s > 0.0))
        throw ConfigError("scenario: invalid motion timing");
    if (motion.kind == Trajectory::Kind::Sinusoidal)
    {
        try
        {
            motion.build();
        }
        catch (const std::exception &e)
        {
            throw ConfigError(std::string("scenario: ") + e.what());
        }
    }
}

namespace
{

std::string trim(const std::string &s)
{
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double to_double(const std::string &key, const std::string &value)
{
    try
    {
        std::size_t used = 0;
        const double d = std::stod(value, &used);
        if (used != value.size())
            throw std::invalid_argument(value);
        return d;
    }
    catch (const std::exception &)
    {
        throw ConfigError("config: key '" + key + "' expects a number, got '" + value + "'");
    }
}

int to_int(const std::string &key, const std::string &value)
{
    int out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size())
        throw ConfigError("config: key '" + key + "' expects an integer, got '" + value + "'");
    return out;
}

bool to_bool(const std::string &key, const std::string &value)
{
    if (value == "true" || value == "on" || value == "1" || value == "yes")
        return true;
    if (value == "false" || value == "off" || value == "0" || value == "no")
        return false;
    throw ConfigError("config: key '" + key + "' expects a boolean, got '" + value + "'");
}

std::uint64_t to_seed(const std::string &text)
{
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ConfigError("config: bad seed '" + text + "'");
    return out;
}

// Station keys look like bs.2.x; split off the index and the field.
bool parse_bs_key(const std::string &key, int &index, std::string &field)
{
    if (key.rfind("bs.", 0) != 0)
        return false;
    const auto dot = key.find('.', 3);
    if (dot == std::string::npos)
        return false;
    const std::string idx = key.substr(3, dot - 3);
    index = to_int(key, idx);
    field = key.substr(dot + 1);
    return true;
}

} // namespace

std::vector<std::uint64_t> parse_seed_list(const std::string &text)
{
    std::vector<std::uint64_t> seeds;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ','))
    {
        token = trim(token);
        if (token.empty())
            continue;
        const auto colon = token.find(':');
        if (colon == std::string::npos)
        {
            seeds.push_back(to_seed(token));
            continue;
        }
        const std::uint64_t first = to_seed(trim(token.substr(0, colon)));
        const std::uint64_t last = to_seed(trim(token.substr(colon + 1)));
        if (last < first)
            throw ConfigError("config: seed range '" + token + "' runs backwards");
        if (last - first > 1000000)
            throw ConfigError("config: seed range '" + token + "' is unreasonably large");
        for (std::uint64_t s = first; s <= last; ++s)
            seeds.push_back(s);
    }
    if (seeds.empty())
        throw ConfigError("config: empty seed list");
    return seeds;
}

std::vector<Algorithm> parse_algorithm_list(const std::string &text)
{
    std::vector<Algorithm> algs;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ','))
    {
        token = trim(token);
        if (token.empty())
            continue;
        try
        {
            algs.push_back(parse_algorithm(token));
        }
        catch (const std::exception &e)
        {
            throw ConfigError(std::string("config: ") + e.what());
        }
    }
    if (algs.empty())
        throw ConfigError("config: empty algorithm list");
    return algs;
}

void apply_override(Scenario &sc, const std::string &raw_key, const std::string &raw_value)
{
    const std::string key = trim(raw_key);
    const std::string value = trim(raw_value);
    if (key.empty())
        throw ConfigError("config: empty key");

    int bs_index = 0;
    std::string bs_field;
    if (key == "bs.count")
    {
        const int count = to_int(key, value);
        if (count < 1)
            throw ConfigError("config: bs.count must be positive");
        const std::size_t old = sc.base_stations.size();
        sc.base_stations.resize(static_cast<std::size_t>(count));
        for (std::size_t i = old; i < sc.base_stations.size(); ++i)
            sc.base_stations[i] = {static_cast<int>(i) + 1, {0.0, 0.0}, M_PI / 2.0};
        for (std::size_t i = 0; i < sc.base_stations.size(); ++i)
            sc.base_stations[i].id = static_cast<int>(i) + 1;
        return;
    }
    if (parse_bs_key(key, bs_index, bs_field))
    {
        if (bs_index < 1 || bs_index > static_cast<int>(sc.base_stations.size()))
            throw ConfigError("config: station index out of range in '" + key + "'");
        auto &bs = sc.base_stations[static_cast<std::size_t>(bs_index - 1)];
        if (bs_field == "x")
            bs.position.x = to_double(key, value);
        else if (bs_field == "y")
            bs.position.y = to_double(key, value);
        else if (bs_field == "orientation_rad")
            bs.orientation_rad = wrap_angle(to_double(key, value));
        else
            throw ConfigError("config: unknown station field in '" + key + "'");
        return;
    }

    if (key == "array.elements")
        sc.array.elements = to_int(key, value);
    else if (key == "array.spacing_over_wavelength")
        sc.array.spacing_over_wavelength = to_double(key, value);
    else if (key == "budget.tx_power_dbm")
        sc.budget.tx_power_dbm = to_double(key, value);
    else if (key == "budget.carrier_hz")
        sc.budget.carrier_hz = to_double(key, value);
    else if (key == "budget.bandwidth_hz")
        sc.budget.bandwidth_hz = to_double(key, value);
    else if (key == "budget.noise_figure_db")
        sc.budget.noise_figure_db = to_double(key, value);
    else if (key == "budget.temperature_k")
        sc.budget.temperature_k = to_double(key, value);
    else if (key == "budget.absorption_per_m")
        sc.budget.absorption_per_m = to_double(key, value);
    else if (key == "budget.noiseless")
        sc.budget.noiseless = to_bool(key, value);
    else if (key == "ranging.jitter_std_s")
        sc.ranging.timestamp_jitter_std_s = to_double(key, value);
    else if (key == "ranging.processing_delay_s")
        sc.ranging.processing_delay_s = to_double(key, value);
    else if (key == "ranging.clock_offset_s")
        sc.ranging.clock_offset_s = to_double(key, value);
    else if (key == "motion.kind")
    {
        if (value == "linear")
            sc.motion.kind = Trajectory::Kind::Linear;
        else if (value == "sinusoidal")
            sc.motion.kind = Trajectory::Kind::Sinusoidal;
        else
            throw ConfigError("config: motion.kind must be 'linear' or 'sinusoidal'");
    }
    else if (key == "motion.start_x")
        sc.motion.start.x = to_double(key, value);
    else if (key == "motion.start_y")
        sc.motion.start.y = to_double(key, value);
    else if (key == "motion.heading_rad")
        sc.motion.heading_rad = to_double(key, value);
    else if (key == "motion.speed_mps")
        sc.motion.speed_mps = to_double(key, value);
    else if (key == "motion.amplitude_m")
        sc.motion.amplitude_m = to_double(key, value);
    else if (key == "motion.period_slots")
        sc.motion.period_slots = to_int(key, value);
    else if (key == "motion.dt_s")
        sc.motion.dt_s = to_double(key, value);
    else if (key == "sim.timeslots")
        sc.timeslots = to_int(key, value);
    else if (key == "sim.support_beams")
        sc.support_beams = to_int(key, value);
    else if (key == "sim.seeds")
        sc.seeds = parse_seed_list(value);
    else if (key == "sim.algorithms")
        sc.algorithms = parse_algorithm_list(value);
    else if (key == "tracking.acquisition_pilots")
        sc.acquisition_pilots = to_int(key, value);
    else if (key == "tracking.tracking_pilots")
        sc.tracking_pilots = to_int(key, value);
    else if (key == "tracking.energy_gate")
        sc.energy_gate_enabled = to_bool(key, value);
    else if (key == "tracking.energy_threshold")
        sc.energy_threshold = to_double(key, value);
    else if (key == "metrics.beamwidth_convention")
    {
        if (value == "psi")
            sc.convention = BeamwidthConvention::Psi;
        else if (value == "angle")
            sc.convention = BeamwidthConvention::PhysicalAngle;
        else
            throw ConfigError("config: metrics.beamwidth_convention must be 'psi' or 'angle'");
    }
    else
        throw ConfigError("config: unknown key '" + key + "'");
}

Scenario load_scenario(const std::string &path)
{
    Scenario sc;
    if (path.empty())
        return sc;
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot open '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: " + path + ":" + std::to_string(lineno) +
                              ": expected 'key = value'");
        try
        {
            apply_override(sc, line.substr(0, eq), line.substr(eq + 1));
        }
        catch (const ConfigError &e)
        {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return sc;
}

namespace
{

// Shortest representation that parses back to the same double, so a dumped
// configuration reproduces a run exactly.
std::string fmt(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace

std::string describe(const Scenario &sc)
{
    std::ostringstream os;
    os << "bs.count = " << sc.base_stations.size() << "\n";
    for (const auto &bs : sc.base_stations)
    {
        os << "bs." << bs.id << ".x = " << fmt(bs.position.x) << "\n";
        os << "bs." << bs.id << ".y = " << fmt(bs.position.y) << "\n";
        os << "bs." << bs.id << ".orientation_rad = " << fmt(bs.orientation_rad) << "\n";
    }
    os << "array.elements = " << sc.array.elements << "\n";
    os << "array.spacing_over_wavelength = " << fmt(sc.array.spacing_over_wavelength) << "\n";
    os << "budget.tx_power_dbm = " << fmt(sc.budget.tx_power_dbm) << "\n";
    os << "budget.carrier_hz = " << fmt(sc.budget.carrier_hz) << "\n";
    os << "budget.bandwidth_hz = " << fmt(sc.budget.bandwidth_hz) << "\n";
    os << "budget.noise_figure_db = " << fmt(sc.budget.noise_figure_db) << "\n";
    os << "budget.temperature_k = " << fmt(sc.budget.temperature_k) << "\n";
    os << "budget.absorption_per_m = " << fmt(sc.budget.absorption_per_m) << "\n";
    os << "budget.noiseless = " << (sc.budget.noiseless ? "true" : "false") << "\n";
    os << "ranging.jitter_std_s = " << fmt(sc.ranging.timestamp_jitter_std_s) << "\n";
    os << "ranging.processing_delay_s = " << fmt(sc.ranging.processing_delay_s) << "\n";
    os << "ranging.clock_offset_s = " << fmt(sc.ranging.clock_offset_s) << "\n";
    os << "motion.kind = "
       << (sc.motion.kind == Trajectory::Kind::Linear ? "linear" : "sinusoidal") << "\n";
    os << "motion.start_x = " << fmt(sc.motion.start.x) << "\n";
    os << "motion.start_y = " << fmt(sc.motion.start.y) << "\n";
    os << "motion.heading_rad = " << fmt(sc.motion.heading_rad) << "\n";
    os << "motion.speed_mps = " << fmt(sc.motion.speed_mps) << "\n";
    os << "motion.amplitude_m = " << fmt(sc.motion.amplitude_m) << "\n";
    os << "motion.period_slots = " << sc.motion.period_slots << "\n";
    os << "motion.dt_s = " << fmt(sc.motion.dt_s) << "\n";
    os << "sim.timeslots = " << sc.timeslots << "\n";
    os << "sim.support_beams = " << sc.support_beams << "\n";
    os << "sim.seeds = ";
    for (std::size_t i = 0; i < sc.seeds.size(); ++i)
        os << (i ? "," : "") << sc.seeds[i];
    os << "\n";
    os << "sim.algorithms = ";
    for (std::size_t i = 0; i < sc.algorithms.size(); ++i)
        os << (i ? "," : "") << to_string(sc.algorithms[i]);
    os << "\n";
    os << "tracking.acquisition_pilots = " << sc.acquisition_pilots << "\n";
    os << "tracking.tracking_pilots = " << sc.tracking_pilots << "\n";
    os << "tracking.energy_gate = " << (sc.energy_gate_enabled ? "on" : "off") << "\n";
    os << "tracking.energy_threshold = " << fmt(sc.energy_threshold) << "\n";
    os << "metrics.beamwidth_convention = "
       << (sc.convention == BeamwidthConvention::Psi ? "psi" : "angle") << "\n";
    return os.str();
}

} // namespace thztrack
