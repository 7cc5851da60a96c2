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

#include "thztrack/tracking.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace thztrack
{

int strongest_element(const PilotObservation &obs)
{
    if (obs.estimated.size() == 0)
        throw std::invalid_argument("strongest_element: empty observation");

    double best = -1.0;
    int best_index = 0;
    for (Eigen::Index k = 0; k < obs.estimated.size(); ++k)
    {
        const double mag = std::abs(obs.estimated(k));
        const int idx = obs.beam_indices[static_cast<std::size_t>(k)];
        if (mag > best || (mag == best && idx < best_index))
        {
            best = mag;
            best_index = idx;
        }
    }
    if (best <= 0.0)
        throw std::runtime_error("strongest_element: observation carries no signal");
    return best_index;
}

double aoa_from_beam_index(int n, const ArrayConfig &array)
{
    array.validate();
    if (n < 1 || n > array.elements)
        throw std::invalid_argument("aoa_from_beam_index: beam index out of range");
    const double arg =
        (n - (array.elements + 1) / 2.0) / (array.elements * array.spacing_over_wavelength);
    if (arg < -1.0 || arg > 1.0)
        throw std::domain_error("aoa_from_beam_index: beam lies outside visible space");
    return std::asin(arg);
}

int beam_index_from_aoa(double theta_rad, const ArrayConfig &array)
{
    const double psi = spatial_direction(theta_rad, array);
    const std::vector<double> grid = normalized_directions(array);
    int best = 1;
    double best_dist = std::abs(grid[0] - psi);
    for (int n = 2; n <= array.elements; ++n)
    {
        const double dist = std::abs(grid[n - 1] - psi);
        if (dist < best_dist)
        {
            best_dist = dist;
            best = n;
        }
    }
    return best;
}

std::vector<int> support_set(int n, int v, int n_elements)
{
    if (n_elements < 1)
        throw std::invalid_argument("support_set: element count must be positive");
    if (n < 1 || n > n_elements)
        throw std::invalid_argument("support_set: center beam out of range");
    if (v < 1 || v > n_elements)
        throw std::invalid_argument("support_set: window must have between 1 and N beams");

    const int lo = (v % 2 == 0) ? n - v / 2 : n - (v - 1) / 2;
    std::vector<int> window(static_cast<std::size_t>(v));
    for (int k = 0; k < v; ++k)
    {
        const int x = lo + k;
        // 1-based cyclic wrap onto 1..n_elements
        window[static_cast<std::size_t>(k)] =
            static_cast<int>(((x - 1) % n_elements + n_elements) % n_elements) + 1;
    }
    return window;
}

Position2D predict_position(const std::array<Position2D, 3> &history)
{
    const Position2D &newest = history[2];
    const Position2D step1 = history[1] - history[0];
    const Position2D step2 = history[2] - history[1];
    return newest + (step1 + step2) * 0.5;
}

double predict_aoa(const Position2D &predicted, const BaseStationGeometry &bs)
{
    return aoa_from_position(predicted, bs);
}

int fct_predict_beam(const std::array<int, 3> &beam_history, int n_elements)
{
    if (n_elements < 1)
        throw std::invalid_argument("fct_predict_beam: element count must be positive");
    const double predicted = beam_history[2] + (beam_history[2] - beam_history[0]) / 2.0;
    const int rounded = static_cast<int>(std::round(predicted)); // half away from zero
    return std::clamp(rounded, 1, n_elements);
}

bool energy_gate(const EnergyCheck &check, double threshold_fraction)
{
    if (!(threshold_fraction > 0.0) || threshold_fraction > 1.0)
        throw std::invalid_argument("energy_gate: threshold must lie in (0, 1]");
    if (check.estimated_energy_w < 0.0 || check.expected_energy_w < 0.0)
        throw std::invalid_argument("energy_gate: energies must be nonnegative");
    return check.estimated_energy_w >= threshold_fraction * check.expected_energy_w;
}

double estimated_signal_energy(const PilotObservation &obs, int n, int v, int n_elements)
{
    const std::vector<int> window = support_set(n, v, n_elements);
    double energy = 0.0;
    int counted = 0;
    for (Eigen::Index k = 0; k < obs.estimated.size(); ++k)
    {
        const int idx = obs.beam_indices[static_cast<std::size_t>(k)];
        if (std::find(window.begin(), window.end(), idx) == window.end())
            continue;
        energy += std::norm(obs.estimated(k));
        ++counted;
    }
    return std::max(0.0, energy - counted * obs.noise_variance);
}

void TrackState::push_position(int timeslot, const Position2D &p)
{
    position_history.emplace_back(timeslot, p);
    while (position_history.size() > kHistoryDepth)
        position_history.pop_front();
}

void TrackState::push_beam(int n)
{
    beam_history.push_back(n);
    while (beam_history.size() > kHistoryDepth)
        beam_history.pop_front();
}

void TrackState::reset_to_acquisition()
{
    position_history.clear();
    beam_history.clear();
    current_beam = 0;
}

std::array<Position2D, 3> TrackState::recent_positions() const
{
    if (!position_primed())
        throw std::logic_error("TrackState: position history not primed");
    const std::size_t s = position_history.size();
    return {position_history[s - 3].second, position_history[s - 2].second,
            position_history[s - 1].second};
}

std::array<int, 3> TrackState::recent_beams() const
{
    if (!beam_primed())
        throw std::logic_error("TrackState: beam history not primed");
    const std::size_t s = beam_history.size();
    return {beam_history[s - 3], beam_history[s - 2], beam_history[s - 1]};
}

} // namespace thztrack
