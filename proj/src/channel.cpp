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

#include "thztrack/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace thztrack
{

void ArrayConfig::validate() const
{
    if (elements < 2)
        throw std::invalid_argument("ArrayConfig: need at least two elements");
    if (!(spacing_over_wavelength > 0.0))
        throw std::invalid_argument("ArrayConfig: spacing must be positive");
}

std::vector<double> normalized_directions(const ArrayConfig &array)
{
    array.validate();
    const int n = array.elements;
    std::vector<double> psi(n);
    for (int i = 1; i <= n; ++i)
        psi[i - 1] = (i - (n + 1) / 2.0) / n;
    return psi;
}

double spatial_direction(double theta_rad, const ArrayConfig &array)
{
    return array.spacing_over_wavelength * std::sin(theta_rad);
}

Eigen::VectorXcd steering_vector(double psi, const ArrayConfig &array)
{
    array.validate();
    const int n = array.elements;
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    Eigen::VectorXcd a(n);
    for (int l = 0; l < n; ++l)
    {
        const double m = l - (n - 1) / 2.0;
        const double phase = -2.0 * M_PI * psi * m;
        a(l) = std::polar(scale, phase);
    }
    return a;
}

Eigen::MatrixXcd lens_matrix(const ArrayConfig &array)
{
    const std::vector<double> psi = normalized_directions(array);
    const int n = array.elements;
    Eigen::MatrixXcd u(n, n);
    for (int row = 0; row < n; ++row)
        u.row(row) = steering_vector(psi[row], array).adjoint();
    return u;
}

std::complex<double> path_gain(double distance_m, const LinkBudget &budget)
{
    if (!(distance_m > 0.0))
        throw std::invalid_argument("path_gain: distance must be positive");
    const double lambda = budget.wavelength_m();
    const double spreading = lambda / (4.0 * M_PI * distance_m);
    const double absorption = std::exp(-0.5 * budget.absorption_per_m * distance_m);
    const double phase = -2.0 * M_PI * distance_m / lambda;
    return std::polar(spreading * absorption, phase);
}

Eigen::VectorXcd los_channel(std::complex<double> beta, double psi, const ArrayConfig &array)
{
    if (std::abs(beta) <= 0.0)
        throw std::invalid_argument("los_channel: gain must be nonzero");
    return beta * steering_vector(psi, array);
}

double noise_variance_w(const LinkBudget &budget, int pilots)
{
    if (pilots < 1)
        throw std::invalid_argument("noise_variance_w: pilot count must be positive");
    if (budget.noiseless)
        return 0.0;
    const double figure = std::pow(10.0, budget.noise_figure_db / 10.0);
    return kBoltzmann * budget.temperature_k * budget.bandwidth_hz * figure /
           (budget.tx_power_w() * pilots);
}

SlotDraws draw_slot_noise(Rng &rng, int n_elements)
{
    if (n_elements < 1)
        throw std::invalid_argument("draw_slot_noise: element count must be positive");
    SlotDraws d;
    d.element_noise.resize(n_elements);
    for (auto &z : d.element_noise)
        z = rng.complex_gaussian();
    for (auto &j : d.timestamp_jitter)
        j = rng.gaussian();
    return d;
}

PilotObservation observe_from_beamspace(const Eigen::VectorXcd &beamspace, const LinkBudget &budget,
                                        int pilots, const std::optional<std::vector<int>> &support,
                                        const SlotDraws &draws)
{
    const int n = static_cast<int>(beamspace.size());
    if (static_cast<int>(draws.element_noise.size()) != n)
        throw std::invalid_argument("observe_from_beamspace: noise draw size mismatch");

    PilotObservation obs;
    obs.pilots_used = pilots;
    obs.noise_variance = noise_variance_w(budget, pilots);
    const double sigma = std::sqrt(obs.noise_variance);

    if (support)
    {
        if (support->empty())
            throw std::invalid_argument("observe_from_beamspace: empty support");
        obs.beam_indices = *support;
    }
    else
    {
        obs.beam_indices.resize(n);
        for (int i = 0; i < n; ++i)
            obs.beam_indices[i] = i + 1;
    }

    obs.estimated.resize(static_cast<Eigen::Index>(obs.beam_indices.size()));
    for (std::size_t k = 0; k < obs.beam_indices.size(); ++k)
    {
        const int idx = obs.beam_indices[k];
        if (idx < 1 || idx > n)
            throw std::invalid_argument("observe_from_beamspace: beam index out of range");
        obs.estimated(static_cast<Eigen::Index>(k)) =
            beamspace(idx - 1) + sigma * draws.element_noise[idx - 1];
    }
    return obs;
}

PilotObservation observe_beamspace(const Eigen::VectorXcd &channel, const Eigen::MatrixXcd &lens,
                                   const LinkBudget &budget, int pilots,
                                   const std::optional<std::vector<int>> &support,
                                   const SlotDraws &draws)
{
    if (lens.rows() != lens.cols() || lens.cols() != channel.size())
        throw std::invalid_argument("observe_beamspace: lens/channel dimension mismatch");
    return observe_from_beamspace(lens * channel, budget, pilots, support, draws);
}

PilotObservation observe_beamspace(const Eigen::VectorXcd &channel, const Eigen::MatrixXcd &lens,
                                   const LinkBudget &budget, int pilots,
                                   const std::optional<std::vector<int>> &support, Rng &rng)
{
    return observe_beamspace(channel, lens, budget, pilots, support,
                             draw_slot_noise(rng, static_cast<int>(channel.size())));
}

} // namespace thztrack
