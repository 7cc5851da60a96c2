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

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "thztrack/rng.hpp"

namespace thztrack
{

constexpr double kSpeedOfLight = 299792458.0; // m/s
constexpr double kBoltzmann = 1.380649e-23;   // J/K

// Uniform linear array. Beamspace geometry only depends on the element count
// and the spacing-to-wavelength ratio.
struct ArrayConfig
{
    int elements = 256;                   // N
    double spacing_over_wavelength = 0.5; // d / lambda

    void validate() const;
};

// Transmit and receiver-chain parameters of one link.
struct LinkBudget
{
    double tx_power_dbm = 10.0;
    double carrier_hz = 275e9;
    double bandwidth_hz = 40e6;
    double noise_figure_db = 0.0;
    double temperature_k = 296.0;
    double absorption_per_m = 0.0023; // medium absorption coefficient (~10 dB/km at 275 GHz)
    bool noiseless = false;           // forces zero estimation noise when set

    double wavelength_m() const { return kSpeedOfLight / carrier_hz; }
    double tx_power_w() const { return 1e-3 * std::pow(10.0, tx_power_dbm / 10.0); }
};

// Beam grid in the normalized spatial-frequency domain: the n-th beam points
// at psi_n = (1/N) * (n - (N+1)/2) for n = 1..N. Spacing is uniformly 1/N.
std::vector<double> normalized_directions(const ArrayConfig &array);

// psi = (d/lambda) * sin(theta)
double spatial_direction(double theta_rad, const ArrayConfig &array);

// Half of the uniform beam width in the psi domain, 1/(2N).
inline double half_beamwidth_psi(const ArrayConfig &array)
{
    return 1.0 / (2.0 * array.elements);
}

// Unit-norm array response a(psi), entries (1/sqrt(N)) * exp(-j*2*pi*psi*m)
// over the symmetric element index set m in {l - (N-1)/2 : l = 0..N-1}.
Eigen::VectorXcd steering_vector(double psi, const ArrayConfig &array);

// Beamforming matrix of a discrete lens aperture: row n is a(psi_n)^H, so
// left-multiplying an element-space channel yields its beamspace image.
// The rows are exactly orthonormal, hence the matrix is unitary.
Eigen::MatrixXcd lens_matrix(const ArrayConfig &array);

// Line-of-sight complex gain over a path of length distance_m:
//   |beta| = c / (4*pi*f*a) * exp(-kappa*a/2),  arg beta = -2*pi*a/lambda
std::complex<double> path_gain(double distance_m, const LinkBudget &budget);

// Element-space channel of a single line-of-sight path: beta * a(psi).
Eigen::VectorXcd los_channel(std::complex<double> beta, double psi, const ArrayConfig &array);

// Per-element estimation noise variance after coherent accumulation of the
// pilot block: kT*B*F / (P_tx * pilots). Watts.
double noise_variance_w(const LinkBudget &budget, int pilots);

// One slot's worth of unit-variance randomness, drawn once and shared by all
// algorithm variants so that they face common random numbers. Element noise
// is indexed by beam (1-based index n maps to entry n-1) regardless of which
// subset a variant actually observes.
struct SlotDraws
{
    std::vector<std::complex<double>> element_noise; // CN(0,1) per beam
    std::array<double, 4> timestamp_jitter{};        // N(0,1) per timestamp
};

SlotDraws draw_slot_noise(Rng &rng, int n_elements);

// Result of a pilot-based beamspace estimation round. For a full scan the
// vector covers all N beams in index order; for a support-restricted scan it
// covers exactly the listed beams, in the order given by the support set.
struct PilotObservation
{
    Eigen::VectorXcd estimated;    // noisy beamspace entries
    std::vector<int> beam_indices; // 1-based beam index of each entry
    int pilots_used = 0;
    double noise_variance = 0.0; // per-element, watts
};

// Estimate the beamspace channel from pilots. `channel` is the element-space
// vector; it is passed through the lens first. Passing no support scans all
// beams; a support restricts the observation to those beams only.
PilotObservation observe_beamspace(const Eigen::VectorXcd &channel, const Eigen::MatrixXcd &lens,
                                   const LinkBudget &budget, int pilots,
                                   const std::optional<std::vector<int>> &support, Rng &rng);

PilotObservation observe_beamspace(const Eigen::VectorXcd &channel, const Eigen::MatrixXcd &lens,
                                   const LinkBudget &budget, int pilots,
                                   const std::optional<std::vector<int>> &support,
                                   const SlotDraws &draws);

// Same estimation applied to an already-transformed beamspace vector. The
// simulation loop caches the beamspace truth per slot and uses this overload.
PilotObservation observe_from_beamspace(const Eigen::VectorXcd &beamspace, const LinkBudget &budget,
                                        int pilots, const std::optional<std::vector<int>> &support,
                                        const SlotDraws &draws);

} // namespace thztrack
