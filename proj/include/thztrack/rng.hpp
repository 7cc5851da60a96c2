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

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace thztrack
{

// Deterministic random source. The generator itself (mt19937_64) is fully
// specified by the standard and the float conversions below avoid
// std::*_distribution, whose output is implementation-defined. Two builds on
// different standard libraries therefore produce identical draws.
class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform on [0, 1) with 53 random bits.
    double uniform()
    {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller. Uses two uniforms per call.
    double gaussian()
    {
        const double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53; // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    // Circularly symmetric complex normal with E|z|^2 = 1.
    std::complex<double> complex_gaussian()
    {
        const double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = uniform();
        const double r = std::sqrt(-std::log(u1));
        return {r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
    }

    std::uint64_t next_u64() { return gen_(); }

  private:
    std::mt19937_64 gen_;
};

namespace detail
{
inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
} // namespace detail

// Derive an independent substream from a master seed and up to three salts
// (e.g. timeslot and station id). Identical inputs give the identical stream,
// which is what lets all algorithm variants consume common random numbers.
inline Rng derive_stream(std::uint64_t seed, std::uint64_t salt1 = 0, std::uint64_t salt2 = 0,
                         std::uint64_t salt3 = 0)
{
    std::uint64_t h = detail::splitmix64(seed);
    h = detail::splitmix64(h ^ salt1);
    h = detail::splitmix64(h ^ salt2);
    h = detail::splitmix64(h ^ salt3);
    return Rng(h);
}

} // namespace thztrack
