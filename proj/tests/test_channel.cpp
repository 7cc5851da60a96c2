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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "thztrack/channel.hpp"

using namespace thztrack;

TEST_CASE("normalized_directions - uniform 1/N grid centered on zero")
{
    ArrayConfig a4{4, 0.5};
    const auto dirs = normalized_directions(a4);
    REQUIRE(dirs.size() == 4);
    CHECK(dirs[0] == Catch::Approx(-0.375).margin(1e-15));
    CHECK(dirs[1] == Catch::Approx(-0.125).margin(1e-15));
    CHECK(dirs[2] == Catch::Approx(0.125).margin(1e-15));
    CHECK(dirs[3] == Catch::Approx(0.375).margin(1e-15));

    ArrayConfig a2{2, 0.5};
    const auto d2 = normalized_directions(a2);
    CHECK(d2[0] == Catch::Approx(-0.25).margin(1e-15));
    CHECK(d2[1] == Catch::Approx(0.25).margin(1e-15));

    ArrayConfig a256{256, 0.5};
    const auto d256 = normalized_directions(a256);
    REQUIRE(d256.size() == 256);
    double total = 0.0;
    for (size_t i = 0; i < d256.size(); ++i)
    {
        total += d256[i];
        if (i > 0)
            CHECK(d256[i] - d256[i - 1] == Catch::Approx(1.0 / 256.0).margin(1e-15));
    }
    CHECK(total == Catch::Approx(0.0).margin(1e-12)); // symmetric grid
    CHECK(half_beamwidth_psi(a256) == Catch::Approx(1.0 / 512.0).margin(1e-18));
}

TEST_CASE("spatial_direction - psi = (d/lambda) sin(theta)")
{
    ArrayConfig a{256, 0.5};
    CHECK(spatial_direction(0.0, a) == 0.0);
    CHECK(spatial_direction(M_PI / 2.0, a) == Catch::Approx(0.5));
    CHECK(spatial_direction(-M_PI / 2.0, a) == Catch::Approx(-0.5));
    CHECK(spatial_direction(M_PI / 6.0, a) == Catch::Approx(0.25));
}

TEST_CASE("steering_vector - unit norm and explicit two-element case")
{
    ArrayConfig a2{2, 0.5};
    // N = 2, psi = 0.5: element offsets m = {-0.5, +0.5}, entries
    // (1/sqrt(2)) * exp(-j*2*pi*0.5*m) = (1/sqrt(2)) * {e^{+j pi/2}, e^{-j pi/2}}
    const auto v = steering_vector(0.5, a2);
    REQUIRE(v.size() == 2);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(v(0).real() == Catch::Approx(0.0).margin(1e-15));
    CHECK(v(0).imag() == Catch::Approx(s));
    CHECK(v(1).real() == Catch::Approx(0.0).margin(1e-15));
    CHECK(v(1).imag() == Catch::Approx(-s));

    ArrayConfig a256{256, 0.5};
    for (double psi : {-0.49, -0.2, 0.0, 0.123, 0.5})
        CHECK(steering_vector(psi, a256).norm() == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("lens_matrix - unitary for a range of array sizes")
{
    for (int n : {2, 4, 16, 64, 256})
    {
        ArrayConfig a{n, 0.5};
        const Eigen::MatrixXcd u = lens_matrix(a);
        REQUIRE(u.rows() == n);
        REQUIRE(u.cols() == n);
        const Eigen::MatrixXcd gram = u * u.adjoint();
        const double err = (gram - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
        CHECK(err < 1e-10);
    }
}

TEST_CASE("lens_matrix - preserves energy of arbitrary vectors")
{
    ArrayConfig a{64, 0.5};
    const Eigen::MatrixXcd u = lens_matrix(a);
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial)
    {
        Eigen::VectorXcd h(64);
        for (int i = 0; i < 64; ++i)
            h(i) = rng.complex_gaussian();
        CHECK((u * h).norm() == Catch::Approx(h.norm()).margin(1e-10));
    }
}

TEST_CASE("lens_matrix - on-grid channel concentrates on its own beam")
{
    ArrayConfig a{16, 0.5};
    const Eigen::MatrixXcd u = lens_matrix(a);
    const auto dirs = normalized_directions(a);
    for (int n = 1; n <= 16; ++n)
    {
        const Eigen::VectorXcd h = los_channel({1.0, 0.0}, dirs[n - 1], a);
        const Eigen::VectorXcd b = u * h;
        int argmax = 0;
        b.cwiseAbs().maxCoeff(&argmax);
        CHECK(argmax + 1 == n);
        // an on-grid direction is orthogonal to every other row
        CHECK(std::abs(b(argmax)) == Catch::Approx(1.0).margin(1e-12));
        for (int k = 0; k < 16; ++k)
            if (k != argmax)
                CHECK(std::abs(b(k)) < 1e-12);
    }
}

TEST_CASE("path_gain - magnitude, phase and distance scaling")
{
    LinkBudget budget; // 275 GHz
    budget.absorption_per_m = 0.0;

    // c/(4*pi*f*a) at f = 275 GHz, a = 25 m (no absorption):
    // 299792458 / (4*pi*275e9*25) = 3.470069206717776e-06
    CHECK(std::abs(path_gain(25.0, budget)) ==
          Catch::Approx(3.470069206717776e-06).epsilon(1e-12));

    // free-space law: doubling the distance halves the magnitude
    CHECK(std::abs(path_gain(50.0, budget)) ==
          Catch::Approx(0.5 * std::abs(path_gain(25.0, budget))).epsilon(1e-12));

    // phase is -2*pi*a/lambda: at a = lambda/4 the phase is -pi/2
    const double lambda = budget.wavelength_m();
    CHECK(std::arg(path_gain(lambda / 4.0, budget)) == Catch::Approx(-M_PI / 2.0).margin(1e-9));

    // absorption at the default 0.0023 1/m costs exp(-kappa*a/2) in amplitude
    LinkBudget absorbing;
    const double expected =
        3.470069206717776e-06 * std::exp(-0.0023 * 25.0 / 2.0);
    CHECK(std::abs(path_gain(25.0, absorbing)) == Catch::Approx(expected).epsilon(1e-12));

    CHECK_THROWS_AS(path_gain(0.0, budget), std::invalid_argument);
    CHECK_THROWS_AS(path_gain(-5.0, budget), std::invalid_argument);
}

TEST_CASE("los_channel - scaled steering vector")
{
    ArrayConfig a{8, 0.5};
    const std::complex<double> beta{3e-6, -4e-6};
    const Eigen::VectorXcd h = los_channel(beta, 0.2, a);
    const Eigen::VectorXcd v = steering_vector(0.2, a);
    CHECK((h - beta * v).norm() < 1e-18);
    CHECK(h.norm() == Catch::Approx(std::abs(beta)).epsilon(1e-12));
    CHECK_THROWS_AS(los_channel({0.0, 0.0}, 0.2, a), std::invalid_argument);
}

TEST_CASE("noise_variance_w - thermal floor scaled by pilot accumulation")
{
    LinkBudget budget; // 10 dBm, 40 MHz, 296 K, NF 0 dB

    // kT*B = 1.380649e-23 * 296 * 40e6 = 1.634688416e-13 W
    // P_tx = 10 mW, so sigma^2(128) = kTB / (0.01 * 128) = 1.27710032500e-13
    CHECK(noise_variance_w(budget, 128) == Catch::Approx(1.277100325e-13).epsilon(1e-9));
    CHECK(noise_variance_w(budget, 16) == Catch::Approx(1.02168026e-12).epsilon(1e-9));

    // eight times fewer pilots, eight times the variance
    CHECK(noise_variance_w(budget, 16) / noise_variance_w(budget, 128) ==
          Catch::Approx(8.0).epsilon(1e-12));

    // 3 dB noise figure doubles the floor
    LinkBudget noisy = budget;
    noisy.noise_figure_db = 3.0103;
    CHECK(noise_variance_w(noisy, 128) / noise_variance_w(budget, 128) ==
          Catch::Approx(2.0).epsilon(1e-4));

    LinkBudget clean = budget;
    clean.noiseless = true;
    CHECK(noise_variance_w(clean, 16) == 0.0);

    CHECK_THROWS_AS(noise_variance_w(budget, 0), std::invalid_argument);
}

TEST_CASE("draw_slot_noise - sized draws, deterministic per stream")
{
    Rng a = derive_stream(1, 5, 2);
    Rng b = derive_stream(1, 5, 2);
    const SlotDraws da = draw_slot_noise(a, 32);
    const SlotDraws db = draw_slot_noise(b, 32);
    REQUIRE(da.element_noise.size() == 32);
    for (int i = 0; i < 32; ++i)
        CHECK(da.element_noise[i] == db.element_noise[i]);
    for (int i = 0; i < 4; ++i)
        CHECK(da.timestamp_jitter[i] == db.timestamp_jitter[i]);

    // different salt, different draws
    Rng c = derive_stream(1, 6, 2);
    const SlotDraws dc = draw_slot_noise(c, 32);
    CHECK(dc.element_noise[0] != da.element_noise[0]);
}

TEST_CASE("observe_beamspace - noiseless estimation is exact")
{
    ArrayConfig a{16, 0.5};
    LinkBudget budget;
    budget.noiseless = true;
    const Eigen::MatrixXcd lens = lens_matrix(a);
    const Eigen::VectorXcd h = los_channel(path_gain(25.0, budget), 0.11, a);
    const Eigen::VectorXcd b = lens * h;

    Rng rng(3);
    const auto full = observe_beamspace(h, lens, budget, 128, std::nullopt, rng);
    REQUIRE(full.estimated.size() == 16);
    REQUIRE(full.beam_indices.size() == 16);
    CHECK(full.pilots_used == 128);
    CHECK(full.noise_variance == 0.0);
    for (int i = 0; i < 16; ++i)
    {
        CHECK(full.beam_indices[i] == i + 1);
        CHECK(std::abs(full.estimated(i) - b(i)) < 1e-18);
    }

    // support-restricted scan returns exactly the requested beams in order
    const std::vector<int> support{15, 16, 1, 2, 3};
    const auto part = observe_beamspace(h, lens, budget, 16, support, rng);
    REQUIRE(part.estimated.size() == 5);
    for (size_t i = 0; i < support.size(); ++i)
    {
        CHECK(part.beam_indices[i] == support[i]);
        CHECK(std::abs(part.estimated(static_cast<int>(i)) - b(support[i] - 1)) < 1e-18);
    }
}

TEST_CASE("observe_from_beamspace - common draws make restriction consistent")
{
    ArrayConfig a{16, 0.5};
    LinkBudget budget; // noisy
    const Eigen::MatrixXcd lens = lens_matrix(a);
    const Eigen::VectorXcd b = lens * los_channel(path_gain(25.0, budget), 0.11, a);

    Rng rng = derive_stream(9, 1, 1);
    const SlotDraws draws = draw_slot_noise(rng, 16);

    const auto full = observe_from_beamspace(b, budget, 16, std::nullopt, draws);
    const std::vector<int> support{4, 5, 6, 7};
    const auto part = observe_from_beamspace(b, budget, 16, support, draws);

    // the same beam sees the same noise realization either way
    for (size_t i = 0; i < support.size(); ++i)
        CHECK(part.estimated(static_cast<int>(i)) == full.estimated(support[i] - 1));

    CHECK_THROWS_AS(observe_from_beamspace(b, budget, 16, std::vector<int>{}, draws),
                    std::invalid_argument);
    CHECK_THROWS_AS(observe_from_beamspace(b, budget, 16, std::vector<int>{0}, draws),
                    std::invalid_argument);
    CHECK_THROWS_AS(observe_from_beamspace(b, budget, 16, std::vector<int>{17}, draws),
                    std::invalid_argument);
}

TEST_CASE("observe_from_beamspace - noise variance matches the configured floor")
{
    LinkBudget budget;
    const Eigen::VectorXcd b = Eigen::VectorXcd::Zero(4);

    const double sigma2 = noise_variance_w(budget, 16);
    double acc = 0.0;
    const int trials = 20000;
    Rng rng(77);
    for (int t = 0; t < trials; ++t)
    {
        const SlotDraws draws = draw_slot_noise(rng, 4);
        const auto obs = observe_from_beamspace(b, budget, 16, std::nullopt, draws);
        acc += obs.estimated.squaredNorm() / 4.0;
    }
    const double measured = acc / trials;
    CHECK(measured / sigma2 == Catch::Approx(1.0).margin(0.05));
}

TEST_CASE("observe_from_beamspace - estimate converges with pilot count")
{
    ArrayConfig a{16, 0.5};
    LinkBudget budget;
    const Eigen::MatrixXcd lens = lens_matrix(a);
    const Eigen::VectorXcd b = lens * los_channel(path_gain(25.0, budget), 0.11, a);

    Rng rng(123);
    const SlotDraws draws = draw_slot_noise(rng, 16);
    const auto coarse = observe_from_beamspace(b, budget, 16, std::nullopt, draws);
    const auto fine = observe_from_beamspace(b, budget, 1 << 20, std::nullopt, draws);
    // same unit draws, so errors scale exactly with sigma = sqrt(variance)
    const double r = std::sqrt(noise_variance_w(budget, 1 << 20) / noise_variance_w(budget, 16));
    CHECK((fine.estimated - b).norm() == Catch::Approx(r * (coarse.estimated - b).norm()).epsilon(1e-9));
}

TEST_CASE("ArrayConfig validation")
{
    ArrayConfig bad{0, 0.5};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    ArrayConfig bad2{16, 0.0};
    CHECK_THROWS_AS(bad2.validate(), std::invalid_argument);
    ArrayConfig good{16, 0.5};
    CHECK_NOTHROW(good.validate());
}
