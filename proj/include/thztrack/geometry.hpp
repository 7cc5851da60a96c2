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
#include <stdexcept>

namespace thztrack
{

// Planar coordinates in meters. The deployment is 2-D: base stations and the
// user terminal live in the same horizontal plane.
struct Position2D
{
    double x = 0.0; // m
    double y = 0.0; // m

    Position2D operator+(const Position2D &o) const { return {x + o.x, y + o.y}; }
    Position2D operator-(const Position2D &o) const { return {x - o.x, y - o.y}; }
    Position2D operator*(double s) const { return {x * s, y * s}; }
    double norm() const { return std::hypot(x, y); }
};

inline double distance(const Position2D &a, const Position2D &b)
{
    return (a - b).norm();
}

// A base station: antenna array phase center plus the boresight direction of
// the array, measured from the global +x axis.
struct BaseStationGeometry
{
    int id = 0;                    // 1-based station identifier
    Position2D position;           // m
    double orientation_rad = 0.0;  // boresight angle from global +x axis
};

// Normalize an angle to (-pi, pi].
inline double wrap_angle(double theta_rad)
{
    if (!std::isfinite(theta_rad))
        throw std::invalid_argument("wrap_angle: non-finite angle");
    double x = std::fmod(theta_rad + M_PI, 2.0 * M_PI);
    if (x <= 0.0)
        x += 2.0 * M_PI;
    return x - M_PI;
}

// Angle of arrival of the ray from the station to the target, measured in the
// station's local frame (0 = boresight, positive toward the local +x side).
inline double aoa_from_position(const Position2D &target, const BaseStationGeometry &bs)
{
    const Position2D d = target - bs.position;
    if (d.x == 0.0 && d.y == 0.0)
        throw std::invalid_argument("aoa_from_position: target coincides with the station");
    return wrap_angle(bs.orientation_rad - std::atan2(d.y, d.x));
}

// Convert a station-local arrival angle back to the global ray angle.
inline double global_from_local(double orientation_rad, double local_aoa_rad)
{
    return wrap_angle(orientation_rad - local_aoa_rad);
}

// Place a point at range alpha along the global direction theta_global from p.
inline Position2D position_from_polar(double alpha_m, double theta_global_rad, const Position2D &p)
{
    if (!(alpha_m > 0.0))
        throw std::invalid_argument("position_from_polar: range must be positive");
    return {p.x + alpha_m * std::cos(theta_global_rad), p.y + alpha_m * std::sin(theta_global_rad)};
}

} // namespace thztrack
