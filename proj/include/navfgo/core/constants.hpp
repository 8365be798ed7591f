// Copyright 2026 The navfgo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace navfgo {

// WGS-84 and broadcast-ephemeris conventions.
namespace wgs84 {
constexpr double kSemiMajorAxis = 6378137.0;             // m
constexpr double kFlattening = 1.0 / 298.257223563;
constexpr double kSemiMinorAxis = kSemiMajorAxis * (1.0 - kFlattening);
constexpr double kEccentricitySq = kFlattening * (2.0 - kFlattening);
constexpr double kEarthRotationRate = 7.2921151467e-5;   // rad/s
constexpr double kGravitationalConstant = 3.986005e14;   // m^3/s^2
}  // namespace wgs84

constexpr double kSpeedOfLight = 299792458.0;            // m/s
constexpr double kGravityMagnitude = 9.80665;            // m/s^2
constexpr double kSecondsPerWeek = 604800.0;

}  // namespace navfgo
