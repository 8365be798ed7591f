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

#include <Eigen/Core>
#include <map>
#include <stdexcept>
#include <vector>

#include "navfgo/core/geodesy.hpp"
#include "navfgo/core/observation.hpp"

namespace navfgo {

// Keplerian broadcast orbit + clock polynomial for one satellite.
struct Ephemeris {
  SatId sat;
  GnssTime toe;        // ephemeris reference time
  GnssTime toc;        // clock reference time
  int iode = 0;

  double sqrt_a = 0.0;     // sqrt(m)
  double e = 0.0;
  double i0 = 0.0;         // rad
  double omega0 = 0.0;     // RAAN at toe, rad
  double omega = 0.0;      // argument of perigee, rad
  double m0 = 0.0;         // mean anomaly at toe, rad
  double delta_n = 0.0;    // rad/s
  double idot = 0.0;       // rad/s
  double omega_dot = 0.0;  // rad/s
  double cuc = 0.0, cus = 0.0;
  double crc = 0.0, crs = 0.0;
  double cic = 0.0, cis = 0.0;

  double af0 = 0.0;        // s
  double af1 = 0.0;        // s/s
  double af2 = 0.0;        // s/s^2

  bool healthy = true;

  bool usableAt(const GnssTime& t) const {
    return healthy && std::abs(t - toe) < 4.0 * 3600.0;
  }
};

struct EphemerisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SatState {
  EcefPosition position = EcefPosition::Zero();
  Eigen::Vector3d velocity = Eigen::Vector3d::Zero();  // m/s, ECEF
  double clock_offset = 0.0;                            // s, includes relativistic term
  double clock_drift = 0.0;                             // s/s
};

// Keplerian propagation with harmonic corrections, analytic velocity, and
// the relativistic clock term. Throws on expired or unhealthy ephemeris.
SatState satPositionClock(const Ephemeris& eph, const GnssTime& t_transmit);

// Kepler's equation solver, exposed for the residual property test.
double solveEccentricAnomaly(double mean_anomaly, double eccentricity);

using EphemerisSet = std::map<SatId, std::vector<Ephemeris>>;

// Picks the ephemeris whose toe is nearest to t (usable ones only).
const Ephemeris* selectEphemeris(const EphemerisSet& set, const SatId& sat,
                                 const GnssTime& t);

}  // namespace navfgo
