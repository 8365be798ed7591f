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

#include "navfgo/models/ephemeris.hpp"

#include <cmath>

#include "navfgo/core/constants.hpp"

namespace navfgo {

namespace {
constexpr double kMu = wgs84::kGravitationalConstant;
constexpr double kOmegaE = wgs84::kEarthRotationRate;
// Relativistic clock constant -2*sqrt(mu)/c^2, s per sqrt(m).
const double kRelF = -2.0 * std::sqrt(kMu) / (kSpeedOfLight * kSpeedOfLight);
}  // namespace

double solveEccentricAnomaly(double mean_anomaly, double eccentricity) {
  double e_anom = mean_anomaly;
  for (int i = 0; i < 30; ++i) {
    const double f = e_anom - eccentricity * std::sin(e_anom) - mean_anomaly;
    const double fp = 1.0 - eccentricity * std::cos(e_anom);
    const double step = f / fp;
    e_anom -= step;
    if (std::abs(step) < 1e-15) break;
  }
  return e_anom;
}

SatState satPositionClock(const Ephemeris& eph, const GnssTime& t_transmit) {
  if (!eph.healthy) {
    throw EphemerisError("satPositionClock: unhealthy ephemeris for " + eph.sat.str());
  }
  if (!eph.usableAt(t_transmit)) {
    throw EphemerisError("satPositionClock: ephemeris expired for " + eph.sat.str());
  }

  const double a = eph.sqrt_a * eph.sqrt_a;
  const double n = std::sqrt(kMu / (a * a * a)) + eph.delta_n;
  const double tk = t_transmit - eph.toe;

  const double mk = eph.m0 + n * tk;
  const double ek = solveEccentricAnomaly(mk, eph.e);
  const double sin_ek = std::sin(ek), cos_ek = std::cos(ek);
  const double one_mec = 1.0 - eph.e * cos_ek;

  const double nu = std::atan2(std::sqrt(1.0 - eph.e * eph.e) * sin_ek, cos_ek - eph.e);
  const double phi = nu + eph.omega;
  const double sin2p = std::sin(2.0 * phi), cos2p = std::cos(2.0 * phi);

  const double du = eph.cus * sin2p + eph.cuc * cos2p;
  const double dr = eph.crs * sin2p + eph.crc * cos2p;
  const double di = eph.cis * sin2p + eph.cic * cos2p;

  const double u = phi + du;
  const double r = a * one_mec + dr;
  const double inc = eph.i0 + eph.idot * tk + di;
  const double lan = eph.omega0 + (eph.omega_dot - kOmegaE) * tk - kOmegaE * eph.toe.tow();

  const double cos_u = std::cos(u), sin_u = std::sin(u);
  const double xp = r * cos_u, yp = r * sin_u;
  const double cos_i = std::cos(inc), sin_i = std::sin(inc);
  const double cos_l = std::cos(lan), sin_l = std::sin(lan);

  SatState out;
  out.position = {xp * cos_l - yp * cos_i * sin_l,
                  xp * sin_l + yp * cos_i * cos_l,
                  yp * sin_i};

  // Analytic velocity by chain rule through the propagation above.
  const double ek_dot = n / one_mec;
  const double nu_dot = ek_dot * std::sqrt(1.0 - eph.e * eph.e) / one_mec;
  const double u_dot = nu_dot * (1.0 + 2.0 * (eph.cus * cos2p - eph.cuc * sin2p));
  const double r_dot = a * eph.e * sin_ek * ek_dot + 2.0 * nu_dot * (eph.crs * cos2p - eph.crc * sin2p);
  const double i_dot = eph.idot + 2.0 * nu_dot * (eph.cis * cos2p - eph.cic * sin2p);
  const double lan_dot = eph.omega_dot - kOmegaE;

  const double xp_dot = r_dot * cos_u - yp * u_dot;
  const double yp_dot = r_dot * sin_u + xp * u_dot;

  out.velocity = {
      xp_dot * cos_l - yp_dot * cos_i * sin_l + yp * sin_i * sin_l * i_dot -
          out.position.y() * lan_dot,
      xp_dot * sin_l + yp_dot * cos_i * cos_l - yp * sin_i * cos_l * i_dot +
          out.position.x() * lan_dot,
      yp_dot * sin_i + yp * cos_i * i_dot};

  const double tc = t_transmit - eph.toc;
  const double rel = kRelF * eph.e * eph.sqrt_a * sin_ek;
  out.clock_offset = eph.af0 + eph.af1 * tc + eph.af2 * tc * tc + rel;
  out.clock_drift = eph.af1 + 2.0 * eph.af2 * tc + kRelF * eph.e * eph.sqrt_a * cos_ek * ek_dot;
  return out;
}

const Ephemeris* selectEphemeris(const EphemerisSet& set, const SatId& sat,
                                 const GnssTime& t) {
  auto it = set.find(sat);
  if (it == set.end()) return nullptr;
  const Ephemeris* best = nullptr;
  double best_age = 0.0;
  for (const Ephemeris& eph : it->second) {
    if (!eph.usableAt(t)) continue;
    const double age = std::abs(t - eph.toe);
    if (!best || age < best_age) {
      best = &eph;
      best_age = age;
    }
  }
  return best;
}

}  // namespace navfgo
