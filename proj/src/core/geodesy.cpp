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

#include "navfgo/core/geodesy.hpp"

#include <cmath>

#include "navfgo/core/constants.hpp"

namespace navfgo {

namespace {
constexpr double kA = wgs84::kSemiMajorAxis;
constexpr double kE2 = wgs84::kEccentricitySq;

double primeVerticalRadius(double lat) {
  const double s = std::sin(lat);
  return kA / std::sqrt(1.0 - kE2 * s * s);
}
}  // namespace

GeodeticPosition ecefToGeodetic(const EcefPosition& p) {
  if (p.norm() <= 6.2e6) {
    throw GeodesyError("ecefToGeodetic: point inside Earth-center degenerate zone");
  }
  GeodeticPosition g;
  const double rho = std::hypot(p.x(), p.y());
  g.lon = (rho < 1e-9) ? 0.0 : std::atan2(p.y(), p.x());

  // Fixed-point iteration on latitude, bounded at 10 rounds.
  double lat = std::atan2(p.z(), rho * (1.0 - kE2));
  for (int i = 0; i < 10; ++i) {
    const double n = primeVerticalRadius(lat);
    const double next = std::atan2(p.z() + kE2 * n * std::sin(lat), rho);
    const double delta = std::abs(next - lat);
    lat = next;
    if (delta < 1e-12) break;
  }
  g.lat = lat;
  const double n = primeVerticalRadius(lat);
  if (std::abs(std::cos(lat)) > 1e-9) {
    g.height = rho / std::cos(lat) - n;
  } else {
    g.height = std::abs(p.z()) - kA * std::sqrt(1.0 - kE2);
  }
  return g;
}

EcefPosition geodeticToEcef(const GeodeticPosition& g) {
  const double n = primeVerticalRadius(g.lat);
  const double clat = std::cos(g.lat);
  const double slat = std::sin(g.lat);
  return {(n + g.height) * clat * std::cos(g.lon),
          (n + g.height) * clat * std::sin(g.lon),
          (n * (1.0 - kE2) + g.height) * slat};
}

Eigen::Matrix3d enuRotation(const GeodeticPosition& origin) {
  const double sl = std::sin(origin.lon), cl = std::cos(origin.lon);
  const double sp = std::sin(origin.lat), cp = std::cos(origin.lat);
  Eigen::Matrix3d r;
  r << -sl, cl, 0.0,
       -sp * cl, -sp * sl, cp,
       cp * cl, cp * sl, sp;
  return r;
}

EnuPosition ecefToEnu(const EcefPosition& p, const GeodeticPosition& origin) {
  return enuRotation(origin) * (p - geodeticToEcef(origin));
}

EcefPosition enuToEcef(const EnuPosition& enu, const GeodeticPosition& origin) {
  return geodeticToEcef(origin) + enuRotation(origin).transpose() * enu;
}

void elevationAzimuth(const EcefPosition& receiver, const EcefPosition& satellite,
                      double& elevation, double& azimuth) {
  const Eigen::Vector3d los = satellite - receiver;
  if (los.norm() <= 1e5) {
    throw GeodesyError("elevationAzimuth: points nearly coincident");
  }
  const Eigen::Vector3d enu = enuRotation(ecefToGeodetic(receiver)) * los.normalized();
  elevation = std::asin(std::clamp(enu.z(), -1.0, 1.0));
  azimuth = std::atan2(enu.x(), enu.y());
  if (azimuth < 0.0) azimuth += 2.0 * M_PI;
}

}  // namespace navfgo
