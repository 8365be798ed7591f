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
#include <stdexcept>

namespace navfgo {

// ECEF position in meters.
using EcefPosition = Eigen::Vector3d;
// ENU position in meters relative to a declared geodetic origin.
using EnuPosition = Eigen::Vector3d;

struct GeodeticPosition {
  double lat = 0.0;     // rad, [-pi/2, pi/2]
  double lon = 0.0;     // rad
  double height = 0.0;  // m above ellipsoid
};

struct GeodesyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// WGS-84 conversions. ecef_to_geodetic uses bounded fixed-point iteration
// (<= 10 iterations, tol 1e-12 rad) and rejects points within the Earth
// center degenerate zone (|p| <= 6.2e6 m).
GeodeticPosition ecefToGeodetic(const EcefPosition& p);
EcefPosition geodeticToEcef(const GeodeticPosition& g);

// Rotation taking ECEF deltas to the ENU frame at `origin` (rows: e, n, u).
Eigen::Matrix3d enuRotation(const GeodeticPosition& origin);

EnuPosition ecefToEnu(const EcefPosition& p, const GeodeticPosition& origin);
EcefPosition enuToEcef(const EnuPosition& enu, const GeodeticPosition& origin);

// Elevation/azimuth of the receiver->satellite line of sight in the
// receiver's ENU frame. Elevation in [-pi/2, pi/2], azimuth in [0, 2pi)
// measured clockwise from north. Coincident points (< 1e5 m apart) rejected.
void elevationAzimuth(const EcefPosition& receiver, const EcefPosition& satellite,
                      double& elevation, double& azimuth);

}  // namespace navfgo
