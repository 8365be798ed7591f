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
#include <optional>
#include <vector>

#include "navfgo/core/satellite.hpp"
#include "navfgo/core/time.hpp"

namespace navfgo {

// One satellite/frequency measurement tuple at an epoch. Absent observables
// are empty optionals, never zero.
struct Observation {
  SatId sat;
  FrequencyBand band;
  std::optional<double> pseudorange;      // m
  std::optional<double> carrier_cycles;   // cycles
  std::optional<double> doppler;          // range rate, m/s
  std::optional<double> snr;              // dB-Hz
  bool loss_of_lock = false;
};

struct GnssEpoch {
  GnssTime time;
  std::vector<Observation> observations;
};

// Specific force + angular rate in the body frame.
struct ImuSample {
  GnssTime time;
  Eigen::Vector3d specific_force = Eigen::Vector3d::Zero();  // m/s^2
  Eigen::Vector3d angular_rate = Eigen::Vector3d::Zero();    // rad/s
};

}  // namespace navfgo
