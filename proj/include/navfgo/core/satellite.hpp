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

#include <compare>
#include <cstdint>
#include <string>

#include "navfgo/core/constants.hpp"

namespace navfgo {

enum class ConstellationId : std::uint8_t { kGps, kGlonass, kGalileo, kBds };

// RINEX system character G/R/E/C.
char constellationChar(ConstellationId id);
bool constellationFromChar(char c, ConstellationId& id);

struct SatId {
  ConstellationId constellation = ConstellationId::kGps;
  int prn = 0;

  auto operator<=>(const SatId&) const = default;

  // "G01", "C12", ...
  std::string str() const;
  static bool parse(const std::string& text, SatId& out);
};

// A carrier frequency band of one constellation, e.g. GPS L1.
struct FrequencyBand {
  ConstellationId constellation = ConstellationId::kGps;
  std::string label;          // "L1", "E5a", "B1I", ...
  double frequency_hz = 0.0;  // > 1 GHz

  auto operator<=>(const FrequencyBand&) const = default;
};

double wavelength(const FrequencyBand& band);

namespace bands {
extern const FrequencyBand kGpsL1;
extern const FrequencyBand kGpsL2;
extern const FrequencyBand kGpsL5;
extern const FrequencyBand kGalE1;
extern const FrequencyBand kGalE5a;
extern const FrequencyBand kGalE5b;
extern const FrequencyBand kBdsB1I;
extern const FrequencyBand kBdsB3I;

// The default dual-frequency pair of a constellation, primary first.
const FrequencyBand& primary(ConstellationId id);
const FrequencyBand& secondary(ConstellationId id);

// RINEX band digit + attribute for a band ("1C", "2C", ...).
std::string rinexCode(const FrequencyBand& band);
bool bandFromRinexCode(ConstellationId id, const std::string& code, FrequencyBand& out);
}  // namespace bands

}  // namespace navfgo
