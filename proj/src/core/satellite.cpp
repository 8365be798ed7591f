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

#include "navfgo/core/satellite.hpp"

#include <cstdio>

namespace navfgo {

char constellationChar(ConstellationId id) {
  switch (id) {
    case ConstellationId::kGps: return 'G';
    case ConstellationId::kGlonass: return 'R';
    case ConstellationId::kGalileo: return 'E';
    case ConstellationId::kBds: return 'C';
  }
  return '?';
}

bool constellationFromChar(char c, ConstellationId& id) {
  switch (c) {
    case 'G': id = ConstellationId::kGps; return true;
    case 'R': id = ConstellationId::kGlonass; return true;
    case 'E': id = ConstellationId::kGalileo; return true;
    case 'C': id = ConstellationId::kBds; return true;
    default: return false;
  }
}

std::string SatId::str() const {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%c%02d", constellationChar(constellation), prn);
  return buf;
}

bool SatId::parse(const std::string& text, SatId& out) {
  if (text.size() < 3) return false;
  ConstellationId id;
  if (!constellationFromChar(text[0], id)) return false;
  if (text[1] < '0' || text[1] > '9' || text[2] < '0' || text[2] > '9') return false;
  out.constellation = id;
  out.prn = (text[1] - '0') * 10 + (text[2] - '0');
  return out.prn > 0;
}

double wavelength(const FrequencyBand& band) {
  return kSpeedOfLight / band.frequency_hz;
}

namespace bands {

const FrequencyBand kGpsL1{ConstellationId::kGps, "L1", 1575.42e6};
const FrequencyBand kGpsL2{ConstellationId::kGps, "L2", 1227.60e6};
const FrequencyBand kGpsL5{ConstellationId::kGps, "L5", 1176.45e6};
const FrequencyBand kGalE1{ConstellationId::kGalileo, "E1", 1575.42e6};
const FrequencyBand kGalE5a{ConstellationId::kGalileo, "E5a", 1176.45e6};
const FrequencyBand kGalE5b{ConstellationId::kGalileo, "E5b", 1207.14e6};
const FrequencyBand kBdsB1I{ConstellationId::kBds, "B1I", 1561.098e6};
const FrequencyBand kBdsB3I{ConstellationId::kBds, "B3I", 1268.52e6};

const FrequencyBand& primary(ConstellationId id) {
  switch (id) {
    case ConstellationId::kGalileo: return kGalE1;
    case ConstellationId::kBds: return kBdsB1I;
    default: return kGpsL1;
  }
}

const FrequencyBand& secondary(ConstellationId id) {
  switch (id) {
    case ConstellationId::kGalileo: return kGalE5a;
    case ConstellationId::kBds: return kBdsB3I;
    default: return kGpsL2;
  }
}

std::string rinexCode(const FrequencyBand& band) {
  if (band == kGpsL1) return "1C";
  if (band == kGpsL2) return "2C";
  if (band == kGpsL5) return "5Q";
  if (band == kGalE1) return "1C";
  if (band == kGalE5a) return "5Q";
  if (band == kGalE5b) return "7Q";
  if (band == kBdsB1I) return "2I";
  if (band == kBdsB3I) return "6I";
  return "1C";
}

bool bandFromRinexCode(ConstellationId id, const std::string& code, FrequencyBand& out) {
  for (const FrequencyBand* b :
       {&kGpsL1, &kGpsL2, &kGpsL5, &kGalE1, &kGalE5a, &kGalE5b, &kBdsB1I, &kBdsB3I}) {
    if (b->constellation == id && rinexCode(*b) == code) {
      out = *b;
      return true;
    }
  }
  return false;
}

}  // namespace bands

}  // namespace navfgo
