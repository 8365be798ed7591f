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

#include <cmath>
#include <compare>
#include <cstdint>

#include "navfgo/core/constants.hpp"

namespace navfgo {

// Continuous GPS time as (week, seconds-of-week). Seconds-of-week are kept
// in integer nanoseconds so that time arithmetic is exact at week scale.
class GnssTime {
 public:
  static constexpr std::int64_t kWeekNs = 604800LL * 1000000000LL;

  GnssTime() = default;
  GnssTime(int week, double tow_seconds) : week_(week) {
    tow_ns_ = static_cast<std::int64_t>(std::llround(tow_seconds * 1e9));
    normalize();
  }
  static GnssTime fromWeekTowNs(int week, std::int64_t tow_ns) {
    GnssTime t;
    t.week_ = week;
    t.tow_ns_ = tow_ns;
    t.normalize();
    return t;
  }
  static GnssTime fromSeconds(double t) { return GnssTime(0, t); }

  int week() const { return week_; }
  double tow() const { return static_cast<double>(tow_ns_) * 1e-9; }
  std::int64_t towNs() const { return tow_ns_; }

  // Continuous seconds since GPS week 0.
  double seconds() const {
    return static_cast<double>(week_) * kSecondsPerWeek + tow();
  }

  GnssTime operator+(double dt_seconds) const {
    return fromWeekTowNs(
        week_, tow_ns_ + static_cast<std::int64_t>(std::llround(dt_seconds * 1e9)));
  }
  GnssTime operator-(double dt_seconds) const { return *this + (-dt_seconds); }

  // Signed difference in seconds, exact to the nanosecond at week scale.
  double operator-(const GnssTime& other) const {
    const std::int64_t dw = week_ - other.week_;
    const std::int64_t dns = tow_ns_ - other.tow_ns_;
    return static_cast<double>(dw * kWeekNs + dns) * 1e-9;
  }

  auto operator<=>(const GnssTime& other) const {
    if (auto c = week_ <=> other.week_; c != 0) return c;
    return tow_ns_ <=> other.tow_ns_;
  }
  bool operator==(const GnssTime&) const = default;

 private:
  void normalize() {
    while (tow_ns_ < 0) {
      tow_ns_ += kWeekNs;
      --week_;
    }
    while (tow_ns_ >= kWeekNs) {
      tow_ns_ -= kWeekNs;
      ++week_;
    }
  }

  int week_ = 0;
  std::int64_t tow_ns_ = 0;
};

}  // namespace navfgo
