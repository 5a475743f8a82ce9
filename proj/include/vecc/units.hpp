// Copyright 2026 The VECC Simulator Authors
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

#ifndef VECC_UNITS_HPP_
#define VECC_UNITS_HPP_

#include <cmath>

// Conversions between the experiment-table units (kB, Megacycles, GHz, mW,
// dBm) and the SI units used everywhere inside the library.
namespace vecc::units {

// Decimal kilobyte: 1 kB = 1000 bytes = 8000 bits.
inline constexpr double kBitsPerKilobyte = 8000.0;
inline constexpr double kCyclesPerMegacycle = 1e6;
inline constexpr double kHertzPerGigahertz = 1e9;
inline constexpr double kHertzPerMegahertz = 1e6;

constexpr double kilobytes_to_bits(double kb) { return kb * kBitsPerKilobyte; }
constexpr double bits_to_kilobytes(double bits) { return bits / kBitsPerKilobyte; }

constexpr double megacycles_to_cycles(double mc) { return mc * kCyclesPerMegacycle; }
constexpr double cycles_to_megacycles(double c) { return c / kCyclesPerMegacycle; }

constexpr double gigahertz_to_hertz(double ghz) { return ghz * kHertzPerGigahertz; }
constexpr double hertz_to_gigahertz(double hz) { return hz / kHertzPerGigahertz; }

constexpr double milliwatts_to_watts(double mw) { return mw / 1000.0; }
constexpr double watts_to_milliwatts(double w) { return w * 1000.0; }

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

// Energy per computation unit: J/Megacycle <-> J/cycle.
constexpr double joules_per_megacycle_to_per_cycle(double j) {
  return j / kCyclesPerMegacycle;
}
constexpr double joules_per_cycle_to_per_megacycle(double j) {
  return j * kCyclesPerMegacycle;
}

}  // namespace vecc::units

#endif  // VECC_UNITS_HPP_
