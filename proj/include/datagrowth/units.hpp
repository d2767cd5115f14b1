#pragma once

#include "datagrowth/errors.hpp"

namespace datagrowth {

// Calendar time as a continuous real year, e.g. 2015.2. No month/leap
// handling anywhere: a year is exactly 365 days.
using TimeYears = double;

// Annual data volume in exabytes (decimal SI: 1 EB = 1e18 bytes).
using VolumeEB = double;

namespace units {

inline constexpr double kBitsPerEB = 8e18;
inline constexpr double kEBPerZB = 1e3;
inline constexpr double kBytesPerGB = 1e9;
inline constexpr double kBitsPerKbit = 1e3;
inline constexpr double kSecondsPerYear = 365.0 * 24.0 * 3600.0;
inline constexpr double kSecondsPerDay = 24.0 * 3600.0;
inline constexpr double kMinutesPerMonth = 30.0 * 24.0 * 60.0;

// Year digital volume first exceeded analog volume; the reference epoch
// all volume models are anchored to.
inline constexpr TimeYears kVolumeEpochYear = 2002.0;

// One bit expressed as an annual volume.
inline constexpr VolumeEB kOneBitEB = 1.0 / kBitsPerEB;

inline constexpr double eb_to_bits(VolumeEB v) { return v * kBitsPerEB; }

inline constexpr VolumeEB bits_to_eb(double bits) { return bits / kBitsPerEB; }

// Average per-person production rate in kbit/s from an annual volume and a
// population headcount.
inline double annual_per_capita_rate_kbit_s(VolumeEB v_per_year, double persons) {
  if (!(persons > 0.0)) {
    throw DomainError("annual_per_capita_rate_kbit_s: population must be > 0");
  }
  return kBitsPerEB * (v_per_year / persons) / kBitsPerKbit / kSecondsPerYear;
}

}  // namespace units
}  // namespace datagrowth
