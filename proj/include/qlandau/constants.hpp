#pragma once

namespace qlandau {

// CODATA 2018 exact/recommended values.
inline constexpr double HBAR = 1.054571817e-34;     // J s
inline constexpr double KB = 1.380649e-23;          // J / K
inline constexpr double EV = 1.602176634e-19;       // J
inline constexpr double EPS0 = 8.8541878128e-12;    // F / m
inline constexpr double AMU = 1.66053906660e-27;    // kg

inline constexpr double PI = 3.14159265358979323846;

} // namespace qlandau
