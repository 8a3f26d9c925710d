#pragma once

#include <cstdint>

namespace copkit {

/// Naturals as used throughout: positive integers, 0 only as a sentinel-free
/// arithmetic intermediate.
using natural = std::uint64_t;

/// Sign of an imaginary weight.
enum class Sign : int { plus = 1, minus = -1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }

constexpr Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

}  // namespace copkit
