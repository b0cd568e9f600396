#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace congest {

using NodeId = int;      // 1..n, 0 means "none"
using Weight = std::int64_t;

// Nonnegative integer distance with a saturating infinity sentinel.
// Finite values are bounded by n * W_max <= n^3, well inside 64 bits.
struct Distance {
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

  std::int64_t value = kInf;

  static constexpr Distance inf() { return Distance{}; }
  static constexpr Distance zero() { return Distance{0}; }
  static constexpr Distance of(std::int64_t v) { return Distance{v}; }

  constexpr bool finite() const { return value != kInf; }

  friend constexpr Distance operator+(Distance a, Weight w) {
    return a.finite() ? Distance{a.value + w} : inf();
  }
  friend constexpr Distance operator+(Distance a, Distance b) {
    return (a.finite() && b.finite()) ? Distance{a.value + b.value} : inf();
  }

  constexpr auto operator<=>(const Distance&) const = default;
};

inline std::string to_string(Distance d) {
  return d.finite() ? std::to_string(d.value) : std::string("INF");
}

}  // namespace congest
