#pragma once

// Half-open real intervals [birth, death) used as persistence bars.
// Births are finite; deaths may be +infinity. Because intervals are
// half-open, "coincide above" means equal deaths and "coincide below"
// means equal births; all endpoint comparisons are exact floating-point
// comparisons, never epsilon-based.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace subbar {

using value_t = double;

inline constexpr value_t infinite_death = std::numeric_limits<value_t>::infinity();

struct interval {
  value_t birth;
  value_t death;

  interval(value_t b, value_t d) : birth(b), death(d) {
    if (!std::isfinite(b))
      throw std::invalid_argument("interval: birth must be finite");
    if (std::isnan(d))
      throw std::invalid_argument("interval: death must not be NaN");
    if (!(b < d))
      throw std::invalid_argument("interval: birth must be strictly below death");
  }

  bool has_infinite_death() const { return std::isinf(death); }
  // Half the length; infinite for unbounded intervals.
  value_t half_length() const { return has_infinite_death() ? infinite_death : (death - birth) / 2; }

  friend bool operator==(const interval& a, const interval& b) {
    return a.birth == b.birth && a.death == b.death;
  }
  friend bool operator!=(const interval& a, const interval& b) { return !(a == b); }
};

// outer contains inner as sets of points.
inline bool contains(const interval& outer, const interval& inner) {
  return outer.birth <= inner.birth && inner.death <= outer.death;
}

inline bool intersects(const interval& i, const interval& j) {
  return std::max(i.birth, j.birth) < std::min(i.death, j.death);
}

inline std::optional<interval> intersection(const interval& i, const interval& j) {
  value_t b = std::max(i.birth, j.birth);
  value_t d = std::min(i.death, j.death);
  if (b < d) return interval(b, d);
  return std::nullopt;
}

// i overlaps j above: they intersect, j bounds i below, and i bounds j above.
inline bool overlaps_above(const interval& i, const interval& j) {
  return intersects(i, j) && j.birth <= i.birth && i.death >= j.death;
}

}  // namespace subbar
