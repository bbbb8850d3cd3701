#pragma once

#include <stdexcept>

namespace projsum {

/// Real interval with independently open or closed endpoints.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool closed_lo = true;
  bool closed_hi = true;

  Interval() = default;
  Interval(double lo_, double hi_, bool closed_lo_ = true, bool closed_hi_ = true)
      : lo(lo_), hi(hi_), closed_lo(closed_lo_), closed_hi(closed_hi_) {
    if (!(lo <= hi)) throw std::invalid_argument("Interval: requires lo <= hi");
  }

  static Interval closed(double lo, double hi) { return {lo, hi, true, true}; }
  static Interval open(double lo, double hi) { return {lo, hi, false, false}; }

  bool contains(double x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !closed_lo) return false;
    if (x == hi && !closed_hi) return false;
    return true;
  }

  double length() const { return hi - lo; }
};

}  // namespace projsum
