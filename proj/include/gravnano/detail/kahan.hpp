#pragma once

#include <cmath>

namespace gravnano::detail {

// Neumaier-compensated accumulator; sum() returns the compensated total.
struct KahanSum {
  double s = 0.0;
  double c = 0.0;

  void add(double x) {
    double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }

  double sum() const { return s + c; }
};

}  // namespace gravnano::detail
