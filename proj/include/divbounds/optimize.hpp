#pragma once

#include <cmath>
#include <utility>

namespace divbounds {

struct MinimumResult {
  double x;
  double value;
};

/// Golden-section search for the minimum of a unimodal function on [lo, hi].
/// Shrinks the bracket until it is narrower than x_tol and returns the best
/// evaluated point.
template <class F>
MinimumResult golden_section_min(F&& f, double lo, double hi, double x_tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > x_tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  MinimumResult best{x1, f1};
  if (f2 < best.value) best = {x2, f2};
  const double xm = 0.5 * (a + b);
  const double fm = f(xm);
  if (fm < best.value) best = {xm, fm};
  return best;
}

/// Bisection for f(x) = target on [lo, hi] where f is nondecreasing. The
/// endpoints themselves are never evaluated, so f may blow up at hi.
template <class F>
double bisect_increasing(F&& f, double lo, double hi, double target, double x_tol) {
  while (hi - lo > x_tol) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace divbounds
