#pragma once

#include <cassert>

namespace cfreach {

/// Closed real interval [lo, hi]. Plain IEEE double endpoints, no outward
/// rounding.
struct Interval {
    double lo{0.0};
    double hi{0.0};

    Interval() = default;
    Interval(double a, double b) : lo(a), hi(b) { assert(lo <= hi); }
    static Interval point(double v) { return Interval(v, v); }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double v) const { return lo <= v && v <= hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }

    bool operator==(const Interval&) const = default;
};

/// Set product of two intervals: endpoints are the min/max of the four
/// endpoint products.
Interval operator*(const Interval& a, const Interval& b);

Interval operator+(const Interval& a, const Interval& b);

/// Product of a scalar and an interval; a negative scalar swaps the ends.
Interval scale(double lambda, const Interval& iv);

/// n-th relaxed power of an interval: the product of n independent factors
/// each ranging over [lo, hi]. Distinct from the functional power
/// {y^n : y in [lo,hi]}; e.g. the square of [-2,1] is [-2,4], not [0,4].
/// The zeroth power is [1,1] (empty product).
Interval pow(const Interval& iv, unsigned n);

}  // namespace cfreach
