#include "cfreach/interval.hpp"

#include <algorithm>
#include <cmath>

namespace cfreach {

Interval operator*(const Interval& a, const Interval& b) {
    const double p1 = a.lo * b.lo;
    const double p2 = a.lo * b.hi;
    const double p3 = a.hi * b.lo;
    const double p4 = a.hi * b.hi;
    return Interval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo + b.lo, a.hi + b.hi);
}

Interval scale(double lambda, const Interval& iv) {
    if (lambda >= 0.0) return Interval(lambda * iv.lo, lambda * iv.hi);
    return Interval(lambda * iv.hi, lambda * iv.lo);
}

namespace {

double ipow(double x, unsigned n) {
    double r = 1.0;
    for (unsigned k = 0; k < n; ++k) r *= x;
    return r;
}

}  // namespace

Interval pow(const Interval& iv, unsigned n) {
    if (n == 0) return Interval(1.0, 1.0);
    if (n == 1) return iv;
    const double a = iv.lo;
    const double b = iv.hi;
    const double an = ipow(a, n);
    const double bn = ipow(b, n);
    const double abn1 = a * ipow(b, n - 1);
    const double an1b = ipow(a, n - 1) * b;
    if (n % 2 == 1) {
        return Interval(std::min(an, abn1), std::max(bn, an1b));
    }
    return Interval(std::min({an, abn1, an1b, bn}), std::max(an, bn));
}

}  // namespace cfreach
