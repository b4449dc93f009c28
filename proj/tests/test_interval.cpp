#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cfreach/interval.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

using namespace cfreach;

namespace {

bool within_ulps(double x, double y, int n) {
    if (x == y) return true;
    const double scale = std::max(std::fabs(x), std::fabs(y));
    return std::fabs(x - y) <= n * std::ldexp(scale, -52);
}

Interval random_interval(std::mt19937_64& rng, double span) {
    std::uniform_real_distribution<double> dist(-span, span);
    double a = dist(rng);
    double b = dist(rng);
    if (a > b) std::swap(a, b);
    return Interval(a, b);
}

/// Exact min/max of y_1 * ... * y_n with each factor on the same 51-point
/// grid over [lo, hi]. Running extremes over the partial products give the
/// same value as full enumeration, since for fixed g the map p -> g*p is
/// monotone; full enumeration is infeasible at n = 6 (51^6 products).
std::pair<double, double> grid_power_oracle(const Interval& iv, int n) {
    std::vector<double> grid(51);
    for (int j = 0; j <= 50; ++j) grid[j] = iv.lo + (iv.hi - iv.lo) * j / 50.0;
    double cur_min = 1.0;
    double cur_max = 1.0;
    for (int k = 0; k < n; ++k) {
        double next_min = grid[0] * cur_min;
        double next_max = next_min;
        for (double g : grid) {
            next_min = std::min({next_min, g * cur_min, g * cur_max});
            next_max = std::max({next_max, g * cur_min, g * cur_max});
        }
        cur_min = next_min;
        cur_max = next_max;
    }
    return {cur_min, cur_max};
}

}  // namespace

TEST_CASE("interval product endpoint cases") {
    CHECK(Interval(-2, 1) * Interval(1, 3) == Interval(-6, 3));
    CHECK(Interval(0, 0) * Interval(-7, 4) == Interval(0, 0));
    CHECK(Interval(1, 2) * Interval(3, 4) == Interval(3, 8));
}

TEST_CASE("interval product is commutative and contains sampled products") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        const Interval a = random_interval(rng, 5.0);
        const Interval b = random_interval(rng, 5.0);
        const Interval ab = a * b;
        CHECK(ab == b * a);
        std::uniform_real_distribution<double> da(a.lo, a.hi);
        std::uniform_real_distribution<double> db(b.lo, b.hi);
        for (int s = 0; s < 20; ++s) {
            CHECK(ab.contains(da(rng) * db(rng)));
        }
    }
}

TEST_CASE("interval sum adds endpoints") {
    CHECK(Interval(-1, 2) + Interval(3, 5) == Interval(2, 7));
}

TEST_CASE("scalar product of an interval") {
    CHECK(scale(3.0, Interval(-2, 1)) == Interval(-6, 3));
    CHECK(scale(-1.0, Interval(-4, 9)) == Interval(-9, 4));
    CHECK(scale(0.0, Interval(-5, 7)) == Interval(0, 0));
}

TEST_CASE("scalar product scales the width") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> lam(-4.0, 4.0);
    for (int trial = 0; trial < 50; ++trial) {
        const Interval iv = random_interval(rng, 5.0);
        const double l = lam(rng);
        const double got = scale(l, iv).width();
        const double want = std::fabs(l) * iv.width();
        CHECK(std::fabs(got - want) <= 1e-12 * std::max(1.0, want));
    }
}

TEST_CASE("relaxed power endpoint cases") {
    CHECK(pow(Interval(-2, 1), 2) == Interval(-2, 4));
    CHECK(pow(Interval(-2, 1), 3) == Interval(-8, 4));
    CHECK(pow(Interval(1, 2), 0) == Interval(1, 1));
    CHECK(pow(Interval(-3, 5), 1) == Interval(-3, 5));
}

TEST_CASE("relaxed power equals the multiplication fold within 8 ulp") {
    std::mt19937_64 rng(431);
    std::vector<Interval> cases = {Interval(-2, 1), Interval(1, 2.8), Interval(-1, 1),
                                   Interval(-3, -0.5), Interval(0, 2)};
    for (int trial = 0; trial < 40; ++trial) cases.push_back(random_interval(rng, 5.0));
    for (const Interval& iv : cases) {
        Interval fold = iv;
        for (unsigned n = 1; n <= 7; ++n) {
            const Interval p = pow(iv, n);
            CHECK(within_ulps(p.lo, fold.lo, 8));
            CHECK(within_ulps(p.hi, fold.hi, 8));
            fold = fold * iv;
        }
    }
}

TEST_CASE("relaxed power matches the grid oracle") {
    std::mt19937_64 rng(1905);
    for (int trial = 0; trial < 100; ++trial) {
        const Interval iv = random_interval(rng, 5.0);
        for (int n = 1; n <= 6; ++n) {
            const auto [olo, ohi] = grid_power_oracle(iv, n);
            const Interval p = pow(iv, static_cast<unsigned>(n));
            const double tol = n * std::pow(5.0, n) * iv.width() / 50.0;
            const double slack = 1e-12 * std::max({1.0, std::fabs(olo), std::fabs(ohi)});
            CHECK(std::fabs(p.lo - olo) <= tol);
            CHECK(std::fabs(p.hi - ohi) <= tol);
            CHECK(p.lo <= olo + slack);
            CHECK(p.hi >= ohi - slack);
        }
    }
}

TEST_CASE("grid oracle running-extreme reduction matches full enumeration") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 5; ++trial) {
        const Interval iv = random_interval(rng, 5.0);
        std::vector<double> grid(51);
        for (int j = 0; j <= 50; ++j) grid[j] = iv.lo + (iv.hi - iv.lo) * j / 50.0;
        double full_min = grid[0] * grid[0] * grid[0];
        double full_max = full_min;
        for (double y1 : grid)
            for (double y2 : grid)
                for (double y3 : grid) {
                    const double p = y1 * y2 * y3;
                    full_min = std::min(full_min, p);
                    full_max = std::max(full_max, p);
                }
        const auto [olo, ohi] = grid_power_oracle(iv, 3);
        CHECK(olo == full_min);
        CHECK(ohi == full_max);
    }
}

TEST_CASE("relaxed power preserves containment") {
    std::mt19937_64 rng(9001);
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const Interval outer = random_interval(rng, 5.0);
        const double lo = outer.lo + frac(rng) * outer.width();
        const double hi = lo + frac(rng) * (outer.hi - lo);
        const Interval inner(lo, hi);
        for (unsigned n = 1; n <= 6; ++n) {
            const Interval pi = pow(inner, n);
            const Interval po = pow(outer, n);
            const double slack =
                1e-12 * std::max({1.0, std::fabs(po.lo), std::fabs(po.hi)});
            CHECK(po.lo <= pi.lo + slack);
            CHECK(pi.hi <= po.hi + slack);
        }
    }
}

TEST_CASE("interval helpers") {
    const Interval iv(-2, 6);
    CHECK(iv.width() == 8.0);
    CHECK(iv.mid() == 2.0);
    CHECK(iv.contains(0.0));
    CHECK_FALSE(iv.contains(-2.5));
    CHECK(iv.contains(Interval(-1, 5)));
    CHECK_FALSE(iv.contains(Interval(-3, 0)));
    CHECK(Interval::point(4.0) == Interval(4, 4));
}
