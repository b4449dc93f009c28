#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cfreach/errors.hpp>
#include <cfreach/grid.hpp>
#include <cfreach/mixed_monotone.hpp>
#include <cfreach/monte_carlo.hpp>

#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

using namespace cfreach;

namespace {

PolySystem scalar_bilinear_system() {
    PolySystem sys;
    sys.n = 1;
    sys.m = 1;
    sys.g = {{Polynomial(1)}, {Polynomial::variable(1, 0)}};
    sys.h = {Polynomial::variable(1, 0)};
    sys.z0 = {1.0};
    return sys;
}

PolySystem predator_prey_system() {
    Polynomial z1z2(2);
    z1z2.add_term({1, 1}, 1.0);
    PolySystem sys;
    sys.n = 2;
    sys.m = 2;
    sys.g = {{z1z2 * -1.0, z1z2},
             {Polynomial::variable(2, 0), Polynomial(2)},
             {Polynomial(2), Polynomial::variable(2, 1) * -1.0}};
    sys.h = {Polynomial::variable(2, 0)};
    sys.z0 = {1.0 / 6.0, 1.0 / 6.0};
    return sys;
}

SampledInput constant_input(int m, double value, double t_final, int steps) {
    SampledInput u;
    u.m = m;
    u.t_final = t_final;
    u.grid_steps = steps;
    u.values.assign(static_cast<std::size_t>(m),
                    std::vector<double>(static_cast<std::size_t>(steps) + 1, value));
    return u;
}

}  // namespace

TEST_CASE("the first two samples are the exact box corners") {
    const InputBox box{2, Interval(-0.75, 1.25)};
    const auto inputs = sample_inputs(2, box, 4, 1.0, 6, 99, 40);
    REQUIRE(inputs.size() == 6);
    for (int ch = 0; ch < 2; ++ch) {
        for (int k = 0; k <= 40; ++k) {
            CHECK(inputs[0].values[static_cast<std::size_t>(ch)][static_cast<std::size_t>(k)] ==
                  -0.75);
            CHECK(inputs[1].values[static_cast<std::size_t>(ch)][static_cast<std::size_t>(k)] ==
                  1.25);
        }
    }
}

TEST_CASE("samples are admissible piecewise-constant signals") {
    const InputBox box{1, Interval(-1, 1)};
    const int segments = 4;
    const int steps = 39;  // deliberately not divisible by the segment count
    const auto inputs = sample_inputs(1, box, segments, 2.0, 10, 7, steps);

    for (const auto& u : inputs) {
        REQUIRE(u.values.size() == 1);
        REQUIRE(u.values[0].size() == static_cast<std::size_t>(steps) + 1);
        CHECK(u.time_at(0) == 0.0);
        CHECK(u.time_at(steps) == 2.0);

        std::set<double> distinct;
        for (int k = 0; k <= steps; ++k) {
            const double v = u.values[0][static_cast<std::size_t>(k)];
            distinct.insert(v);
            CHECK(v >= -1.0);
            CHECK(v <= 1.0);

            // Nodes in the same segment hold the same value.
            const int piece = std::min(k * segments / steps, segments - 1);
            const int first = (piece * steps + segments - 1) / segments;
            CHECK(v == u.values[0][static_cast<std::size_t>(first)]);
        }
        CHECK(distinct.size() <= static_cast<std::size_t>(segments));
    }
}

TEST_CASE("sampling is deterministic in the seed alone") {
    const InputBox box{2, Interval(-1, 1)};
    const auto a = sample_inputs(2, box, 4, 1.0, 32, 123, 50);
    const auto b = sample_inputs(2, box, 4, 1.0, 32, 123, 50);
    REQUIRE(a.size() == b.size());
    for (std::size_t s = 0; s < a.size(); ++s)
        CHECK(a[s].values == b[s].values);

    const auto c = sample_inputs(2, box, 4, 1.0, 32, 124, 50);
    bool any_differ = false;
    for (std::size_t s = 2; s < a.size(); ++s)
        if (a[s].values != c[s].values) any_differ = true;
    CHECK(any_differ);
}

TEST_CASE("simulation reproduces the constant-input exponential") {
    const PolySystem sys = scalar_bilinear_system();

    const auto y1 = simulate(sys, constant_input(1, 1.0, 1.0, 1000));
    REQUIRE(y1.size() == 1);
    REQUIRE(y1[0].size() == 1001);
    CHECK(y1[0][0] == 1.0);
    CHECK(std::fabs(y1[0].back() - std::exp(1.0)) <= 1e-8);

    const auto y2 = simulate(sys, constant_input(1, 2.8, 1.0, 1000));
    CHECK(std::fabs(y2[0].back() - std::exp(2.8)) <= 1e-6);
}

TEST_CASE("halving the step size shrinks the error at fourth order") {
    const PolySystem sys = scalar_bilinear_system();
    const double exact = std::exp(1.0);
    const double err_coarse =
        std::fabs(simulate(sys, constant_input(1, 1.0, 1.0, 8))[0].back() - exact);
    const double err_fine =
        std::fabs(simulate(sys, constant_input(1, 1.0, 1.0, 16))[0].back() - exact);
    CHECK(err_coarse / err_fine >= 12.0);
}

TEST_CASE("corner-only empirical reach recovers the exponential envelope") {
    const PolySystem sys = scalar_bilinear_system();
    const InputBox box{1, Interval(1.0, 2.8)};
    const auto reach = empirical_reach(sys, box, 4, 2, 5, 1.0, 11, 100);

    REQUIRE(reach.t_grid.size() == 11);
    REQUIRE(reach.min_curve.size() == 1);
    for (std::size_t p = 0; p < reach.t_grid.size(); ++p) {
        const double t = reach.t_grid[p];
        CHECK(std::fabs(reach.min_curve[0][p] - std::exp(t)) <= 1e-8);
        CHECK(std::fabs(reach.max_curve[0][p] - std::exp(2.8 * t)) <= 1e-6);
    }
}

TEST_CASE("a single sample gives a zero-width empirical band") {
    const PolySystem sys = predator_prey_system();
    const InputBox box{2, Interval(-1, 1)};
    const auto reach = empirical_reach(sys, box, 4, 1, 5, 1.0, 11, 20);
    for (std::size_t p = 0; p < reach.t_grid.size(); ++p)
        CHECK(reach.min_curve[0][p] == reach.max_curve[0][p]);
}

TEST_CASE("empirical reach is deterministic across runs") {
    const PolySystem sys = predator_prey_system();
    const InputBox box{2, Interval(-1, 1)};
    std::vector<std::vector<std::vector<double>>> traj_a, traj_b;
    const auto a = empirical_reach(sys, box, 4, 64, 2026, 1.0, 11, 20, &traj_a);
    const auto b = empirical_reach(sys, box, 4, 64, 2026, 1.0, 11, 20, &traj_b);
    CHECK(a.t_grid == b.t_grid);
    CHECK(a.min_curve == b.min_curve);
    CHECK(a.max_curve == b.max_curve);
    CHECK(traj_a == traj_b);
}

TEST_CASE("per-sample trajectories have the reported shape and bracket") {
    const PolySystem sys = predator_prey_system();
    const InputBox box{2, Interval(-1, 1)};
    std::vector<std::vector<std::vector<double>>> traj;
    const auto reach = empirical_reach(sys, box, 4, 16, 11, 1.0, 11, 20, &traj);

    REQUIRE(traj.size() == 16);
    for (const auto& sample : traj) {
        REQUIRE(sample.size() == sys.h.size());
        REQUIRE(sample[0].size() == 11);
        for (std::size_t p = 0; p < 11; ++p) {
            CHECK(reach.min_curve[0][p] <= sample[0][p]);
            CHECK(sample[0][p] <= reach.max_curve[0][p]);
        }
    }
}

TEST_CASE("empirical curves stay inside the embedding boxes") {
    std::vector<double> grid(11);
    for (int p = 0; p < 11; ++p) grid[static_cast<std::size_t>(p)] = grid_point(1.0, 11, p);

    struct Config {
        PolySystem sys;
        InputBox box;
        std::vector<double> u_low, u_high;
    };
    const std::vector<Config> configs = {
        {scalar_bilinear_system(), InputBox{1, Interval(1.0, 2.8)}, {1.0}, {2.8}},
        {predator_prey_system(), InputBox{2, Interval(-1, 1)}, {-1.0, -1.0}, {1.0, 1.0}},
    };

    for (const auto& cfg : configs) {
        const auto emb = integrate_embedding(cfg.sys, cfg.sys.z0, cfg.sys.z0, cfg.u_low,
                                             cfg.u_high, grid, 33, 100);
        const auto emp = empirical_reach(cfg.sys, cfg.box, 4, 40, 17, 1.0, 11, 100);
        for (std::size_t p = 0; p < grid.size(); ++p) {
            const Interval& b = emb.output_boxes[0][p];
            const double tol = 1e-6 * std::max({1.0, std::fabs(b.lo), std::fabs(b.hi)});
            CHECK(b.lo - tol <= emp.min_curve[0][p]);
            CHECK(emp.max_curve[0][p] <= b.hi + tol);
        }
    }
}

TEST_CASE("simulation reports divergence with the blow-up time") {
    Polynomial sq(1);
    sq.add_term({2}, 1.0);
    PolySystem sys;
    sys.n = 1;
    sys.m = 1;
    sys.g = {{Polynomial(1)}, {sq}};
    sys.h = {Polynomial::variable(1, 0)};
    sys.z0 = {1.0};

    try {
        simulate(sys, constant_input(1, 1.0, 2.0, 200));
        FAIL("expected divergence");
    } catch (const DivergenceError& e) {
        CHECK(e.time() > 0.0);
        CHECK(e.time() <= 2.0);
    }
}

TEST_CASE("argument validation") {
    const InputBox box{1, Interval(0, 1)};
    CHECK_THROWS_AS(sample_inputs(-1, box, 4, 1.0, 4, 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(sample_inputs(1, box, 0, 1.0, 4, 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(sample_inputs(1, box, 4, 1.0, 0, 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(sample_inputs(1, box, 4, 1.0, 4, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(sample_inputs(1, box, 4, 0.0, 4, 1, 10), std::invalid_argument);

    const PolySystem sys = scalar_bilinear_system();
    CHECK_THROWS_AS(simulate(sys, constant_input(2, 1.0, 1.0, 10)),
                    std::invalid_argument);
    CHECK_THROWS_AS(empirical_reach(sys, box, 4, 4, 1, 1.0, 1, 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(empirical_reach(sys, box, 4, 4, 1, 1.0, 11, 0),
                    std::invalid_argument);
}
