#include "cfreach/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "cfreach/errors.hpp"
#include "cfreach/grid.hpp"
#include "cfreach/rk4.hpp"

namespace cfreach {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Uniform draw in [lo, hi] from the (seed, counter) pair alone.
double counter_uniform(std::uint64_t seed, std::uint64_t counter, double lo, double hi) {
    const std::uint64_t bits = splitmix64(seed ^ splitmix64(counter));
    const double unit = static_cast<double>(bits >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

constexpr double kBlowUp = 1e12;

}  // namespace

std::vector<SampledInput> sample_inputs(int m, const InputBox& box, int segments,
                                        double t_final, int count, std::uint64_t seed,
                                        int steps) {
    if (m < 0) throw std::invalid_argument("sampling needs m >= 0");
    if (segments < 1) throw std::invalid_argument("sampling needs segments >= 1");
    if (count < 1) throw std::invalid_argument("sampling needs count >= 1");
    if (steps < 1) throw std::invalid_argument("sampling needs steps >= 1");
    if (!(t_final > 0.0)) throw std::invalid_argument("sampling needs t_final > 0");

    std::vector<SampledInput> out;
    out.reserve(static_cast<std::size_t>(count));
    const auto nodes = static_cast<std::size_t>(steps) + 1;
    for (int s = 0; s < count; ++s) {
        SampledInput u;
        u.m = m;
        u.t_final = t_final;
        u.grid_steps = steps;
        u.values.assign(static_cast<std::size_t>(m), std::vector<double>(nodes));
        for (int ch = 0; ch < m; ++ch) {
            std::vector<double> piece_values(static_cast<std::size_t>(segments));
            for (int q = 0; q < segments; ++q) {
                if (s == 0) {
                    piece_values[static_cast<std::size_t>(q)] = box.box.lo;
                } else if (s == 1) {
                    piece_values[static_cast<std::size_t>(q)] = box.box.hi;
                } else {
                    const std::uint64_t counter =
                        (static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(segments) +
                         static_cast<std::uint64_t>(q)) *
                            static_cast<std::uint64_t>(m) +
                        static_cast<std::uint64_t>(ch);
                    piece_values[static_cast<std::size_t>(q)] =
                        counter_uniform(seed, counter, box.box.lo, box.box.hi);
                }
            }
            for (int k = 0; k <= steps; ++k) {
                const int piece = std::min(k * segments / steps, segments - 1);
                u.values[static_cast<std::size_t>(ch)][static_cast<std::size_t>(k)] =
                    piece_values[static_cast<std::size_t>(piece)];
            }
        }
        out.push_back(std::move(u));
    }
    return out;
}

std::vector<std::vector<double>> simulate(const PolySystem& sys, const SampledInput& u) {
    sys.validate();
    u.validate();
    if (u.m != sys.m) throw std::invalid_argument("input channel count mismatch");

    const auto n = static_cast<std::size_t>(sys.n);
    const int steps = u.steps();
    const double dt = u.dt();

    std::vector<std::vector<double>> outputs(
        sys.h.size(), std::vector<double>(static_cast<std::size_t>(steps) + 1));
    std::vector<double> z(sys.z0);

    auto record = [&](int k) {
        for (std::size_t j = 0; j < sys.h.size(); ++j)
            outputs[j][static_cast<std::size_t>(k)] = sys.h[j].evaluate(z);
    };
    record(0);

    std::vector<double> held(static_cast<std::size_t>(sys.m));
    auto rhs = [&](const std::vector<double>& state, std::vector<double>& dstate) {
        for (std::size_t i = 0; i < n; ++i) {
            double v = sys.g[0][i].evaluate(state);
            for (int j = 0; j < sys.m; ++j)
                v += sys.g[static_cast<std::size_t>(j) + 1][i].evaluate(state) *
                     held[static_cast<std::size_t>(j)];
            dstate[i] = v;
        }
    };

    for (int k = 0; k < steps; ++k) {
        for (int j = 0; j < sys.m; ++j)
            held[static_cast<std::size_t>(j)] = u.sample(j + 1, k);
        rk4_step(z, dt, rhs);
        for (double v : z)
            if (!std::isfinite(v) || std::abs(v) > kBlowUp)
                throw DivergenceError(u.time_at(k + 1));
        record(k + 1);
    }
    return outputs;
}

EmpiricalReach empirical_reach(const PolySystem& sys, const InputBox& box, int segments,
                               int count, std::uint64_t seed, double t_final, int points,
                               int substeps,
                               std::vector<std::vector<std::vector<double>>>*
                                   trajectories_out) {
    sys.validate();
    if (points < 2) throw std::invalid_argument("reporting grid needs points >= 2");
    if (substeps < 1) throw std::invalid_argument("substeps must be >= 1");
    const int steps = (points - 1) * substeps;
    const auto inputs = sample_inputs(sys.m, box, segments, t_final, count, seed, steps);

    const auto ell = sys.h.size();
    std::vector<std::vector<std::vector<double>>> sampled(
        static_cast<std::size_t>(count),
        std::vector<std::vector<double>>(ell,
                                         std::vector<double>(static_cast<std::size_t>(points))));

    std::atomic<int> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto worker = [&]() {
        for (;;) {
            const int s = next.fetch_add(1);
            if (s >= count) return;
            try {
                const auto fine = simulate(sys, inputs[static_cast<std::size_t>(s)]);
                for (std::size_t j = 0; j < ell; ++j)
                    for (int p = 0; p < points; ++p)
                        sampled[static_cast<std::size_t>(s)][j][static_cast<std::size_t>(p)] =
                            fine[j][static_cast<std::size_t>(p) *
                                    static_cast<std::size_t>(substeps)];
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const auto n_threads = std::min<std::size_t>(hw, static_cast<std::size_t>(count));
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t k = 0; k < n_threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);

    EmpiricalReach out;
    out.t_grid.resize(static_cast<std::size_t>(points));
    for (int p = 0; p < points; ++p)
        out.t_grid[static_cast<std::size_t>(p)] = grid_point(t_final, points, p);
    out.min_curve.assign(ell, std::vector<double>(static_cast<std::size_t>(points)));
    out.max_curve.assign(ell, std::vector<double>(static_cast<std::size_t>(points)));
    for (std::size_t j = 0; j < ell; ++j) {
        for (std::size_t p = 0; p < static_cast<std::size_t>(points); ++p) {
            double lo = sampled[0][j][p];
            double hi = lo;
            for (int s = 1; s < count; ++s) {
                lo = std::min(lo, sampled[static_cast<std::size_t>(s)][j][p]);
                hi = std::max(hi, sampled[static_cast<std::size_t>(s)][j][p]);
            }
            out.min_curve[j][p] = lo;
            out.max_curve[j][p] = hi;
        }
    }
    if (trajectories_out) *trajectories_out = std::move(sampled);
    return out;
}

}  // namespace cfreach
