#pragma once

#include <cstdint>
#include <vector>

#include "cfreach/chen_fliess.hpp"
#include "cfreach/poly_system.hpp"
#include "cfreach/reach_envelope.hpp"

namespace cfreach {

/// `count` piecewise-constant admissible inputs on a grid of `steps`+1
/// nodes over [0, t_final]: each of the `segments` equal-length pieces of
/// each channel holds one value drawn uniformly from the box. Samples 0 and
/// 1 are the deterministic corner inputs (all channels at a, all at b).
/// Deterministic in `seed` via a counter-based generator, so sample i is
/// reproducible independently of thread count.
std::vector<SampledInput> sample_inputs(int m, const InputBox& box, int segments,
                                        double t_final, int count, std::uint64_t seed,
                                        int steps);

/// Fixed-step RK4 with zero-order-hold inputs on the input's grid; returns
/// h_j(z(t_k)) per output per node. Throws DivergenceError on blow-up.
std::vector<std::vector<double>> simulate(const PolySystem& sys, const SampledInput& u);

/// Pointwise min/max of the sampled trajectories: an under-approximation
/// of the reachable output set.
struct EmpiricalReach {
    std::vector<double> t_grid;
    std::vector<std::vector<double>> min_curve;
    std::vector<std::vector<double>> max_curve;
};

/// Simulates `count` sampled inputs (in parallel) and reduces to min/max
/// curves on the reporting grid of `points` nodes; each reporting interval
/// is refined into `substeps` simulation steps. When trajectories_out is
/// non-null it receives every sample's output curves at reporting
/// resolution, indexed [sample][output][point].
EmpiricalReach empirical_reach(const PolySystem& sys, const InputBox& box, int segments,
                               int count, std::uint64_t seed, double t_final, int points,
                               int substeps,
                               std::vector<std::vector<std::vector<double>>>*
                                   trajectories_out = nullptr);

}  // namespace cfreach
