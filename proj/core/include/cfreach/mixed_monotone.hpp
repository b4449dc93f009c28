#pragma once

#include <vector>

#include "cfreach/interval.hpp"
#include "cfreach/poly_system.hpp"

namespace cfreach {

/// Corner pair of the over-approximating state box: x is the southwest
/// corner, x_hat the northeast corner.
struct EmbeddingState {
    std::vector<double> x;
    std::vector<double> x_hat;
};

/// Tight decomposition of component i by box optimization: the min (when
/// x <= x_hat and u <= u_hat) or max (when the reverse ordering holds) of
///   f_i(y, z) = g0_i(y) + sum_j gj_i(y) z_j
/// over y in the state box with y_i pinned to x_i and z in the input box.
/// The y box is searched on a grid with grid_pts points per free dimension;
/// since f_i is affine in z, the z optimum is taken exactly at the
/// per-channel corners (identical to a grid search that includes the
/// endpoints). Throws std::invalid_argument when neither argument ordering
/// holds.
double decomposition(const PolySystem& sys, int i, const std::vector<double>& x,
                     const std::vector<double>& u, const std::vector<double>& x_hat,
                     const std::vector<double>& u_hat, int grid_pts);

/// Embedding trajectory plus the induced per-output reach boxes,
/// h_j evaluated by interval natural extension over [x(t), x_hat(t)].
struct EmbeddingTrajectory {
    std::vector<double> t_grid;
    std::vector<EmbeddingState> states;
    std::vector<std::vector<Interval>> output_boxes;
};

/// Integrates the 2n-dimensional embedding system
///   dx/dt = d(x, u_low, x_hat, u_high),  dx_hat/dt = d(x_hat, u_high, x, u_low)
/// with inputs frozen at the box corners, by fixed-step RK4 with `substeps`
/// steps per reporting interval. Throws DivergenceError when the state
/// leaves the finite range (|value| > 1e12 or non-finite).
EmbeddingTrajectory integrate_embedding(const PolySystem& sys,
                                        const std::vector<double>& x0,
                                        const std::vector<double>& x0_hat,
                                        const std::vector<double>& u_low,
                                        const std::vector<double>& u_high,
                                        const std::vector<double>& t_grid, int grid_pts,
                                        int substeps);

}  // namespace cfreach
