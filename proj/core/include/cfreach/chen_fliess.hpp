#pragma once

#include <vector>

#include "cfreach/word.hpp"

namespace cfreach {

/// Input signal sampled on a uniform grid of grid_steps+1 nodes over
/// [0, t_final]. values[i] holds channel i+1; the drift channel u_0 = 1 is
/// implicit and never stored.
struct SampledInput {
    int m = 0;
    double t_final = 0.0;
    int grid_steps = 0;
    std::vector<std::vector<double>> values;

    int steps() const { return grid_steps; }
    double dt() const { return t_final / steps(); }
    double time_at(int k) const;

    /// Sample of channel (1-based letter index; 0 is the drift) at node k.
    double sample(int letter, int k) const;

    void validate() const;
};

/// E_w[u] on the input's grid. The empty word gives the constant 1; each
/// letter, processed innermost (rightmost) first, multiplies by its channel
/// and applies cumulative trapezoidal integration.
std::vector<double> iterated_integral(const Word& w, const SampledInput& u);

/// Closed form t^|w| / |w|! of E_w at time t when every channel is 1.
double unit_iterated_integral(const Word& w, double t);

/// Truncated series response sum_w (c,w) E_w[u] on the input's grid.
/// Shared suffixes of stored words are integrated once.
std::vector<double> evaluate_series(const FormalPowerSeries& c, const SampledInput& u);

}  // namespace cfreach
