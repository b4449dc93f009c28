#include "cfreach/mixed_monotone.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

#include "cfreach/errors.hpp"
#include "cfreach/rk4.hpp"

namespace cfreach {

namespace {

bool leq(const std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

constexpr double kBlowUp = 1e12;

/// Grid optimum of f_i(y, z) = g0_i(y) + sum_j gj_i(y) z_j with y_i pinned,
/// y in [y_lo, y_hi] on grid_pts points per free dimension, and the z
/// optimum taken exactly at the per-channel interval ends (f_i is affine in
/// z, so this equals a z grid search that includes the endpoints).
double optimize_component(const PolySystem& sys, std::size_t i, double pin,
                          const std::vector<double>& y_lo, const std::vector<double>& y_hi,
                          const std::vector<double>& z_lo, const std::vector<double>& z_hi,
                          bool minimize, int grid_pts) {
    const auto n = static_cast<std::size_t>(sys.n);
    const auto m = static_cast<std::size_t>(sys.m);

    std::vector<std::size_t> free_dims;
    for (std::size_t k = 0; k < n; ++k)
        if (k != i && y_hi[k] > y_lo[k]) free_dims.push_back(k);

    std::vector<double> y(y_lo);
    y[i] = pin;

    double best = minimize ? std::numeric_limits<double>::infinity()
                           : -std::numeric_limits<double>::infinity();

    std::vector<int> idx(free_dims.size(), 0);
    while (true) {
        for (std::size_t d = 0; d < free_dims.size(); ++d) {
            const std::size_t k = free_dims[d];
            y[k] = (idx[d] == grid_pts - 1)
                       ? y_hi[k]
                       : y_lo[k] + (y_hi[k] - y_lo[k]) * idx[d] / (grid_pts - 1);
        }
        double val = sys.g[0][i].evaluate(y);
        for (std::size_t j = 0; j < m; ++j) {
            const double coef = sys.g[j + 1][i].evaluate(y);
            const double at_lo = coef * z_lo[j];
            const double at_hi = coef * z_hi[j];
            val += minimize ? std::min(at_lo, at_hi) : std::max(at_lo, at_hi);
        }
        best = minimize ? std::min(best, val) : std::max(best, val);

        std::size_t d = 0;
        for (; d < idx.size(); ++d) {
            if (++idx[d] < grid_pts) break;
            idx[d] = 0;
        }
        if (d == idx.size()) break;
    }
    return best;
}

}  // namespace

double decomposition(const PolySystem& sys, int i, const std::vector<double>& x,
                     const std::vector<double>& u, const std::vector<double>& x_hat,
                     const std::vector<double>& u_hat, int grid_pts) {
    const auto n = static_cast<std::size_t>(sys.n);
    const auto m = static_cast<std::size_t>(sys.m);
    if (i < 0 || i >= sys.n) throw std::invalid_argument("state index out of range");
    if (x.size() != n || x_hat.size() != n || u.size() != m || u_hat.size() != m)
        throw std::invalid_argument("decomposition argument dimensions mismatch");
    if (grid_pts < 2) throw std::invalid_argument("decomposition needs grid_pts >= 2");

    const bool forward = leq(x, x_hat) && leq(u, u_hat);
    const bool backward = forward || (leq(x_hat, x) && leq(u_hat, u));
    if (!forward && !backward)
        throw std::invalid_argument("decomposition arguments are not ordered");

    const auto ui = static_cast<std::size_t>(i);
    if (forward)
        return optimize_component(sys, ui, x[ui], x, x_hat, u, u_hat, true, grid_pts);
    return optimize_component(sys, ui, x[ui], x_hat, x, u_hat, u, false, grid_pts);
}

EmbeddingTrajectory integrate_embedding(const PolySystem& sys,
                                        const std::vector<double>& x0,
                                        const std::vector<double>& x0_hat,
                                        const std::vector<double>& u_low,
                                        const std::vector<double>& u_high,
                                        const std::vector<double>& t_grid, int grid_pts,
                                        int substeps) {
    sys.validate();
    const auto n = static_cast<std::size_t>(sys.n);
    if (x0.size() != n || x0_hat.size() != n)
        throw std::invalid_argument("initial corners need n entries");
    if (u_low.size() != static_cast<std::size_t>(sys.m) || u_high.size() != u_low.size())
        throw std::invalid_argument("input corners need m entries");
    if (!leq(x0, x0_hat)) throw std::invalid_argument("initial corners are not ordered");
    if (!leq(u_low, u_high)) throw std::invalid_argument("input corners are not ordered");
    if (t_grid.empty() || t_grid.front() != 0.0)
        throw std::invalid_argument("time grid must start at 0");
    if (substeps < 1) throw std::invalid_argument("substeps must be >= 1");
    if (grid_pts < 2) throw std::invalid_argument("integration needs grid_pts >= 2");

    // RK4 stage states can disorder the corners by rounding noise, so the
    // per-dimension boxes are normalized with min/max instead of rechecking
    // the ordering at every stage.
    std::vector<double> lo(n), hi(n);
    auto rhs = [&](const std::vector<double>& w, std::vector<double>& dw) {
        for (std::size_t k = 0; k < n; ++k) {
            lo[k] = std::min(w[k], w[n + k]);
            hi[k] = std::max(w[k], w[n + k]);
        }
        for (std::size_t k = 0; k < n; ++k) {
            dw[k] = optimize_component(sys, k, w[k], lo, hi, u_low, u_high, true, grid_pts);
            dw[n + k] =
                optimize_component(sys, k, w[n + k], lo, hi, u_low, u_high, false, grid_pts);
        }
    };

    EmbeddingTrajectory out;
    out.t_grid = t_grid;
    std::vector<double> w(2 * n);
    std::copy(x0.begin(), x0.end(), w.begin());
    std::copy(x0_hat.begin(), x0_hat.end(), w.begin() + static_cast<long>(n));

    auto record = [&]() {
        EmbeddingState st;
        st.x.assign(w.begin(), w.begin() + static_cast<long>(n));
        st.x_hat.assign(w.begin() + static_cast<long>(n), w.end());
        out.states.push_back(std::move(st));
    };
    record();

    for (std::size_t p = 1; p < t_grid.size(); ++p) {
        const double h = (t_grid[p] - t_grid[p - 1]) / substeps;
        if (!(h > 0.0)) throw std::invalid_argument("time grid must be increasing");
        for (int s = 0; s < substeps; ++s) {
            rk4_step(w, h, rhs);
            for (double v : w)
                if (!std::isfinite(v) || std::abs(v) > kBlowUp)
                    throw DivergenceError(t_grid[p - 1] + h * (s + 1));
        }
        record();
    }

    out.output_boxes.resize(sys.h.size());
    std::vector<Interval> state_box(n);
    for (const auto& st : out.states) {
        for (std::size_t k = 0; k < n; ++k)
            state_box[k] = Interval(std::min(st.x[k], st.x_hat[k]),
                                    std::max(st.x[k], st.x_hat[k]));
        for (std::size_t j = 0; j < sys.h.size(); ++j)
            out.output_boxes[j].push_back(sys.h[j].evaluate(state_box));
    }
    return out;
}

}  // namespace cfreach
