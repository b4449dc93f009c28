#include "cfreach/reach_envelope.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "cfreach/chen_fliess.hpp"

namespace cfreach {

Interval word_reach(const Word& w, const InputBox& box, double t) {
    const unsigned n = static_cast<unsigned>(w.length() - w.count_letter(0));
    return scale(unit_iterated_integral(w, t), pow(box.box, n));
}

BoundedCoefficients bound_coefficients(const FormalPowerSeries& c, const InputBox& box) {
    BoundedCoefficients out{FormalPowerSeries(c.alphabet_size(), c.max_order()),
                            FormalPowerSeries(c.alphabet_size(), c.max_order())};
    for (const auto& [w, coeff] : c.coefficients()) {
        const unsigned n = static_cast<unsigned>(w.length() - w.count_letter(0));
        const Interval iv = scale(coeff, pow(box.box, n));
        out.lower.set_coefficient(w, iv.lo);
        out.upper.set_coefficient(w, iv.hi);
    }
    return out;
}

ReachEnvelope reach_envelope(const std::vector<FormalPowerSeries>& series,
                             const InputBox& box, std::vector<double> t_grid) {
    if (series.empty()) throw std::invalid_argument("envelope needs at least one series");
    for (double t : t_grid)
        if (!(t >= 0.0)) throw std::invalid_argument("envelope grid times must be >= 0");

    ReachEnvelope env;
    env.t_grid = std::move(t_grid);
    env.order = series.front().max_order();
    const std::size_t points = env.t_grid.size();

    for (const auto& c : series) {
        const auto bounds = bound_coefficients(c, box);
        const std::size_t lengths = static_cast<std::size_t>(c.max_order()) + 1;
        std::vector<double> lower_by_len(lengths, 0.0);
        std::vector<double> upper_by_len(lengths, 0.0);
        for (const auto& [w, v] : bounds.lower.coefficients()) lower_by_len[w.length()] += v;
        for (const auto& [w, v] : bounds.upper.coefficients()) upper_by_len[w.length()] += v;

        std::vector<double> lo(points, 0.0);
        std::vector<double> hi(points, 0.0);
        for (std::size_t p = 0; p < points; ++p) {
            const double t = env.t_grid[p];
            double term = 1.0;
            for (std::size_t k = 0; k < lengths; ++k) {
                if (k > 0) term *= t / static_cast<double>(k);
                lo[p] += lower_by_len[k] * term;
                hi[p] += upper_by_len[k] * term;
            }
        }
        env.lower.push_back(std::move(lo));
        env.upper.push_back(std::move(hi));
    }
    return env;
}

double tail_bound(double k_growth, double m_growth, int m, const InputBox& box,
                  int order, double t) {
    if (!(k_growth > 0.0) || !(m_growth > 0.0))
        throw std::invalid_argument("tail bound needs positive growth constants");
    if (order < 0) throw std::invalid_argument("tail bound needs order >= 0");
    if (!(t >= 0.0)) throw std::invalid_argument("tail bound needs t >= 0");

    const double radius =
        std::max({std::abs(box.box.lo), std::abs(box.box.hi), 1.0});
    const double x = static_cast<double>(m + 1) * m_growth * radius * t;

    double term = 1.0;
    for (int j = 1; j <= order + 1; ++j) term *= x / static_cast<double>(j);
    double sum = term;
    for (int j = order + 2; j < order + 2000 && term > 0.0; ++j) {
        term *= x / static_cast<double>(j);
        sum += term;
        if (term < 1e-16 * sum) break;
    }
    return k_growth * sum;
}

}  // namespace cfreach
