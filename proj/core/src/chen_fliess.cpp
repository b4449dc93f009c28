#include "cfreach/chen_fliess.hpp"

#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>

#include "cfreach/grid.hpp"

namespace cfreach {

double SampledInput::time_at(int k) const { return grid_point(t_final, steps() + 1, k); }

double SampledInput::sample(int letter, int k) const {
    if (letter == 0) return 1.0;
    return values[static_cast<std::size_t>(letter) - 1][static_cast<std::size_t>(k)];
}

void SampledInput::validate() const {
    if (m < 0) throw std::invalid_argument("input needs m >= 0");
    if (values.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("input needs one value row per channel");
    if (t_final <= 0.0) throw std::invalid_argument("input needs t_final > 0");
    if (grid_steps < 1) throw std::invalid_argument("input needs grid_steps >= 1");
    for (const auto& row : values)
        if (row.size() != static_cast<std::size_t>(grid_steps) + 1)
            throw std::invalid_argument("input channels need grid_steps+1 samples");
}

namespace {

/// Cumulative trapezoid of channel(letter) * inner over the input's grid.
std::vector<double> integrate_letter(int letter, const std::vector<double>& inner,
                                     const SampledInput& u) {
    const std::size_t nodes = inner.size();
    const double dt = u.t_final / static_cast<double>(nodes - 1);
    std::vector<double> out(nodes);
    out[0] = 0.0;
    double prev = u.sample(letter, 0) * inner[0];
    for (std::size_t k = 1; k < nodes; ++k) {
        const double cur = u.sample(letter, static_cast<int>(k)) * inner[k];
        out[k] = out[k - 1] + 0.5 * dt * (prev + cur);
        prev = cur;
    }
    return out;
}

using SuffixMemo = std::map<Word, std::vector<double>, LengthLexLess>;

const std::vector<double>& memoized_integral(const Word& w, const SampledInput& u,
                                             SuffixMemo& memo) {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    std::vector<double> out;
    if (w.empty()) {
        out.assign(static_cast<std::size_t>(u.steps()) + 1, 1.0);
    } else {
        if (w.letters.front() > u.m)
            throw std::invalid_argument("word letter exceeds input channel count");
        out = integrate_letter(w.letters.front(), memoized_integral(w.suffix(), u, memo), u);
    }
    return memo.emplace(w, std::move(out)).first->second;
}

}  // namespace

std::vector<double> iterated_integral(const Word& w, const SampledInput& u) {
    u.validate();
    SuffixMemo memo;
    return memoized_integral(w, u, memo);
}

double unit_iterated_integral(const Word& w, double t) {
    const int k = static_cast<int>(w.length());
    if (k == 0) return 1.0;
    if (k <= 18) {
        double factorial = 1.0;
        for (int j = 2; j <= k; ++j) factorial *= j;
        return std::pow(t, k) / factorial;
    }
    double out = 1.0;
    for (int j = 1; j <= k; ++j) out *= t / static_cast<double>(j);
    return out;
}

std::vector<double> evaluate_series(const FormalPowerSeries& c, const SampledInput& u) {
    u.validate();
    if (c.alphabet_size() > u.m)
        throw std::invalid_argument("series alphabet exceeds input channel count");
    const std::size_t nodes = static_cast<std::size_t>(u.steps()) + 1;
    std::vector<double> out(nodes, 0.0);
    SuffixMemo memo;
    for (const auto& [w, coeff] : c.coefficients()) {
        const auto& e = memoized_integral(w, u, memo);
        for (std::size_t k = 0; k < nodes; ++k) out[k] += coeff * e[k];
    }
    return out;
}

}  // namespace cfreach
