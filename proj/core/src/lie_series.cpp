#include "cfreach/lie_series.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace cfreach {

Polynomial lie_derivative(const Polynomial& h, const std::vector<Polynomial>& g) {
    if (g.empty()) throw std::invalid_argument("vector field is empty");
    const int n = h.n_vars();
    if (g.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("vector field length does not match n_vars");
    Polynomial out(n);
    for (int k = 0; k < n; ++k) out = out + g[static_cast<std::size_t>(k)] * h.partial(k);
    return out;
}

FormalPowerSeries generate_coefficients(const PolySystem& sys, int output_index,
                                        int max_order) {
    sys.validate();
    if (output_index < 0 || output_index >= sys.n_outputs())
        throw std::invalid_argument("output index out of range");
    if (max_order < 0) throw std::invalid_argument("max order must be nonnegative");

    FormalPowerSeries series(sys.m, max_order);

    struct Node {
        Word word;
        Polynomial poly;
    };
    std::vector<Node> stack;
    stack.push_back({Word{}, sys.h[static_cast<std::size_t>(output_index)]});
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        series.set_coefficient(node.word, node.poly.evaluate(sys.z0));
        if (static_cast<int>(node.word.length()) >= max_order) continue;
        for (int i = 0; i <= sys.m; ++i) {
            Polynomial next = lie_derivative(node.poly, sys.g[static_cast<std::size_t>(i)]);
            if (next.is_zero()) continue;
            stack.push_back({node.word.appended(i), std::move(next)});
        }
    }
    return series;
}

GrowthEstimate estimate_growth(const FormalPowerSeries& c) {
    double m_global = 0.0;
    double m_local = 0.0;
    bool any = false;
    for (const auto& [w, coeff] : c.coefficients()) {
        const int k = static_cast<int>(w.length());
        if (k == 0) continue;
        any = true;
        const double mag = std::abs(coeff);
        double factorial = 1.0;
        for (int j = 2; j <= k; ++j) factorial *= j;
        m_global = std::max(m_global, std::pow(mag, 1.0 / k));
        m_local = std::max(m_local, std::pow(mag / factorial, 1.0 / k));
    }
    if (!any)
        throw std::domain_error(
            "insufficient support: no nonzero coefficient beyond the empty word");
    GrowthEstimate est;
    est.m_global = m_global;
    est.m_local = m_local;
    est.k = std::max(1.0, std::abs(c.coefficient(Word{})));
    return est;
}

}  // namespace cfreach
