#pragma once

#include <vector>

#include "cfreach/poly_system.hpp"
#include "cfreach/word.hpp"

namespace cfreach {

/// Lie derivative of h along the vector field g: sum_k g[k] * dh/dz_k.
Polynomial lie_derivative(const Polynomial& h, const std::vector<Polynomial>& g);

/// Series coefficients of output j up to words of length max_order.
/// The coefficient of a word is P(word) evaluated at z0, where P(empty) is
/// h[j] and appending letter i on the right applies the Lie derivative
/// along g[i] outermost. Word prefixes share their polynomial, and a word
/// whose polynomial vanishes identically prunes its whole subtree.
FormalPowerSeries generate_coefficients(const PolySystem& sys, int output_index,
                                        int max_order);

/// Diagnostic growth-constant estimates from the stored coefficients:
/// m_global bounds |(c,w)| <= k * m_global^|w|, m_local bounds
/// |(c,w)| <= k * m_local^|w| * |w|! over the stored support.
struct GrowthEstimate {
    double m_global = 0.0;
    double m_local = 0.0;
    double k = 1.0;
};

GrowthEstimate estimate_growth(const FormalPowerSeries& c);

}  // namespace cfreach
