#pragma once

#include <optional>
#include <vector>

#include "cfreach/interval.hpp"
#include "cfreach/word.hpp"

namespace cfreach {

/// Input constraint: every channel confined to the same interval.
struct InputBox {
    int m = 0;
    Interval box{0.0, 0.0};
};

/// Per-output lower/upper bound curves on a time grid, at truncation
/// `order`. When `tail` is present, subtracting/adding it to lower/upper
/// widens the truncated envelope into one that also covers the discarded
/// words (valid when the supplied growth constants are).
struct ReachEnvelope {
    std::vector<double> t_grid;
    std::vector<std::vector<double>> lower;
    std::vector<std::vector<double>> upper;
    int order = 0;
    std::optional<std::vector<double>> tail;
};

/// Interval containing E_w[u](t) for all inputs with channel values in the
/// box: the relaxed power over the non-drift letters scaled by t^|w|/|w|!.
Interval word_reach(const Word& w, const InputBox& box, double t);

/// Per-word envelope coefficients: for each stored word, the endpoints of
/// (c,w) * box^(|w| - drift count), computed through interval arithmetic.
struct BoundedCoefficients {
    FormalPowerSeries lower;
    FormalPowerSeries upper;
};

BoundedCoefficients bound_coefficients(const FormalPowerSeries& c, const InputBox& box);

/// Envelope curves for one series per output channel. Coefficient bounds
/// of equal word length are accumulated first, so each grid point costs
/// one short sum over lengths.
ReachEnvelope reach_envelope(const std::vector<FormalPowerSeries>& series,
                             const InputBox& box, std::vector<double> t_grid);

/// Magnitude bound on the contribution of all words longer than `order`,
/// from the growth bound |(c,w)| <= K * M^|w|: K times the exponential
/// tail of ((m+1) M R t) with R = max(|a|,|b|,1).
double tail_bound(double k_growth, double m_growth, int m, const InputBox& box,
                  int order, double t);

}  // namespace cfreach
