#pragma once

namespace cfreach {

/// p-th node of a uniform grid with `points` samples on [0, t_final].
/// Every producer of a t column uses this exact expression so that CSV
/// time grids from different subcommands are byte-identical.
inline double grid_point(double t_final, int points, int p) {
    if (p == points - 1) return t_final;
    return t_final * p / (points - 1);
}

}  // namespace cfreach
