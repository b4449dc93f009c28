#pragma once

#include <cstddef>
#include <vector>

namespace cfreach {

/// One classical Runge-Kutta step of x' = rhs(x) over step size h. The
/// right-hand side must be autonomous within the step (inputs frozen).
/// rhs(state, out) writes the derivative of `state` into `out`.
template <typename Rhs>
void rk4_step(std::vector<double>& x, double h, Rhs&& rhs) {
    const std::size_t n = x.size();
    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
    rhs(x, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
    rhs(tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
    rhs(tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + h * k3[i];
    rhs(tmp, k4);
    for (std::size_t i = 0; i < n; ++i)
        x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

}  // namespace cfreach
