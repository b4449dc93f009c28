#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cfreach/polynomial.hpp"

namespace cfreach {

/// Control-affine polynomial system
///   dz/dt = g[0](z) + sum_{i=1..m} g[i](z) u_i(t),  y_j = h[j](z),  z(0) = z0.
/// g[0] is the drift field; g has m+1 entries of n polynomials each, all in
/// n variables.
struct PolySystem {
    int n = 0;
    int m = 0;
    std::vector<std::vector<Polynomial>> g;
    std::vector<Polynomial> h;
    std::vector<double> z0;

    int n_outputs() const { return static_cast<int>(h.size()); }

    void validate() const {
        if (n < 1) throw std::invalid_argument("system needs n >= 1");
        if (m < 0) throw std::invalid_argument("system needs m >= 0");
        if (g.size() != static_cast<std::size_t>(m) + 1)
            throw std::invalid_argument("system needs m+1 vector fields");
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i].size() != static_cast<std::size_t>(n))
                throw std::invalid_argument("vector field g" + std::to_string(i) +
                                            " needs n components");
            for (const auto& p : g[i])
                if (p.n_vars() != n)
                    throw std::invalid_argument("vector field g" + std::to_string(i) +
                                                " has a component with wrong n_vars");
        }
        if (h.empty()) throw std::invalid_argument("system needs at least one output");
        for (const auto& p : h)
            if (p.n_vars() != n)
                throw std::invalid_argument("output polynomial has wrong n_vars");
        if (z0.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("initial state needs n entries");
    }

    bool operator==(const PolySystem&) const = default;
};

}  // namespace cfreach
