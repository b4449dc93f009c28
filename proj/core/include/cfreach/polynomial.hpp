#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "cfreach/interval.hpp"

namespace cfreach {

/// Sparse multivariate polynomial over n_vars real variables. Terms map an
/// exponent vector (one entry per variable) to its coefficient; exact-zero
/// coefficients are never stored, so the representation is canonical.
class Polynomial {
  public:
    using Exponents = std::vector<unsigned>;

    explicit Polynomial(int n_vars);

    static Polynomial constant(int n_vars, double value);
    /// The monomial z_k (0-based variable index).
    static Polynomial variable(int n_vars, int k);

    int n_vars() const { return n_vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, double>& terms() const { return terms_; }

    /// Adds `coeff * z^exps` to the polynomial. Throws on an exponent
    /// vector of the wrong length.
    void add_term(const Exponents& exps, double coeff);

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(double s) const;

    /// Partial derivative with respect to variable k.
    Polynomial partial(int k) const;

    double evaluate(std::span<const double> z) const;

    /// Natural interval extension: each term is evaluated with relaxed
    /// interval powers and the terms are summed as intervals.
    Interval evaluate(std::span<const Interval> z) const;

    /// Human-readable form, e.g. "-1*z1^1*z2^1 + 0.5*z1^2".
    std::string str() const;

    bool operator==(const Polynomial&) const = default;

  private:
    void check_same_vars(const Polynomial& other) const;

    int n_vars_;
    std::map<Exponents, double> terms_;
};

inline Polynomial operator*(double s, const Polynomial& p) { return p * s; }

}  // namespace cfreach
