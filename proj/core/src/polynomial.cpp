#include "cfreach/polynomial.hpp"

#include <cstddef>
#include <sstream>
#include <stdexcept>

namespace cfreach {

Polynomial::Polynomial(int n_vars) : n_vars_(n_vars) {
    if (n_vars < 0) throw std::invalid_argument("polynomial needs n_vars >= 0");
}

Polynomial Polynomial::constant(int n_vars, double value) {
    Polynomial p(n_vars);
    p.add_term(Exponents(static_cast<std::size_t>(n_vars), 0u), value);
    return p;
}

Polynomial Polynomial::variable(int n_vars, int k) {
    if (k < 0 || k >= n_vars) throw std::invalid_argument("variable index out of range");
    Polynomial p(n_vars);
    Exponents e(static_cast<std::size_t>(n_vars), 0u);
    e[static_cast<std::size_t>(k)] = 1u;
    p.add_term(e, 1.0);
    return p;
}

void Polynomial::add_term(const Exponents& exps, double coeff) {
    if (exps.size() != static_cast<std::size_t>(n_vars_))
        throw std::invalid_argument("exponent vector length does not match n_vars");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (coeff != 0.0) terms_.emplace(exps, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0.0) terms_.erase(it);
}

void Polynomial::check_same_vars(const Polynomial& other) const {
    if (n_vars_ != other.n_vars_)
        throw std::invalid_argument("polynomial variable counts differ");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    check_same_vars(other);
    Polynomial out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(n_vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_same_vars(other);
    Polynomial out(n_vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            Exponents e(ea);
            for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::operator*(double s) const {
    Polynomial out(n_vars_);
    if (s == 0.0) return out;
    for (const auto& [e, c] : terms_) out.add_term(e, c * s);
    return out;
}

Polynomial Polynomial::partial(int k) const {
    if (k < 0 || k >= n_vars_) throw std::invalid_argument("partial index out of range");
    const auto uk = static_cast<std::size_t>(k);
    Polynomial out(n_vars_);
    for (const auto& [e, c] : terms_) {
        if (e[uk] == 0u) continue;
        Exponents d(e);
        d[uk] -= 1u;
        out.add_term(d, c * static_cast<double>(e[uk]));
    }
    return out;
}

double Polynomial::evaluate(std::span<const double> z) const {
    if (z.size() != static_cast<std::size_t>(n_vars_))
        throw std::invalid_argument("evaluation point length does not match n_vars");
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = c;
        for (std::size_t k = 0; k < e.size(); ++k)
            for (unsigned p = 0; p < e[k]; ++p) term *= z[k];
        sum += term;
    }
    return sum;
}

Interval Polynomial::evaluate(std::span<const Interval> z) const {
    if (z.size() != static_cast<std::size_t>(n_vars_))
        throw std::invalid_argument("evaluation box length does not match n_vars");
    Interval sum(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        Interval term(c, c);
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] > 0u) term = term * pow(z[k], e[k]);
        sum = sum + term;
    }
    return sum;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << c;
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] > 0u) out << "*z" << (k + 1) << "^" << e[k];
    }
    return out.str();
}

}  // namespace cfreach
