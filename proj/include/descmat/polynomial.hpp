#pragma once

/*
 * Exact integer-coefficient univariate polynomials in t.
 *
 * Canonical form: no trailing zero coefficients; the zero polynomial is
 * the empty coefficient sequence. All arithmetic is exact 64-bit with
 * checked overflow.
 */

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "descmat/checked.hpp"

namespace descmat {

class int_polynomial {
public:
    int_polynomial() = default;

    explicit int_polynomial(std::vector<std::int64_t> coeffs)
        : coeffs_(std::move(coeffs)) {
        normalize();
    }

    int_polynomial(std::initializer_list<std::int64_t> coeffs)
        : coeffs_(coeffs) {
        normalize();
    }

    static int_polynomial constant(std::int64_t c) {
        return int_polynomial{c};
    }

    // t^d with coefficient c
    static int_polynomial monomial(std::int64_t c, int d) {
        if (d < 0) throw std::invalid_argument("monomial: negative degree");
        if (c == 0) return {};
        std::vector<std::int64_t> v(static_cast<std::size_t>(d) + 1, 0);
        v.back() = c;
        return int_polynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    std::int64_t coeff(int d) const {
        if (d < 0 || static_cast<std::size_t>(d) >= coeffs_.size()) return 0;
        return coeffs_[static_cast<std::size_t>(d)];
    }

    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

    bool operator==(const int_polynomial&) const = default;

    int_polynomial operator+(const int_polynomial& o) const {
        std::vector<std::int64_t> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = checked_add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
        return int_polynomial(std::move(r));
    }

    int_polynomial operator-() const {
        std::vector<std::int64_t> r(coeffs_);
        for (auto& c : r) c = checked_neg(c);
        return int_polynomial(std::move(r));
    }

    int_polynomial operator-(const int_polynomial& o) const {
        return *this + (-o);
    }

    // Cauchy product
    int_polynomial operator*(const int_polynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<std::int64_t> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                r[i + j] = checked_add(r[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
        return int_polynomial(std::move(r));
    }

    int_polynomial scaled(std::int64_t c) const {
        if (c == 0) return {};
        std::vector<std::int64_t> r(coeffs_);
        for (auto& x : r) x = checked_mul(x, c);
        return int_polynomial(std::move(r));
    }

    // Compact rendering: "1-2t+t^2", "0" for the zero polynomial.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t d = 0; d < coeffs_.size(); ++d) {
            std::int64_t c = coeffs_[d];
            if (c == 0) continue;
            if (!out.empty())
                out += (c > 0) ? "+" : "-";
            else if (c < 0)
                out += "-";
            std::uint64_t mag = (c < 0)
                ? -static_cast<std::uint64_t>(c)
                : static_cast<std::uint64_t>(c);
            if (mag != 1 || d == 0) out += std::to_string(mag);
            if (d >= 1) out += "t";
            if (d >= 2) out += "^" + std::to_string(d);
        }
        return out;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<std::int64_t> coeffs_;
};

// c * (1 + sign*t)^e, exact
inline int_polynomial binomial_power(std::int64_t c, int sign, int exponent) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("binomial_power: sign must be +1 or -1");
    if (exponent < 0)
        throw std::invalid_argument("binomial_power: negative exponent");
    int_polynomial base{1, sign};
    int_polynomial acc = int_polynomial::constant(1);
    for (int i = 0; i < exponent; ++i) acc = acc * base;
    return acc.scaled(c);
}

} // namespace descmat
