#ifndef TRINOM_POLY_HPP
#define TRINOM_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trinom/integer.hpp"

namespace trinom {

/// Dense univariate polynomial over arbitrary-precision signed integers.
///
/// Coefficients are stored in ascending order: index j holds the coefficient
/// of x^j. The representation is normalized: the last stored coefficient is
/// nonzero, and the zero polynomial stores an empty sequence and has no
/// degree. Values are immutable after construction.
class Poly {
public:
    /// The zero polynomial.
    Poly() = default;

    /// Builds the polynomial with the given ascending coefficients;
    /// trailing zeros are stripped.
    explicit Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

    Poly(std::initializer_list<Int> coeffs) : c_(coeffs) { normalize(); }

    bool is_zero() const noexcept { return c_.empty(); }

    /// Degree, or nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }

    const std::vector<Int>& coeffs() const noexcept { return c_; }

    /// Coefficient of x^j; zero beyond the stored range.
    const Int& coeff(std::size_t j) const noexcept {
        static const Int zero{};
        return j < c_.size() ? c_[j] : zero;
    }

    /// Exact evaluation at v by Horner's rule.
    Int operator()(const Int& v) const {
        Int acc = 0;
        for (std::size_t j = c_.size(); j-- > 0;) {
            acc *= v;
            acc += c_[j];
        }
        return acc;
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Int> out(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = a.coeff(j) + b.coeff(j);
        return Poly(std::move(out));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Int> out(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = a.coeff(j) - b.coeff(j);
        return Poly(std::move(out));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly{};
        std::vector<Int> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

struct DivRem {
    Poly quot;
    Poly rem;
};

/// Exact long division n = quot * d + rem with deg(rem) < deg(d).
///
/// The divisor must be nonzero with leading coefficient +1 or -1, which keeps
/// every intermediate coefficient integral. Anything else is rejected.
inline DivRem divrem(const Poly& n, const Poly& d) {
    if (d.is_zero()) throw std::invalid_argument("divrem: division by the zero polynomial");
    const std::vector<Int>& dc = d.coeffs();
    const Int& lead = dc.back();
    if (lead != 1 && lead != -1)
        throw std::invalid_argument("divrem: divisor leading coefficient must be +1 or -1");
    if (n.coeffs().size() < dc.size()) return {Poly{}, n};

    std::vector<Int> r = n.coeffs();
    const std::size_t dd = dc.size() - 1;
    std::vector<Int> q(r.size() - dd);
    for (std::size_t i = r.size(); i-- > dd;) {
        if (r[i] == 0) continue;
        Int f = lead == 1 ? r[i] : Int(-r[i]);
        for (std::size_t j = 0; j <= dd; ++j) r[i - dd + j] -= f * dc[j];
        q[i - dd] = std::move(f);
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

/// True iff coefficient j equals coefficient deg-j for all j.
/// The zero polynomial and constants are palindromic.
inline bool is_palindromic(const Poly& p) {
    const std::vector<Int>& c = p.coeffs();
    for (std::size_t j = 0, k = c.size(); j + 1 < k; ++j, --k)
        if (c[j] != c[k - 1]) return false;
    return true;
}

/// Substitutes x -> x^t: the coefficient of x^j moves to x^(t*j). Requires t >= 1.
inline Poly inflate(const Poly& p, std::uint64_t t) {
    if (t == 0) throw std::invalid_argument("inflate: exponent multiplier must be at least 1");
    if (p.is_zero() || t == 1) return p;
    const std::vector<Int>& c = p.coeffs();
    std::vector<Int> out(t * (c.size() - 1) + 1);
    for (std::size_t j = 0; j < c.size(); ++j) out[t * j] = c[j];
    return Poly(std::move(out));
}

/// Serializes as the ascending comma-separated decimal coefficient list,
/// e.g. "1,-3,1" for x^2 - 3x + 1. The zero polynomial serializes as "0".
inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const std::vector<Int>& c = p.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (j != 0) out += ',';
        out += c[j].str();
    }
    return out;
}

namespace detail {

/// Decimal integer with optional leading '+'/'-' and optional leading blanks.
inline Int parse_coeff_token(std::string_view tok) {
    std::size_t pos = 0;
    while (pos < tok.size() && (tok[pos] == ' ' || tok[pos] == '\t')) ++pos;
    bool negative = false;
    if (pos < tok.size() && (tok[pos] == '+' || tok[pos] == '-')) {
        negative = tok[pos] == '-';
        ++pos;
    }
    if (pos == tok.size()) throw std::invalid_argument("polynomial parse: empty coefficient");
    Int value = 0;
    for (; pos < tok.size(); ++pos) {
        char ch = tok[pos];
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("polynomial parse: invalid character in coefficient");
        value *= 10;
        value += ch - '0';
    }
    return negative ? Int(-value) : value;
}

}  // namespace detail

/// Parses the comma-separated coefficient encoding produced by to_string.
/// Whitespace after commas is accepted. parse(to_string(p)) == p for every p,
/// and to_string(parse(s)) == s for every canonical s.
inline Poly parse_poly(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("polynomial parse: empty input");
    std::vector<Int> coeffs;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view tok =
            comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
        coeffs.push_back(detail::parse_coeff_token(tok));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Poly(std::move(coeffs));
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace trinom

#endif  // TRINOM_POLY_HPP
