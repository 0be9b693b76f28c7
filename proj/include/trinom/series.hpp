#ifndef TRINOM_SERIES_HPP
#define TRINOM_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <deque>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trinom/integer.hpp"

namespace trinom {

/// Integer power series known up to an explicit truncation order.
///
/// Index n holds the coefficient of z^n; exactly order+1 coefficients are
/// stored and trailing zeros are meaningful (no normalization). The order is
/// never extended silently: operations reject mismatched or insufficient
/// orders instead of re-expanding.
class TruncatedSeries {
public:
    /// The zero series at the given order.
    explicit TruncatedSeries(std::size_t order) : c_(order + 1) {}

    /// Series with the given low-order coefficients, padded with zeros (or
    /// truncated) to exactly order+1 entries.
    TruncatedSeries(std::vector<Int> coeffs, std::size_t order) : c_(std::move(coeffs)) {
        c_.resize(order + 1);
    }

    std::size_t order() const noexcept { return c_.size() - 1; }

    const Int& operator[](std::size_t n) const { return c_.at(n); }
    Int& operator[](std::size_t n) { return c_.at(n); }

    const std::vector<Int>& coeffs() const noexcept { return c_; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Int> c_;
};

/// Product truncated to the common order; the inputs must agree on it.
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series_mul: truncation orders do not match");
    TruncatedSeries out(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n)
        for (std::size_t i = 0; i <= n; ++i) out[n] += a[i] * b[n - i];
    return out;
}

/// Multiplicative inverse up to the truncation order. The constant term must
/// be +1 or -1 so the inverse stays integral.
inline TruncatedSeries series_inverse(const TruncatedSeries& a) {
    const Int& a0 = a[0];
    if (a0 != 1 && a0 != -1)
        throw std::invalid_argument("series_inverse: constant term must be +1 or -1");
    TruncatedSeries b(a.order());
    b[0] = a0;
    for (std::size_t n = 1; n <= a.order(); ++n) {
        Int s = 0;
        for (std::size_t i = 1; i <= n; ++i) s += a[i] * b[n - i];
        b[n] = -a0 * s;
    }
    return b;
}

/// Coefficient of z^p in (1 - z^2)/(1 - k*z + z^2), computed by series
/// arithmetic at order p. Requires odd p >= 1.
inline Int gf_coefficient_A(const Int& k, std::int64_t p) {
    if (p < 1 || p % 2 == 0)
        throw std::invalid_argument("gf_coefficient_A: p must be an odd positive integer");
    const std::size_t order = static_cast<std::size_t>(p);
    TruncatedSeries numer({1, 0, -1}, order);
    TruncatedSeries denom({1, -k, 1}, order);
    return series_mul(numer, series_inverse(denom))[order];
}

/// The Riordan array R(g, f) with g = (1-z^2)/(1+z^2) and f = z/(1+z^2),
/// carried to a fixed truncation order.
///
/// entry(n, j) is d_{n,j} = [z^n] g*f^j. Row p read against ascending powers
/// of k evaluates the coefficient polynomial: sum_j d_{p,j}*k^j equals
/// gf_coefficient_A(k, p) for odd p.
///
/// Powers of f are memoized; the cache is the only mutable state and is
/// guarded for concurrent use (elements are immutable once created).
class RiordanSpec {
public:
    explicit RiordanSpec(std::size_t order) : g_(order), f_(order) {
        if (order < 1) throw std::invalid_argument("RiordanSpec: order must be at least 1");
        TruncatedSeries inv = series_inverse(TruncatedSeries({1, 0, 1}, order));
        g_ = series_mul(TruncatedSeries({1, 0, -1}, order), inv);
        f_ = series_mul(TruncatedSeries({0, 1}, order), inv);
        TruncatedSeries one(order);
        one[0] = 1;
        fpow_.push_back(std::move(one));
    }

    std::size_t order() const noexcept { return g_.order(); }
    const TruncatedSeries& g() const noexcept { return g_; }
    const TruncatedSeries& f() const noexcept { return f_; }

    /// d_{n,j}. Rejects rows beyond the truncation order.
    Int entry(std::size_t n, std::size_t j) const {
        if (n > order())
            throw std::invalid_argument("RiordanSpec::entry: row exceeds the truncation order");
        if (j > n) return 0;  // f has valuation 1, so f^j starts at z^j
        const TruncatedSeries& fj = f_power(j);
        Int s = 0;
        for (std::size_t i = 0; i <= n; ++i) s += g_[i] * fj[n - i];
        return s;
    }

    /// Ascending coefficients (d_{p,0}, ..., d_{p,p}) of the row polynomial
    /// in k for odd p. Requires order() >= p.
    std::vector<Int> row_poly(std::int64_t p) const {
        if (p < 1 || p % 2 == 0)
            throw std::invalid_argument("RiordanSpec::row_poly: p must be an odd positive integer");
        const std::size_t row = static_cast<std::size_t>(p);
        if (row > order())
            throw std::invalid_argument("RiordanSpec::row_poly: row exceeds the truncation order");
        std::vector<Int> out(row + 1);
        for (std::size_t j = 0; j <= row; ++j) out[j] = entry(row, j);
        return out;
    }

private:
    // Returns f^j; stable reference, elements never change after insertion.
    const TruncatedSeries& f_power(std::size_t j) const {
        std::scoped_lock lock(mu_);
        while (fpow_.size() <= j) fpow_.push_back(series_mul(fpow_.back(), f_));
        return fpow_[j];
    }

    TruncatedSeries g_;
    TruncatedSeries f_;
    mutable std::deque<TruncatedSeries> fpow_;
    mutable std::mutex mu_;
};

inline std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
    os << '[';
    for (std::size_t n = 0; n <= s.order(); ++n) {
        if (n != 0) os << ',';
        os << s[n].str();
    }
    return os << ']';
}

}  // namespace trinom

#endif  // TRINOM_SERIES_HPP
