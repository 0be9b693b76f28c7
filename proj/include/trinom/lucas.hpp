#ifndef TRINOM_LUCAS_HPP
#define TRINOM_LUCAS_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trinom/integer.hpp"

namespace trinom {

// The Lucas-type sequence a_1 = 0, a_2 = 1, a_{i+2} = k*a_{i+1} - a_i.
// Indexing is 1-based throughout; i = 0 is rejected.

/// a_i by forward iteration from the seeds. O(i) big-integer steps.
inline Int lucas_term(const Int& k, std::uint64_t i) {
    if (i == 0) throw std::invalid_argument("lucas_term: the sequence is 1-indexed");
    Int a = 0, b = 1;
    for (std::uint64_t step = 1; step < i; ++step) {
        Int next = k * b - a;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

/// a_i by recurrence doubling; exactly equal to lucas_term(k, i).
///
/// Works on the shifted index n = i - 1, so U_0 = 0, U_1 = 1 and a_i = U_{i-1}.
/// The doubling identities (the Q = 1 case of the standard Lucas-sequence ones):
///   U_{2m}   = U_m * (2*U_{m+1} - k*U_m)
///   U_{2m+1} = U_{m+1}^2 - U_m^2
inline Int lucas_term_fast(const Int& k, std::uint64_t i) {
    if (i == 0) throw std::invalid_argument("lucas_term_fast: the sequence is 1-indexed");
    const std::uint64_t n = i - 1;
    Int a = 0, b = 1;  // (U_0, U_1)
    if (n == 0) return a;
    for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
        Int c = a * (2 * b - k * a);
        Int d = b * b - a * a;
        if ((n >> bit) & 1) {
            b = k * d - c;
            a = std::move(d);
        } else {
            a = std::move(c);
            b = std::move(d);
        }
    }
    return a;
}

/// (a_1, ..., a_n) in a single forward pass.
inline std::vector<Int> lucas_prefix(const Int& k, std::size_t n) {
    std::vector<Int> out;
    out.reserve(n);
    Int a = 0, b = 1;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(a);
        Int next = k * b - a;
        a = std::move(b);
        b = std::move(next);
    }
    return out;
}

}  // namespace trinom

#endif  // TRINOM_LUCAS_HPP
