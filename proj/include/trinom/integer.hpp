#ifndef TRINOM_INTEGER_HPP
#define TRINOM_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>

namespace trinom {

/// Arbitrary-precision signed integer used for every coefficient in the library.
using Int = boost::multiprecision::cpp_int;

/// Number of bits in |v|; 0 for v = 0.
inline std::size_t bit_length(const Int& v) {
    if (v == 0) return 0;
    return static_cast<std::size_t>(boost::multiprecision::msb(boost::multiprecision::abs(v))) + 1;
}

inline Int ipow(Int base, std::uint64_t e) {
    Int r = 1;
    while (e != 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// Exact binomial coefficient C(n, r). The running product stays integral
/// because each partial product is itself a binomial coefficient.
inline Int binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    Int c = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        c *= Int(n - r + i);
        c /= Int(i);
    }
    return c;
}

}  // namespace trinom

#endif  // TRINOM_INTEGER_HPP
