#ifndef TRINOM_TRINOMIAL_HPP
#define TRINOM_TRINOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trinom/integer.hpp"
#include "trinom/lucas.hpp"
#include "trinom/poly.hpp"

namespace trinom {

// The reducible trinomial family
//
//     x^(2p) - A*x^p + 1 = (x^2 - k*x + 1) * Q(k, p),      p odd,
//
// where Q is palindromic of degree 2p-2 with ascending coefficients
// q_j = a_{j+2} for j <= p-1 (mirrored above), a_i the Lucas-type sequence
// a_1 = 0, a_2 = 1, a_{i+2} = k*a_{i+1} - a_i, and
//
//     A(k, p) = k*a_{p+1} - 2*a_p = a_{p+2} - a_p.
//
// A(k, p) is also available as a closed-form binomial sum in k and as a
// generating-function coefficient (series module); the three routes agree
// exactly and are cross-checked in the tests.

/// A point (p, k) of the family. p must be odd and positive; that is enforced
/// here at the boundary, never coerced. k ranges over all integers.
struct FamilyPoint {
    FamilyPoint(std::int64_t p_in, Int k_in) : p(checked(p_in)), k(std::move(k_in)) {}

    std::uint64_t p;
    Int k;

private:
    static std::uint64_t checked(std::int64_t p) {
        if (p < 1 || p % 2 == 0)
            throw std::invalid_argument("p must be an odd positive integer");
        return static_cast<std::uint64_t>(p);
    }
};

/// x^(2p) - A*x^p + 1 as a dense polynomial.
inline Poly make_trinomial(std::uint64_t p, const Int& A) {
    std::vector<Int> c(2 * p + 1);
    c[0] = 1;
    c[p] = -A;
    c[2 * p] = 1;
    return Poly(std::move(c));
}

/// x^2 - k*x + 1.
inline Poly quadratic_factor(const Int& k) { return Poly{Int(1), -k, Int(1)}; }

/// A(k, p) = k*a_{p+1} - 2*a_p via the Lucas recurrence. The default route:
/// O(p) big-integer steps.
inline Int coeff_A_recurrence(const FamilyPoint& pt) {
    Int a = 0, b = 1;  // (a_1, a_2)
    for (std::uint64_t i = 1; i < pt.p; ++i) {
        Int next = pt.k * b - a;
        a = std::move(b);
        b = std::move(next);
    }
    return pt.k * b - 2 * a;
}

namespace detail {

/// Coefficient of k^(2i+1) in A(k, p): the sign-alternating binomial term
/// (-1)^(i+h) * (p/(2i+1)) * C(i+h, 2i) with h = (p-1)/2. The division by
/// 2i+1 is performed after multiplying p in and is asserted exact; a nonzero
/// remainder would be an implementation bug, not bad input.
inline Int row_coefficient(std::uint64_t p, std::uint64_t i) {
    const std::uint64_t h = (p - 1) / 2;
    Int q, r;
    boost::multiprecision::divide_qr(Int(p) * binomial(i + h, 2 * i), Int(2 * i + 1), q, r);
    if (r != 0) throw std::logic_error("row_coefficient: division by 2i+1 was not exact");
    return (i + h) % 2 == 0 ? q : Int(-q);
}

}  // namespace detail

/// A(k, p) as the closed-form sum over odd powers of k.
inline Int coeff_A_closed(const FamilyPoint& pt) {
    const std::uint64_t h = (pt.p - 1) / 2;
    const Int ksq = pt.k * pt.k;
    Int kpow = pt.k;  // k^(2i+1)
    Int total = 0;
    for (std::uint64_t i = 0; i <= h; ++i) {
        total += detail::row_coefficient(pt.p, i) * kpow;
        kpow *= ksq;
    }
    return total;
}

/// Ascending coefficients of A(·, p) as a polynomial in k. Even positions are
/// zero; position 2i+1 carries the closed-form term.
inline std::vector<Int> row_polynomial(std::int64_t p) {
    if (p < 1 || p % 2 == 0)
        throw std::invalid_argument("row_polynomial: p must be an odd positive integer");
    const std::uint64_t up = static_cast<std::uint64_t>(p);
    const std::uint64_t h = (up - 1) / 2;
    std::vector<Int> out(up + 1);
    for (std::uint64_t i = 0; i <= h; ++i) out[2 * i + 1] = detail::row_coefficient(up, i);
    return out;
}

/// The palindromic cofactor Q(k, p) of degree 2p-2: ascending coefficients
/// q_j = a_{j+2} for 0 <= j <= p-1, mirrored for the upper half.
inline Poly cofactor(const FamilyPoint& pt) {
    const std::vector<Int> a = lucas_prefix(pt.k, pt.p + 1);  // a_1..a_{p+1}
    std::vector<Int> q(2 * pt.p - 1);
    for (std::size_t j = 0; j < pt.p; ++j) q[j] = a[j + 1];
    for (std::size_t j = pt.p; j < q.size(); ++j) q[j] = q[2 * pt.p - 2 - j];
    return Poly(std::move(q));
}

/// A factorization of x^(2p) - A*x^p + 1 together with the result of checking
/// it by exact multiplication. Instances returned by build_certificate always
/// have verified == true; a failed check throws instead.
struct FactorizationCertificate {
    FamilyPoint point;
    Int A;
    Poly quadratic;  // x^2 - k*x + 1
    Poly cofactor;   // palindromic, degree 2p-2
    bool verified = false;
};

inline FactorizationCertificate build_certificate(const FamilyPoint& pt) {
    FactorizationCertificate cert{pt, coeff_A_recurrence(pt), quadratic_factor(pt.k),
                                  trinom::cofactor(pt), false};
    cert.verified = cert.quadratic * cert.cofactor == make_trinomial(pt.p, cert.A);
    if (!cert.verified)
        throw std::logic_error("build_certificate: factor product does not match the trinomial");
    return cert;
}

/// True iff x^2 - k*x + 1 divides x^(2p) - A*x^p + 1 exactly. This goes
/// through polynomial long division only, independent of the Lucas
/// construction, so it doubles as an oracle for it.
inline bool verify_divides(const Int& A, std::int64_t p, const Int& k) {
    FamilyPoint pt(p, k);
    return divrem(make_trinomial(pt.p, A), quadratic_factor(pt.k)).rem.is_zero();
}

/// Inverts A(·, p): returns the unique k >= 0 with A(k, p) = A when one
/// exists, otherwise a negative k via the odd symmetry A(-k, p) = -A(k, p),
/// otherwise nullopt.
///
/// k in {0, 1, 2} is checked directly; beyond that A(·, p) is strictly
/// increasing, so a binary search over [3, 2^(ceil(bitlen(A)/p) + 2)] decides
/// membership. The bound is safe because A(k, p) >= (k-1)^p for k >= 3.
inline std::optional<Int> solve_k(const Int& A, std::int64_t p) {
    if (p < 1 || p % 2 == 0)
        throw std::invalid_argument("solve_k: p must be an odd positive integer");
    const auto value_at = [p](const Int& k) { return coeff_A_recurrence(FamilyPoint(p, k)); };
    for (int small = 0; small <= 2; ++small) {
        Int k(small);
        if (value_at(k) == A) return k;
    }
    if (A > 2) {
        const std::size_t exp =
            (bit_length(A) + static_cast<std::size_t>(p) - 1) / static_cast<std::size_t>(p) + 2;
        Int lo = 3;
        Int hi = Int(1) << exp;
        while (lo <= hi) {
            Int mid = (lo + hi) / 2;
            const Int v = value_at(mid);
            if (v == A) return mid;
            if (v < A)
                lo = mid + 1;
            else
                hi = mid - 1;
        }
    } else if (A < 0) {
        if (std::optional<Int> pos = solve_k(-A, p)) return Int(-*pos);
    }
    return std::nullopt;
}

/// Deterministic trial-division primality check for the exponent parameter
/// (intended range p < 2^20). Annotates table output; composite odd p are
/// never rejected anywhere in the library.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d * d <= n; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

struct TableRow {
    std::uint64_t p;
    Int k;
    Int A;
    bool prime;    // is_prime(p)
    bool checked;  // row re-verified by exact division
};

/// Rows (p, k, A) for every p in p_list and 1 <= k <= k_max, ordered by
/// (p, k) with duplicates removed. A comes from the recurrence route; every
/// verify_every-th row is re-verified by verify_divides (verify_every = 1
/// checks all rows, 0 none). A failed check throws.
inline std::vector<TableRow> scan_table(std::vector<std::int64_t> p_list, const Int& k_max,
                                        std::uint64_t verify_every = 16) {
    if (k_max < 1) throw std::invalid_argument("scan_table: k_max must be at least 1");
    std::sort(p_list.begin(), p_list.end());
    p_list.erase(std::unique(p_list.begin(), p_list.end()), p_list.end());
    std::vector<TableRow> rows;
    std::uint64_t idx = 0;
    for (std::int64_t p : p_list) {
        FamilyPoint probe(p, 0);  // validates p
        const bool prime = is_prime(probe.p);
        for (Int k = 1; k <= k_max; ++k) {
            Int A = coeff_A_recurrence(FamilyPoint(p, k));
            const bool check = verify_every != 0 && idx % verify_every == 0;
            if (check && !verify_divides(A, p, k))
                throw std::logic_error("scan_table: row failed divisibility verification");
            rows.push_back({probe.p, k, std::move(A), prime, check});
            ++idx;
        }
    }
    return rows;
}

}  // namespace trinom

#endif  // TRINOM_TRINOMIAL_HPP
