#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "trinom/poly.hpp"

using trinom::divrem;
using trinom::inflate;
using trinom::Int;
using trinom::is_palindromic;
using trinom::parse_poly;
using trinom::Poly;
using trinom::to_string;

namespace {

// Degree <= max_deg, coefficients in [-9, 9]. May produce the zero polynomial.
Poly random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::vector<Int> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (Int& v : c) v = coeff(rng);
    return Poly(std::move(c));
}

// Same, but with a leading coefficient forced to +1 or -1.
Poly random_unit_lead_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::vector<Int> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (Int& v : c) v = coeff(rng);
    c.back() = rng() % 2 == 0 ? 1 : -1;
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("construction normalizes trailing zeros") {
    CHECK(Poly({1, -3, 1}).coeffs() == std::vector<Int>{1, -3, 1});
    CHECK(Poly({0, 0}).is_zero());
    CHECK(Poly({0, 0}) == Poly{});
    CHECK(Poly({5}).coeffs() == std::vector<Int>{5});
    CHECK(Poly({5}).degree() == std::size_t{0});
    CHECK(Poly({1, 2, 0, 0}) == Poly({1, 2}));
    CHECK_FALSE(Poly{}.degree().has_value());
}

TEST_CASE("addition") {
    CHECK(Poly({1, 1}) + Poly({-1, 1}) == Poly({0, 2}));  // (x+1) + (x-1) = 2x
    CHECK(Poly({1, -3, 1}) + Poly{} == Poly({1, -3, 1}));
    CHECK(Poly({1, -3, 1}) + Poly({0, 3}) == Poly({1, 0, 1}));
    // cancellation drops the degree
    CHECK(Poly({0, 0, 1}) + Poly({0, 0, -1}) == Poly{});
}

TEST_CASE("multiplication reproduces the worked factorization") {
    const Poly quad({1, -3, 1});
    const Poly cof({1, 3, 8, 21, 55, 21, 8, 3, 1});
    std::vector<Int> trinomial(11);
    trinomial[0] = 1;
    trinomial[5] = -123;
    trinomial[10] = 1;
    CHECK(quad * cof == Poly(trinomial));
}

TEST_CASE("multiplication basics") {
    CHECK(Poly({1, 1}) * Poly({-1, 1}) == Poly({-1, 0, 1}));
    // hand-expanded: (x^2-3x+1)(x^4+3x^3+8x^2+3x+1) = x^6 - 18x^3 + 1
    CHECK(Poly({1, -3, 1}) * Poly({1, 3, 8, 3, 1}) == Poly({1, 0, 0, -18, 0, 0, 1}));
    CHECK((Poly({1, 2}) * Poly{}).is_zero());
}

TEST_CASE("division: degree-10 family trinomial by its quadratic factor") {
    std::vector<Int> t(11);
    t[0] = 1;
    t[5] = -123;
    t[10] = 1;
    auto [q, r] = divrem(Poly(t), Poly({1, -3, 1}));
    CHECK(q == Poly({1, 3, 8, 21, 55, 21, 8, 3, 1}));
    CHECK(r.is_zero());
}

TEST_CASE("division basics") {
    auto [q1, r1] = divrem(Poly({-1, 0, 1}), Poly({1, 1}));
    CHECK(q1 == Poly({-1, 1}));
    CHECK(r1.is_zero());

    // hand division: x^2+1 = (x+1)(x-1) + 2
    auto [q2, r2] = divrem(Poly({1, 0, 1}), Poly({1, 1}));
    CHECK(q2 == Poly({-1, 1}));
    CHECK(r2 == Poly({2}));

    // divisor of larger degree: quotient zero
    auto [q3, r3] = divrem(Poly({7}), Poly({1, 1}));
    CHECK(q3.is_zero());
    CHECK(r3 == Poly({7}));

    // negative unit leading coefficient
    auto [q4, r4] = divrem(Poly({-1, 0, 1}), Poly({1, -1}));
    CHECK(q4 * Poly({1, -1}) + r4 == Poly({-1, 0, 1}));
}

TEST_CASE("division rejects unsupported divisors") {
    CHECK_THROWS_AS(divrem(Poly({1, 1}), Poly{}), std::invalid_argument);
    CHECK_THROWS_AS(divrem(Poly({1, 1}), Poly({1, 2})), std::invalid_argument);
}

TEST_CASE("evaluation") {
    CHECK(Poly({1, -3, 1})(3) == 1);
    CHECK(Poly{}(12345) == 0);
    std::vector<Int> t(11);
    t[0] = 1;
    t[5] = -123;
    t[10] = 1;
    CHECK(Poly(t)(1) == -121);
}

TEST_CASE("palindromic predicate") {
    CHECK(is_palindromic(Poly({1, 3, 8, 21, 55, 21, 8, 3, 1})));
    CHECK(is_palindromic(Poly({1, -3, 1})));
    CHECK_FALSE(is_palindromic(Poly({0, 1, 1})));  // x^2 + x
    CHECK(is_palindromic(Poly{}));
    CHECK(is_palindromic(Poly({4})));
}

TEST_CASE("inflation") {
    CHECK(inflate(Poly({1, -3, 1}), 2) == Poly({1, 0, -3, 0, 1}));
    const Poly p({3, 1, 4, 1, 5});
    CHECK(inflate(p, 1) == p);
    CHECK(inflate(Poly({1, 0, 0, -18, 0, 0, 1}), 2) ==
          parse_poly("1,0,0,0,0,0,-18,0,0,0,0,0,1"));
    CHECK(inflate(Poly{}, 3).is_zero());
    CHECK_THROWS_AS(inflate(p, 0), std::invalid_argument);
}

TEST_CASE("text encoding round-trips") {
    CHECK(to_string(Poly({1, -3, 1})) == "1,-3,1");
    CHECK(to_string(Poly{}) == "0");
    CHECK(parse_poly("1,-3,1") == Poly({1, -3, 1}));
    CHECK(parse_poly("0") == Poly{});
    CHECK(parse_poly("1, -3,\t1") == Poly({1, -3, 1}));
    CHECK(parse_poly("+5") == Poly({5}));
    CHECK(parse_poly("0,0") == Poly{});
    CHECK(parse_poly("12345678901234567890123456789").coeff(0) ==
          Int("12345678901234567890123456789"));

    CHECK_THROWS_AS(parse_poly(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("1,2,"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("1 2"), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 1000; ++trial) {
        const Poly a = random_poly(rng, 4);
        const Poly b = random_poly(rng, 4);
        const Poly c = random_poly(rng, 4);
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("division identity on random inputs") {
    std::mt19937_64 rng(20240812);
    for (int trial = 0; trial < 500; ++trial) {
        const Poly n = random_poly(rng, 8);
        const Poly d = random_unit_lead_poly(rng, 4);
        auto [q, r] = divrem(n, d);
        REQUIRE(q * d + r == n);
        if (!r.is_zero()) REQUIRE(*r.degree() < *d.degree());
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(20240813);
    std::uniform_int_distribution<int> point(-50, 50);
    for (int trial = 0; trial < 300; ++trial) {
        const Poly a = random_poly(rng, 5);
        const Poly b = random_poly(rng, 5);
        const Int v = point(rng);
        REQUIRE((a * b)(v) == a(v) * b(v));
        REQUIRE((a + b)(v) == a(v) + b(v));
    }
}

TEST_CASE("inflation commutes with multiplication") {
    std::mt19937_64 rng(20240814);
    for (int trial = 0; trial < 300; ++trial) {
        const Poly a = random_poly(rng, 4);
        const Poly b = random_poly(rng, 4);
        const std::uint64_t t = 1 + rng() % 4;
        REQUIRE(inflate(a * b, t) == inflate(a, t) * inflate(b, t));
    }
}

TEST_CASE("normalization and encoding are idempotent on random values") {
    std::mt19937_64 rng(20240815);
    for (int trial = 0; trial < 300; ++trial) {
        const Poly p = random_poly(rng, 6);
        REQUIRE(Poly(p.coeffs()) == p);
        REQUIRE(parse_poly(to_string(p)) == p);
        REQUIRE(to_string(parse_poly(to_string(p))) == to_string(p));
    }
}
