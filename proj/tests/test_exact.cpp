#include <doctest.h>

#include <cmath>
#include <random>

#include "momentforge/cyclo.hpp"
#include "momentforge/errors.hpp"
#include "momentforge/rational.hpp"
#include "support.hpp"

using namespace momentforge;

namespace {

// Independent oracle: multiply integer polynomials in z and reduce modulo
// Phi_8 = z^4 + 1 by hand.
std::vector<long> mul_mod_phi8(std::vector<long> a, std::vector<long> b) {
    std::vector<long> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
    for (std::size_t d = prod.size(); d-- > 4;) {
        prod[d - 4] -= prod[d];  // z^4 = -1
        prod[d] = 0;
    }
    prod.resize(4);
    return prod;
}

Cyclo from_coeffs(unsigned n, const std::vector<long>& c) {
    std::vector<std::pair<long, long>> t;
    for (std::size_t i = 0; i < c.size(); ++i) t.emplace_back(static_cast<long>(i), c[i]);
    return Cyclo::from_powers(n, t);
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("rationals are kept in lowest terms") {
    Rational r = parse_rational("6/-4");
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(to_string(r) == "-3/2");
    CHECK(to_string(parse_rational("10/5")) == "2");
    CHECK(factorial(6) == 720);
    CHECK(double_factorial(7) == 105);
    CHECK(double_factorial(-1) == 1);
    CHECK(ipow(Integer(3), 5) == 243);
}

TEST_CASE("cyclo_mul examples") {
    CHECK(cyclo_mul(Cyclo::zeta(5), Cyclo::zeta(5, 4)) == Cyclo(1));
    CHECK(cyclo_mul(Cyclo::zeta(3) + Cyclo::zeta(3, 2), Cyclo(1)) == Cyclo(-1));
    Cyclo lhs = cyclo_mul(Cyclo(1) + Cyclo::zeta(8), Cyclo(1) + Cyclo::zeta(8, 7));
    CHECK(lhs == Cyclo(2) + Cyclo::zeta(8) + Cyclo::zeta(8, 7));
    // polynomial oracle: (1+z)(1+z^7) mod z^4+1, with z^7 = -z^3
    CHECK(lhs == from_coeffs(8, mul_mod_phi8({1, 1}, {1, 0, 0, -1})));
}

TEST_CASE("products agree with the polynomial oracle modulo Phi_8") {
    std::mt19937 rng(8);
    std::uniform_int_distribution<long> c(-5, 5);
    for (int it = 0; it < 200; ++it) {
        std::vector<long> a(4), b(4);
        for (auto& x : a) x = c(rng);
        for (auto& x : b) x = c(rng);
        CHECK(from_coeffs(8, a) * from_coeffs(8, b) == from_coeffs(8, mul_mod_phi8(a, b)));
    }
}

TEST_CASE("abs_square examples") {
    CHECK(abs_square(Cyclo::zeta(7, 3)) == Cyclo(1));
    CHECK(abs_square(Cyclo(2) + Cyclo(3) * Cyclo::zeta(4)) == Cyclo(13));
    Cyclo z = abs_square(Cyclo::zeta(5) + Cyclo::zeta(5, 4));
    CHECK(z.conj() == z);
    CHECK(std::abs(z.numeric().real() - 0.3819660112501051) < 1e-12);
    CHECK(std::abs(z.numeric().imag()) < 1e-12);
    // (z + z^4)^2 = z^2 + 2 + z^3
    CHECK(z == Cyclo(2) + Cyclo::zeta(5, 2) + Cyclo::zeta(5, 3));
}

TEST_CASE("to_rational_integer") {
    CHECK(to_rational_integer(Cyclo(1) + Cyclo::zeta(3) + Cyclo::zeta(3, 2)) == 0);
    CHECK(to_rational_integer(Cyclo(Rational(5, 1))) == 5);
    CHECK_THROWS_AS(to_rational_integer(Cyclo::zeta(5)), NotRationalInteger);
    CHECK_THROWS_AS(to_rational_integer(Cyclo(Rational(1, 2))), NotRationalInteger);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(20240601);
    for (unsigned n : {3u, 4u, 5u, 7u, 8u, 12u, 15u, 20u}) {
        for (int it = 0; it < 25; ++it) {
            Cyclo a = mftest::random_cyclo(rng, n), b = mftest::random_cyclo(rng, n), c = mftest::random_cyclo(rng, n);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a - a == Cyclo(0));
            if (!a.is_zero()) CHECK(a * a.inverse() == Cyclo(1));
        }
    }
}

TEST_CASE("mixed conductors lift to the lcm") {
    std::mt19937 rng(7);
    for (int it = 0; it < 30; ++it) {
        Cyclo a = mftest::random_cyclo(rng, 3), b = mftest::random_cyclo(rng, 4);
        Cyclo p = a * b;
        CHECK(p.lift(12) == a.lift(12) * b.lift(12));
        CHECK(std::abs(p.numeric() - a.numeric() * b.numeric()) < 1e-9);
        // embedding is injective and structure preserving
        CHECK(a.lift(12) + b.lift(12) == a + b);
        CHECK((a.lift(12) == b.lift(12)) == (a == b));
    }
    CHECK(Cyclo::zeta(12, 4) == Cyclo::zeta(3));
    CHECK(Cyclo::zeta(12, 3) == Cyclo::zeta(4));
    CHECK(Cyclo::zeta(10, 5) == Cyclo(-1));
}

TEST_CASE("conj and galois are ring automorphisms") {
    std::mt19937 rng(11);
    for (unsigned n : {5u, 8u, 12u, 20u}) {
        for (int it = 0; it < 20; ++it) {
            Cyclo a = mftest::random_cyclo(rng, n), b = mftest::random_cyclo(rng, n);
            CHECK(a.conj().conj() == a);
            CHECK((a * b).conj() == a.conj() * b.conj());
            CHECK((a + b).conj() == a.conj() + b.conj());
            CHECK(a.galois(n - 1) == a.conj());
            for (long t = 2; t < static_cast<long>(n); ++t) {
                if (gcd_u(static_cast<unsigned>(t), n) != 1) continue;
                CHECK((a * b).galois(t) == a.galois(t) * b.galois(t));
            }
        }
    }
}

TEST_CASE("abs_square is real, nonnegative and zero only at zero") {
    std::mt19937 rng(3);
    for (unsigned n : {3u, 5u, 8u, 9u, 24u}) {
        for (int it = 0; it < 20; ++it) {
            Cyclo a = mftest::random_cyclo(rng, n, 4, 3);
            Cyclo s = abs_square(a);
            CHECK(s.conj() == s);
            CHECK(s.numeric().real() >= -numeric_error_bound(s));
            CHECK(s.is_zero() == a.is_zero());
        }
    }
    CHECK(abs_square(Cyclo(0)).is_zero());
}

TEST_CASE("canonical form is idempotent and determines equality") {
    std::mt19937 rng(5);
    for (unsigned n : {6u, 9u, 10u, 15u, 16u}) {
        for (int it = 0; it < 20; ++it) {
            Cyclo a = mftest::random_cyclo(rng, n, 5);
            Cyclo again(a.conductor(), a.coeffs());
            CHECK(again == a);
            CHECK(again.coeffs() == a.coeffs());
            CHECK(a.minimized() == a);
            CHECK(a.minimized().minimized().coeffs() == a.minimized().coeffs());
            CHECK(a.hash() == again.hash());
        }
    }
}

TEST_CASE("text grammar round-trips") {
    std::mt19937 rng(13);
    for (unsigned n : {1u, 3u, 5u, 8u, 20u}) {
        for (int it = 0; it < 20; ++it) {
            Cyclo a = mftest::random_cyclo(rng, n) * Cyclo(Rational(1, 1 + it % 3));
            CHECK(Cyclo::parse(a.str()) == a);
        }
    }
    CHECK(Cyclo::parse("3/2") == Cyclo(Rational(3, 2)));
    CHECK(Cyclo::parse("z(5)^2 + z(5)^3") == Cyclo::zeta(5, 2) + Cyclo::zeta(5, 3));
    CHECK(Cyclo::parse(" -2*z(8)^3 - 1 ") == Cyclo(-2) * Cyclo::zeta(8, 3) - Cyclo(1));
    CHECK_THROWS_AS(Cyclo::parse("z(5"), ParseError);
    CHECK_THROWS_AS(Cyclo::parse("1 +"), ParseError);
}

TEST_CASE("conductor cap guards large conductors") {
    CHECK(conductor_cap() == 2520);
    CHECK_THROWS_AS(Cyclo::zeta(2521), CapExceeded);
}

}  // TEST_SUITE
