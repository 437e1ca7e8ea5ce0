#include <doctest.h>

#include <random>

#include "momentforge/errors.hpp"
#include "momentforge/finfield.hpp"
#include "support.hpp"

using namespace momentforge;

namespace {

MatFq random_matrix(std::mt19937& rng, const FqField& f, unsigned n, unsigned m) {
    std::uniform_int_distribution<unsigned> d(0, f.q() - 1);
    MatFq a(f, n, m);
    for (unsigned r = 0; r < n; ++r)
        for (unsigned c = 0; c < m; ++c) a(r, c) = static_cast<FqField::Elem>(d(rng));
    return a;
}

// Null space of (m - s I) counted by enumerating every vector.
unsigned brute_kernel_dim(const MatFq& m, FqField::Elem s) {
    const FqField& f = m.field();
    const unsigned n = m.rows();
    uint64_t total = 1, count = 0;
    for (unsigned i = 0; i < n; ++i) total *= f.q();
    for (uint64_t idx = 0; idx < total; ++idx) {
        auto v = vector_from_index(f, n, idx);
        auto w = m.apply(v);
        bool zero = true;
        for (unsigned i = 0; i < n; ++i) zero = zero && f.sub(w[i], f.mul(s, v[i])) == 0;
        count += zero;
    }
    unsigned d = 0;
    while (count > 1) count /= f.q(), ++d;
    return d;
}

}  // namespace

TEST_SUITE("finfield") {

TEST_CASE("field axioms hold exhaustively for small fields") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        const FqField& f = FqField::get(q);
        CHECK(f.q() == q);
        for (unsigned a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a) CHECK(f.mul(a, f.inv(a)) == 1);
            for (unsigned b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (unsigned c = 0; c < q; ++c) {
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                }
            }
        }
    }
}

TEST_CASE("Frobenius and the order-2 involution are automorphisms") {
    for (unsigned q : {4u, 9u, 25u, 16u}) {
        const FqField& f = FqField::get(q);
        for (unsigned a = 0; a < q; ++a) {
            CHECK(f.involution(f.involution(a)) == a);
            for (unsigned b = 0; b < q; ++b) {
                CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
                CHECK(f.involution(f.add(a, b)) == f.add(f.involution(a), f.involution(b)));
            }
        }
    }
}

TEST_CASE("primitive element generates the multiplicative group") {
    for (unsigned q : {3u, 4u, 5u, 8u, 9u, 13u, 25u, 27u}) {
        const FqField& f = FqField::get(q);
        std::vector<bool> seen(q, false);
        for (unsigned k = 0; k + 1 < q; ++k) seen[f.exp(k)] = true;
        unsigned hit = 0;
        for (unsigned a = 1; a < q; ++a) hit += seen[a];
        CHECK(hit == q - 1);
    }
    CHECK_THROWS_AS(FqField::get(6), ValidationError);
    CHECK(prime_power(27) == std::pair<unsigned, unsigned>{3, 3});
}

TEST_CASE("determinant multiplicativity, inverse and rank") {
    std::mt19937 rng(99);
    for (unsigned q : {2u, 3u, 4u, 9u}) {
        const FqField& f = FqField::get(q);
        for (int it = 0; it < 40; ++it) {
            unsigned n = 2 + it % 3;
            MatFq a = random_matrix(rng, f, n, n), b = random_matrix(rng, f, n, n);
            CHECK((a * b).det() == f.mul(a.det(), b.det()));
            CHECK((a.det() == 0) == (a.rank() < n));
            if (a.det() != 0) {
                CHECK(a * a.inverse() == MatFq::identity(f, n));
                CHECK(a.inverse() * a == MatFq::identity(f, n));
            } else {
                CHECK_THROWS_AS(a.inverse(), ValidationError);
            }
            MatFq r = random_matrix(rng, f, n, n + 1);
            CHECK(r.rank() <= n);
        }
    }
}

TEST_CASE("kernel_dim examples") {
    const FqField& f9 = FqField::get(9);
    CHECK(kernel_dim(MatFq::identity(f9, 3), 1) == 3);
    for (unsigned s = 2; s < 9; ++s) CHECK(kernel_dim(MatFq::identity(f9, 3), static_cast<FqField::Elem>(s)) == 0);

    // a transvection of SU3(2) fixes a hyperplane
    const EnumeratedGroup& g = mftest::group_fixture("su:3:2");
    const FqField& f4 = g.field();
    bool found = false;
    for (uint32_t i = 1; i < g.order() && !found; ++i) {
        MatFq m = g.element(i);
        MatFq n = m - MatFq::identity(f4, 3);
        if (n.rank() == 1 && (n * n).rank() == 0) {
            found = true;
            CHECK(kernel_dim(m, 1) == 2);
        }
    }
    CHECK(found);
}

TEST_CASE("kernel_dim agrees with null-space enumeration") {
    std::mt19937 rng(1234);
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        const FqField& f = FqField::get(q);
        for (int it = 0; it < 25; ++it) {
            unsigned n = 1 + it % 4;
            MatFq m = random_matrix(rng, f, n, n);
            // scalar matrices exercise the full-kernel case
            if (it % 3 == 0) m = MatFq::scalar(f, n, static_cast<FqField::Elem>(it % q));
            auto s = static_cast<FqField::Elem>(rng() % q);
            CHECK(kernel_dim(m, s) == brute_kernel_dim(m, s));
            CHECK(kernel_dim(m, 0) + m.rank() == n);
        }
    }
}

TEST_CASE("isotropy in the plus-type space F_2^6") {
    const FqField& f2 = FqField::get(2);
    FormSpace s = FormSpace::quadratic_plus(f2, 6);
    std::vector<FqField::Elem> e1{1, 0, 0, 0, 0, 0}, e1f1{1, 0, 0, 1, 0, 0};
    CHECK(is_isotropic(s, e1));
    CHECK_FALSE(is_isotropic(s, e1f1));
    CHECK_THROWS_AS(is_isotropic(s, std::vector<FqField::Elem>(6, 0)), ZeroVector);

    unsigned iso = 0, non = 0;
    for (uint64_t i = 1; i < 64; ++i) {
        auto v = vector_from_index(f2, 6, i);
        // Q = x1 x4 + x2 x5 + x3 x6, written out independently
        unsigned q = (v[0] & v[3]) ^ (v[1] & v[4]) ^ (v[2] & v[5]);
        CHECK(s.quad(v) == q);
        CHECK(is_isotropic(s, v) == (q == 0));
        (q == 0 ? iso : non)++;
    }
    CHECK(iso == 35);
    CHECK(non == 28);
}

TEST_CASE("minus-type F_2^6 splits 27 / 36") {
    const FqField& f2 = FqField::get(2);
    FormSpace s = FormSpace::quadratic_minus(f2, 6);
    unsigned iso = 0;
    for (uint64_t i = 1; i < 64; ++i) iso += is_isotropic(s, vector_from_index(f2, 6, i));
    CHECK(iso == 27);
}

TEST_CASE("pinned forms polarize correctly") {
    const FqField& f2 = FqField::get(2);
    for (FormSpace s : {FormSpace::quadratic_plus(f2, 6), FormSpace::quadratic_minus(f2, 6)}) {
        for (uint64_t i = 0; i < 64; ++i)
            for (uint64_t j = 0; j < 64; j += 5) {
                auto x = vector_from_index(f2, 6, i), y = vector_from_index(f2, 6, j);
                std::vector<FqField::Elem> xy(6);
                for (unsigned k = 0; k < 6; ++k) xy[k] = f2.add(x[k], y[k]);
                CHECK(f2.sub(f2.sub(s.quad(xy), s.quad(x)), s.quad(y)) == s.form(x, y));
            }
    }
    const FqField& f5 = FqField::get(5);
    FormSpace sp = FormSpace::symplectic(f5, 4);
    for (uint64_t i = 0; i < 625; i += 7) {
        auto x = vector_from_index(f5, 4, i);
        CHECK(sp.form(x, x) == 0);
        for (uint64_t j = 0; j < 625; j += 31) {
            auto y = vector_from_index(f5, 4, j);
            CHECK(sp.form(x, y) == f5.neg(sp.form(y, x)));
        }
    }
    const FqField& f4 = FqField::get(4);
    FormSpace h = FormSpace::hermitian(f4, 3);
    for (uint64_t i = 0; i < 64; i += 3)
        for (uint64_t j = 0; j < 64; j += 5) {
            auto x = vector_from_index(f4, 3, i), y = vector_from_index(f4, 3, j);
            CHECK(h.form(x, y) == f4.involution(h.form(y, x)));
        }
}

}  // TEST_SUITE
