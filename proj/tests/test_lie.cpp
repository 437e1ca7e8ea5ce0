#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "momentforge/errors.hpp"
#include "momentforge/lie.hpp"

using namespace momentforge;

namespace {

long dot(const Weight& a, const Weight& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Number of semistandard tableaux of shape lambda with content mu (a Kostka
// number), by filling the entries 1, 2, ... as horizontal strips.
Integer kostka(const std::vector<long>& lambda, const std::vector<long>& mu) {
    std::function<Integer(std::vector<long>, std::size_t)> rec = [&](std::vector<long> filled, std::size_t i) -> Integer {
        if (i == mu.size()) return filled == lambda ? 1 : 0;
        // add mu[i] boxes as a horizontal strip: new row lengths r with
        // filled[j] <= r[j] <= min(lambda[j], filled[j-1]) and sum increase = mu[i]
        Integer total = 0;
        std::vector<long> next(filled);
        std::function<void(std::size_t, long)> place = [&](std::size_t row, long left) {
            if (row == lambda.size()) {
                if (left == 0) total += rec(next, i + 1);
                return;
            }
            long hi = std::min(lambda[row], row == 0 ? lambda[0] : filled[row - 1]);
            for (long r = filled[row]; r <= hi && r - filled[row] <= left; ++r) {
                next[row] = r;
                place(row + 1, left - (r - filled[row]));
            }
            next[row] = filled[row];
        };
        place(0, mu[i]);
        return total;
    };
    return rec(std::vector<long>(lambda.size(), 0), 0);
}

// Kostant partition function over the positive roots of B2 or C2, with the
// multiplicity m_lambda(mu) = sum_w sgn(w) P(w(lambda+rho) - (mu+rho)).
struct RankTwo {
    std::vector<Weight> roots;
    Weight rho2;  // 2 rho
    std::map<Weight, Integer> memo;

    Integer partitions(const Weight& v, std::size_t from) {
        if (v[0] == 0 && v[1] == 0) return 1;
        if (from == roots.size()) return 0;
        if (v[0] + v[1] < 0 || v[0] < 0) return 0;  // every positive root has e1 >= 0, e1+e2 >= 0
        Weight key{v[0], v[1], static_cast<long>(from)};
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Integer total = 0;
        Weight w = v;
        while (true) {
            total += partitions(w, from + 1);
            w[0] -= roots[from][0];
            w[1] -= roots[from][1];
            if (w[0] + w[1] < 0 || w[0] < 0) break;
        }
        return memo[key] = total;
    }

    Integer mult(const Weight& lambda, const Weight& mu) {
        Integer total = 0;
        Weight a{2 * lambda[0] + rho2[0], 2 * lambda[1] + rho2[1]};
        for (int perm = 0; perm < 2; ++perm)
            for (int s0 : {1, -1})
                for (int s1 : {1, -1}) {
                    Weight w = perm ? Weight{s0 * a[1], s1 * a[0]} : Weight{s0 * a[0], s1 * a[1]};
                    int sign = (perm ? -1 : 1) * s0 * s1;
                    Weight d{w[0] - 2 * mu[0] - rho2[0], w[1] - 2 * mu[1] - rho2[1]};
                    if (d[0] % 2 || d[1] % 2) continue;
                    total += sign * partitions({d[0] / 2, d[1] / 2}, 0);
                }
        return total;
    }
};

std::vector<long> pad(std::vector<long> w, std::size_t n) {
    w.resize(n, 0);
    return w;
}

}  // namespace

TEST_SUITE("lie") {

TEST_CASE("weyl_dim examples") {
    CHECK(weyl_dim(RootSystem(LieType::A, 3), {2, 0, 0, -2}) == 84);
    CHECK(weyl_dim(RootSystem(LieType::C, 3), fundamental_weight(RootSystem(LieType::C, 3), 1)) == 6);
    // S^3 of the 5-dim module minus its trace part: 35 - 5
    CHECK(weyl_dim(RootSystem(LieType::B, 2), {3, 0}) == 35 - 5);
    CHECK_THROWS_AS(weyl_dim(RootSystem(LieType::A, 3), {0, 1, 0, 0}), NonDominantWeight);
    CHECK_THROWS_AS(weyl_dim(RootSystem(LieType::C, 2), {1, -1}), NonDominantWeight);
    CHECK(weyl_dim(RootSystem(LieType::D, 4), {1, 1, 0, 0}) == 28);
    CHECK(weyl_dim(RootSystem(LieType::D, 4), {1, 1, 1, -1}) == 35);
}

TEST_CASE("type A weyl_dim agrees with the hook content formula") {
    for (unsigned n = 2; n <= 5; ++n) {
        RootSystem rs(LieType::A, n - 1);
        for (std::vector<long> lam : {std::vector<long>{2, 1}, {3}, {2, 2}, {3, 1, 1}, {1, 1, 1}}) {
            if (lam.size() > n) continue;
            // prod over boxes (n + content) / hook
            Rational r = 1;
            for (std::size_t i = 0; i < lam.size(); ++i)
                for (long j = 0; j < lam[i]; ++j) {
                    long arm = lam[i] - j - 1, leg = 0;
                    for (std::size_t k = i + 1; k < lam.size(); ++k) leg += lam[k] > j;
                    Rational f(static_cast<long>(n) + j - static_cast<long>(i), arm + leg + 1);
                    f.canonicalize();
                    r *= f;
                }
            CHECK(weyl_dim(rs, pad(lam, n)) == r.get_num());
        }
    }
}

TEST_CASE("freudenthal_mults examples") {
    auto m = freudenthal_mults(RootSystem(LieType::A, 1), {2, 0});
    CHECK(m.size() == 2);  // dominant weights (2,0) and (1,1); (0,2) is in the orbit of (2,0)
    CHECK(m.at({2, 0}) == 1);
    CHECK(m.at({1, 1}) == 1);
    CHECK(weyl_orbit(RootSystem(LieType::A, 1), {2, 0}).size() == 2);

    auto c = freudenthal_mults(RootSystem(LieType::C, 2), {1, 1});
    CHECK(c.size() == 2);
    CHECK(c.at({1, 1}) == 1);
    CHECK(c.at({0, 0}) == 1);

    auto b = freudenthal_mults(RootSystem(LieType::B, 2), {1, 0});
    CHECK(b.size() == 2);
    CHECK(b.at({1, 0}) == 1);
    CHECK(b.at({0, 0}) == 1);
    CHECK(weyl_orbit(RootSystem(LieType::B, 2), {1, 0}).size() == 4);
}

TEST_CASE("freudenthal agrees with Kostka numbers in type A") {
    for (unsigned r = 1; r <= 3; ++r) {
        RootSystem rs(LieType::A, r);
        const std::size_t n = r + 1;
        // all partitions with parts <= 3 and at most n rows
        std::vector<std::vector<long>> shapes;
        std::function<void(std::vector<long>, long)> gen = [&](std::vector<long> cur, long maxpart) {
            if (!cur.empty()) shapes.push_back(pad(cur, n));
            if (cur.size() == n) return;
            for (long p = std::min(maxpart, 3L); p >= 1; --p) {
                cur.push_back(p);
                gen(cur, p);
                cur.pop_back();
            }
        };
        gen({}, 3);
        for (const auto& lam : shapes) {
            CAPTURE(weight_str(lam));
            auto m = freudenthal_mults(rs, lam);
            Integer dim = 0;
            for (const auto& [mu, mult] : m) {
                CHECK(mult == kostka(lam, mu));
                dim += mult * static_cast<unsigned long>(weyl_orbit(rs, mu).size());
            }
            CHECK(dim == weyl_dim(rs, lam));
            // no dominant weight of the same size is missing
            for (const auto& mu : shapes) {
                if (std::accumulate(mu.begin(), mu.end(), 0L) != std::accumulate(lam.begin(), lam.end(), 0L)) continue;
                if (!m.count(mu)) CHECK(kostka(lam, mu) == 0);
            }
        }
    }
}

TEST_CASE("freudenthal agrees with the Kostant partition function for B2 and C2") {
    RankTwo b{{{1, -1}, {0, 1}, {1, 0}, {1, 1}}, {3, 1}, {}};
    RankTwo c{{{1, -1}, {1, 1}, {0, 2}, {2, 0}}, {4, 2}, {}};
    for (auto [type, oracle] : {std::pair{LieType::B, &b}, std::pair{LieType::C, &c}}) {
        RootSystem rs(type, 2);
        for (long l0 = 0; l0 <= 3; ++l0)
            for (long l1 = 0; l1 <= l0; ++l1) {
                Weight lam{l0, l1};
                CAPTURE(rs.str());
                CAPTURE(weight_str(lam));
                auto m = freudenthal_mults(rs, lam);
                Integer dim = 0;
                for (long u0 = 0; u0 <= 3; ++u0)
                    for (long u1 = 0; u1 <= u0; ++u1) {
                        Weight mu{u0, u1};
                        Integer expect = oracle->mult(lam, mu);
                        Integer got = m.count(mu) ? m.at(mu) : Integer(0);
                        CHECK(got == expect);
                        dim += got * static_cast<unsigned long>(weyl_orbit(rs, mu).size());
                    }
                CHECK(dim == weyl_dim(rs, lam));
            }
    }
}

TEST_CASE("tensor_by_natural examples") {
    RootSystem a3(LieType::A, 3), c3(LieType::C, 3);
    Decomposition v{{fundamental_weight(a3, 1), 1}};
    CHECK(tensor_by_natural(a3, v) == Decomposition{{{2, 0, 0, 0}, 1}, {{1, 1, 0, 0}, 1}});
    CHECK(tensor_by_natural(a3, v, true) == Decomposition{{{1, 0, 0, -1}, 1}, {{0, 0, 0, 0}, 1}});
    Decomposition w{{fundamental_weight(c3, 1), 1}};
    Decomposition vv = tensor_by_natural(c3, w);
    CHECK(vv == Decomposition{{{2, 0, 0}, 1}, {{1, 1, 0}, 1}, {{0, 0, 0}, 1}});
    CHECK(weyl_dim(c3, {2, 0, 0}) == 21);
    CHECK(weyl_dim(c3, {1, 1, 0}) == 14);
    CHECK(decomposition_dim(c3, vv) == 36);
}

TEST_CASE("dimension is conserved along tensor towers") {
    for (RootSystem rs : {RootSystem(LieType::A, 2), RootSystem(LieType::B, 3), RootSystem(LieType::C, 3),
                          RootSystem(LieType::D, 4), RootSystem(LieType::B, 2)}) {
        Decomposition d{{zero_weight(rs), 1}};
        Integer dim = 1;
        for (unsigned k = 1; k <= 5; ++k) {
            d = tensor_by_natural(rs, d);
            dim *= rs.natural_dim();
            CHECK(decomposition_dim(rs, d) == dim);
        }
        CHECK(d == natural_tensor_power(rs, 5));
    }
}

TEST_CASE("tensor_product examples") {
    RootSystem a1(LieType::A, 1);
    CHECK(tensor_product(a1, {1, 0}, {1, 0}) == Decomposition{{{2, 0}, 1}, {{1, 1}, 1}});
    for (RootSystem rs : {RootSystem(LieType::A, 3), RootSystem(LieType::C, 2), RootSystem(LieType::D, 4)}) {
        Weight lam = highest_root(rs);
        CHECK(tensor_product(rs, lam, zero_weight(rs)) == Decomposition{{lam, 1}});
    }
}

TEST_CASE("tensor_product total dimension is multiplicative") {
    struct Case {
        RootSystem rs;
        Weight a, b;
    };
    for (const Case& c : {Case{RootSystem(LieType::A, 2), {2, 1, 0}, {1, 0, -1}}, Case{RootSystem(LieType::B, 2), {2, 0}, {1, 1}},
                          Case{RootSystem(LieType::C, 3), {2, 1, 0}, {1, 1, 0}}, Case{RootSystem(LieType::D, 4), {1, 1, 0, 0}, {2, 0, 0, 0}},
                          Case{RootSystem(LieType::B, 3), {1, 1, 0}, {1, 1, 1}}}) {
        CAPTURE(c.rs.str());
        CHECK(decomposition_dim(c.rs, tensor_product(c.rs, c.a, c.b)) == weyl_dim(c.rs, c.a) * weyl_dim(c.rs, c.b));
        // symmetric in the two factors
        CHECK(tensor_product(c.rs, c.a, c.b) == tensor_product(c.rs, c.b, c.a));
    }
}

TEST_CASE("adjoint squared in type A") {
    for (unsigned n : {4u, 5u}) {
        RootSystem rs(LieType::A, n - 1);
        Weight adj = highest_root(rs);
        Decomposition d = tensor_product(rs, adj, adj);
        CHECK(d.at(zero_weight(rs)) == 1);
        CHECK(d.at(adj) == 2);
        const long N = n;
        auto w = [&](std::vector<long> head, std::vector<long> tail) {
            Weight x(n, 0);
            std::copy(head.begin(), head.end(), x.begin());
            std::copy(tail.begin(), tail.end(), x.end() - static_cast<long>(tail.size()));
            return x;
        };
        Weight w1 = w({2}, {-2}), w2 = w({2}, {-1, -1}), w3 = w({1, 1}, {-2}), w4 = w({1, 1}, {-1, -1});
        CHECK(d.at(w1) == 1);
        CHECK(weyl_dim(rs, w1) == N * N * (N - 1) * (N + 3) / 4);
        CHECK(d.at(w2) == 1);
        CHECK(d.at(w3) == 1);
        CHECK(weyl_dim(rs, w2) == (N + 2) * (N + 1) * (N - 1) * (N - 2) / 4);
        CHECK(weyl_dim(rs, w3) == (N + 2) * (N + 1) * (N - 1) * (N - 2) / 4);
        CHECK(d.at(w4) == 1);
        CHECK(weyl_dim(rs, w4) == N * N * (N + 1) * (N - 3) / 4);
        CHECK(d.size() == 6);
        CHECK(decomposition_dim(rs, d) == (N * N - 1) * (N * N - 1));
    }
}

TEST_CASE("adjoint multiplicity in adjoint squared is rank minus perpendicular simple roots") {
    std::vector<RootSystem> systems;
    for (unsigned r = 1; r <= 5; ++r) systems.emplace_back(LieType::A, r);
    for (unsigned r = 2; r <= 4; ++r) systems.emplace_back(LieType::B, r);
    for (unsigned r = 2; r <= 4; ++r) systems.emplace_back(LieType::C, r);
    systems.emplace_back(LieType::D, 4);
    systems.emplace_back(LieType::D, 5);
    for (const RootSystem& rs : systems) {
        CAPTURE(rs.str());
        Weight hr = highest_root(rs);
        unsigned s = 0;
        for (const Weight& a : simple_roots(rs)) s += dot(a, hr) == 0;
        Integer m = hom_mult(rs, hr, hr, hr);
        CHECK(m == rs.rank - s);
        if (rs.type == LieType::A && rs.rank >= 2) CHECK(m == 2);
    }
    CHECK(hom_mult(RootSystem(LieType::A, 1), {1, -1}, {1, -1}, {1, -1}) == 1);
    CHECK(hom_mult(RootSystem(LieType::C, 3), {2, 0, 0}, {2, 0, 0}, {2, 0, 0}) == 1);
    // D4: highest root e1+e2 is perpendicular to e1-e2, e3-e4, e3+e4
    CHECK(hom_mult(RootSystem(LieType::D, 4), {1, 1, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}) == 1);
}

TEST_CASE("classical_moment examples") {
    CHECK(classical_moment(RootSystem(LieType::A, 3), 3) == 6);
    CHECK(classical_moment(RootSystem(LieType::A, 5), 3) == 6);
    CHECK(classical_moment(RootSystem(LieType::C, 3), 4) == 104);
    CHECK(classical_moment(RootSystem(LieType::C, 3), 5) == 909);
    CHECK(classical_moment(RootSystem(LieType::C, 3), 6) == 9449);
    CHECK(classical_moment(RootSystem(LieType::A, 1), 6) == 132);
    CHECK_THROWS_AS(classical_moment(RootSystem(LieType::A, 1), 9), CapExceeded);
}

TEST_CASE("SL2 moments are Catalan numbers") {
    RootSystem a1(LieType::A, 1);
    const long catalan[] = {1, 2, 5, 14, 42, 132, 429, 1430};
    for (unsigned k = 1; k <= 8; ++k) CHECK(classical_moment(a1, k) == catalan[k - 1]);
}

TEST_CASE("stable range: k! for GL and (2k-1)!! for Sp") {
    for (unsigned r = 1; r <= 8; ++r)
        for (unsigned k = 1; k <= std::min(6u, r + 1); ++k) {
            CAPTURE(r);
            CAPTURE(k);
            CHECK(classical_moment(RootSystem(LieType::A, r), k) == factorial(k));
        }
    // Sp_{2m}: k <= m
    for (unsigned m = 2; m <= 8; ++m)
        for (unsigned k = 1; k <= std::min(6u, m); ++k) {
            CAPTURE(m);
            CAPTURE(k);
            CHECK(classical_moment(RootSystem(LieType::C, m), k) == double_factorial(2 * k - 1));
        }
    // just outside the range the count drops below (2k-1)!!
    for (unsigned m = 2; m <= 5; ++m) CHECK(classical_moment(RootSystem(LieType::C, m), m + 1) < double_factorial(2 * m + 1));
}

TEST_CASE("moments are nondecreasing in k") {
    for (RootSystem rs : {RootSystem(LieType::A, 1), RootSystem(LieType::A, 2), RootSystem(LieType::B, 2),
                          RootSystem(LieType::C, 2), RootSystem(LieType::C, 3), RootSystem(LieType::D, 3),
                          RootSystem(LieType::D, 4)}) {
        Integer prev = 0;
        for (unsigned k = 1; k <= 6; ++k) {
            Integer m = classical_moment(rs, k);
            CHECK(m >= prev);
            prev = m;
        }
    }
}

TEST_CASE("Schur functor dimensions at k = 4") {
    for (unsigned d : {8u, 10u}) {
        RootSystem rs(LieType::A, d - 1);
        Decomposition p = natural_tensor_power(rs, 4);
        const long D = d;
        Weight s31 = pad({3, 1}, d), s211 = pad({2, 1, 1}, d), s22 = pad({2, 2}, d);
        CHECK(weyl_dim(rs, s31) == D * (D + 2) * (D * D - 1) / 8);
        CHECK(weyl_dim(rs, s211) == D * (D - 2) * (D * D - 1) / 8);
        CHECK(weyl_dim(rs, s22) == D * D * (D * D - 1) / 12);
        // multiplicities are the symmetric-group degrees
        CHECK(p.at(s31) == 3);
        CHECK(p.at(s211) == 3);
        CHECK(p.at(s22) == 2);
        CHECK(p.at(pad({4}, d)) == 1);
        CHECK(p.at(pad({1, 1, 1, 1}, d)) == 1);
    }
}

TEST_CASE("root system parsing and guardrails") {
    CHECK(RootSystem::parse("Sp6") == RootSystem(LieType::C, 3));
    CHECK(RootSystem::parse("GL4") == RootSystem(LieType::A, 3));
    CHECK(RootSystem::parse("SO7") == RootSystem(LieType::B, 3));
    CHECK(RootSystem::parse("SO8") == RootSystem(LieType::D, 4));
    CHECK_THROWS_AS(RootSystem::parse("D2"), ValidationError);
    CHECK_THROWS_AS(RootSystem::parse("B1"), ValidationError);
    CHECK_THROWS_AS(RootSystem::parse("E6"), ValidationError);
    CHECK_THROWS_AS(fundamental_weight(RootSystem(LieType::B, 3), 3), ValidationError);
    CHECK(parse_weight("2,0,0,-2") == Weight{2, 0, 0, -2});
}

}  // TEST_SUITE
