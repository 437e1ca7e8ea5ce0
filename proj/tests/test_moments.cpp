#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "momentforge/chario.hpp"
#include "momentforge/classes.hpp"
#include "momentforge/drop.hpp"
#include "momentforge/errors.hpp"
#include "momentforge/moments.hpp"
#include "momentforge/unitary_weil.hpp"
#include "momentforge/weil.hpp"
#include "support.hpp"

using namespace momentforge;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
    std::vector<Integer> r;
    for (long x : v) r.emplace_back(x);
    return r;
}

CharOracle oracle(const ElementCharacter& chi) { return CharOracle::from_character(chi); }

bool nondecreasing(const std::vector<Integer>& m) {
    for (std::size_t i = 1; i < m.size(); ++i)
        if (m[i] < m[i - 1]) return false;
    return true;
}

}  // namespace

TEST_SUITE("moments") {

TEST_CASE("trivial character has every moment 1") {
    for (const char* spec : {"sp:2:5", "su:3:2", "2i"}) {
        const EnumeratedGroup& g = mftest::group_fixture(spec);
        ElementCharacter one = ElementCharacter::build(g, "1", [](uint32_t) { return Cyclo(1); });
        CHECK(group_moments(oracle(one), 8) == ints({1, 1, 1, 1, 1, 1, 1, 1}));
    }
}

TEST_CASE("SL2(5) natural module: Catalan numbers up to k = 5, then above") {
    const EnumeratedGroup& g = mftest::group_fixture("2i");
    auto m = group_moments(oracle(mftest::icosian_natural(g)), 8);
    CHECK(m == ints({1, 2, 5, 14, 42, 133, 442, 1534}));
    CHECK(m[5] > classical_moment(RootSystem(LieType::A, 1), 6));
    // the symplectic model of the same group gives the same numbers
    CHECK(group_moments(oracle(mftest::weil_fixture("sp:2:5").chars.odd), 8) == m);
}

TEST_CASE("moment values of the bundled oracles") {
    const auto& s25 = mftest::weil_fixture("sp:2:5");
    CHECK(group_moments(oracle(s25.chars.even), 6) == ints({1, 3, 16, 119, 1009, 8922}));
    const auto& s43 = mftest::weil_fixture("sp:4:3");
    CHECK(group_moments(oracle(s43.chars.even), 6) == ints({1, 2, 7, 46, 571, 10842}));
    CHECK(group_moments(oracle(s43.chars.odd), 6) == ints({1, 2, 6, 25, 144, 1195}));
    const EnumeratedGroup& su4 = mftest::group_fixture("su:4:2");
    CHECK(group_moments(oracle(unitary_weil_character(su4, 0u)), 6) == ints({1, 3, 17, 169, 3153, 90905}));
    CHECK(group_moments(oracle(unitary_weil_character(su4, 1u)), 6) == ints({1, 2, 7, 46, 571, 10842}));
}

TEST_CASE("moments are nondecreasing and M2 = 1 for irreducible oracles") {
    std::vector<CharOracle> all;
    for (const char* spec : {"sp:2:5", "sp:2:13", "sp:4:3"}) {
        const auto& f = mftest::weil_fixture(spec);
        all.push_back(oracle(f.chars.even));
        all.push_back(oracle(f.chars.odd));
    }
    for (const char* spec : {"gu:3:2", "su:4:2"})
        for (unsigned i = 0; i <= 2; ++i) all.push_back(oracle(unitary_weil_character(mftest::group_fixture(spec), i)));
    for (const CharOracle& o : all) {
        CAPTURE(o.name);
        auto m = group_moments(o, 6);
        CHECK(m[0] == 1);
        CHECK(nondecreasing(m));
    }
}

TEST_CASE("moments are invariant under conjugation and Galois twists") {
    const auto& s43 = mftest::weil_fixture("sp:4:3");
    for (const ElementCharacter* chi : {&s43.chars.even, &s43.chars.odd}) {
        auto base = group_moments(oracle(*chi), 6);
        CHECK(group_moments(oracle(chi->conj()), 6) == base);
        for (long a : {5L, 7L, 11L}) CHECK(group_moments(oracle(chi->galois(a)), 6) == base);
    }
    const EnumeratedGroup& gu = mftest::group_fixture("gu:3:2");
    ElementCharacter c = unitary_weil_character(gu, 1u);
    CHECK(group_moments(oracle(c.conj()), 6) == group_moments(oracle(c), 6));
}

TEST_CASE("group_moment guardrails") {
    const auto& s25 = mftest::weil_fixture("sp:2:5");
    CHECK_THROWS_AS(group_moment(oracle(s25.chars.odd), 9), CapExceeded);
    CharOracle bogus = CharOracle::from_abs_squares("bogus", CharOracle::Source::Table, 2, 1, {{Cyclo(1), 1}, {Cyclo(0), 1}});
    CHECK_THROWS_AS(group_moment(bogus, 1), NotRationalInteger);
    CHECK_THROWS_AS(compare_with_ambient(oracle(s25.chars.odd), RootSystem(LieType::A, 2)), DegreeMismatch);
}

TEST_CASE("compare_with_ambient and its JSON form") {
    const auto& s25 = mftest::weil_fixture("sp:2:5");
    CharOracle o = oracle(s25.chars.odd);
    o.name = "SL2(5)";
    MomentReport r = compare_with_ambient(o, RootSystem(LieType::A, 1), 6);
    REQUIRE(r.rows.size() == 6);
    CHECK(r.largest_equal_k == 5);
    CHECK(r.rows[5].mg == 133);
    CHECK(r.rows[5].mG == 132);
    CHECK_FALSE(r.rows[5].equal);
    auto j = nlohmann::json::parse(to_json(r));
    CHECK(j["group"] == "SL2(5)");
    CHECK(j["ambient"] == r.ambient);
    CHECK(j["rows"][5]["mg"] == "133");
    CHECK(j["rows"][5]["mG"] == "132");
    CHECK(j["rows"][0]["equal"] == true);
    CHECK(j["largest_equal_k"] == 5);

    const auto& s43 = mftest::weil_fixture("sp:4:3");
    MomentReport r5 = compare_with_ambient(oracle(s43.chars.even), RootSystem(LieType::A, 4), 6);
    CHECK(r5.largest_equal_k == 2);
    // 1, 2, 6, 25 against 1, 2, 6, 24
    MomentReport r4 = compare_with_ambient(oracle(s43.chars.odd), RootSystem(LieType::A, 3), 6);
    CHECK(r4.largest_equal_k == 3);
    CHECK(r4.rows[3].mg == 25);
    CHECK(r4.rows[3].mG == 24);
}

TEST_CASE("table moments equal rep-trace moments for enumerable groups") {
    for (auto [spec, file] : {std::pair{"sp:2:5", "generated/SL2_5.tbl"}, {"sp:4:3", "generated/Sp4_3.tbl"}}) {
        CAPTURE(spec);
        const auto& f = mftest::weil_fixture(spec);
        CharTable t = load_table(file);
        for (auto [name, part] : {std::pair{"weil_even", WeilPart::Even}, {"weil_odd", WeilPart::Odd}}) {
            auto trace = group_moments(oracle(f.chars.part(part)), 6);
            for (unsigned k = 1; k <= 6; ++k) CHECK(table_moment(t, name, k) == trace[k - 1]);
            CHECK(table_fs(t, name) == fs_indicator(f.chars.part(part)));
        }
        for (auto [twisted, base] : {std::pair{"weil_even_twist", "weil_even"}, {"weil_odd_twist", "weil_odd"}})
            for (unsigned k = 1; k <= 6; ++k) CHECK(table_moment(t, twisted, k) == table_moment(t, base, k));
    }
}

TEST_CASE("generated tables reproduce the committed goldens") {
    for (auto [spec, file, name, twist] : {std::tuple{"sp:2:5", "generated/SL2_5.tbl", "SL2(5)", 2L},
                                          {"sp:4:3", "generated/Sp4_3.tbl", "Sp4(3)", -1L}}) {
        CAPTURE(spec);
        const auto& f = mftest::weil_fixture(spec);
        std::vector<ElementCharacter> chars{f.chars.even.renamed("weil_even"), f.chars.odd.renamed("weil_odd"),
                                            f.chars.even.galois(twist).renamed("weil_even_twist"),
                                            f.chars.odd.galois(twist).renamed("weil_odd_twist")};
        CharTable fresh = generate_table(f.group, name, chars,
                                         std::string("generated by gen_goldens from the Weil representation of ") + spec);
        CHECK(serialize(fresh) == serialize(load_table(file)));
    }
}

TEST_CASE("conjugacy classes of SL2(5)") {
    const EnumeratedGroup& g = mftest::weil_fixture("sp:2:5").group;
    ConjugacyClasses c = conjugacy_classes(g);
    CHECK(c.count() == 9);
    Integer total = 0;
    for (const auto& s : c.size) total += s;
    CHECK(total == 120);
    for (uint32_t i = 0; i < g.order(); i += 11)
        for (uint32_t j = 0; j < g.order(); j += 13) {
            uint32_t conj = g.multiply(g.multiply(g.inverse(j), i), j);
            CHECK(c.class_of[conj] == c.class_of[i]);
        }
    ElementCharacter bad = ElementCharacter::build(g, "bad", [](uint32_t i) { return Cyclo(i == 1 ? 1 : 0); });
    CHECK_THROWS_AS(generate_table(g, "x", {bad}, "test"), ValidationError);
}

TEST_CASE("projective drop values") {
    const EnumeratedGroup& ico = mftest::group_fixture("2i");
    ElementCharacter nat = mftest::icosian_natural(ico);
    DropReport d = projective_drop(nat);
    CHECK(d.drop == Rational(1, 2));
    CHECK(d.counted == 118);
    CHECK(drop_rank_crosscheck(nat, [&](uint32_t e) { return icosian_cyclo_matrix(ico, e); }) > 0);

    struct Row {
        const char* spec;
        WeilPart part;
        Rational drop;
    };
    for (const Row& r : {Row{"sp:2:5", WeilPart::Odd, Rational(1, 2)}, Row{"sp:2:5", WeilPart::Even, Rational(1, 3)},
                         Row{"sp:4:3", WeilPart::Even, Rational(1, 5)}, Row{"sp:4:3", WeilPart::Odd, Rational(1, 4)}}) {
        CAPTURE(r.spec);
        const auto& f = mftest::weil_fixture(r.spec);
        const ElementCharacter& chi = f.chars.part(r.part);
        DropReport dr = projective_drop(chi);
        CHECK(dr.drop == r.drop);
        CHECK(dr.drop >= Rational(1, 8));
        Integer d0 = to_rational_integer(chi.degree());
        CHECK(Rational(d0 - dr.max_eigenspace, d0) == dr.drop);
        CHECK(drop_rank_crosscheck(chi, [&](uint32_t e) { return weil_cyclo_matrix(f.rep, e); },
                                   weil_part_constraint(f.rep, r.part)) > 0);
        // the two central elements act by scalars and are excluded
        CHECK(dr.counted == f.group.order() - 2);
    }
}

TEST_CASE("eigenvalue multiplicities from projector traces") {
    const EnumeratedGroup& ico = mftest::group_fixture("2i");
    ElementCharacter nat = mftest::icosian_natural(ico);
    for (uint32_t e = 0; e < ico.order(); ++e) {
        auto m = eigen_multiplicities(nat, e);
        Integer sum = 0;
        for (const auto& x : m) {
            CHECK(x >= 0);
            sum += x;
        }
        CHECK(sum == 2);
    }
    CycloMatrix id{{Cyclo(1), Cyclo(0)}, {Cyclo(0), Cyclo(1)}};
    CHECK(cyclo_rank(id) == 2);
    CHECK(eigenspace_dim(id, Cyclo(1)) == 2);
    CHECK(eigenspace_dim(id, Cyclo(-1)) == 0);
    CycloMatrix rot{{Cyclo::zeta(3), Cyclo(0)}, {Cyclo(0), Cyclo::zeta(3, 2)}};
    CHECK(eigenspace_dim(rot, Cyclo::zeta(3)) == 1);
    CHECK(eigenspace_dim(rot, Cyclo::zeta(3), {CycloMatrix{{Cyclo(1), Cyclo(0)}}}) == 0);
}

TEST_CASE("drop of a scalar representation is rejected") {
    const EnumeratedGroup& g = mftest::group_fixture("sp:2:5");
    ElementCharacter one = ElementCharacter::build(g, "1", [](uint32_t) { return Cyclo(1); });
    CHECK_THROWS_AS(projective_drop(one), ValidationError);
}

}  // TEST_SUITE

TEST_SUITE("slow") {

TEST_CASE("fourth moment bound for Sp4(5) via the closed form") {
    EnumeratedGroup g = enumerate(GroupSpec::parse("sp:4:5"));
    for (WeilPart part : {WeilPart::Even, WeilPart::Odd}) {
        CharOracle o = weil_formula_oracle(g, part);
        Integer m = group_moment(o, 2);
        CHECK(m >= Integer((5 + 7) / 4));
        CHECK(m == 3);
        CHECK(group_moment(o, 1) == 1);
    }
}

}  // TEST_SUITE
