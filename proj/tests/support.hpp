#pragma once
// Shared fixtures: groups and characters that several suites use, built once.

#include <map>
#include <memory>
#include <random>
#include <string>

#include "momentforge/character.hpp"
#include "momentforge/cyclo.hpp"
#include "momentforge/groups.hpp"
#include "momentforge/weil.hpp"

namespace mftest {

using namespace momentforge;

struct WeilFixture {
    EnumeratedGroup group;
    WeilRep rep;
    WeilCharacters chars;
};

/// Paired-enumeration Weil data for a symplectic group, cached by spec text.
inline const WeilFixture& weil_fixture(const std::string& spec) {
    static std::map<std::string, std::unique_ptr<WeilFixture>> cache;
    auto& slot = cache[spec];
    if (!slot) {
        EnumerateOptions opt;
        opt.keep_edges = true;
        auto f = std::make_unique<WeilFixture>(WeilFixture{enumerate(GroupSpec::parse(spec), opt), {}, {}});
        f->rep = sympl_weil(f->group);
        f->chars = weil_characters(f->rep);
        slot = std::move(f);
    }
    return *slot;
}

inline const EnumeratedGroup& group_fixture(const std::string& spec) {
    static std::map<std::string, std::unique_ptr<EnumeratedGroup>> cache;
    auto& slot = cache[spec];
    if (!slot) slot = std::make_unique<EnumeratedGroup>(spec == "2i" ? enumerate_icosians() : enumerate(GroupSpec::parse(spec)));
    return *slot;
}

/// Natural 2-dimensional character of the icosian group.
inline ElementCharacter icosian_natural(const EnumeratedGroup& g) {
    return ElementCharacter::build(g, "2i.natural", [&](uint32_t i) {
        const Mat2Cyclo& m = g.cyclo_element(i);
        return m[0] + m[3];
    });
}

/// A Galois automorphism of Q(zeta_N) sending zeta_p to zeta_p^a and fixing
/// the prime-to-p roots of unity: the effect of replacing psi by psi_a.
inline long psi_twist(unsigned conductor, unsigned p, long a) {
    unsigned pp = 1, n = conductor;
    while (n % p == 0) n /= p, pp *= p;
    // CRT: t = a mod p-part, t = 1 mod n
    for (long t = 1; t < static_cast<long>(conductor) * 4 + 4; ++t)
        if (t % p == a % p && (n == 1 || t % n == 1) && gcd_u(static_cast<unsigned>(t), conductor) == 1) return t;
    return 1;
}

inline Cyclo random_cyclo(std::mt19937& rng, unsigned conductor, int terms = 3, int range = 4) {
    std::uniform_int_distribution<long> e(0, conductor - 1), c(-range, range);
    std::vector<std::pair<long, long>> t;
    for (int i = 0; i < terms; ++i) t.emplace_back(e(rng), c(rng));
    return Cyclo::from_powers(conductor, t);
}

}  // namespace mftest
