#include "momentforge/extraspecial.hpp"

#include <algorithm>

#include "momentforge/errors.hpp"
#include "momentforge/groups.hpp"
#include "momentforge/lie.hpp"

namespace momentforge {

ActingGroup parse_acting_group(const std::string& s) {
    if (s == "Sp" || s == "sp") return ActingGroup::Sp;
    if (s == "O+" || s == "o+" || s == "O-plus") return ActingGroup::OPlus;
    if (s == "O-" || s == "o-" || s == "O-minus") return ActingGroup::OMinus;
    throw ValidationError("unknown acting group '" + s + "' (expected Sp, O+ or O-)");
}

NormalizerCase parse_normalizer_case(const std::string& s) {
    if (s == "GL" || s == "gl") return NormalizerCase::GL;
    if (s == "Sp" || s == "sp") return NormalizerCase::Sp;
    if (s == "O" || s == "o") return NormalizerCase::O;
    throw ValidationError("unknown normalizer case '" + s + "' (expected GL, Sp or O)");
}

std::string to_string(ActingGroup g) {
    switch (g) {
        case ActingGroup::Sp: return "Sp";
        case ActingGroup::OPlus: return "O+";
        case ActingGroup::OMinus: return "O-";
    }
    return "?";
}

std::string to_string(NormalizerCase c) {
    switch (c) {
        case NormalizerCase::GL: return "GL";
        case NormalizerCase::Sp: return "Sp";
        case NormalizerCase::O: return "O";
    }
    return "?";
}

ActingGroup acting_group_for(NormalizerCase c) {
    switch (c) {
        case NormalizerCase::GL: return ActingGroup::Sp;
        case NormalizerCase::Sp: return ActingGroup::OMinus;
        case NormalizerCase::O: return ActingGroup::OPlus;
    }
    return ActingGroup::Sp;
}

namespace {

void check_params(unsigned p, unsigned a, ActingGroup g) {
    if (!is_prime(p)) throw ValidationError("p must be prime");
    if (a == 0) throw ValidationError("a must be at least 1");
    if (g != ActingGroup::Sp && p != 2) throw ValidationError("orthogonal acting groups need p = 2");
    if (g == ActingGroup::OPlus && a == 2)
        throw ValidationError("O+_4(2) is not generated by its reflections; a = 2 is not supported for O+");
    if (2 * a > 16) throw ValidationError("2a must be at most 16");
}

uint64_t checked_pow(uint64_t b, unsigned e, uint64_t cap) {
    uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > cap / b) throw MemoryCapExceeded("tuple space exceeds the state cap of " + std::to_string(cap));
        r *= b;
    }
    return r;
}

// act[s][v] = index of g_s v
std::vector<std::vector<uint32_t>> vector_actions(const std::vector<MatFq>& gens, unsigned dim) {
    const FqField& F = gens.front().field();
    uint64_t n = 1;
    for (unsigned i = 0; i < dim; ++i) n *= F.q();
    std::vector<std::vector<uint32_t>> act(gens.size(), std::vector<uint32_t>(n));
    for (uint64_t v = 0; v < n; ++v) {
        auto vec = vector_from_index(F, dim, v);
        for (std::size_t s = 0; s < gens.size(); ++s)
            act[s][v] = static_cast<uint32_t>(index_from_vector(F, gens[s].apply(vec)));
    }
    return act;
}

// Orbits of the diagonal action on `digits`-tuples of vectors, states scanned in
// increasing order so each orbit is labelled by its smallest state.
template <class OnOrbit>
void tuple_orbits(const std::vector<std::vector<uint32_t>>& act, uint64_t n, unsigned digits, uint64_t states,
                  OnOrbit on_orbit) {
    std::vector<uint64_t> visited((states + 63) / 64, 0);
    auto seen = [&](uint64_t s) { return (visited[s >> 6] >> (s & 63)) & 1; };
    auto mark = [&](uint64_t s) { visited[s >> 6] |= uint64_t(1) << (s & 63); };
    std::vector<uint64_t> stack;
    uint32_t d[8];
    for (uint64_t start = 0; start < states; ++start) {
        if (seen(start)) continue;
        mark(start);
        stack.assign(1, start);
        uint64_t size = 0;
        while (!stack.empty()) {
            uint64_t s = stack.back();
            stack.pop_back();
            ++size;
            for (unsigned i = 0; i < digits; ++i, s /= n) d[i] = static_cast<uint32_t>(s % n);
            for (const auto& a : act) {
                uint64_t t = 0;
                for (unsigned i = digits; i-- > 0;) t = t * n + a[d[i]];
                if (!seen(t)) {
                    mark(t);
                    stack.push_back(t);
                }
            }
        }
        on_orbit(start, size);
    }
}

}  // namespace

FormSpace acting_space(unsigned p, unsigned a, ActingGroup g) {
    check_params(p, a, g);
    const FqField& F = FqField::get(p);
    switch (g) {
        case ActingGroup::Sp: return FormSpace::symplectic(F, 2 * a);
        case ActingGroup::OPlus: return FormSpace::quadratic_plus(F, 2 * a);
        case ActingGroup::OMinus: return FormSpace::quadratic_minus(F, 2 * a);
    }
    throw ValidationError("bad acting group");
}

std::vector<MatFq> acting_generators(unsigned p, unsigned a, ActingGroup g, GeneratorSet set) {
    FormSpace space = acting_space(p, a, g);
    if (g == ActingGroup::Sp) {
        if (set == GeneratorSet::Standard) return standard_generators(GroupSpec{Family::Sp, 2 * a, p});
        return transvection_generators(space, 0);
    }
    return reflection_generators(space, set == GeneratorSet::Standard ? 0 : 1);
}

OrbitReport count_zero_sum_orbits(const TupleOrbitProblem& prob, GeneratorSet set, uint64_t state_cap) {
    check_params(prob.p, prob.a, prob.acting);
    if (prob.tuple_len < 2 || prob.tuple_len > 4) throw ValidationError("tuple length must be 2, 3 or 4");
    const unsigned dim = 2 * prob.a;
    const uint64_t n = checked_pow(prob.p, dim, state_cap);
    const uint64_t states = checked_pow(n, prob.tuple_len - 1, state_cap);
    auto act = vector_actions(acting_generators(prob.p, prob.a, prob.acting, set), dim);
    OrbitReport r;
    r.total = states;
    tuple_orbits(act, n, prob.tuple_len - 1, states, [&](uint64_t, uint64_t size) { r.orbit_sizes.push_back(size); });
    std::sort(r.orbit_sizes.begin(), r.orbit_sizes.end());
    r.orbit_count = r.orbit_sizes.size();
    return r;
}

Integer extraspecial_moment(unsigned p, unsigned a, NormalizerCase c, unsigned k, GeneratorSet set) {
    return Integer(static_cast<unsigned long>(count_zero_sum_orbits({p, a, acting_group_for(c), k}, set).orbit_count));
}

Integer extraspecial_ambient_moment(unsigned p, unsigned a, NormalizerCase c, unsigned k) {
    check_params(p, a, acting_group_for(c));
    uint64_t d = 1;
    for (unsigned i = 0; i < a; ++i) d *= p;
    if (c == NormalizerCase::GL) return classical_moment(RootSystem(LieType::A, static_cast<unsigned>(d - 1)), k);
    if (d % 2) throw ValidationError("symplectic and orthogonal ambients need even dimension");
    const unsigned r = static_cast<unsigned>(d / 2);
    return classical_moment(RootSystem(c == NormalizerCase::Sp ? LieType::C : LieType::D, r), k);
}

ExtraspecialComparison compare_extraspecial(unsigned p, unsigned a, NormalizerCase c, unsigned k) {
    ExtraspecialComparison out;
    out.normalizer = extraspecial_moment(p, a, c, k);
    out.ambient = extraspecial_ambient_moment(p, a, c, k);
    out.difference = out.normalizer - out.ambient;
    uint64_t d = 1;
    for (unsigned i = 0; i < a; ++i) d *= p;
    if (d > 4) {
        if (c == NormalizerCase::GL && k == 3) {
            out.reference_difference = Integer(2 * static_cast<long>(p) - 5);
            out.reference_is_lower_bound = true;
        } else if (c == NormalizerCase::GL && k == 4 && p == 2) {
            out.reference_difference = Integer(6);
        } else if (c != NormalizerCase::GL && p == 2 && a >= 4 && (k == 3 || k == 4)) {
            out.reference_difference = Integer(k == 3 ? 0 : 20);
        }
    }
    if (out.reference_difference)
        out.reference_mismatch = out.reference_is_lower_bound ? out.difference < *out.reference_difference
                                                               : out.difference != *out.reference_difference;
    return out;
}

TransitivityReport transitivity_check(unsigned p, unsigned a, ActingGroup g, GeneratorSet set) {
    FormSpace space = acting_space(p, a, g);
    const unsigned dim = 2 * a;
    const uint64_t n = checked_pow(p, dim, kTupleStateCap);
    auto act = vector_actions(acting_generators(p, a, g, set), dim);
    const FqField& F = FqField::get(p);
    std::vector<char> iso(n, 0);
    for (uint64_t v = 1; v < n; ++v) iso[v] = is_isotropic(space, vector_from_index(F, dim, v));

    TransitivityReport r;
    std::vector<uint64_t> label(n, 0);
    tuple_orbits(act, n, 1, n, [&](uint64_t rep, uint64_t size) {
        if (rep != 0) r.orbits.push_back({size, rep, iso[rep] != 0});
    });
    // homogeneity: recolour each vector by its orbit and compare isotropy types
    bool homogeneous = true;
    for (std::size_t i = 0; i < r.orbits.size(); ++i) {
        // walk the orbit again from its representative
        std::vector<uint64_t> stack{r.orbits[i].representative};
        label[r.orbits[i].representative] = i + 1;
        while (!stack.empty()) {
            uint64_t v = stack.back();
            stack.pop_back();
            if (iso[v] != iso[r.orbits[i].representative]) homogeneous = false;
            for (const auto& ac : act)
                if (!label[ac[v]]) {
                    label[ac[v]] = i + 1;
                    stack.push_back(ac[v]);
                }
        }
    }
    r.transitive = r.orbits.size() == 1;
    bool types_distinct = true;
    for (std::size_t i = 0; i < r.orbits.size(); ++i)
        for (std::size_t j = i + 1; j < r.orbits.size(); ++j)
            if (r.orbits[i].isotropic == r.orbits[j].isotropic) types_distinct = false;
    r.isotropy_split = homogeneous && types_distinct;
    return r;
}

}  // namespace momentforge
