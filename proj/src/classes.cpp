#include "momentforge/classes.hpp"

#include <algorithm>
#include <numeric>

#include "momentforge/errors.hpp"

namespace momentforge {

ConjugacyClasses conjugacy_classes(const EnumeratedGroup& g) {
    const uint32_t n = static_cast<uint32_t>(g.order());
    const std::size_t ns = g.generator_count();
    // generator indices: element s+1 in BFS order need not be the generator, so locate them by conjugacy tables
    std::vector<uint32_t> gen(ns), gen_inv(ns);
    {
        // a generator is the first BFS child of the identity along it
        std::vector<char> found(ns, 0);
        for (uint32_t i = 1; i < n; ++i)
            if (g.parent(i) == 0 && !found[g.via(i)]) {
                found[g.via(i)] = 1;
                gen[g.via(i)] = i;
            }
        for (std::size_t s = 0; s < ns; ++s) {
            if (!found[s]) gen[s] = 0;  // generator equal to the identity or to an earlier one
            gen_inv[s] = g.inverse(gen[s]);
        }
    }
    const uint32_t none = UINT32_MAX;
    std::vector<uint32_t> raw(n, none);
    std::vector<uint32_t> reps;
    std::vector<uint64_t> sizes;
    std::vector<uint32_t> stack;
    for (uint32_t x = 0; x < n; ++x) {
        if (raw[x] != none) continue;
        const uint32_t c = static_cast<uint32_t>(reps.size());
        reps.push_back(x);
        raw[x] = c;
        uint64_t size = 0;
        stack.assign(1, x);
        while (!stack.empty()) {
            uint32_t y = stack.back();
            stack.pop_back();
            ++size;
            for (std::size_t s = 0; s < ns; ++s) {
                uint32_t z = g.multiply(g.multiply(gen_inv[s], y), gen[s]);
                if (raw[z] == none) {
                    raw[z] = c;
                    stack.push_back(z);
                }
            }
        }
        sizes.push_back(size);
    }
    std::vector<unsigned> ord(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) ord[c] = g.element_order(reps[c]);
    std::vector<uint32_t> perm(reps.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](uint32_t a, uint32_t b) { return ord[a] < ord[b]; });
    std::vector<uint32_t> pos(reps.size());
    for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = static_cast<uint32_t>(i);

    ConjugacyClasses out;
    out.class_of.resize(n);
    for (uint32_t x = 0; x < n; ++x) out.class_of[x] = pos[raw[x]];
    unsigned prev = 0, letter = 0;
    for (uint32_t c : perm) {
        out.representative.push_back(reps[c]);
        out.size.push_back(Integer(static_cast<unsigned long>(sizes[c])));
        out.order.push_back(ord[c]);
        letter = ord[c] == prev ? letter + 1 : 0;
        prev = ord[c];
        std::string l = std::to_string(ord[c]);
        // a..z, then aa, ab, ...
        if (letter < 26) l += static_cast<char>('a' + letter);
        else l += std::string(1, static_cast<char>('a' + letter / 26 - 1)) + static_cast<char>('a' + letter % 26);
        out.label.push_back(l);
    }
    return out;
}

CharTable generate_table(const EnumeratedGroup& g, const std::string& name, const std::vector<ElementCharacter>& chars,
                         const std::string& source) {
    ConjugacyClasses cc = conjugacy_classes(g);
    CharTable t;
    t.name = name;
    t.order = Integer(static_cast<unsigned long>(g.order()));
    t.source = source;
    for (std::size_t c = 0; c < cc.count(); ++c) {
        TableClass tc{cc.label[c], cc.size[c], {}};
        for (unsigned p : {2u, 3u, 5u}) tc.powers[p] = cc.label[cc.class_of[g.power(cc.representative[c], p)]];
        t.classes.push_back(std::move(tc));
    }
    unsigned cond = 1;
    for (const auto& chi : chars) {
        if (&chi.group() != &g) throw ValidationError("character " + chi.name() + " belongs to another group");
        std::vector<uint32_t> idx(cc.count(), UINT32_MAX);
        for (uint32_t x = 0; x < g.order(); ++x) {
            uint32_t& v = idx[cc.class_of[x]];
            if (v == UINT32_MAX) v = chi.value_index(x);
            else if (v != chi.value_index(x))
                throw ValidationError("character " + chi.name() + " is not a class function");
        }
        std::vector<Cyclo> vals;
        for (uint32_t v : idx) {
            vals.push_back(chi.distinct()[v].minimized());
            cond = lcm_u(cond, vals.back().conductor());
        }
        t.chars.emplace_back(chi.name(), std::move(vals));
    }
    t.conductor = cond;
    validate(t);
    return t;
}

}  // namespace momentforge
