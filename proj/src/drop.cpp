#include "momentforge/drop.hpp"

#include <map>

#include "momentforge/errors.hpp"

namespace momentforge {

namespace {

// power signature of g: value indices of chi(g^j), j = 0..o-1
std::vector<uint32_t> power_signature(const ElementCharacter& chi, uint32_t element) {
    const EnumeratedGroup& g = chi.group();
    std::vector<uint32_t> sig;
    uint32_t x = g.identity();
    do {
        sig.push_back(chi.value_index(x));
        x = g.multiply(x, element);
    } while (x != g.identity());
    return sig;
}

std::vector<Integer> multiplicities_from(const ElementCharacter& chi, const std::vector<uint32_t>& sig) {
    const unsigned o = static_cast<unsigned>(sig.size());
    std::vector<Integer> out(o);
    for (unsigned t = 0; t < o; ++t) {
        Cyclo s(0);
        for (unsigned j = 0; j < o; ++j) s += Cyclo::zeta(o, -static_cast<long>((t * j) % o)) * chi.distinct()[sig[j]];
        s = s * Cyclo(Rational(1, o));
        if (!s.is_rational() || s.rational_value().get_den() != 1 || s.rational_value() < 0)
            throw NotRationalInteger("eigenvalue multiplicity " + s.str() + " is not a nonnegative integer");
        out[t] = s.rational_value().get_num();
    }
    return out;
}

}  // namespace

std::vector<Integer> eigen_multiplicities(const ElementCharacter& chi, uint32_t element) {
    return multiplicities_from(chi, power_signature(chi, element));
}

DropReport projective_drop(const ElementCharacter& chi) {
    const EnumeratedGroup& g = chi.group();
    const Integer d = to_rational_integer(chi.degree());
    if (d <= 0) throw ValidationError("degree must be positive");
    const Cyclo d2(Integer(d * d));
    // |chi(g)| = d exactly when rho(g) is scalar
    std::vector<char> scalar_value(chi.distinct().size());
    for (std::size_t i = 0; i < scalar_value.size(); ++i) scalar_value[i] = abs_square(chi.distinct()[i]) == d2;

    std::map<std::vector<uint32_t>, Integer> cache;  // signature -> max multiplicity
    DropReport r;
    bool found = false;
    for (uint32_t e = 0; e < g.order(); ++e) {
        if (scalar_value[chi.value_index(e)]) continue;
        ++r.counted;
        auto sig = power_signature(chi, e);
        auto it = cache.find(sig);
        if (it == cache.end()) {
            auto mult = multiplicities_from(chi, sig);
            Integer mx = 0;
            for (const auto& m : mult)
                if (m > mx) mx = m;
            it = cache.emplace(std::move(sig), mx).first;
        }
        Rational v(d - it->second, d);
        v.canonicalize();
        if (!found || v < r.drop) {
            found = true;
            r.drop = v;
            r.witness = e;
            r.witness_order = static_cast<unsigned>(it->first.size());
            r.max_eigenspace = it->second;
        }
    }
    if (!found) throw ValidationError("every element acts by a scalar; the drop is undefined");
    r.signatures = cache.size();
    return r;
}

unsigned cyclo_rank(CycloMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    unsigned rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        const Cyclo inv = m[rank][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c].is_zero()) continue;
            const Cyclo f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!m[rank][j].is_zero()) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

unsigned eigenspace_dim(const CycloMatrix& rho, const Cyclo& lambda, const std::vector<CycloMatrix>& constraints) {
    const std::size_t n = rho.size();
    CycloMatrix stack = rho;
    for (std::size_t i = 0; i < n; ++i) stack[i][i] -= lambda;
    for (const auto& c : constraints) stack.insert(stack.end(), c.begin(), c.end());
    return static_cast<unsigned>(n - cyclo_rank(std::move(stack)));
}

CycloMatrix weil_cyclo_matrix(const WeilRep& rep, uint32_t element) {
    ZetaMatrix z = weil_matrix(rep, element);
    const Cyclo inv_scale(Rational(1, rep.scale()));
    CycloMatrix m(rep.dim, std::vector<Cyclo>(rep.dim));
    for (unsigned r = 0; r < rep.dim; ++r)
        for (unsigned c = 0; c < rep.dim; ++c)
            if (!z.is_zero_entry(r, c)) m[r][c] = zeta_int_to_cyclo(rep.p, z.entry(r, c)) * inv_scale;
    return m;
}

std::vector<CycloMatrix> weil_part_constraint(const WeilRep& rep, WeilPart part) {
    if (part == WeilPart::Total) return {};
    ZetaMatrix z = parity_operator(rep);
    CycloMatrix m(rep.dim, std::vector<Cyclo>(rep.dim));
    for (unsigned r = 0; r < rep.dim; ++r) {
        for (unsigned c = 0; c < rep.dim; ++c)
            if (!z.is_zero_entry(r, c)) m[r][c] = zeta_int_to_cyclo(rep.p, z.entry(r, c));
        m[r][r] += Cyclo(part == WeilPart::Even ? -1 : 1);
    }
    return {m};
}

CycloMatrix icosian_cyclo_matrix(const EnumeratedGroup& g, uint32_t element) {
    const Mat2Cyclo& a = g.cyclo_element(element);
    return {{a[0], a[1]}, {a[2], a[3]}};
}

uint64_t drop_rank_crosscheck(const ElementCharacter& chi, const std::function<CycloMatrix(uint32_t)>& matrix,
                              const std::vector<CycloMatrix>& constraints) {
    const EnumeratedGroup& g = chi.group();
    std::map<std::vector<uint32_t>, uint32_t> reps;
    for (uint32_t e = 0; e < g.order(); ++e) reps.emplace(power_signature(chi, e), e);
    for (const auto& [sig, e] : reps) {
        auto mult = multiplicities_from(chi, sig);
        CycloMatrix rho = matrix(e);
        const unsigned o = static_cast<unsigned>(sig.size());
        for (unsigned t = 0; t < o; ++t) {
            unsigned dim = eigenspace_dim(rho, Cyclo::zeta(o, t), constraints);
            if (Integer(dim) != mult[t])
                throw HomomorphismViolation("eigenspace of zeta_" + std::to_string(o) + "^" + std::to_string(t) +
                                            " of element " + std::to_string(e) + " has dimension " +
                                            std::to_string(dim) + ", projector trace gives " + mult[t].get_str());
        }
    }
    return reps.size();
}

}  // namespace momentforge
