#include "momentforge/unitary_weil.hpp"

#include <map>

#include "momentforge/errors.hpp"

namespace momentforge {

namespace {

void check_params(const UnitaryWeilChar& c) {
    if (c.n == 0) throw ValidationError("unitary Weil character needs n >= 1");
    if (c.constituent && *c.constituent > c.q) throw ValidationError("constituent index must be in 0..q");
}

}  // namespace

std::vector<unsigned> unitary_kernel_profile(const MatFq& g, unsigned q) {
    const FqField& F = g.field();
    if (F.q() != q * q) throw ValidationError("matrix is not over F_{q^2}");
    // eps generates the norm-one scalars mu_{q+1}
    const FqField::Elem eps = F.pow(F.primitive(), q - 1);
    std::vector<unsigned> out(q + 1);
    for (unsigned j = 0; j <= q; ++j) out[j] = kernel_dim(g, F.pow(eps, -static_cast<long long>(j)));
    return out;
}

Cyclo unitary_weil_from_profile(const UnitaryWeilChar& c, const std::vector<unsigned>& profile) {
    check_params(c);
    const long sign = c.n % 2 ? -1 : 1;
    auto total = [&](unsigned d) {
        Integer v = ipow(Integer(c.q), d);
        if (d % 2) v = -v;
        return Cyclo(Integer(sign * v));
    };
    if (!c.constituent) return total(profile[0]);
    // (1/(q+1)) sum_j zeta^{-ij} total(eps^j g), with total(eps^j g) = (-1)^n (-q)^{dim Ker(g - eps^-j)}
    Cyclo s(0);
    for (unsigned j = 0; j <= c.q; ++j)
        s += Cyclo::zeta(c.q + 1, -static_cast<long>(*c.constituent * j)) * total(profile[j]);
    return (s * Cyclo(Rational(1, c.q + 1))).minimized();
}

Cyclo unitary_weil_value(const UnitaryWeilChar& c, const MatFq& g) {
    check_params(c);
    if (g.rows() != c.n || g.cols() != c.n) throw ElementNotInGroup("matrix has the wrong degree");
    const FormSpace h = FormSpace::hermitian(FqField::get(c.q * c.q), c.n);
    if (&g.field() != &h.field() || !h.preserved_by(g))
        throw ElementNotInGroup("matrix does not preserve the hermitian form");
    return unitary_weil_from_profile(c, unitary_kernel_profile(g, c.q));
}

Integer unitary_weil_degree(const UnitaryWeilChar& c) {
    return to_rational_integer(unitary_weil_value(c, MatFq::identity(FqField::get(c.q * c.q), c.n)));
}

ElementCharacter unitary_weil_character(const EnumeratedGroup& g, std::optional<unsigned> constituent) {
    const GroupSpec& s = g.spec();
    if (s.family != Family::GU && s.family != Family::SU) throw ValidationError("unitary Weil character needs GU or SU");
    UnitaryWeilChar c{s.n, s.q, constituent};
    check_params(c);
    // values depend only on the kernel profile; intern per profile
    std::map<std::vector<unsigned>, uint32_t> seen;
    ValueInterner in;
    std::vector<uint32_t> idx(g.order());
    for (uint32_t i = 0; i < g.order(); ++i) {
        auto prof = unitary_kernel_profile(g.element(i), s.q);
        auto it = seen.find(prof);
        if (it == seen.end()) it = seen.emplace(prof, in.intern(unitary_weil_from_profile(c, prof))).first;
        idx[i] = it->second;
    }
    std::string name = "uweil(" + s.str() + ")." + (constituent ? std::to_string(*constituent) : std::string("total"));
    return ElementCharacter(g, name, std::move(idx), in.take());
}

}  // namespace momentforge
