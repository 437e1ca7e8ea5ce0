#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>

#include "momentforge/character.hpp"
#include "momentforge/groups.hpp"
#include "momentforge/intcyclo.hpp"

namespace momentforge {

enum class WeilPart { Total, Even, Odd };
WeilPart parse_weil_part(const std::string& s);
std::string to_string(WeilPart p);

constexpr unsigned kWeilDimCap = 512;
/// Bytes allowed for the per-element images of a paired enumeration.
constexpr uint64_t kWeilMemoryCap = 4ull << 30;

/// Weil representation of Sp_{2m}(q), q odd, on functions F_q^m -> C.
/// With psi(a) = zeta_p^{Tr a} and the pinned symplectic form:
///   m(A) = diag(A, A^-T):   f(u) -> eta(det A) f(A^-1 u)
///   l(C) = [[I,0],[C,I]]:   f(u) -> psi(-u.Cu/2) f(u)
///   w = [[0,I],[-I,0]]:     f(u) -> t eta(-1)^m G^-m ... sum_v psi(u.v) f(v)
/// where G = sum_x psi(x^2) and the sign t = +-1 is fixed by (w l(-I))^3 = 1.
/// Images are stored scaled by q^m so that every entry lies in Z[zeta_p].
struct WeilRep {
    const EnumeratedGroup* group = nullptr;
    unsigned q = 0, p = 0, m = 0;
    unsigned dim = 0;  // q^m
    int fourier_sign = 1;
    ZetaInt gauss;                   // G in the basis 1..zeta^{p-2}
    std::vector<ZetaMatrix> images;  // q^m rho(s), one per group generator

    int64_t scale() const { return static_cast<int64_t>(dim); }
};

WeilRep sympl_weil(const EnumeratedGroup& g);
/// Scaled image of an arbitrary element, multiplied out along the BFS tree.
ZetaMatrix weil_matrix(const WeilRep& rep, uint32_t element);
/// The parity operator f(u) -> f(-u), unscaled.
ZetaMatrix parity_operator(const WeilRep& rep);

struct WeilCharacters {
    ElementCharacter total, even, odd;
    const ElementCharacter& part(WeilPart p) const { return p == WeilPart::Total ? total : p == WeilPart::Even ? even : odd; }
};
/// Paired enumeration: images of every element, checked on every closure
/// edge, reduced to the total character and the +-1 parity constituents.
WeilCharacters weil_characters(const WeilRep& rep);
std::pair<ElementCharacter, ElementCharacter> split_weil(const WeilRep& rep);

/// Closed-form data of g in Sp_{2m}(q) determining |chi(g)|^2 for all three parts:
/// fixed-space dimensions of g and -g, and rank / discriminant character of the
/// quadratic form v -> <v, gv>/2.
struct WeilSignature {
    unsigned fix_plus = 0, fix_minus = 0, rank = 0;
    int eta = 1;
    auto operator<=>(const WeilSignature&) const = default;
};

WeilSignature weil_signature(const MatFq& g);
std::map<WeilSignature, uint64_t> weil_signature_histogram(const EnumeratedGroup& g, unsigned threads = 1);
/// T(g) conj(omega(g)) where T(g) = tr(rho(g) P): equals q^{m-r} eta G^r.
Cyclo weil_cross_term(unsigned q, unsigned m, const WeilSignature& s);
Cyclo weil_abs_square(unsigned q, unsigned m, const WeilSignature& s, WeilPart part);
Integer weil_degree(unsigned q, unsigned m, WeilPart part);
/// Moment oracle for Sp_{2m}(q) from the signature histogram alone (no images).
CharOracle weil_formula_oracle(const EnumeratedGroup& g, WeilPart part, unsigned threads = 1);

/// (1/|G|) sum chi(g^2); throws NotRationalInteger if that is not -1, 0 or 1.
int fs_indicator(const ElementCharacter& chi);

}  // namespace momentforge
