#pragma once

#include <optional>

#include "momentforge/character.hpp"
#include "momentforge/groups.hpp"

namespace momentforge {

/// Weil character of GU_n(q) (or its restriction to SU_n(q)).  The total
/// character is (-1)^n (-q)^{dim Ker(g-1)}, signed so that its degree is q^n.
/// Constituent i (0 <= i <= q) is the isotypic part on which the scalar
/// eps = nu^{q-1} (nu the pinned primitive element of F_{q^2}) acts by
/// zeta_{q+1}^i; i = 0 is the distinguished constituent.
struct UnitaryWeilChar {
    unsigned n = 1, q = 2;
    std::optional<unsigned> constituent;  // empty: total
};

/// total(g) at each scalar shift: dims[j] = dim Ker(g - eps^{-j}), j = 0..q.
std::vector<unsigned> unitary_kernel_profile(const MatFq& g, unsigned q);
Cyclo unitary_weil_from_profile(const UnitaryWeilChar& c, const std::vector<unsigned>& profile);
/// Throws ElementNotInGroup unless g is unitary for the pinned hermitian form.
Cyclo unitary_weil_value(const UnitaryWeilChar& c, const MatFq& g);
Integer unitary_weil_degree(const UnitaryWeilChar& c);

/// Character values over an enumerated GU or SU group.
ElementCharacter unitary_weil_character(const EnumeratedGroup& g, std::optional<unsigned> constituent);

}  // namespace momentforge
