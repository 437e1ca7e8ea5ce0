#pragma once

#include <functional>
#include <vector>

#include "momentforge/character.hpp"
#include "momentforge/weil.hpp"

namespace momentforge {

/// Eigenvalue multiplicities of rho(g): entry t is the multiplicity of
/// zeta_o^t, o = order(g), from the projector traces (1/o) sum_j zeta_o^{-tj} chi(g^j).
std::vector<Integer> eigen_multiplicities(const ElementCharacter& chi, uint32_t element);

struct DropReport {
    Rational drop;               ///< min (d - max eigenspace dim) / d over g with rho(g) non-scalar
    uint32_t witness = 0;        ///< an element attaining the minimum
    unsigned witness_order = 0;
    Integer max_eigenspace = 0;  ///< the attaining eigenspace dimension
    uint64_t counted = 0;        ///< elements with non-scalar image
    uint64_t signatures = 0;     ///< distinct power signatures evaluated
};

/// Throws ValidationError if every element acts by a scalar.
DropReport projective_drop(const ElementCharacter& chi);

using CycloMatrix = std::vector<std::vector<Cyclo>>;

unsigned cyclo_rank(CycloMatrix m);
/// dim Ker(rho - lambda) inside Ker(c) for each constraint matrix c (rows stacked).
unsigned eigenspace_dim(const CycloMatrix& rho, const Cyclo& lambda, const std::vector<CycloMatrix>& constraints = {});

/// Exact image of an element under the Weil representation (unscaled).
CycloMatrix weil_cyclo_matrix(const WeilRep& rep, uint32_t element);
/// Constraint selecting a parity constituent: P - 1 (even) or P + 1 (odd); empty for the total.
std::vector<CycloMatrix> weil_part_constraint(const WeilRep& rep, WeilPart part);
/// The natural 2-dimensional matrix of a binary icosahedral element.
CycloMatrix icosian_cyclo_matrix(const EnumeratedGroup& g, uint32_t element);

/// Recomputes the eigenspace dimensions of one element per power signature by
/// exact ranks of explicit matrices and compares them with the projector-trace
/// multiplicities.  Returns the number of representatives checked; throws
/// HomomorphismViolation on disagreement.
uint64_t drop_rank_crosscheck(const ElementCharacter& chi, const std::function<CycloMatrix(uint32_t)>& matrix,
                              const std::vector<CycloMatrix>& constraints = {});

}  // namespace momentforge
