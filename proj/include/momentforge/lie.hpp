#pragma once

#include <map>
#include <string>
#include <vector>

#include "momentforge/errors.hpp"
#include "momentforge/rational.hpp"

namespace momentforge {

enum class LieType { A, B, C, D };

/// Classical root system.  Type A is handled with GL weights (rank+1 coordinates).
struct RootSystem {
    LieType type = LieType::A;
    unsigned rank = 1;

    RootSystem() = default;
    RootSystem(LieType t, unsigned r);

    /// "A3", "C3", "B2", "D4" (also "GL4", "Sp6", "SO7", "SO8").
    static RootSystem parse(const std::string& text);
    std::string str() const;
    /// Number of coordinates of a weight.
    unsigned coords() const { return type == LieType::A ? rank + 1 : rank; }
    /// Dimension of the natural module.
    unsigned natural_dim() const;
    /// Ambient group label: GL_d, Sp_d, SO_d.
    std::string group_label() const;

    friend bool operator==(const RootSystem&, const RootSystem&) = default;
};

/// Weight in standard e_i coordinates; only integral weights are supported
/// (no spin weights in types B/D).
using Weight = std::vector<long>;
/// Highest weight -> multiplicity, ordered lexicographically on coordinates.
using Decomposition = std::map<Weight, Integer>;

bool is_dominant(const RootSystem& rs, const Weight& w);
void require_dominant(const RootSystem& rs, const Weight& w);

/// Fundamental weight varpi_i (1-based) in e-coordinates; type A uses the
/// GL convention (1^i, 0^{n+1-i}).
Weight fundamental_weight(const RootSystem& rs, unsigned i);
Weight zero_weight(const RootSystem& rs);
/// Highest root (the adjoint module's highest weight).
Weight highest_root(const RootSystem& rs);
/// Positive roots.
std::vector<Weight> positive_roots(const RootSystem& rs);
std::vector<Weight> simple_roots(const RootSystem& rs);

Integer weyl_dim(const RootSystem& rs, const Weight& lambda);

/// Dominant weight multiplicities of L(lambda).
std::map<Weight, Integer> freudenthal_mults(const RootSystem& rs, const Weight& lambda);
/// The W-orbit of a dominant weight.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& dominant);
/// Dominant representative of the W-orbit of w.
Weight dominant_of(const RootSystem& rs, const Weight& w);

/// (sum mult L(lambda)) (x) V, or (x) V* in type A.
Decomposition tensor_by_natural(const RootSystem& rs, const Decomposition& input, bool dual = false);
Decomposition tensor_product(const RootSystem& rs, const Weight& lambda, const Weight& mu);
Integer hom_mult(const RootSystem& rs, const Weight& nu, const Weight& lambda, const Weight& mu);
Integer decomposition_dim(const RootSystem& rs, const Decomposition& d);

/// Decomposition of V^{(x) k}.
Decomposition natural_tensor_power(const RootSystem& rs, unsigned k);

constexpr unsigned kDefaultMomentCap = 8;
/// M_{2k} of the ambient group: sum of squared multiplicities in V^{(x) k}.
Integer classical_moment(const RootSystem& rs, unsigned k, unsigned cap = kDefaultMomentCap);

std::string weight_str(const Weight& w);
Weight parse_weight(const std::string& text);

}  // namespace momentforge
