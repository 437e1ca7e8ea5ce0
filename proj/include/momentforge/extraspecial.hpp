#pragma once

#include <optional>
#include <string>
#include <vector>

#include "momentforge/finfield.hpp"
#include "momentforge/rational.hpp"

namespace momentforge {

/// Group acting on W = F_p^{2a}.
enum class ActingGroup { Sp, OPlus, OMinus };
/// Which classical group the normalizer N of the extraspecial group sits in.
enum class NormalizerCase { GL, Sp, O };

ActingGroup parse_acting_group(const std::string& s);  ///< "Sp", "O+", "O-"
NormalizerCase parse_normalizer_case(const std::string& s);  ///< "GL", "Sp", "O"
std::string to_string(ActingGroup g);
std::string to_string(NormalizerCase c);
/// GL -> Sp_{2a}(p), Sp -> O^-_{2a}(2), O -> O^+_{2a}(2).
ActingGroup acting_group_for(NormalizerCase c);

/// Two pinned generating sets, used to check that orbit counts do not depend on the choice.
enum class GeneratorSet { Standard, Alternative };

constexpr uint64_t kTupleStateCap = uint64_t(1) << 28;

struct TupleOrbitProblem {
    unsigned p = 2, a = 1;
    ActingGroup acting = ActingGroup::Sp;
    unsigned tuple_len = 3;  ///< 2..4; tuples (v_1..v_t) with sum zero
};

struct OrbitReport {
    uint64_t orbit_count = 0;
    std::vector<uint64_t> orbit_sizes;  ///< ascending
    uint64_t total = 0;                 ///< p^{2a(t-1)}
};

/// The form preserved by the acting group.
FormSpace acting_space(unsigned p, unsigned a, ActingGroup g);
std::vector<MatFq> acting_generators(unsigned p, unsigned a, ActingGroup g, GeneratorSet set = GeneratorSet::Standard);

/// Orbits of the diagonal action on zero-sum tuples.  A tuple is encoded by its
/// first t-1 vectors; throws MemoryCapExceeded above `state_cap` states.
OrbitReport count_zero_sum_orbits(const TupleOrbitProblem& prob, GeneratorSet set = GeneratorSet::Standard,
                                  uint64_t state_cap = kTupleStateCap);

/// M_{2k}(N, V) for dim V = p^a, as the orbit count on zero-sum k-tuples.
Integer extraspecial_moment(unsigned p, unsigned a, NormalizerCase c, unsigned k,
                            GeneratorSet set = GeneratorSet::Standard);

/// Stable classical moment of the ambient group: GL_d, Sp_d or SO_d with d = p^a.
Integer extraspecial_ambient_moment(unsigned p, unsigned a, NormalizerCase c, unsigned k);

struct ExtraspecialComparison {
    Integer normalizer, ambient, difference;
    /// Reference value of M_{2k}(N) - M_{2k}(ambient), where one is tabulated for these parameters.
    std::optional<Integer> reference_difference;
    bool reference_is_lower_bound = false;
    bool reference_mismatch = false;
};

ExtraspecialComparison compare_extraspecial(unsigned p, unsigned a, NormalizerCase c, unsigned k);

struct VectorOrbit {
    uint64_t size = 0;
    uint64_t representative = 0;  ///< smallest vector index in the orbit
    bool isotropic = false;
};

struct TransitivityReport {
    std::vector<VectorOrbit> orbits;  ///< orbits on W \ {0}, by representative
    bool transitive = false;
    /// every orbit consists of vectors of one isotropy type, and no two orbits share a type
    bool isotropy_split = false;
};

TransitivityReport transitivity_check(unsigned p, unsigned a, ActingGroup g, GeneratorSet set = GeneratorSet::Standard);

}  // namespace momentforge
