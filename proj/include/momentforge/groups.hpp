#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "momentforge/cyclo.hpp"
#include "momentforge/errors.hpp"
#include "momentforge/finfield.hpp"

namespace momentforge {

enum class Family { SL, SU, GU, Sp, GOPlus, GOMinus, BinaryIcosahedral };

std::string to_string(Family f);

struct GroupSpec {
    Family family = Family::Sp;
    unsigned n = 2;  ///< matrix degree
    unsigned q = 2;  ///< field size; unitary groups live over F_{q^2}

    /// "sp:4:3", "su:3:3", "gu:5:2", "sl:2:5", "go+:6:2", "go-:6:2", "2i".
    static GroupSpec parse(const std::string& text);
    std::string str() const;
    /// Field the matrix entries live in.
    unsigned entry_field_size() const;
};

/// Order from the classical product formula.
Integer classical_order(const GroupSpec& spec);

/// The pinned natural form of the group (absent for SL and BinaryIcosahedral).
std::optional<FormSpace> natural_form(const GroupSpec& spec);

constexpr uint64_t kDefaultOrderCap = 20'000'000;

struct EnumerateOptions {
    uint64_t order_cap = kDefaultOrderCap;
    /// Keep the right-multiplication table by generators (needed for paired
    /// enumeration).  Costs 4 bytes per element per generator.
    bool keep_edges = false;
};

using Mat2Cyclo = std::array<Cyclo, 4>;  // row-major 2x2

/// Pinned standard generators.
std::vector<MatFq> standard_generators(const GroupSpec& spec);
std::vector<Mat2Cyclo> icosian_generators();

/// Finite matrix group materialized by breadth-first closure.  Element 0 is
/// the identity; element i*s for generator s is discovered in BFS order, so
/// the indexed list is a deterministic function of the generator list.
class EnumeratedGroup {
public:
    const GroupSpec& spec() const { return spec_; }
    uint64_t order() const { return order_; }
    unsigned degree() const { return n_; }
    bool is_matrix_fq() const { return spec_.family != Family::BinaryIcosahedral; }
    const FqField& field() const { return *field_; }

    MatFq element(uint32_t i) const;
    const Mat2Cyclo& cyclo_element(uint32_t i) const { return cyc_[i]; }
    const uint8_t* raw(uint32_t i) const { return &arena_[static_cast<std::size_t>(i) * n_ * n_]; }

    std::optional<uint32_t> index_of(const MatFq& m) const;
    uint32_t multiply(uint32_t a, uint32_t b) const;
    uint32_t inverse(uint32_t a) const;
    uint32_t square(uint32_t a) const { return multiply(a, a); }
    uint32_t power(uint32_t a, uint64_t e) const;
    unsigned element_order(uint32_t a) const;
    uint32_t identity() const { return 0; }

    std::size_t generator_count() const { return gens_count(); }
    const std::vector<MatFq>& generators() const { return gens_; }
    const std::vector<Mat2Cyclo>& cyclo_generators() const { return cyc_gens_; }

    bool has_edges() const { return !edges_.empty(); }
    /// index of element(i) * generator(s); requires keep_edges
    uint32_t edge(uint32_t i, std::size_t s) const { return edges_[static_cast<std::size_t>(i) * gens_count() + s]; }
    /// The BFS tree: element i (i > 0) was first reached as parent(i) * gen(via(i)).
    uint32_t parent(uint32_t i) const { return parent_[i]; }
    uint8_t via(uint32_t i) const { return via_[i]; }

    /// Determinant of an Fq element.
    FqField::Elem det(uint32_t i) const;

    friend EnumeratedGroup enumerate_generated(const GroupSpec&, const std::vector<MatFq>&, const EnumerateOptions&,
                                               std::optional<uint64_t>);
    friend EnumeratedGroup enumerate_icosians(const EnumerateOptions&);

private:
    GroupSpec spec_;
    uint64_t order_ = 0;
    unsigned n_ = 0;
    const FqField* field_ = nullptr;
    std::vector<MatFq> gens_;
    std::vector<uint8_t> arena_;
    std::vector<uint32_t> table_;  // open-addressing hash of element indices
    uint64_t mask_ = 0;
    std::vector<uint32_t> edges_;
    std::vector<uint32_t> parent_;
    std::vector<uint8_t> via_;
    // binary icosahedral backend
    std::vector<Mat2Cyclo> cyc_;
    std::vector<Mat2Cyclo> cyc_gens_;
    std::vector<uint32_t> cyc_mul_;

    std::size_t gens_count() const { return is_matrix_fq() ? gens_.size() : cyc_gens_.size(); }
    void mul_raw(const uint8_t* a, const uint8_t* b, uint8_t* out) const;
    std::optional<uint32_t> lookup(const uint8_t* key) const;
    uint64_t hash_key(const uint8_t* key) const;
    std::vector<uint8_t> mul_tab_, add_tab_;
};

/// Enumerate with the pinned standard generators; verifies the classical order.
EnumeratedGroup enumerate(const GroupSpec& spec, const EnumerateOptions& opt = {});
/// Enumerate the group generated by `gens`; if `expected` is given the
/// closure order must match it (ClosureMismatch otherwise).
EnumeratedGroup enumerate_generated(const GroupSpec& spec, const std::vector<MatFq>& gens,
                                    const EnumerateOptions& opt = {}, std::optional<uint64_t> expected = {});
EnumeratedGroup enumerate_icosians(const EnumerateOptions& opt = {});

/// Index of g^2.
uint32_t square_map(const EnumeratedGroup& g, uint32_t element);

/// Paired enumeration: extends a representation given on generators to every
/// element along the BFS tree, then checks rho(g) rho(s) = rho(gs) on every
/// edge of the closure.  Throws HomomorphismViolation on any failure.
template <class Rep, class Mul, class Eq>
std::vector<Rep> pair_representation(const EnumeratedGroup& g, const Rep& identity, const std::vector<Rep>& images,
                                      Mul mul, Eq eq) {
    if (!g.has_edges()) throw ValidationError("paired enumeration needs a group enumerated with edges");
    const std::size_t ns = images.size();
    std::vector<Rep> rho(g.order());
    rho[0] = identity;
    for (uint32_t i = 1; i < g.order(); ++i) rho[i] = mul(rho[g.parent(i)], images[g.via(i)]);
    for (uint32_t i = 0; i < g.order(); ++i)
        for (std::size_t s = 0; s < ns; ++s) {
            uint32_t j = g.edge(i, s);
            if (g.parent(j) == i && g.via(j) == s && j != 0) continue;  // tree edge, holds by construction
            if (!eq(mul(rho[i], images[s]), rho[j]))
                throw HomomorphismViolation("rho(g) rho(s) != rho(gs) at element " + std::to_string(i) +
                                            ", generator " + std::to_string(s));
        }
    return rho;
}

/// Generator data file: header `group <family> <n> <q>`, then matrices
/// row-major as field-element integers ('#' starts a comment).
std::string write_generator_file(const GroupSpec& spec, const std::vector<MatFq>& gens);
std::pair<GroupSpec, std::vector<MatFq>> read_generator_file(const std::string& text);

/// Reflections (p = 2: x -> x + B(x, v) v with Q(v) = 1; odd p: x -> x - B(x,v)/Q(v) v)
/// in a minimal greedy set of nonsingular vectors whose reflections generate
/// the group generated by all reflections.  `start` skips that many candidates
/// to obtain an alternative generating set.
std::vector<MatFq> reflection_generators(const FormSpace& space, unsigned start = 0);
/// Symplectic transvections x -> x + <x, v> v chosen the same way (p = 2 gives Sp).
std::vector<MatFq> transvection_generators(const FormSpace& space, unsigned start = 0);

}  // namespace momentforge
