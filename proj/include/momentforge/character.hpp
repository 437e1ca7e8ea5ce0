#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "momentforge/cyclo.hpp"
#include "momentforge/groups.hpp"

namespace momentforge {

/// A character of an enumerated group: one value per element, stored as an
/// index into a table of distinct values.
class ElementCharacter {
public:
    ElementCharacter() = default;
    ElementCharacter(const EnumeratedGroup& g, std::string name, std::vector<uint32_t> index, std::vector<Cyclo> distinct);

    const EnumeratedGroup& group() const { return *group_; }
    const std::string& name() const { return name_; }
    const Cyclo& operator()(uint32_t element) const { return values_[index_[element]]; }
    uint32_t value_index(uint32_t element) const { return index_[element]; }
    const std::vector<Cyclo>& distinct() const { return values_; }
    std::vector<uint64_t> value_counts() const;
    Cyclo degree() const { return (*this)(0); }

    ElementCharacter conj() const;
    ElementCharacter galois(long a) const;
    ElementCharacter renamed(std::string name) const;

    /// Evaluate f on every element, interning equal values.
    template <class F>
    static ElementCharacter build(const EnumeratedGroup& g, std::string name, F f);

private:
    const EnumeratedGroup* group_ = nullptr;
    std::string name_;
    std::vector<uint32_t> index_;
    std::vector<Cyclo> values_;
};

/// Interns Cyclo values (compared after minimizing the conductor).
class ValueInterner {
public:
    uint32_t intern(const Cyclo& v);
    std::vector<Cyclo> take() { return std::move(values_); }
    const std::vector<Cyclo>& values() const { return values_; }

private:
    std::vector<Cyclo> values_;
    std::unordered_map<std::string, uint32_t> index_;  // keyed by the canonical text form
};

template <class F>
ElementCharacter ElementCharacter::build(const EnumeratedGroup& g, std::string name, F f) {
    ValueInterner in;
    std::vector<uint32_t> idx(g.order());
    for (uint32_t i = 0; i < g.order(); ++i) idx[i] = in.intern(f(i));
    return ElementCharacter(g, std::move(name), std::move(idx), in.take());
}

/// The moment engine's view of a character: group order, degree, and the
/// distribution of |chi(g)|^2 over the group.
struct CharOracle {
    enum class Source { RepTrace, ClosedFormula, Table };

    std::string name;
    Source source = Source::RepTrace;
    Integer order = 0;
    Integer degree = 0;
    /// (|chi(g)|^2, number of g with that value); values pairwise distinct
    std::vector<std::pair<Cyclo, Integer>> abs_square_counts;

    static CharOracle from_character(const ElementCharacter& chi, Source source = Source::RepTrace);
    /// From chi values with multiplicities (e.g. class sizes).
    static CharOracle from_values(std::string name, Source source, const Integer& order,
                                  const std::vector<std::pair<Cyclo, Integer>>& values);
    /// From an already aggregated |chi|^2 distribution.
    static CharOracle from_abs_squares(std::string name, Source source, const Integer& order, const Integer& degree,
                                       const std::vector<std::pair<Cyclo, Integer>>& abs_squares);
};

std::string to_string(CharOracle::Source s);

}  // namespace momentforge
