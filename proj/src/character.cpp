#include "momentforge/character.hpp"

#include <map>

namespace momentforge {

ElementCharacter::ElementCharacter(const EnumeratedGroup& g, std::string name, std::vector<uint32_t> index,
                                   std::vector<Cyclo> distinct)
    : group_(&g), name_(std::move(name)), index_(std::move(index)), values_(std::move(distinct)) {
    if (index_.size() != g.order()) throw ValidationError("character must have one value per element");
}

std::vector<uint64_t> ElementCharacter::value_counts() const {
    std::vector<uint64_t> c(values_.size(), 0);
    for (uint32_t i : index_) ++c[i];
    return c;
}

ElementCharacter ElementCharacter::conj() const { return galois(-1); }

ElementCharacter ElementCharacter::galois(long a) const {
    ElementCharacter out = *this;
    for (auto& v : out.values_) v = v.galois(a);
    return out;
}

ElementCharacter ElementCharacter::renamed(std::string name) const {
    ElementCharacter out = *this;
    out.name_ = std::move(name);
    return out;
}

uint32_t ValueInterner::intern(const Cyclo& v) {
    auto [it, fresh] = index_.try_emplace(v.str(), static_cast<uint32_t>(values_.size()));
    if (fresh) values_.push_back(v.minimized());
    return it->second;
}

std::string to_string(CharOracle::Source s) {
    switch (s) {
        case CharOracle::Source::RepTrace: return "rep-trace";
        case CharOracle::Source::ClosedFormula: return "closed-formula";
        case CharOracle::Source::Table: return "table";
    }
    return "?";
}

CharOracle CharOracle::from_abs_squares(std::string name, Source source, const Integer& order, const Integer& degree,
                                        const std::vector<std::pair<Cyclo, Integer>>& abs_squares) {
    CharOracle o;
    o.name = std::move(name);
    o.source = source;
    o.order = order;
    o.degree = degree;
    std::map<std::string, std::size_t> slot;
    Integer total = 0;
    for (const auto& [v, n] : abs_squares) {
        if (n == 0) continue;
        total += n;
        auto [it, fresh] = slot.try_emplace(v.str(), o.abs_square_counts.size());
        if (fresh)
            o.abs_square_counts.emplace_back(v.minimized(), n);
        else
            o.abs_square_counts[it->second].second += n;
    }
    if (total != order)
        throw ValidationError("character data for " + o.name + " covers " + total.get_str() + " elements, group order is " +
                              order.get_str());
    if (degree <= 0) throw ValidationError("character " + o.name + " has non-positive degree");
    return o;
}

CharOracle CharOracle::from_values(std::string name, Source source, const Integer& order,
                                   const std::vector<std::pair<Cyclo, Integer>>& values) {
    if (values.empty()) throw ValidationError("empty character");
    Integer degree = to_rational_integer(values.front().first);
    std::vector<std::pair<Cyclo, Integer>> sq;
    sq.reserve(values.size());
    for (const auto& [v, n] : values) sq.emplace_back(abs_square(v), n);
    return from_abs_squares(std::move(name), source, order, degree, sq);
}

CharOracle CharOracle::from_character(const ElementCharacter& chi, Source source) {
    std::vector<uint64_t> counts = chi.value_counts();
    std::vector<std::pair<Cyclo, Integer>> vals;
    vals.reserve(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i)
        vals.emplace_back(chi.distinct()[i], Integer(static_cast<unsigned long>(counts[i])));
    // degree comes from the identity (element 0), not from the first distinct value
    CharOracle o = from_values(chi.name(), source, Integer(static_cast<unsigned long>(chi.group().order())), vals);
    o.degree = to_rational_integer(chi.degree());
    return o;
}

}  // namespace momentforge
