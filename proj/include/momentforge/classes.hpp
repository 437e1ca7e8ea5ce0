#pragma once

#include <string>
#include <vector>

#include "momentforge/character.hpp"
#include "momentforge/chario.hpp"

namespace momentforge {

/// Conjugacy classes of an enumerated group, by orbits of conjugation by the
/// generators.  Only used to write class-indexed tables of enumerable groups.
struct ConjugacyClasses {
    std::vector<uint32_t> class_of;        ///< element -> class
    std::vector<uint32_t> representative;  ///< smallest element index in the class
    std::vector<Integer> size;
    std::vector<unsigned> order;      ///< element order
    std::vector<std::string> label;   ///< order + letter, e.g. "4b"; classes sorted by (order, representative)

    std::size_t count() const { return representative.size(); }
};

ConjugacyClasses conjugacy_classes(const EnumeratedGroup& g);

/// Class-indexed table of the given characters with p2, p3, p5 power maps.
/// Throws ValidationError if a character is not constant on some class.
CharTable generate_table(const EnumeratedGroup& g, const std::string& name, const std::vector<ElementCharacter>& chars,
                         const std::string& source);

}  // namespace momentforge
