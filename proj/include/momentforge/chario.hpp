#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "momentforge/character.hpp"

namespace momentforge {

struct TableClass {
    std::string label;
    Integer size;
    std::map<unsigned, std::string> powers;  ///< prime -> label of the class of x^p (p = 2 required)
};

/// A (partial) character table: class data plus any number of named characters.
///
/// Text format:
///   [meta]      name=…  order=…  conductor=…  source=…   (one key=value per line)
///   [classes]   label size p2=label [p3=label] [p5=label] [p7=label]
///   [char NAME] one value per line in class order (Cyclo grammar)
/// '#' starts a comment; blank lines are ignored.
struct CharTable {
    std::string name;
    Integer order;
    unsigned conductor = 1;
    std::string source;
    std::vector<TableClass> classes;
    std::vector<std::pair<std::string, std::vector<Cyclo>>> chars;

    std::size_t class_index(const std::string& label) const;  ///< throws ValidationError if absent
    const std::vector<Cyclo>& character(const std::string& name) const;
    bool has_character(const std::string& name) const;
};

/// Parses and validates; throws ParseError (with line/column) or ValidationError.
CharTable parse_table(const std::string& text);
/// Throws ValidationError naming the first violated invariant:
/// class sizes sum to the order, identity class first, p-power maps resolve,
/// values lie in Q(zeta_N), chi(1) a positive integer, <chi, chi> = 1.
void validate(const CharTable& t);
std::string serialize(const CharTable& t);

Integer table_moment(const CharTable& t, const std::string& chr, unsigned k);
/// (1/|G|) sum_c |c| chi(p2(c)).
int table_fs(const CharTable& t, const std::string& chr);
CharOracle table_oracle(const CharTable& t, const std::string& chr);

/// Resolves a path relative to the data directory: $MOMENTFORGE_DATA if set,
/// else the data/ tree of the source checkout.  Absolute or existing paths are returned unchanged.
std::string data_path(const std::string& path);
CharTable load_table(const std::string& path);

}  // namespace momentforge
