#include <sstream>

#include "momentforge/groups.hpp"

namespace momentforge {

std::string write_generator_file(const GroupSpec& spec, const std::vector<MatFq>& gens) {
    std::ostringstream os;
    std::string fam = to_string(spec.family);
    os << "group " << fam << " " << spec.n << " " << spec.q << "\n";
    os << "# " << gens.size() << " generators, entries are field-element integers\n";
    for (std::size_t g = 0; g < gens.size(); ++g) {
        os << "\n";
        for (unsigned r = 0; r < gens[g].rows(); ++r) {
            for (unsigned c = 0; c < gens[g].cols(); ++c) os << (c ? " " : "") << gens[g](r, c);
            os << "\n";
        }
    }
    return os.str();
}

std::pair<GroupSpec, std::vector<MatFq>> read_generator_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    GroupSpec spec;
    std::vector<long> values;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (!have_header) {
            if (tok != "group") throw ParseError("expected 'group <family> <n> <q>'", lineno, 1);
            std::string fam;
            unsigned n = 0, q = 0;
            if (!(ls >> fam >> n >> q)) throw ParseError("malformed group header", lineno, 1);
            spec = GroupSpec::parse(fam + ":" + std::to_string(n) + ":" + std::to_string(q));
            have_header = true;
            continue;
        }
        do {
            try {
                values.push_back(std::stol(tok));
            } catch (const std::exception&) {
                throw ParseError("expected an integer, got '" + tok + "'", lineno, 1);
            }
        } while (ls >> tok);
    }
    if (!have_header) throw ParseError("missing group header");
    const FqField& F = FqField::get(spec.entry_field_size());
    const std::size_t sq = static_cast<std::size_t>(spec.n) * spec.n;
    if (values.empty() || values.size() % sq != 0) throw ParseError("entry count is not a multiple of n^2");
    std::vector<MatFq> gens;
    for (std::size_t off = 0; off < values.size(); off += sq) {
        MatFq m(F, spec.n, spec.n);
        for (std::size_t i = 0; i < sq; ++i) {
            long v = values[off + i];
            if (v < 0 || v >= static_cast<long>(F.q())) throw ParseError("field element out of range");
            m(static_cast<unsigned>(i / spec.n), static_cast<unsigned>(i % spec.n)) = static_cast<FqField::Elem>(v);
        }
        gens.push_back(m);
    }
    return {spec, gens};
}

}  // namespace momentforge
