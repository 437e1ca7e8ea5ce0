#include "momentforge/chario.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "momentforge/errors.hpp"
#include "momentforge/moments.hpp"

namespace momentforge {

std::size_t CharTable::class_index(const std::string& label) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].label == label) return i;
    throw ValidationError("no class labelled '" + label + "' in " + name);
}

const std::vector<Cyclo>& CharTable::character(const std::string& n) const {
    for (const auto& [k, v] : chars)
        if (k == n) return v;
    throw ValidationError("no character '" + n + "' in " + name);
}

bool CharTable::has_character(const std::string& n) const {
    for (const auto& c : chars)
        if (c.first == n) return true;
    return false;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

Integer parse_integer(const std::string& s, int line, int col) {
    Integer v;
    if (s.empty() || v.set_str(s, 10) != 0) throw ParseError("expected an integer, got '" + s + "'", line, col);
    return v;
}

unsigned parse_unsigned(const std::string& s, int line, int col) {
    Integer v = parse_integer(s, line, col);
    if (v < 1 || !v.fits_uint_p()) throw ParseError("expected a positive integer, got '" + s + "'", line, col);
    return static_cast<unsigned>(v.get_ui());
}

}  // namespace

CharTable parse_table(const std::string& text) {
    CharTable t;
    enum class Sec { None, Meta, Classes, Char } sec = Sec::None;
    std::vector<Cyclo>* cur = nullptr;
    bool have_order = false;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw.substr(0, raw.find('#'));
        const int indent = static_cast<int>(s.find_first_not_of(" \t")) + 1;
        s = trim(s);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw ParseError("unterminated section header", line, indent);
            std::string h = trim(s.substr(1, s.size() - 2));
            if (h == "meta") sec = Sec::Meta;
            else if (h == "classes") sec = Sec::Classes;
            else if (h.rfind("char", 0) == 0 && h.size() > 4 && (h[4] == ' ' || h[4] == '\t')) {
                std::string n = trim(h.substr(4));
                if (t.has_character(n)) throw ParseError("duplicate character '" + n + "'", line, indent);
                t.chars.emplace_back(n, std::vector<Cyclo>{});
                cur = &t.chars.back().second;
                sec = Sec::Char;
            } else {
                throw ParseError("unknown section '" + h + "'", line, indent);
            }
            continue;
        }
        switch (sec) {
            case Sec::None: throw ParseError("content before the first section", line, indent);
            case Sec::Meta: {
                auto eq = s.find('=');
                if (eq == std::string::npos) throw ParseError("expected key=value", line, indent);
                std::string k = trim(s.substr(0, eq)), v = trim(s.substr(eq + 1));
                const int vcol = indent + static_cast<int>(eq) + 1;
                if (k == "name") t.name = v;
                else if (k == "order") {
                    t.order = parse_integer(v, line, vcol);
                    have_order = true;
                } else if (k == "conductor") t.conductor = parse_unsigned(v, line, vcol);
                else if (k == "source") t.source = v;
                else throw ParseError("unknown meta key '" + k + "'", line, indent);
                break;
            }
            case Sec::Classes: {
                std::istringstream ls(s);
                TableClass c;
                std::string size, tok;
                if (!(ls >> c.label >> size)) throw ParseError("expected 'label size p2=label'", line, indent);
                c.size = parse_integer(size, line, indent + static_cast<int>(s.find(size, c.label.size())));
                std::size_t at = s.find(size, c.label.size()) + size.size();
                while (ls >> tok) {
                    at = s.find(tok, at);
                    const int col = indent + static_cast<int>(at);
                    at += tok.size();
                    if (tok.size() < 4 || tok[0] != 'p' || tok.find('=') == std::string::npos)
                        throw ParseError("expected pN=label, got '" + tok + "'", line, col);
                    const auto eq = tok.find('=');
                    const unsigned p = parse_unsigned(tok.substr(1, eq - 1), line, col + 1);
                    if (!c.powers.emplace(p, tok.substr(eq + 1)).second)
                        throw ParseError("repeated power map p" + std::to_string(p), line, col);
                }
                t.classes.push_back(std::move(c));
                break;
            }
            case Sec::Char: {
                try {
                    cur->push_back(Cyclo::parse(s));
                } catch (const ParseError& e) {
                    throw ParseError(std::string(e.what()), line, indent + std::max(e.column(), 1) - 1);
                }
                break;
            }
        }
    }
    if (!have_order) throw ParseError("missing order in [meta]", line, 1);
    if (t.name.empty()) throw ParseError("missing name in [meta]", line, 1);
    validate(t);
    return t;
}

void validate(const CharTable& t) {
    if (t.order <= 0) throw ValidationError(t.name + ": order must be positive");
    if (t.classes.empty()) throw ValidationError(t.name + ": no classes");
    Integer sum = 0;
    std::set<std::string> labels;
    for (const auto& c : t.classes) {
        if (c.size <= 0) throw ValidationError(t.name + ": class " + c.label + " has non-positive size");
        if (!labels.insert(c.label).second) throw ValidationError(t.name + ": duplicate class label " + c.label);
        sum += c.size;
    }
    if (sum != t.order)
        throw ValidationError(t.name + ": class sizes sum to " + sum.get_str() + ", not the order " + t.order.get_str());
    if (t.classes[0].size != 1) throw ValidationError(t.name + ": the first class must be the identity (size 1)");
    for (const auto& c : t.classes) {
        if (!c.powers.count(2)) throw ValidationError(t.name + ": class " + c.label + " has no p2 map");
        for (const auto& [p, l] : c.powers)
            if (!labels.count(l))
                throw ValidationError(t.name + ": p" + std::to_string(p) + " map of class " + c.label +
                                      " names unknown class " + l);
    }
    for (const auto& [n, v] : t.chars) {
        if (v.size() != t.classes.size())
            throw ValidationError(t.name + ": character " + n + " has " + std::to_string(v.size()) + " values for " +
                                  std::to_string(t.classes.size()) + " classes");
        for (const auto& x : v)
            if (t.conductor % x.minimized().conductor() != 0)
                throw ValidationError(t.name + ": character " + n + " has a value outside Q(zeta_" +
                                      std::to_string(t.conductor) + ")");
        if (!v[0].is_rational() || v[0].rational_value() <= 0 || v[0].rational_value().get_den() != 1)
            throw ValidationError(t.name + ": degree of " + n + " is not a positive integer");
        Cyclo ip(0);
        for (std::size_t i = 0; i < v.size(); ++i) ip += abs_square(v[i]) * Cyclo(t.classes[i].size);
        ip = ip * Cyclo(Rational(Integer(1), t.order));
        if (!(ip == Cyclo(1)))
            throw ValidationError(t.name + ": <chi, chi> = " + ip.str() + " for " + n + " (expected 1)");
    }
}

std::string serialize(const CharTable& t) {
    std::ostringstream o;
    o << "[meta]\nname=" << t.name << "\norder=" << t.order.get_str() << "\nconductor=" << t.conductor << "\n";
    if (!t.source.empty()) o << "source=" << t.source << "\n";
    o << "[classes]\n";
    for (const auto& c : t.classes) {
        o << c.label << " " << c.size.get_str();
        for (const auto& [p, l] : c.powers) o << " p" << p << "=" << l;
        o << "\n";
    }
    for (const auto& [n, v] : t.chars) {
        o << "[char " << n << "]\n";
        for (const auto& x : v) o << x.str() << "\n";
    }
    return o.str();
}

CharOracle table_oracle(const CharTable& t, const std::string& chr) {
    const auto& v = t.character(chr);
    std::vector<std::pair<Cyclo, Integer>> vals;
    for (std::size_t i = 0; i < v.size(); ++i) vals.emplace_back(v[i], t.classes[i].size);
    return CharOracle::from_values(t.name + ":" + chr, CharOracle::Source::Table, t.order, vals);
}

Integer table_moment(const CharTable& t, const std::string& chr, unsigned k) {
    return group_moment(table_oracle(t, chr), k);
}

int table_fs(const CharTable& t, const std::string& chr) {
    const auto& v = t.character(chr);
    Cyclo s(0);
    for (const auto& c : t.classes) s += v[t.class_index(c.powers.at(2))] * Cyclo(c.size);
    s = s * Cyclo(Rational(Integer(1), t.order));
    if (!(s == Cyclo(0) || s == Cyclo(1) || s == Cyclo(-1)))
        throw NotRationalInteger("Frobenius-Schur indicator of " + chr + " is " + s.str());
    return s.is_zero() ? 0 : to_rational_integer(s) > 0 ? 1 : -1;
}

std::string data_path(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::path(path).is_absolute() || fs::exists(path)) return path;
    if (const char* env = std::getenv("MOMENTFORGE_DATA"); env && *env) return (fs::path(env) / path).string();
    return (fs::path(MOMENTFORGE_SOURCE_DIR) / "data" / path).string();
}

CharTable load_table(const std::string& path) {
    const std::string p = data_path(path);
    std::ifstream f(p);
    if (!f) throw ValidationError("cannot open table file " + p);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_table(ss.str());
}

}  // namespace momentforge
