// Regenerates the committed goldens under data/: class-indexed tables of
// enumerable groups and the pinned generator files.  Usage: gen_goldens [DATA_DIR]
#include <filesystem>
#include <fstream>
#include <iostream>

#include "momentforge/classes.hpp"
#include "momentforge/errors.hpp"
#include "momentforge/weil.hpp"

using namespace momentforge;

namespace {

void write(const std::filesystem::path& p, const std::string& text) {
    std::filesystem::create_directories(p.parent_path());
    std::ofstream f(p);
    f << text;
    std::cout << "wrote " << p.string() << "\n";
}

std::string weil_table(const std::string& spec, const std::string& name, long twist) {
    EnumerateOptions opt;
    opt.keep_edges = true;
    EnumeratedGroup g = enumerate(GroupSpec::parse(spec), opt);
    auto [even, odd] = split_weil(sympl_weil(g));
    std::vector<ElementCharacter> chars{even.renamed("weil_even"), odd.renamed("weil_odd"),
                                        even.galois(twist).renamed("weil_even_twist"),
                                        odd.galois(twist).renamed("weil_odd_twist")};
    CharTable t = generate_table(g, name, chars, "generated by gen_goldens from the Weil representation of " + spec);
    return "# Generated by tools/gen_goldens.cpp; do not edit.\n"
           "# Classes by brute-force conjugation; labels are element order + letter.\n" +
           serialize(t);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        const std::filesystem::path dir = argc > 1 ? argv[1] : std::filesystem::path(MOMENTFORGE_SOURCE_DIR) / "data";
        // twist 2 exchanges the two Weil characters of each degree (sqrt5 -> -sqrt5); -1 is complex conjugation
        write(dir / "generated" / "SL2_5.tbl", weil_table("sp:2:5", "SL2(5)", 2));
        write(dir / "generated" / "Sp4_3.tbl", weil_table("sp:4:3", "Sp4(3)", -1));
        for (const char* s : {"sp:2:5", "sp:2:13", "sp:4:3", "sp:4:5", "sp:6:2", "su:3:2", "gu:3:2", "su:4:2", "gu:4:2",
                              "go+:6:2", "go-:6:2", "go+:8:2", "go-:8:2", "sp:8:2"}) {
            GroupSpec spec = GroupSpec::parse(s);
            std::string file = s;
            for (char& c : file)
                if (c == ':') c = '_';
                else if (c == '+') c = 'p';
                else if (c == '-') c = 'm';
            write(dir / "generators" / (file + ".gens"), write_generator_file(spec, standard_generators(spec)));
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    }
    return 0;
}
