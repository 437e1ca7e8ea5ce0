#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <memory>
#include <optional>
#include <ostream>

#include "momentforge/chario.hpp"
#include "momentforge/drop.hpp"
#include "momentforge/errors.hpp"
#include "momentforge/extraspecial.hpp"
#include "momentforge/lie.hpp"
#include "momentforge/moments.hpp"
#include "momentforge/unitary_weil.hpp"
#include "momentforge/weil.hpp"

namespace momentforge::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct Common {
    unsigned threads = 1;
    std::string format = "text";
    uint64_t order_cap = kDefaultOrderCap;

    Format fmt() const { return format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text; }
};

// ---------------------------------------------------------------- character sources

/// A character of an enumerated group, or only its |chi|^2 distribution when
/// the closed-formula route is used.
struct Source {
    std::unique_ptr<EnumeratedGroup> group;
    std::unique_ptr<WeilRep> weil;
    std::optional<ElementCharacter> chi;
    std::optional<WeilPart> part;
    CharOracle oracle;
};

/// Rep names: weil-even | weil-odd | weil-total (Sp, q odd); uweil-total | uweil-<i> (GU/SU); natural (2i).
Source load_source(const std::string& group, const std::string& rep, const std::string& route, const Common& c,
                   bool need_values) {
    Source s;
    GroupSpec spec = GroupSpec::parse(group);
    EnumerateOptions opt;
    opt.order_cap = c.order_cap;
    if (route != "rep-trace" && route != "formula") throw ValidationError("--source must be rep-trace or formula");
    if (rep.rfind("weil-", 0) == 0) {
        if (spec.family != Family::Sp) throw ValidationError("weil-* representations need a symplectic group");
        s.part = parse_weil_part(rep.substr(5));
        if (route == "formula") {
            if (need_values) throw ValidationError("this command needs character values; use --source rep-trace");
            s.group = std::make_unique<EnumeratedGroup>(enumerate(spec, opt));
            s.oracle = weil_formula_oracle(*s.group, *s.part, c.threads);
            return s;
        }
        opt.keep_edges = true;
        s.group = std::make_unique<EnumeratedGroup>(enumerate(spec, opt));
        s.weil = std::make_unique<WeilRep>(sympl_weil(*s.group));
        WeilCharacters wc = weil_characters(*s.weil);
        s.chi = wc.part(*s.part);
    } else if (rep.rfind("uweil-", 0) == 0) {
        if (route == "formula") throw ValidationError("unitary Weil characters are always evaluated elementwise");
        std::string t = rep.substr(6);
        std::optional<unsigned> idx;
        if (t != "total") {
            try {
                std::size_t used = 0;
                idx = static_cast<unsigned>(std::stoul(t, &used));
                if (used != t.size()) throw std::invalid_argument(t);
            } catch (const std::exception&) {
                throw ValidationError("bad unitary constituent '" + t + "'");
            }
        }
        s.group = std::make_unique<EnumeratedGroup>(enumerate(spec, opt));
        s.chi = unitary_weil_character(*s.group, idx);
    } else if (rep == "natural") {
        if (spec.family != Family::BinaryIcosahedral)
            throw ValidationError("the natural complex representation is only available for 2i");
        s.group = std::make_unique<EnumeratedGroup>(enumerate(spec, opt));
        const EnumeratedGroup& g = *s.group;
        s.chi = ElementCharacter::build(g, "2i.natural", [&](uint32_t i) {
            const Mat2Cyclo& m = g.cyclo_element(i);
            return m[0] + m[3];
        });
    } else {
        throw ValidationError("unknown representation '" + rep + "'");
    }
    s.oracle = CharOracle::from_character(*s.chi);
    s.oracle.name = spec.str() + ":" + rep;
    return s;
}

/// --rep, or the --part / --constituent shorthands.
std::string rep_name(const std::string& rep, const std::string& part, const std::string& constituent) {
    int given = !rep.empty() + !part.empty() + !constituent.empty();
    if (given != 1) throw ValidationError("give exactly one of --rep, --part, --constituent");
    if (!part.empty()) return "weil-" + part;
    if (!constituent.empty()) return "uweil-" + constituent;
    return rep;
}

// ---------------------------------------------------------------- output helpers

void emit_moments(std::ostream& out, const Common& c, const std::string& name, const std::vector<Integer>& m,
                  unsigned k0) {
    if (c.fmt() == Format::Json) {
        json j;
        j["name"] = name;
        j["moments"] = json::array();
        for (std::size_t i = 0; i < m.size(); ++i) j["moments"].push_back({{"k", k0 + i}, {"value", m[i].get_str()}});
        out << j.dump() << "\n";
    } else if (c.fmt() == Format::Csv) {
        out << "k,moment\n";
        for (std::size_t i = 0; i < m.size(); ++i) out << k0 + i << "," << m[i].get_str() << "\n";
    } else if (m.size() == 1) {
        out << m[0].get_str() << "\n";
    } else {
        for (std::size_t i = 0; i < m.size(); ++i) out << k0 + i << " " << m[i].get_str() << "\n";
    }
}

void emit_report(std::ostream& out, const Common& c, const MomentReport& r) {
    if (c.fmt() == Format::Json) {
        out << to_json(r) << "\n";
    } else if (c.fmt() == Format::Csv) {
        out << "group,ambient,k,mg,mG,equal\n";
        for (const auto& row : r.rows)
            out << r.group << "," << r.ambient << "," << row.k << "," << row.mg.get_str() << "," << row.mG.get_str()
                << "," << (row.equal ? "true" : "false") << "\n";
    } else {
        out << r.group << " vs " << r.ambient << "\n";
        for (const auto& row : r.rows)
            out << "  k=" << row.k << "  " << row.mg.get_str() << (row.equal ? " = " : " vs ") << row.mG.get_str()
                << "\n";
        out << "  largest_equal_k " << r.largest_equal_k << "\n";
    }
}

/// Moments k..kmax (or just k) of an oracle, optionally against an ambient root system.
void moments_command(std::ostream& out, const Common& c, const CharOracle& o, unsigned k, unsigned kmax,
                     const std::string& ambient) {
    if (!ambient.empty()) {
        emit_report(out, c, compare_with_ambient(o, RootSystem::parse(ambient), kmax ? kmax : kDefaultReportK));
        return;
    }
    if (k && kmax) throw ValidationError("give --k or --kmax, not both");
    if (k) {
        emit_moments(out, c, o.name, {group_moment(o, k)}, k);
        return;
    }
    emit_moments(out, c, o.name, group_moments(o, kmax ? kmax : kDefaultReportK), 1);
}

RootSystem root_system(const std::string& group, const std::string& type, unsigned rank) {
    if (!group.empty()) {
        if (!type.empty()) throw ValidationError("give --group or --type/--rank, not both");
        return RootSystem::parse(group);
    }
    if (type.size() != 1) throw ValidationError("--type must be one of A, B, C, D");
    return RootSystem::parse(type + std::to_string(rank));
}

json decomposition_json(const RootSystem& rs, const Decomposition& d) {
    json a = json::array();
    for (const auto& [w, m] : d) a.push_back({{"weight", w}, {"mult", m.get_str()}, {"dim", weyl_dim(rs, w).get_str()}});
    return a;
}

// ---------------------------------------------------------------- report rows

struct ReportRow {
    const char* name;
    const char* group;  // enumerated group, or empty for a table row
    const char* rep;
    const char* table;
    const char* chr;
    const char* ambient;
    const char* route;
};

// Moment-comparison rows reachable by this tool.
const ReportRow kRows[] = {
    {"SL2(5)", "sp:2:5", "weil-odd", "", "", "A1", "rep-trace"},
    {"Sp4(3)-deg5", "sp:4:3", "weil-even", "", "", "A4", "formula"},
    {"Sp4(3)-deg4", "sp:4:3", "weil-odd", "", "", "A3", "formula"},
    {"SU4(2)-deg6", "su:4:2", "uweil-0", "", "", "D3", "rep-trace"},
    {"SU4(2)-deg5", "su:4:2", "uweil-1", "", "", "A4", "rep-trace"},
    {"2J2", "", "", "external/2J2.tbl", "chi6a", "C3", ""},
    {"U3(3).2", "", "", "external/U3_3.2.tbl", "chi6a", "C3", ""},
};

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"momentforge: exact tensor-power moments of classical and finite groups"};
    app.require_subcommand(1);
    app.fallthrough();
    Common c;
    app.add_option("--threads", c.threads, "worker threads for closed-formula histograms")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--order-cap", c.order_cap, "largest group order to enumerate")->check(CLI::PositiveNumber);

    // classical
    std::string cl_group, cl_type;
    unsigned cl_rank = 0, cl_k = 0, cl_kmax = 0;
    auto* classical = app.add_subcommand("classical", "M_2k of GL/Sp/SO via V^(x)k decomposition");
    classical->add_option("--group", cl_group, "root system or group label: A3, C3, GL4, Sp6, SO7");
    classical->add_option("--type,--family", cl_type, "A, B, C or D");
    classical->add_option("--rank", cl_rank);
    classical->add_option("--k", cl_k, "single moment M_2k");
    classical->add_option("--kmax", cl_kmax, "moments M_2 .. M_2kmax");

    // weyl-dim
    std::string wd_group, wd_type, wd_weight;
    unsigned wd_rank = 0;
    auto* weyldim = app.add_subcommand("weyl-dim", "dimension of an irreducible module by the Weyl dimension formula");
    weyldim->add_option("--group", wd_group);
    weyldim->add_option("--type,--family", wd_type);
    weyldim->add_option("--rank", wd_rank);
    weyldim->add_option("--weight", wd_weight, "highest weight in e-coordinates, e.g. 2,0,0,-2")->required();

    // tensor
    std::string tn_group, tn_type, tn_lambda, tn_mu;
    unsigned tn_rank = 0, tn_power = 0;
    auto* tensor = app.add_subcommand("tensor", "decompose L(lambda) (x) L(mu), or V^(x)k with --power");
    tensor->add_option("--group", tn_group);
    tensor->add_option("--type,--family", tn_type);
    tensor->add_option("--rank", tn_rank);
    tensor->add_option("--lambda", tn_lambda);
    tensor->add_option("--mu", tn_mu);
    tensor->add_option("--power", tn_power);

    // group-moment
    std::string gm_group, gm_rep, gm_part, gm_const, gm_source = "rep-trace", gm_ambient;
    unsigned gm_k = 0, gm_kmax = 0;
    auto* gmoment = app.add_subcommand("group-moment", "M_2k of a finite group representation");
    gmoment->add_option("--group", gm_group, "sp:4:3, gu:3:2, 2i, ...")->required();
    gmoment->add_option("--rep", gm_rep, "weil-even|weil-odd|weil-total|uweil-<i>|uweil-total|natural");
    gmoment->add_option("--part", gm_part, "shorthand for --rep weil-<part>");
    gmoment->add_option("--constituent", gm_const, "shorthand for --rep uweil-<i>");
    gmoment->add_option("--source", gm_source, "rep-trace (paired enumeration) or formula (symplectic closed form)");
    gmoment->add_option("--k", gm_k);
    gmoment->add_option("--kmax", gm_kmax);
    gmoment->add_option("--ambient", gm_ambient, "compare with a root system, e.g. A1, C3");

    // table-moment
    std::string tm_file, tm_char, tm_ambient;
    unsigned tm_k = 0, tm_kmax = 0;
    auto* tmoment = app.add_subcommand("table-moment", "M_2k from a character table file");
    tmoment->add_option("--file", tm_file, "table file (relative paths resolve against $MOMENTFORGE_DATA)")->required();
    tmoment->add_option("--char", tm_char)->required();
    tmoment->add_option("--k", tm_k);
    tmoment->add_option("--kmax", tm_kmax);
    tmoment->add_option("--ambient", tm_ambient);

    // weil
    std::string we_group, we_rep, we_part, we_const;
    auto* weil = app.add_subcommand("weil", "degree, indicator and M_2 of a Weil character");
    weil->add_option("--group", we_group)->required();
    weil->add_option("--rep", we_rep);
    weil->add_option("--part", we_part, "total|even|odd (symplectic)");
    weil->add_option("--constituent", we_const, "0..q or total (unitary)");

    // fs
    std::string fs_group, fs_rep, fs_part, fs_const, fs_file, fs_char;
    auto* fs = app.add_subcommand("fs", "Frobenius-Schur indicator");
    fs->add_option("--group", fs_group);
    fs->add_option("--rep", fs_rep);
    fs->add_option("--part", fs_part);
    fs->add_option("--constituent", fs_const);
    fs->add_option("--file", fs_file);
    fs->add_option("--char", fs_char);

    // extraspecial
    unsigned ex_p = 2, ex_a = 0, ex_k = 0;
    std::string ex_case, ex_acting, ex_gens = "standard";
    bool ex_reference = false, ex_transitivity = false;
    auto* extra = app.add_subcommand("extraspecial", "orbit counts on zero-sum tuples in F_p^2a");
    extra->add_option("--p", ex_p);
    extra->add_option("--a", ex_a)->required();
    extra->add_option("--case", ex_case, "normalizer case GL|Sp|O, or acting group O+|O-");
    extra->add_option("--acting", ex_acting, "acting group Sp|O+|O-");
    extra->add_option("--k", ex_k, "tuple length 2..4");
    extra->add_option("--generators", ex_gens)->check(CLI::IsMember({"standard", "alternative"}));
    extra->add_flag("--reference", ex_reference, "compare M_2k(N) - M_2k(ambient) with the reference difference");
    extra->add_flag("--transitivity", ex_transitivity, "orbits on nonzero vectors instead of tuples");

    // drop
    std::string dr_group, dr_rep, dr_part, dr_const;
    bool dr_cross = false;
    auto* drop = app.add_subcommand("drop", "projective drop min (d - max eigenspace)/d");
    drop->add_option("--group", dr_group)->required();
    drop->add_option("--rep", dr_rep);
    drop->add_option("--part", dr_part);
    drop->add_option("--constituent", dr_const);
    drop->add_flag("--crosscheck", dr_cross, "recheck eigenspaces by exact matrix ranks");

    // report
    std::string rp_row = "all";
    unsigned rp_kmax = kDefaultReportK;
    auto* report = app.add_subcommand("report", "bundled rows: group moments against the ambient group");
    report->add_option("--row", rp_row, "row name or 'all'");
    report->add_option("--kmax", rp_kmax);

    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return 0;
        } catch (const CLI::CallForAllHelp&) {
            out << app.help("", CLI::AppFormatMode::All);
            return 0;
        } catch (const CLI::ParseError& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }

        if (*classical) {
            RootSystem rs = root_system(cl_group, cl_type, cl_rank);
            if (cl_k && cl_kmax) throw ValidationError("give --k or --kmax, not both");
            if (cl_k) emit_moments(out, c, rs.str(), {classical_moment(rs, cl_k)}, cl_k);
            else {
                const unsigned kmax = cl_kmax ? cl_kmax : kDefaultReportK;
                if (kmax > kDefaultMomentCap) throw CapExceeded("kmax exceeds the moment cap");
                std::vector<Integer> m;
                for (unsigned k = 1; k <= kmax; ++k) m.push_back(classical_moment(rs, k));
                emit_moments(out, c, rs.str(), m, 1);
            }
        } else if (*weyldim) {
            RootSystem rs = root_system(wd_group, wd_type, wd_rank);
            Integer d = weyl_dim(rs, parse_weight(wd_weight));
            if (c.fmt() == Format::Json)
                out << json{{"root_system", rs.str()}, {"weight", parse_weight(wd_weight)}, {"dim", d.get_str()}}.dump()
                    << "\n";
            else out << d.get_str() << "\n";
        } else if (*tensor) {
            RootSystem rs = root_system(tn_group, tn_type, tn_rank);
            Decomposition d;
            if (tn_power) {
                if (!tn_lambda.empty() || !tn_mu.empty()) throw ValidationError("--power excludes --lambda/--mu");
                d = natural_tensor_power(rs, tn_power);
            } else {
                if (tn_lambda.empty() || tn_mu.empty()) throw ValidationError("give --lambda and --mu, or --power");
                d = tensor_product(rs, parse_weight(tn_lambda), parse_weight(tn_mu));
            }
            if (c.fmt() == Format::Json) out << decomposition_json(rs, d).dump() << "\n";
            else if (c.fmt() == Format::Csv) {
                out << "weight,mult,dim\n";
                for (const auto& [w, m] : d) out << "\"" << weight_str(w) << "\"," << m.get_str() << "," << weyl_dim(rs, w) << "\n";
            } else
                for (const auto& [w, m] : d) out << weight_str(w) << ": " << m.get_str() << "\n";
        } else if (*gmoment) {
            Source s = load_source(gm_group, rep_name(gm_rep, gm_part, gm_const), gm_source, c, false);
            moments_command(out, c, s.oracle, gm_k, gm_kmax, gm_ambient);
        } else if (*tmoment) {
            CharTable t = load_table(tm_file);
            CharOracle o = table_oracle(t, tm_char);
            moments_command(out, c, o, tm_k, tm_kmax, tm_ambient);
        } else if (*weil) {
            const std::string rep = rep_name(we_rep, we_part, we_const);
            Source s = load_source(we_group, rep, "rep-trace", c, true);
            const Integer deg = to_rational_integer(s.chi->degree());
            const int ind = fs_indicator(*s.chi);
            const Integer m2 = group_moment(s.oracle, 1);
            if (c.fmt() == Format::Json) {
                json j{{"group", s.group->spec().str()}, {"rep", rep}, {"order", std::to_string(s.group->order())},
                       {"degree", deg.get_str()}, {"fs", ind}, {"m2", m2.get_str()}};
                if (s.weil) j["fourier_sign"] = s.weil->fourier_sign;
                out << j.dump() << "\n";
            } else if (c.fmt() == Format::Csv) {
                out << "group,rep,order,degree,fs,m2\n"
                    << s.group->spec().str() << "," << rep << "," << s.group->order() << "," << deg.get_str() << ","
                    << ind << "," << m2.get_str() << "\n";
            } else {
                out << "group " << s.group->spec().str() << "\nrep " << rep << "\norder " << s.group->order()
                    << "\ndegree " << deg.get_str() << "\nfs " << ind << "\nm2 " << m2.get_str() << "\n";
            }
        } else if (*fs) {
            int ind;
            if (!fs_file.empty()) {
                if (!fs_group.empty() || fs_char.empty()) throw ValidationError("--file needs --char and no --group");
                ind = table_fs(load_table(fs_file), fs_char);
            } else {
                if (fs_group.empty()) throw ValidationError("give --group or --file");
                Source s = load_source(fs_group, rep_name(fs_rep, fs_part, fs_const), "rep-trace", c, true);
                ind = fs_indicator(*s.chi);
            }
            if (c.fmt() == Format::Json) out << json{{"fs", ind}}.dump() << "\n";
            else out << ind << "\n";
        } else if (*extra) {
            std::optional<NormalizerCase> ncase;
            ActingGroup acting = ActingGroup::Sp;
            if (!ex_case.empty() && !ex_acting.empty()) throw ValidationError("give --case or --acting, not both");
            if (ex_case == "O+" || ex_case == "O-") ex_acting = ex_case;
            else if (!ex_case.empty()) ncase = parse_normalizer_case(ex_case);
            if (ncase) acting = acting_group_for(*ncase);
            else if (!ex_acting.empty()) acting = parse_acting_group(ex_acting);
            else throw ValidationError("give --case or --acting");
            // O+ and O- correspond to the O and Sp normalizer cases
            if (!ncase && acting != ActingGroup::Sp)
                ncase = acting == ActingGroup::OPlus ? NormalizerCase::O : NormalizerCase::Sp;
            const GeneratorSet gs = ex_gens == "standard" ? GeneratorSet::Standard : GeneratorSet::Alternative;

            if (ex_transitivity) {
                if (ex_k || ex_reference) throw ValidationError("--transitivity excludes --k and --reference");
                TransitivityReport tr = transitivity_check(ex_p, ex_a, acting, gs);
                if (c.fmt() == Format::Json) {
                    json j{{"acting", to_string(acting)}, {"p", ex_p}, {"a", ex_a}, {"orbits", json::array()}};
                    for (const auto& o : tr.orbits)
                        j["orbits"].push_back({{"size", std::to_string(o.size)},
                                               {"representative", std::to_string(o.representative)},
                                               {"isotropic", o.isotropic}});
                    j["transitive"] = tr.transitive;
                    j["isotropy_split"] = tr.isotropy_split;
                    out << j.dump() << "\n";
                } else {
                    for (const auto& o : tr.orbits)
                        out << o.size << " " << (o.isotropic ? "isotropic" : "non-isotropic") << "\n";
                }
                return 0;
            }
            if (!ex_k) throw ValidationError("--k is required");
            OrbitReport r = count_zero_sum_orbits({ex_p, ex_a, acting, ex_k}, gs);
            std::optional<ExtraspecialComparison> cmp;
            if (ex_reference) {
                if (!ncase) throw ValidationError("--reference needs a normalizer case (GL, Sp, O, O+ or O-)");
                cmp = compare_extraspecial(ex_p, ex_a, *ncase, ex_k);
            }
            if (c.fmt() == Format::Json) {
                json j{{"acting", to_string(acting)}, {"p", ex_p}, {"a", ex_a}, {"tuple_len", ex_k},
                       {"orbit_count", std::to_string(r.orbit_count)}};
                j["orbit_sizes"] = json::array();
                for (auto sz : r.orbit_sizes) j["orbit_sizes"].push_back(std::to_string(sz));
                j["total"] = std::to_string(r.total);
                if (cmp) {
                    j["case"] = to_string(*ncase);
                    j["ambient_moment"] = cmp->ambient.get_str();
                    j["difference"] = cmp->difference.get_str();
                    if (cmp->reference_difference) {
                        j["reference_difference"] = cmp->reference_difference->get_str();
                        j["reference_is_lower_bound"] = cmp->reference_is_lower_bound;
                        j["reference_mismatch"] = cmp->reference_mismatch;
                    } else {
                        j["reference_difference"] = nullptr;
                    }
                }
                out << j.dump() << "\n";
            } else {
                out << r.orbit_count << "\n";
                if (cmp) {
                    out << "ambient_moment " << cmp->ambient.get_str() << "\ndifference " << cmp->difference.get_str()
                        << "\n";
                    if (cmp->reference_difference) {
                        out << "reference_difference " << (cmp->reference_is_lower_bound ? ">= " : "")
                            << cmp->reference_difference->get_str() << "\nreference_mismatch "
                            << (cmp->reference_mismatch ? "true" : "false") << "\n";
                        if (cmp->reference_mismatch)
                            err << "note: computed difference " << cmp->difference.get_str()
                                << " disagrees with the reference difference\n";
                    } else {
                        out << "reference_difference none\n";
                    }
                }
            }
        } else if (*drop) {
            Source s = load_source(dr_group, rep_name(dr_rep, dr_part, dr_const), "rep-trace", c, true);
            DropReport d = projective_drop(*s.chi);
            std::optional<uint64_t> checked;
            if (dr_cross) {
                if (s.weil)
                    checked = drop_rank_crosscheck(*s.chi, [&](uint32_t e) { return weil_cyclo_matrix(*s.weil, e); },
                                                   weil_part_constraint(*s.weil, *s.part));
                else if (s.group->spec().family == Family::BinaryIcosahedral)
                    checked = drop_rank_crosscheck(*s.chi, [&](uint32_t e) { return icosian_cyclo_matrix(*s.group, e); });
                else throw ValidationError("--crosscheck needs explicit matrices (symplectic Weil or 2i)");
            }
            if (c.fmt() == Format::Json) {
                json j{{"drop", to_string(d.drop)}, {"witness", d.witness}, {"witness_order", d.witness_order},
                       {"max_eigenspace", d.max_eigenspace.get_str()}, {"counted", std::to_string(d.counted)},
                       {"signatures", std::to_string(d.signatures)}};
                if (checked) j["crosscheck_representatives"] = std::to_string(*checked);
                out << j.dump() << "\n";
            } else {
                out << to_string(d.drop) << "\n";
            }
        } else if (*report) {
            bool any = false;
            json all = json::array();
            for (const auto& row : kRows) {
                if (rp_row != "all" && rp_row != row.name) continue;
                any = true;
                CharOracle o;
                std::optional<Source> s;
                if (*row.group) {
                    s = load_source(row.group, row.rep, row.route, c, false);
                    o = s->oracle;
                } else {
                    o = table_oracle(load_table(row.table), row.chr);
                }
                o.name = row.name;
                MomentReport r = compare_with_ambient(o, RootSystem::parse(row.ambient), rp_kmax);
                if (c.fmt() == Format::Json) all.push_back(json::parse(to_json(r)));
                else if (c.fmt() == Format::Csv) {
                    if (all.empty()) out << "group,ambient,k,mg,mG,equal\n";
                    all.push_back(nullptr);
                    for (const auto& rr : r.rows)
                        out << r.group << "," << r.ambient << "," << rr.k << "," << rr.mg.get_str() << ","
                            << rr.mG.get_str() << "," << (rr.equal ? "true" : "false") << "\n";
                } else emit_report(out, c, r);
            }
            if (!any) throw ValidationError("unknown report row '" + rp_row + "'");
            if (c.fmt() == Format::Json) out << all.dump() << "\n";
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace momentforge::cli
