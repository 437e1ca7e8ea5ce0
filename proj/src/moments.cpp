#include "momentforge/moments.hpp"

#include <json.hpp>

#include "momentforge/errors.hpp"

namespace momentforge {

namespace {

void check_k(unsigned k, unsigned cap) {
    if (k == 0) throw ValidationError("k must be positive");
    if (k > cap) throw CapExceeded("k = " + std::to_string(k) + " exceeds the moment cap " + std::to_string(cap));
}

Integer finish(const Cyclo& sum, const CharOracle& chi, unsigned k) {
    Cyclo m = sum * Cyclo(Rational(Integer(1), chi.order));
    if (!m.is_rational() || m.rational_value().get_den() != 1 || m.rational_value() < 0)
        throw NotRationalInteger("M_" + std::to_string(2 * k) + " of " + chi.name + " is " + m.str() +
                                 ", not a nonnegative integer");
    return m.rational_value().get_num();
}

}  // namespace

Integer group_moment(const CharOracle& chi, unsigned k, unsigned cap) {
    check_k(k, cap);
    if (chi.order <= 0) throw ValidationError("oracle has no group order");
    Cyclo sum(0);
    for (const auto& [a, n] : chi.abs_square_counts) sum += a.pow(k) * Cyclo(n);
    return finish(sum, chi, k);
}

std::vector<Integer> group_moments(const CharOracle& chi, unsigned kmax, unsigned cap) {
    check_k(kmax, cap);
    if (chi.order <= 0) throw ValidationError("oracle has no group order");
    std::vector<Integer> out;
    std::vector<Cyclo> pw;  // running |chi|^{2k}
    for (const auto& e : chi.abs_square_counts) pw.push_back(e.first);
    for (unsigned k = 1; k <= kmax; ++k) {
        Cyclo sum(0);
        for (std::size_t i = 0; i < pw.size(); ++i) {
            sum += pw[i] * Cyclo(chi.abs_square_counts[i].second);
            pw[i] = pw[i] * chi.abs_square_counts[i].first;
        }
        out.push_back(finish(sum, chi, k));
    }
    return out;
}

MomentReport compare_with_ambient(const CharOracle& chi, const RootSystem& ambient, unsigned kmax, unsigned cap) {
    if (chi.degree != ambient.natural_dim())
        throw DegreeMismatch("character degree " + chi.degree.get_str() + " differs from the natural dimension " +
                             std::to_string(ambient.natural_dim()) + " of " + ambient.group_label());
    MomentReport r;
    r.group = chi.name;
    r.ambient = ambient.str();
    auto mg = group_moments(chi, kmax, cap);
    bool run = true;
    for (unsigned k = 1; k <= kmax; ++k) {
        MomentRow row{k, mg[k - 1], classical_moment(ambient, k, cap), false};
        row.equal = row.mg == row.mG;
        if (run && row.equal) r.largest_equal_k = k;
        else run = false;
        r.rows.push_back(row);
    }
    return r;
}

std::string to_json(const MomentReport& r, int indent) {
    nlohmann::ordered_json j;
    j["group"] = r.group;
    j["ambient"] = r.ambient;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : r.rows)
        j["rows"].push_back({{"k", row.k}, {"mg", row.mg.get_str()}, {"mG", row.mG.get_str()}, {"equal", row.equal}});
    j["largest_equal_k"] = r.largest_equal_k;
    return j.dump(indent);
}

}  // namespace momentforge
