#pragma once

#include <string>
#include <vector>

#include "momentforge/character.hpp"
#include "momentforge/lie.hpp"

namespace momentforge {

constexpr unsigned kMomentCap = kDefaultMomentCap;
constexpr unsigned kDefaultReportK = 6;

/// M_{2k}(G, V) = (1/|G|) sum_g |chi(g)|^{2k}; throws NotRationalInteger if the
/// sum is not a nonnegative rational integer, CapExceeded if k > cap.
Integer group_moment(const CharOracle& chi, unsigned k, unsigned cap = kMomentCap);
/// M_2, ..., M_{2 kmax}.
std::vector<Integer> group_moments(const CharOracle& chi, unsigned kmax, unsigned cap = kMomentCap);

struct MomentRow {
    unsigned k = 0;
    Integer mg, mG;  ///< the group's moment and the ambient group's
    bool equal = false;
};

struct MomentReport {
    std::string group, ambient;
    std::vector<MomentRow> rows;
    unsigned largest_equal_k = 0;  ///< length of the initial run of equal rows
};

/// Rows k = 1..kmax; throws DegreeMismatch unless chi(1) is the ambient natural dimension.
MomentReport compare_with_ambient(const CharOracle& chi, const RootSystem& ambient, unsigned kmax = kDefaultReportK,
                                  unsigned cap = kMomentCap);

/// {"group":…, "ambient":…, "rows":[{"k":…, "mg":"…", "mG":"…", "equal":…}], "largest_equal_k":…}
std::string to_json(const MomentReport& r, int indent = -1);

}  // namespace momentforge
