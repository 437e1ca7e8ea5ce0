#pragma once

#include <cstdint>
#include <vector>

#include "momentforge/cyclo.hpp"

namespace momentforge {

/// Integral element of Z[zeta_p] (p an odd prime) in the basis 1, z, ..., z^{p-2}.
using ZetaInt = std::vector<int64_t>;

Cyclo zeta_int_to_cyclo(unsigned p, const ZetaInt& v);

/// Dense square matrix over Z[zeta_p].  This is the fixed-conductor integer
/// kernel used by paired enumeration; the general Cyclo type is far too slow
/// for tens of thousands of 25x25 products.
class ZetaMatrix {
public:
    ZetaMatrix() = default;
    ZetaMatrix(unsigned p, unsigned dim);

    unsigned prime() const { return p_; }
    unsigned dim() const { return dim_; }
    unsigned width() const { return p_ - 1; }

    int64_t* at(unsigned r, unsigned c) { return &data_[(static_cast<std::size_t>(r) * dim_ + c) * (p_ - 1)]; }
    const int64_t* at(unsigned r, unsigned c) const {
        return &data_[(static_cast<std::size_t>(r) * dim_ + c) * (p_ - 1)];
    }
    /// entry(r, c) += coef * z^exp
    void add_root(unsigned r, unsigned c, long exp, int64_t coef);
    bool is_zero_entry(unsigned r, unsigned c) const;

    ZetaMatrix operator*(const ZetaMatrix& b) const;
    /// Divide every entry by d; throws HomomorphismViolation if inexact.
    void divide_exact(int64_t d);
    void scale(int64_t s);
    bool operator==(const ZetaMatrix& o) const { return p_ == o.p_ && dim_ == o.dim_ && data_ == o.data_; }

    ZetaInt entry(unsigned r, unsigned c) const { return ZetaInt(at(r, c), at(r, c) + width()); }
    ZetaInt trace() const;
    const std::vector<int64_t>& raw() const { return data_; }

private:
    unsigned p_ = 3;
    unsigned dim_ = 0;
    std::vector<int64_t> data_;
};

}  // namespace momentforge
