#include "momentforge/intcyclo.hpp"

#include "momentforge/errors.hpp"

namespace momentforge {

Cyclo zeta_int_to_cyclo(unsigned p, const ZetaInt& v) {
    std::vector<Rational> c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = Rational(static_cast<long>(v[i]));
    return Cyclo(p, std::move(c));
}

ZetaMatrix::ZetaMatrix(unsigned p, unsigned dim)
    : p_(p), dim_(dim), data_(static_cast<std::size_t>(dim) * dim * (p - 1), 0) {
    if (p < 3) throw ValidationError("ZetaMatrix needs an odd prime conductor");
}

void ZetaMatrix::add_root(unsigned r, unsigned c, long exp, int64_t coef) {
    long e = exp % static_cast<long>(p_);
    if (e < 0) e += p_;
    int64_t* x = at(r, c);
    if (e == static_cast<long>(p_) - 1) {
        // z^{p-1} = -(1 + z + ... + z^{p-2})
        for (unsigned i = 0; i + 1 < p_; ++i) x[i] -= coef;
    } else {
        x[e] += coef;
    }
}

bool ZetaMatrix::is_zero_entry(unsigned r, unsigned c) const {
    const int64_t* x = at(r, c);
    for (unsigned i = 0; i + 1 < p_; ++i)
        if (x[i] != 0) return false;
    return true;
}

ZetaMatrix ZetaMatrix::operator*(const ZetaMatrix& b) const {
    const unsigned n = dim_, w = p_ - 1, p = p_;
    ZetaMatrix out(p_, n);
    std::vector<char> bnz(static_cast<std::size_t>(n) * n);
    for (unsigned k = 0; k < n; ++k)
        for (unsigned c = 0; c < n; ++c) bnz[k * n + c] = !b.is_zero_entry(k, c);
    std::vector<int64_t> acc(static_cast<std::size_t>(n) * p);
    for (unsigned r = 0; r < n; ++r) {
        std::fill(acc.begin(), acc.end(), 0);
        for (unsigned k = 0; k < n; ++k) {
            if (is_zero_entry(r, k)) continue;
            const int64_t* a = at(r, k);
            for (unsigned c = 0; c < n; ++c) {
                if (!bnz[k * n + c]) continue;
                const int64_t* bb = b.at(k, c);
                int64_t* dst = &acc[static_cast<std::size_t>(c) * p];
                for (unsigned i = 0; i < w; ++i) {
                    if (a[i] == 0) continue;
                    for (unsigned j = 0; j < w; ++j) {
                        unsigned e = i + j;
                        if (e >= p) e -= p;
                        dst[e] += a[i] * bb[j];
                    }
                }
            }
        }
        for (unsigned c = 0; c < n; ++c) {
            const int64_t* src = &acc[static_cast<std::size_t>(c) * p];
            int64_t top = src[p - 1];
            int64_t* x = out.at(r, c);
            for (unsigned i = 0; i < w; ++i) x[i] = src[i] - top;
        }
    }
    return out;
}

void ZetaMatrix::divide_exact(int64_t d) {
    for (auto& v : data_) {
        if (v % d != 0) throw HomomorphismViolation("inexact division in scaled representation matrix");
        v /= d;
    }
}

void ZetaMatrix::scale(int64_t s) {
    for (auto& v : data_) v *= s;
}

ZetaInt ZetaMatrix::trace() const {
    ZetaInt t(width(), 0);
    for (unsigned r = 0; r < dim_; ++r) {
        const int64_t* x = at(r, r);
        for (unsigned i = 0; i < width(); ++i) t[i] += x[i];
    }
    return t;
}

}  // namespace momentforge
