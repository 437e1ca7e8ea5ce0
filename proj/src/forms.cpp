#include "momentforge/errors.hpp"
#include "momentforge/finfield.hpp"

namespace momentforge {

std::string to_string(FormKind k) {
    switch (k) {
        case FormKind::Symplectic: return "symplectic";
        case FormKind::Hermitian: return "hermitian";
        case FormKind::QuadraticPlus: return "quadratic-plus";
        case FormKind::QuadraticMinus: return "quadratic-minus";
        case FormKind::Symmetric: return "symmetric";
    }
    return "?";
}

FormSpace FormSpace::symplectic(const FqField& f, unsigned dim) {
    if (dim == 0 || dim % 2) throw ValidationError("symplectic space needs even dimension");
    FormSpace s;
    s.field_ = &f;
    s.dim_ = dim;
    s.kind_ = FormKind::Symplectic;
    s.gram_ = MatFq(f, dim, dim);
    const unsigned m = dim / 2;
    for (unsigned i = 0; i < m; ++i) {
        s.gram_(i, m + i) = 1;
        s.gram_(m + i, i) = f.neg(1);
    }
    return s;
}

FormSpace FormSpace::hermitian(const FqField& f, unsigned dim) {
    if (f.f() % 2) throw ValidationError("hermitian form needs a field of square order");
    FormSpace s;
    s.field_ = &f;
    s.dim_ = dim;
    s.kind_ = FormKind::Hermitian;
    s.gram_ = MatFq::identity(f, dim);
    return s;
}

FormSpace FormSpace::symmetric(const FqField& f, unsigned dim) {
    FormSpace s;
    s.field_ = &f;
    s.dim_ = dim;
    s.kind_ = FormKind::Symmetric;
    s.gram_ = MatFq::identity(f, dim);
    return s;
}

namespace {

FormSpace quadratic(const FqField& f, unsigned dim, bool minus) {
    if (dim == 0 || dim % 2) throw ValidationError("quadratic space needs even dimension");
    const unsigned m = dim / 2;
    MatFq up(f, dim, dim);
    for (unsigned i = 0; i < m; ++i) up(i, m + i) = 1;
    if (minus) {
        const unsigned a = m - 1, b = 2 * m - 1;
        if (f.p() == 2) {
            // x^2 + xy + c y^2 with absolute trace of c equal to 1
            FqField::Elem c = 1;
            while (f.trace(c) != 1) ++c;
            up(a, a) = 1;
            up(a, b) = 1;
            up(b, b) = c;
        } else {
            FqField::Elem nu = 2;
            while (nu < f.q() && f.eta(nu) != -1) ++nu;
            up(a, b) = 0;
            up(a, a) = 1;
            up(b, b) = f.neg(nu);
        }
    }
    return FormSpace::from_quadratic(f, dim, minus ? FormKind::QuadraticMinus : FormKind::QuadraticPlus, up);
}

}  // namespace

FormSpace FormSpace::from_quadratic(const FqField& f, unsigned dim, FormKind kind, const MatFq& upper) {
    FormSpace s;
    s.field_ = &f;
    s.dim_ = dim;
    s.kind_ = kind;
    s.qupper_ = upper;
    // polarization B(x, y) = Q(x + y) - Q(x) - Q(y): gram = U + U^T
    s.gram_ = upper + upper.transpose();
    return s;
}

FormSpace FormSpace::quadratic_plus(const FqField& f, unsigned dim) { return quadratic(f, dim, false); }
FormSpace FormSpace::quadratic_minus(const FqField& f, unsigned dim) { return quadratic(f, dim, true); }

FormSpace::Elem FormSpace::form(const std::vector<Elem>& x, const std::vector<Elem>& y) const {
    const FqField& F = *field_;
    Elem s = 0;
    for (unsigned i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (unsigned j = 0; j < dim_; ++j) {
            Elem g = gram_(i, j);
            if (g == 0 || y[j] == 0) continue;
            Elem yj = kind_ == FormKind::Hermitian ? F.involution(y[j]) : y[j];
            s = F.add(s, F.mul(F.mul(x[i], g), yj));
        }
    }
    return s;
}

FormSpace::Elem FormSpace::quad(const std::vector<Elem>& x) const {
    if (kind_ != FormKind::QuadraticPlus && kind_ != FormKind::QuadraticMinus)
        throw ValidationError("Q(x) requested on a non-quadratic space");
    const FqField& F = *field_;
    Elem s = 0;
    for (unsigned i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (unsigned j = i; j < dim_; ++j) {
            Elem u = qupper_(i, j);
            if (u == 0 || x[j] == 0) continue;
            s = F.add(s, F.mul(u, F.mul(x[i], x[j])));
        }
    }
    return s;
}

bool FormSpace::preserved_by(const MatFq& g) const {
    if (g.rows() != dim_ || g.cols() != dim_) return false;
    // B(gx, gy) = x^T g^T G gbar ybar, so compare g^T G gbar with G
    MatFq gbar = kind_ == FormKind::Hermitian ? g.conjugate_transpose().transpose() : g;
    if (!(g.transpose() * gram_ * gbar == gram_)) return false;
    if (kind_ == FormKind::QuadraticPlus || kind_ == FormKind::QuadraticMinus) {
        // Q(g e_i) = Q(e_i) for all i together with polarization preservation suffices
        for (unsigned i = 0; i < dim_; ++i) {
            std::vector<Elem> col(dim_);
            for (unsigned r = 0; r < dim_; ++r) col[r] = g(r, i);
            if (quad(col) != qupper_(i, i)) return false;
        }
    }
    return true;
}

bool is_isotropic(const FormSpace& s, const std::vector<FqField::Elem>& v) {
    bool zero = true;
    for (auto x : v)
        if (x != 0) zero = false;
    if (zero) throw ZeroVector("isotropy of the zero vector is undefined");
    if (v.size() != s.dim()) throw ValidationError("vector length mismatch");
    if (s.kind() == FormKind::QuadraticPlus || s.kind() == FormKind::QuadraticMinus) return s.quad(v) == 0;
    return s.form(v, v) == 0;
}

}  // namespace momentforge
