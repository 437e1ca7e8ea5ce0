#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace momentforge {

/// Finite field F_{p^f}.  An element is an integer 0..q-1 whose base-p digits
/// are the coefficients (low degree first) of a polynomial modulo `modulus`.
/// In particular 0 and 1 are the field's zero and one, and 0..p-1 is F_p.
class FqField {
public:
    using Elem = uint16_t;

    /// Field of order q with the pinned modulus (Conway polynomial where
    /// pinned, else the smallest primitive polynomial).  Cached; never freed.
    static const FqField& get(unsigned q);

    FqField(unsigned p, unsigned f, std::vector<unsigned> modulus);

    unsigned p() const { return p_; }
    unsigned f() const { return f_; }
    unsigned q() const { return q_; }
    /// Modulus coefficients low degree first, monic (length f+1).
    const std::vector<unsigned>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const { return add_tab_.empty() ? add_slow(a, b) : add_tab_[a * q_ + b]; }
    Elem neg(Elem a) const { return neg_tab_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        unsigned s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, long long e) const;

    /// The fixed primitive element (a generator of the multiplicative group).
    Elem primitive() const { return exp_[1 % (q_ - 1)]; }
    unsigned log(Elem a) const;  ///< discrete log base primitive(); a != 0
    Elem exp(long long k) const;

    Elem from_int(long long v) const;  ///< image of an integer in F_p
    Elem frobenius(Elem a) const { return pow(a, p_); }
    /// x -> x^{sqrt(q)}; requires f even.
    Elem involution(Elem a) const;
    /// Absolute trace to F_p, as an integer in 0..p-1.
    unsigned trace(Elem a) const { return trace_[a]; }
    /// Quadratic character: 0 at 0, +1 on squares, -1 otherwise (q odd).
    int eta(Elem a) const;

    std::string describe() const;

private:
    unsigned p_, f_, q_;
    std::vector<unsigned> modulus_;
    std::vector<Elem> add_tab_, neg_tab_, exp_, trace_;
    std::vector<unsigned> log_;

    Elem add_slow(Elem a, Elem b) const;
    Elem poly_mul_mod(Elem a, Elem b) const;
};

bool is_prime(unsigned n);
/// q = p^f with p prime, or throws ValidationError.
std::pair<unsigned, unsigned> prime_power(unsigned q);
/// The pinned modulus used for F_q, or empty if none is pinned.
std::vector<unsigned> pinned_modulus(unsigned q);

/// Dense matrix over a finite field.
class MatFq {
public:
    using Elem = FqField::Elem;

    MatFq() = default;
    MatFq(const FqField& field, unsigned rows, unsigned cols);
    static MatFq identity(const FqField& field, unsigned n);
    static MatFq scalar(const FqField& field, unsigned n, Elem s);

    const FqField& field() const { return *field_; }
    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    Elem operator()(unsigned r, unsigned c) const { return a_[r * cols_ + c]; }
    Elem& operator()(unsigned r, unsigned c) { return a_[r * cols_ + c]; }
    const std::vector<Elem>& data() const { return a_; }

    MatFq operator*(const MatFq& b) const;
    MatFq operator+(const MatFq& b) const;
    MatFq operator-(const MatFq& b) const;
    bool operator==(const MatFq& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    std::vector<Elem> apply(const std::vector<Elem>& v) const;

    MatFq transpose() const;
    /// Entrywise field involution (f even) then transpose.
    MatFq conjugate_transpose() const;
    MatFq inverse() const;  ///< throws ValidationError if singular
    Elem det() const;
    unsigned rank() const;
    bool is_scalar() const;

private:
    const FqField* field_ = nullptr;
    unsigned rows_ = 0, cols_ = 0;
    std::vector<Elem> a_;
};

/// dim Ker(m - shift*I) over the base field of m.
unsigned kernel_dim(const MatFq& m, FqField::Elem shift);

enum class FormKind { Symplectic, Hermitian, QuadraticPlus, QuadraticMinus, Symmetric };

std::string to_string(FormKind k);

/// A vector space with one of the pinned classical forms.
///  symplectic:   gram [[0, I], [-I, 0]] in the basis e_1..e_m, f_1..f_m
///  hermitian:    gram I, h(x, y) = sum x_i y_i^{sqrt q}
///  quadratic+:   Q = sum_i x_i x_{m+i}
///  quadratic-:   as + but the last pair is x^2 + xy + c y^2 (c = 1 over F_2);
///                for odd q the last pair is x^2 - nu y^2, nu the least non-square
///  symmetric:    gram I
class FormSpace {
public:
    using Elem = FqField::Elem;

    static FormSpace symplectic(const FqField& f, unsigned dim);
    static FormSpace hermitian(const FqField& f, unsigned dim);
    static FormSpace quadratic_plus(const FqField& f, unsigned dim);
    static FormSpace quadratic_minus(const FqField& f, unsigned dim);
    static FormSpace symmetric(const FqField& f, unsigned dim);
    /// Quadratic form Q(x) = sum_{i<=j} upper(i,j) x_i x_j.
    static FormSpace from_quadratic(const FqField& f, unsigned dim, FormKind kind, const MatFq& upper);

    const FqField& field() const { return *field_; }
    unsigned dim() const { return dim_; }
    FormKind kind() const { return kind_; }
    /// Gram matrix of the bilinear/sesquilinear form (the polarization for quadratic kinds).
    const MatFq& gram() const { return gram_; }

    Elem form(const std::vector<Elem>& x, const std::vector<Elem>& y) const;
    Elem quad(const std::vector<Elem>& x) const;  ///< Q(x); quadratic kinds only
    bool preserved_by(const MatFq& g) const;

private:
    const FqField* field_ = nullptr;
    unsigned dim_ = 0;
    FormKind kind_ = FormKind::Symplectic;
    MatFq gram_;
    MatFq qupper_;  // Q(x) = sum_{i<=j} qupper(i,j) x_i x_j
};

/// True iff v is isotropic (Q(v)=0 for quadratic kinds, form(v,v)=0 otherwise).
bool is_isotropic(const FormSpace& s, const std::vector<FqField::Elem>& v);

/// Vector <-> integer index (base-q digits, coordinate 0 least significant).
std::vector<FqField::Elem> vector_from_index(const FqField& f, unsigned dim, uint64_t idx);
uint64_t index_from_vector(const FqField& f, const std::vector<FqField::Elem>& v);

}  // namespace momentforge
