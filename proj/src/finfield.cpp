#include "momentforge/finfield.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "momentforge/errors.hpp"

namespace momentforge {

namespace {

// Conway polynomials, low degree first.
const std::map<unsigned, std::vector<unsigned>>& conway_table() {
    static const std::map<unsigned, std::vector<unsigned>> t = {
        {4, {1, 1, 1}},        // x^2 + x + 1
        {8, {1, 1, 0, 1}},     // x^3 + x + 1
        {9, {2, 2, 1}},        // x^2 + 2x + 2
        {16, {1, 1, 0, 0, 1}}, // x^4 + x + 1
        {25, {2, 4, 1}},       // x^2 + 4x + 2
        {27, {1, 2, 0, 1}},    // x^3 + 2x + 1
        {49, {3, 6, 1}},       // x^2 + 6x + 3
    };
    return t;
}

using Poly = std::vector<unsigned>;  // over F_p, low degree first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    unsigned lead_inv = 1;
    for (unsigned t = 1; t < p; ++t)
        if (t * m.back() % p == 1) lead_inv = t;
    while (a.size() > dm) {
        unsigned c = a.back() * lead_inv % p;
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = (a[shift + j] + p - c * m[j] % p) % p;
        trim(a);
    }
    return a;
}

bool poly_irreducible(const Poly& m, unsigned p) {
    const unsigned f = static_cast<unsigned>(m.size() - 1);
    if (f <= 1) return f == 1;
    // try every monic divisor of degree 1..f/2
    for (unsigned d = 1; d <= f / 2; ++d) {
        unsigned long count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (unsigned long code = 0; code < count; ++code) {
            Poly g(d + 1);
            unsigned long c = code;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = c % p;
                c /= p;
            }
            g[d] = 1;
            if (poly_mod(m, g, p).empty()) return false;
        }
    }
    return true;
}

unsigned modpow(unsigned long long b, unsigned long long e, unsigned m) {
    unsigned long long r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return static_cast<unsigned>(r);
}

}  // namespace

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<unsigned, unsigned> prime_power(unsigned q) {
    if (q < 2) throw ValidationError("field size must be at least 2");
    unsigned p = 2;
    while (q % p != 0) ++p;
    unsigned f = 0, r = q;
    while (r % p == 0) {
        r /= p;
        ++f;
    }
    if (r != 1) throw ValidationError("field size " + std::to_string(q) + " is not a prime power");
    return {p, f};
}

std::vector<unsigned> pinned_modulus(unsigned q) {
    auto it = conway_table().find(q);
    if (it == conway_table().end()) return {};
    return it->second;
}

const FqField& FqField::get(unsigned q) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<FqField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[q];
    if (slot) return *slot;
    if (q > 65536) throw CapExceeded("field size above 2^16");
    auto [p, f] = prime_power(q);
    std::vector<unsigned> mod = pinned_modulus(q);
    if (mod.empty()) {
        if (f == 1) {
            mod = {0, 1};  // x; elements are plain residues
        } else {
            // smallest primitive monic polynomial of degree f in digit order
            unsigned long count = 1;
            for (unsigned i = 0; i < f; ++i) count *= p;
            for (unsigned long code = 1; code < count && mod.empty(); ++code) {
                Poly g(f + 1);
                unsigned long c = code;
                for (unsigned i = 0; i < f; ++i) {
                    g[i] = c % p;
                    c /= p;
                }
                g[f] = 1;
                if (g[0] == 0 || !poly_irreducible(g, p)) continue;
                try {
                    FqField trial(p, f, g);
                    mod = g;
                } catch (const ValidationError&) {
                }
            }
        }
    }
    slot = std::make_unique<FqField>(p, f, mod);
    return *slot;
}

FqField::FqField(unsigned p, unsigned f, std::vector<unsigned> modulus)
    : p_(p), f_(f), q_(1), modulus_(std::move(modulus)) {
    if (!is_prime(p) || f == 0) throw ValidationError("bad field parameters");
    for (unsigned i = 0; i < f; ++i) q_ *= p;
    if (q_ > 65536) throw CapExceeded("field size above 2^16");
    if (modulus_.size() != f + 1 || modulus_.back() != 1) throw ValidationError("modulus must be monic of degree f");
    if (!poly_irreducible(modulus_, p)) throw ValidationError("modulus is not irreducible");

    neg_tab_.resize(q_);
    for (unsigned a = 0; a < q_; ++a) {
        unsigned r = 0, mulp = 1, x = a;
        for (unsigned i = 0; i < f_; ++i) {
            r += ((p_ - x % p_) % p_) * mulp;
            x /= p_;
            mulp *= p_;
        }
        neg_tab_[a] = static_cast<Elem>(r);
    }
    if (q_ <= 256) {
        add_tab_.resize(static_cast<std::size_t>(q_) * q_);
        for (unsigned a = 0; a < q_; ++a)
            for (unsigned b = 0; b < q_; ++b) add_tab_[a * q_ + b] = add_slow(a, b);
    }

    // find a primitive element: x itself for f > 1 (must be), else least generator mod p
    unsigned g = p_;  // the polynomial x when f > 1
    if (f_ == 1) {
        g = 1;
        for (unsigned c = 1; c < p_; ++c) {
            bool prim = true;
            for (unsigned r = 2; r <= p_ - 1; ++r)
                if ((p_ - 1) % r == 0 && is_prime(r) && modpow(c, (p_ - 1) / r, p_) == 1) prim = false;
            if (prim) {
                g = c;
                break;
            }
        }
    }
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    std::vector<char> seen(q_, 0);
    Elem cur = 1;
    for (unsigned k = 0; k + 1 < q_; ++k) {
        if (seen[cur]) throw ValidationError("modulus of " + describe() + " is not primitive");
        seen[cur] = 1;
        exp_[k] = cur;
        log_[cur] = k;
        cur = poly_mul_mod(cur, static_cast<Elem>(g));
    }
    if (cur != 1) throw ValidationError("primitive element search failed");

    trace_.resize(q_);
    for (unsigned a = 0; a < q_; ++a) {
        Elem s = 0, x = static_cast<Elem>(a);
        for (unsigned i = 0; i < f_; ++i) {
            s = add(s, x);
            x = pow(x, p_);
        }
        if (s >= p_) throw ValidationError("trace left the prime field");
        trace_[a] = s;
    }
}

FqField::Elem FqField::add_slow(Elem a, Elem b) const {
    unsigned r = 0, mulp = 1;
    unsigned x = a, y = b;
    for (unsigned i = 0; i < f_; ++i) {
        r += ((x % p_ + y % p_) % p_) * mulp;
        x /= p_;
        y /= p_;
        mulp *= p_;
    }
    return static_cast<Elem>(r);
}

FqField::Elem FqField::poly_mul_mod(Elem a, Elem b) const {
    Poly pa(f_), pb(f_);
    unsigned x = a, y = b;
    for (unsigned i = 0; i < f_; ++i) {
        pa[i] = x % p_;
        pb[i] = y % p_;
        x /= p_;
        y /= p_;
    }
    Poly prod(2 * f_, 0);
    for (unsigned i = 0; i < f_; ++i)
        for (unsigned j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
    Poly r = poly_mod(prod, modulus_, p_);
    unsigned out = 0, mulp = 1;
    for (unsigned i = 0; i < r.size(); ++i) {
        out += r[i] * mulp;
        mulp *= p_;
    }
    return static_cast<Elem>(out);
}

FqField::Elem FqField::inv(Elem a) const {
    if (a == 0) throw ValidationError("inverse of zero field element");
    unsigned l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

FqField::Elem FqField::pow(Elem a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw ValidationError("zero to a negative power");
        return 0;
    }
    long long m = static_cast<long long>(q_) - 1;
    long long k = (static_cast<long long>(log_[a]) * (e % m)) % m;
    if (k < 0) k += m;
    return exp_[k];
}

unsigned FqField::log(Elem a) const {
    if (a == 0) throw ValidationError("log of zero");
    return log_[a];
}

FqField::Elem FqField::exp(long long k) const {
    long long m = static_cast<long long>(q_) - 1;
    k %= m;
    if (k < 0) k += m;
    return exp_[k];
}

FqField::Elem FqField::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

FqField::Elem FqField::involution(Elem a) const {
    if (f_ % 2 != 0) throw ValidationError("field has no involution");
    unsigned long long r = 1;
    for (unsigned i = 0; i < f_ / 2; ++i) r *= p_;
    return pow(a, static_cast<long long>(r));
}

int FqField::eta(Elem a) const {
    if (a == 0) return 0;
    if (p_ == 2) return 1;
    return log_[a] % 2 == 0 ? 1 : -1;
}

std::string FqField::describe() const {
    std::ostringstream os;
    os << "F_" << q_;
    return os.str();
}

// --- MatFq -------------------------------------------------------------

MatFq::MatFq(const FqField& field, unsigned rows, unsigned cols)
    : field_(&field), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

MatFq MatFq::identity(const FqField& field, unsigned n) { return scalar(field, n, 1); }

MatFq MatFq::scalar(const FqField& field, unsigned n, Elem s) {
    MatFq m(field, n, n);
    for (unsigned i = 0; i < n; ++i) m(i, i) = s;
    return m;
}

MatFq MatFq::operator*(const MatFq& b) const {
    if (cols_ != b.rows_) throw ValidationError("matrix shape mismatch");
    MatFq out(*field_, rows_, b.cols_);
    const FqField& F = *field_;
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned k = 0; k < cols_; ++k) {
            Elem x = (*this)(i, k);
            if (x == 0) continue;
            for (unsigned j = 0; j < b.cols_; ++j) out(i, j) = F.add(out(i, j), F.mul(x, b(k, j)));
        }
    return out;
}

MatFq MatFq::operator+(const MatFq& b) const {
    MatFq out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_->add(a_[i], b.a_[i]);
    return out;
}

MatFq MatFq::operator-(const MatFq& b) const {
    MatFq out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_->sub(a_[i], b.a_[i]);
    return out;
}

std::vector<MatFq::Elem> MatFq::apply(const std::vector<Elem>& v) const {
    std::vector<Elem> out(rows_, 0);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned k = 0; k < cols_; ++k) out[i] = field_->add(out[i], field_->mul((*this)(i, k), v[k]));
    return out;
}

MatFq MatFq::transpose() const {
    MatFq out(*field_, cols_, rows_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

MatFq MatFq::conjugate_transpose() const {
    MatFq out(*field_, cols_, rows_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j) out(j, i) = field_->involution((*this)(i, j));
    return out;
}

namespace {

// Row-reduce in place; returns rank.  Optionally tracks (det, augmented inverse).
unsigned eliminate(const FqField& F, std::vector<FqField::Elem>& a, unsigned rows, unsigned cols,
                   FqField::Elem* det = nullptr) {
    unsigned rank = 0;
    FqField::Elem d = 1;
    for (unsigned col = 0; col < cols && rank < rows; ++col) {
        unsigned piv = rank;
        while (piv < rows && a[piv * cols + col] == 0) ++piv;
        if (piv == rows) {
            d = 0;
            continue;
        }
        if (piv != rank) {
            for (unsigned j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
            d = F.neg(d);
        }
        FqField::Elem pv = a[rank * cols + col];
        d = F.mul(d, pv);
        FqField::Elem inv = F.inv(pv);
        for (unsigned j = 0; j < cols; ++j) a[rank * cols + j] = F.mul(a[rank * cols + j], inv);
        for (unsigned r = 0; r < rows; ++r) {
            if (r == rank) continue;
            FqField::Elem fct = a[r * cols + col];
            if (fct == 0) continue;
            for (unsigned j = 0; j < cols; ++j)
                a[r * cols + j] = F.sub(a[r * cols + j], F.mul(fct, a[rank * cols + j]));
        }
        ++rank;
    }
    if (det) *det = rank == rows ? d : 0;
    return rank;
}

}  // namespace

unsigned MatFq::rank() const {
    std::vector<Elem> a = a_;
    return eliminate(*field_, a, rows_, cols_);
}

MatFq::Elem MatFq::det() const {
    if (rows_ != cols_) throw ValidationError("det of non-square matrix");
    std::vector<Elem> a = a_;
    Elem d = 0;
    eliminate(*field_, a, rows_, cols_, &d);
    return d;
}

MatFq MatFq::inverse() const {
    if (rows_ != cols_) throw ValidationError("inverse of non-square matrix");
    const unsigned n = rows_;
    std::vector<Elem> aug(static_cast<std::size_t>(n) * 2 * n, 0);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) aug[i * 2 * n + j] = (*this)(i, j);
        aug[i * 2 * n + n + i] = 1;
    }
    unsigned r = eliminate(*field_, aug, n, 2 * n);
    // the left block has full rank iff no pivot landed in the right block
    for (unsigned i = 0; i < n; ++i)
        if (r < n || aug[i * 2 * n + i] != 1) throw ValidationError("singular matrix");
    MatFq out(*field_, n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) out(i, j) = aug[i * 2 * n + n + j];
    return out;
}

bool MatFq::is_scalar() const {
    if (rows_ != cols_) return false;
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? (*this)(0, 0) : 0)) return false;
    return true;
}

unsigned kernel_dim(const MatFq& m, FqField::Elem shift) {
    if (m.rows() != m.cols()) throw ValidationError("kernel_dim needs a square matrix");
    MatFq d = m - MatFq::scalar(m.field(), m.rows(), shift);
    return m.cols() - d.rank();
}

// --- forms ---------------------------------------------------------------

std::vector<FqField::Elem> vector_from_index(const FqField& f, unsigned dim, uint64_t idx) {
    std::vector<FqField::Elem> v(dim);
    for (unsigned i = 0; i < dim; ++i) {
        v[i] = static_cast<FqField::Elem>(idx % f.q());
        idx /= f.q();
    }
    return v;
}

uint64_t index_from_vector(const FqField& f, const std::vector<FqField::Elem>& v) {
    uint64_t idx = 0;
    for (std::size_t i = v.size(); i-- > 0;) idx = idx * f.q() + v[i];
    return idx;
}

}  // namespace momentforge
