#include "momentforge/cyclo.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "momentforge/errors.hpp"

namespace momentforge {

struct CycloContext {
    unsigned n = 1;
    unsigned phi = 1;
    std::vector<long> cyclotomic;       // Phi_n, low degree first, monic
    std::vector<std::vector<long>> pw;  // pw[j] = x^j mod Phi_n, 0 <= j < n
};

namespace {

std::atomic<unsigned> g_conductor_cap{2520};

std::vector<long> poly_divexact(std::vector<long> num, const std::vector<long>& den) {
    // den monic
    std::size_t dn = den.size() - 1;
    std::vector<long> q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        long c = num[i];
        q[i - dn] = c;
        if (c != 0)
            for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return q;
}

std::vector<long> cyclotomic_poly(unsigned n, std::map<unsigned, std::vector<long>>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) p = poly_divexact(p, cyclotomic_poly(d, memo));
    memo[n] = p;
    return p;
}

std::unique_ptr<CycloContext> build_context(unsigned n) {
    auto ctx = std::make_unique<CycloContext>();
    std::map<unsigned, std::vector<long>> memo;
    ctx->n = n;
    ctx->cyclotomic = cyclotomic_poly(n, memo);
    ctx->phi = static_cast<unsigned>(ctx->cyclotomic.size() - 1);
    const unsigned phi = ctx->phi;
    ctx->pw.assign(n, std::vector<long>(phi, 0));
    std::vector<long> cur(phi, 0);
    cur[0] = 1;
    for (unsigned j = 0; j < n; ++j) {
        ctx->pw[j] = cur;
        // multiply by x and reduce the top coefficient using the monic Phi_n
        long top = cur[phi - 1];
        for (unsigned i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (unsigned i = 0; i < phi; ++i) cur[i] -= top * ctx->cyclotomic[i];
    }
    return ctx;
}

const CycloContext* context(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<CycloContext>> cache;
    if (n == 0) throw ValidationError("conductor must be positive");
    if (n > g_conductor_cap.load()) throw CapExceeded("conductor " + std::to_string(n) + " exceeds cap");
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = build_context(n);
    return slot.get();
}

long mod_l(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

unsigned conductor_cap() { return g_conductor_cap.load(); }
void set_conductor_cap(unsigned cap) {
    if (cap == 0) throw ValidationError("conductor cap must be positive");
    g_conductor_cap.store(cap);
}

unsigned gcd_u(unsigned a, unsigned b) {
    while (b) {
        unsigned t = a % b;
        a = b;
        b = t;
    }
    return a;
}
unsigned lcm_u(unsigned a, unsigned b) { return a / gcd_u(a, b) * b; }

unsigned euler_phi(unsigned n) {
    unsigned r = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

Cyclo::Cyclo() : ctx_(context(1)), c_(1) {}
Cyclo::Cyclo(long v) : ctx_(context(1)), c_(1, Rational(v)) {}
Cyclo::Cyclo(const Integer& v) : ctx_(context(1)), c_(1, Rational(v)) {}
Cyclo::Cyclo(const Rational& v) : ctx_(context(1)), c_(1, v) {}
Cyclo::Cyclo(const CycloContext* ctx) : ctx_(ctx), c_(ctx->phi) {}

Cyclo::Cyclo(unsigned conductor, std::vector<Rational> coeffs) : ctx_(context(conductor)) {
    if (coeffs.size() != ctx_->phi) throw ValidationError("coefficient vector must have length phi(N)");
    c_ = std::move(coeffs);
}

unsigned Cyclo::conductor() const { return ctx_->n; }

void Cyclo::canonicalize_raw(std::vector<Rational>& raw) {
    // raw is indexed by exponent modulo n
    const unsigned phi = ctx_->phi;
    c_.assign(phi, Rational(0));
    for (unsigned j = 0; j < raw.size(); ++j) {
        if (raw[j] == 0) continue;
        if (j < phi) {
            c_[j] += raw[j];
            continue;
        }
        const auto& p = ctx_->pw[j];
        for (unsigned i = 0; i < phi; ++i)
            if (p[i] != 0) c_[i] += raw[j] * p[i];
    }
}

Cyclo Cyclo::zeta(unsigned n, long k) {
    Cyclo z(context(n));
    std::vector<Rational> raw(n);
    raw[mod_l(k, n)] = 1;
    z.canonicalize_raw(raw);
    return z;
}

Cyclo Cyclo::from_powers(unsigned n, const std::vector<std::pair<long, long>>& terms) {
    Cyclo z(context(n));
    std::vector<Rational> raw(n);
    for (auto [e, c] : terms) raw[mod_l(e, n)] += c;
    z.canonicalize_raw(raw);
    return z;
}

Cyclo Cyclo::lift(unsigned n) const {
    const unsigned m = ctx_->n;
    if (n == m) return *this;
    if (n % m != 0) throw ValidationError("cannot embed conductor " + std::to_string(m) + " into " + std::to_string(n));
    Cyclo z(context(n));
    std::vector<Rational> raw(n);
    const unsigned step = n / m;
    for (unsigned i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) raw[i * step] = c_[i];
    z.canonicalize_raw(raw);
    return z;
}

Cyclo Cyclo::minimized() const {
    const unsigned n = ctx_->n;
    if (n == 1) return *this;
    if (is_rational()) return Cyclo(c_[0]);
    for (unsigned m = 2; m < n; ++m) {
        if (n % m != 0) continue;
        // z lies in Q(zeta_m) iff it is fixed by every a = 1 mod m
        bool fixed = true;
        for (unsigned a = 1 + m; a < n && fixed; a += m)
            if (gcd_u(a, n) == 1 && galois(a) != *this) fixed = false;
        if (!fixed) continue;
        // solve lift(x) = z by elimination on the phi(n) x phi(m) system
        const CycloContext* small = context(m);
        const unsigned pm = small->phi, pn = ctx_->phi;
        std::vector<std::vector<Rational>> a(pn, std::vector<Rational>(pm + 1));
        for (unsigned j = 0; j < pm; ++j) {
            Cyclo col = Cyclo::zeta(m, j).lift(n);
            for (unsigned i = 0; i < pn; ++i) a[i][j] = col.c_[i];
        }
        for (unsigned i = 0; i < pn; ++i) a[i][pm] = c_[i];
        std::vector<int> pivcol;
        unsigned row = 0;
        for (unsigned col = 0; col < pm && row < pn; ++col) {
            unsigned piv = row;
            while (piv < pn && a[piv][col] == 0) ++piv;
            if (piv == pn) continue;
            std::swap(a[piv], a[row]);
            Rational inv = 1 / a[row][col];
            for (auto& v : a[row]) v *= inv;
            for (unsigned r = 0; r < pn; ++r) {
                if (r == row || a[r][col] == 0) continue;
                Rational f = a[r][col];
                for (unsigned c = 0; c <= pm; ++c) a[r][c] -= f * a[row][c];
            }
            pivcol.push_back(static_cast<int>(col));
            ++row;
        }
        std::vector<Rational> x(pm);
        for (unsigned r = 0; r < pivcol.size(); ++r) x[pivcol[r]] = a[r][pm];
        return Cyclo(m, std::move(x));
    }
    return *this;
}

bool Cyclo::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclo::rational_value() const {
    if (!is_rational()) throw NotRationalInteger("value " + str() + " is not rational");
    return c_[0];
}

Cyclo Cyclo::galois(long a) const {
    const unsigned n = ctx_->n;
    long am = mod_l(a, n);
    if (gcd_u(static_cast<unsigned>(am), n) != 1 && n > 1)
        throw ValidationError("Galois exponent must be a unit modulo the conductor");
    if (n <= 2) return *this;
    Cyclo z(ctx_);
    std::vector<Rational> raw(n);
    for (unsigned i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) raw[mod_l(am * i, n)] += c_[i];
    z.canonicalize_raw(raw);
    return z;
}

Cyclo Cyclo::conj() const { return galois(-1); }

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (is_rational()) return Cyclo(Rational(1) / c_[0]).lift(ctx_->n);
    const unsigned n = ctx_->n;
    Cyclo prod = Cyclo(1).lift(n);
    for (unsigned a = 2; a < n; ++a)
        if (gcd_u(a, n) == 1) prod *= galois(a);
    Cyclo norm = prod * *this;
    return prod * Cyclo(Rational(1) / norm.rational_value()).lift(n);
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    if (ctx_ == o.ctx_) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    unsigned n = lcm_u(ctx_->n, o.ctx_->n);
    *this = lift(n);
    Cyclo b = o.lift(n);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo Cyclo::operator-() const {
    Cyclo z = *this;
    for (auto& v : z.c_) v = -v;
    return z;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    if (ctx_ != o.ctx_) {
        unsigned n = lcm_u(ctx_->n, o.ctx_->n);
        if (ctx_->n != n) *this = lift(n);
        if (o.ctx_->n != n) return *this *= o.lift(n);
    }
    const unsigned n = ctx_->n, phi = ctx_->phi;
    if (o.is_rational()) {
        const Rational& s = o.c_[0];
        for (auto& v : c_) v *= s;
        return *this;
    }
    if (is_rational()) {
        Rational s = c_[0];
        c_ = o.c_;
        for (auto& v : c_) v *= s;
        return *this;
    }
    std::vector<Rational> raw(n);
    for (unsigned i = 0; i < phi; ++i) {
        if (c_[i] == 0) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (o.c_[j] == 0) continue;
            unsigned e = i + j;
            if (e >= n) e -= n;
            raw[e] += c_[i] * o.c_[j];
        }
    }
    canonicalize_raw(raw);
    return *this;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.ctx_ == b.ctx_) return a.c_ == b.c_;
    unsigned n = lcm_u(a.ctx_->n, b.ctx_->n);
    return a.lift(n).c_ == b.lift(n).c_;
}

Cyclo Cyclo::pow(unsigned long e) const {
    Cyclo result = Cyclo(1).lift(ctx_->n);
    Cyclo base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::complex<double> Cyclo::numeric() const {
    std::complex<double> s = 0;
    const double n = ctx_->n;
    for (unsigned i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        double ang = 2 * std::numbers::pi * i / n;
        s += c_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return s;
}

double numeric_error_bound(const Cyclo& z) {
    double mag = 0;
    for (const auto& v : z.coeffs()) mag += std::fabs(v.get_d());
    return 1e-12 * (1.0 + mag) * static_cast<double>(z.coeffs().size());
}

std::string Cyclo::str() const {
    Cyclo m = minimized();
    if (m.is_rational()) return to_string(m.c_[0]);
    std::ostringstream os;
    bool first = true;
    const unsigned n = m.ctx_->n;
    for (unsigned i = 0; i < m.c_.size(); ++i) {
        const Rational& v = m.c_[i];
        if (v == 0) continue;
        Rational a = abs(v);
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << to_string(a);
            continue;
        }
        if (a != 1) os << to_string(a) << "*";
        os << "z(" << n << ")";
        if (i != 1) os << "^" << i;
    }
    return os.str();
}

namespace {

struct TermParser {
    std::string s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " in '" + s + "'", 1, static_cast<int>(pos + 1));
    }
    bool eof() const { return pos >= s.size(); }
    char peek() const { return eof() ? '\0' : s[pos]; }

    std::string digits() {
        std::size_t b = pos;
        while (!eof() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (b == pos) fail("expected digits");
        return s.substr(b, pos - b);
    }

    // z(N)^k with optional ^k; returns (N, k)
    std::pair<unsigned, long> root() {
        if (peek() != 'z') fail("expected z(N)");
        ++pos;
        if (peek() != '(') fail("expected '('");
        ++pos;
        unsigned long n = std::stoul(digits());
        if (peek() != ')') fail("expected ')'");
        ++pos;
        long k = 1;
        if (peek() == '^') {
            ++pos;
            bool neg = false;
            if (peek() == '-') {
                neg = true;
                ++pos;
            }
            k = std::stol(digits());
            if (neg) k = -k;
        }
        if (n == 0) fail("conductor must be positive");
        return {static_cast<unsigned>(n), k};
    }
};

}  // namespace

Cyclo Cyclo::parse(std::string_view text) {
    TermParser p;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) p.s.push_back(ch);
    if (p.s.empty()) throw ParseError("empty value");
    Cyclo total(0);
    while (!p.eof()) {
        int sign = 1;
        if (p.peek() == '+' || p.peek() == '-') {
            sign = p.peek() == '-' ? -1 : 1;
            ++p.pos;
        } else if (p.pos != 0) {
            p.fail("expected '+' or '-'");
        }
        Rational coef = 1;
        if (std::isdigit(static_cast<unsigned char>(p.peek()))) {
            std::string num = p.digits();
            if (p.peek() == '/') {
                ++p.pos;
                num += "/" + p.digits();
            }
            coef = parse_rational(num);
            if (p.peek() != '*') {
                total += Cyclo(sign * coef);
                continue;
            }
            ++p.pos;  // a root must follow
        }
        auto [n, k] = p.root();
        Cyclo t = Cyclo::zeta(n, k);
        total += (sign > 0 ? t : -t) * Cyclo(coef);
    }
    return total;
}

bool Cyclo::less_same_conductor(const Cyclo& o) const {
    if (ctx_->n != o.ctx_->n) return ctx_->n < o.ctx_->n;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        int c = cmp(c_[i], o.c_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

bool CycloLess::operator()(const Cyclo& a, const Cyclo& b) const { return a.less_same_conductor(b); }

std::size_t Cyclo::hash() const {
    std::size_t h = ctx_->n;
    for (const auto& v : c_) {
        std::size_t x = static_cast<std::size_t>(mpz_get_si(v.get_num_mpz_t())) * 1000003u +
                        static_cast<std::size_t>(mpz_get_si(v.get_den_mpz_t()));
        h = h * 0x9E3779B97F4A7C15ull + x;
    }
    return h;
}

Cyclo abs_square(const Cyclo& z) { return z * z.conj(); }

Integer to_rational_integer(const Cyclo& z) {
    if (!z.is_rational()) throw NotRationalInteger("value " + z.str() + " has surviving irrational part");
    const Rational& r = z.coeffs()[0];
    if (r.get_den() != 1) throw NotRationalInteger("value " + to_string(r) + " is not an integer");
    return r.get_num();
}

Cyclo cyclo_mul(const Cyclo& a, const Cyclo& b) { return a * b; }

}  // namespace momentforge
