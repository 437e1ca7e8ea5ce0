#include "momentforge/weil.hpp"

#include <algorithm>
#include <thread>

#include "momentforge/errors.hpp"

namespace momentforge {

WeilPart parse_weil_part(const std::string& s) {
    if (s == "total") return WeilPart::Total;
    if (s == "even") return WeilPart::Even;
    if (s == "odd") return WeilPart::Odd;
    throw ValidationError("weil part must be total, even or odd (got '" + s + "')");
}

std::string to_string(WeilPart p) {
    switch (p) {
        case WeilPart::Total: return "total";
        case WeilPart::Even: return "even";
        case WeilPart::Odd: return "odd";
    }
    return "?";
}

namespace {

using Elem = FqField::Elem;

struct Blocks {
    MatFq a, b, c, d;
};

Blocks split_blocks(const MatFq& g, unsigned m) {
    const FqField& F = g.field();
    Blocks s{MatFq(F, m, m), MatFq(F, m, m), MatFq(F, m, m), MatFq(F, m, m)};
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) {
            s.a(i, j) = g(i, j);
            s.b(i, j) = g(i, m + j);
            s.c(i, j) = g(m + i, j);
            s.d(i, j) = g(m + i, m + j);
        }
    return s;
}

bool is_zero(const MatFq& x) {
    for (auto v : x.data())
        if (v) return false;
    return true;
}

// x ^ T y
Elem dot_fq(const FqField& F, const std::vector<Elem>& x, const std::vector<Elem>& y) {
    Elem s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s = F.add(s, F.mul(x[i], y[i]));
    return s;
}

Elem quad_form(const FqField& F, const MatFq& c, const std::vector<Elem>& u) {
    return dot_fq(F, u, c.apply(u));
}

ZetaMatrix scalar_times(const ZetaInt& s, const ZetaMatrix& m, unsigned p) {
    ZetaMatrix d(p, m.dim());
    for (unsigned i = 0; i < m.dim(); ++i)
        for (unsigned e = 0; e < s.size(); ++e)
            if (s[e]) d.add_root(i, i, e, s[e]);
    return d * m;
}

ZetaInt gauss_sum(const FqField& F) {
    ZetaMatrix g(F.p(), 1);
    for (unsigned x = 0; x < F.q(); ++x) g.add_root(0, 0, F.trace(F.mul(x, x)), 1);
    return g.entry(0, 0);
}

// t eta(-1)^m G^m [psi(u.v)], the scaled Fourier generator
ZetaMatrix fourier(const FqField& F, const std::vector<std::vector<Elem>>& vecs, int64_t t, const ZetaInt& gm,
                   int eta_m) {
    const unsigned dim = static_cast<unsigned>(vecs.size());
    ZetaMatrix f(F.p(), dim);
    for (unsigned u = 0; u < dim; ++u)
        for (unsigned v = 0; v < dim; ++v) f.add_root(u, v, F.trace(dot_fq(F, vecs[u], vecs[v])), 1);
    ZetaInt s = gm;
    for (auto& c : s) c *= t * eta_m;
    return scalar_times(s, f, F.p());
}

ZetaInt zeta_pow(const ZetaInt& z, unsigned e, unsigned p) {
    ZetaMatrix acc(p, 1), base(p, 1);
    acc.add_root(0, 0, 0, 1);
    for (unsigned i = 0; i < z.size(); ++i)
        if (z[i]) base.add_root(0, 0, i, z[i]);
    for (unsigned i = 0; i < e; ++i) acc = acc * base;
    return acc.entry(0, 0);
}

ZetaMatrix mul_scaled(const ZetaMatrix& a, const ZetaMatrix& b, int64_t scale) {
    ZetaMatrix c = a * b;
    c.divide_exact(scale);
    return c;
}

}  // namespace

WeilRep sympl_weil(const EnumeratedGroup& g) {
    const GroupSpec& spec = g.spec();
    if (spec.family != Family::Sp) throw ValidationError("the Schrodinger model needs a symplectic group");
    const FqField& F = g.field();
    if (F.p() == 2) throw ValidationError("Weil representation needs odd q");
    WeilRep rep;
    rep.group = &g;
    rep.q = F.q();
    rep.p = F.p();
    rep.m = spec.n / 2;
    uint64_t dim = 1;
    for (unsigned i = 0; i < rep.m; ++i) {
        dim *= rep.q;
        if (dim > kWeilDimCap)
            throw RepDimCap("Weil representation of " + spec.str() + " exceeds dimension cap " +
                            std::to_string(kWeilDimCap));
    }
    rep.dim = static_cast<unsigned>(dim);
    rep.gauss = gauss_sum(F);
    const unsigned m = rep.m, p = rep.p;
    const int64_t scale = rep.scale();

    std::vector<std::vector<Elem>> vecs(rep.dim);
    for (unsigned i = 0; i < rep.dim; ++i) vecs[i] = vector_from_index(F, m, i);
    const Elem half = F.inv(F.from_int(2));
    const int eta_m = rep.m % 2 ? F.eta(F.neg(1)) : 1;
    const ZetaInt gm = zeta_pow(rep.gauss, m, p);

    // the sign of the Fourier generator: (w l(-I))^3 = 1
    ZetaMatrix lminus(p, rep.dim);
    for (unsigned u = 0; u < rep.dim; ++u)
        lminus.add_root(u, u, F.trace(F.mul(half, dot_fq(F, vecs[u], vecs[u]))), scale);
    rep.fourier_sign = 0;
    ZetaMatrix ident(p, rep.dim);
    for (unsigned i = 0; i < rep.dim; ++i) ident.add_root(i, i, 0, scale);
    for (int t : {1, -1}) {
        ZetaMatrix wl = mul_scaled(fourier(F, vecs, t, gm, eta_m), lminus, scale);
        if (mul_scaled(mul_scaled(wl, wl, scale), wl, scale) == ident) {
            rep.fourier_sign = t;
            break;
        }
    }
    if (rep.fourier_sign == 0) throw HomomorphismViolation("no sign of the Fourier generator satisfies (w l)^3 = 1");

    for (const MatFq& s : g.generators()) {
        Blocks b = split_blocks(s, m);
        MatFq I = MatFq::identity(F, m);
        ZetaMatrix img(p, rep.dim);
        if (is_zero(b.b) && is_zero(b.c)) {
            MatFq ainv = b.a.inverse();
            const int64_t eta = F.eta(b.a.det());
            for (unsigned u = 0; u < rep.dim; ++u)
                img.add_root(u, static_cast<unsigned>(index_from_vector(F, ainv.apply(vecs[u]))), 0, eta * scale);
        } else if (b.a == I && b.d == I && is_zero(b.b)) {
            for (unsigned u = 0; u < rep.dim; ++u) {
                Elem e = F.neg(F.mul(half, quad_form(F, b.c, vecs[u])));
                img.add_root(u, u, F.trace(e), scale);
            }
        } else if (is_zero(b.a) && is_zero(b.d) && b.b == I && b.c == MatFq::scalar(F, m, F.neg(1))) {
            img = fourier(F, vecs, rep.fourier_sign, gm, eta_m);
        } else {
            throw ValidationError("generator is neither Levi, lower unipotent nor the Weyl element");
        }
        rep.images.push_back(std::move(img));
    }
    return rep;
}

ZetaMatrix weil_matrix(const WeilRep& rep, uint32_t element) {
    const EnumeratedGroup& g = *rep.group;
    std::vector<uint8_t> path;
    for (uint32_t e = element; e != 0; e = g.parent(e)) path.push_back(g.via(e));
    ZetaMatrix r(rep.p, rep.dim);
    for (unsigned i = 0; i < rep.dim; ++i) r.add_root(i, i, 0, rep.scale());
    for (auto it = path.rbegin(); it != path.rend(); ++it) r = mul_scaled(r, rep.images[*it], rep.scale());
    return r;
}

ZetaMatrix parity_operator(const WeilRep& rep) {
    const FqField& F = rep.group->field();
    ZetaMatrix P(rep.p, rep.dim);
    for (unsigned u = 0; u < rep.dim; ++u) {
        auto v = vector_from_index(F, rep.m, u);
        for (auto& x : v) x = F.neg(x);
        P.add_root(u, static_cast<unsigned>(index_from_vector(F, v)), 0, 1);
    }
    return P;
}

WeilCharacters weil_characters(const WeilRep& rep) {
    const EnumeratedGroup& g = *rep.group;
    const uint64_t bytes =
        g.order() * static_cast<uint64_t>(rep.dim) * rep.dim * (rep.p - 1) * sizeof(int64_t);
    if (bytes > kWeilMemoryCap)
        throw MemoryCapExceeded("paired enumeration of " + g.spec().str() + " needs " + std::to_string(bytes >> 20) +
                                " MiB of images; use the closed-form moment route");
    const int64_t scale = rep.scale();
    ZetaMatrix ident(rep.p, rep.dim);
    for (unsigned i = 0; i < rep.dim; ++i) ident.add_root(i, i, 0, scale);
    std::vector<ZetaMatrix> rho = pair_representation(
        g, ident, rep.images, [&](const ZetaMatrix& a, const ZetaMatrix& b) { return mul_scaled(a, b, scale); },
        [](const ZetaMatrix& a, const ZetaMatrix& b) { return a == b; });

    const FqField& F = g.field();
    std::vector<unsigned> neg(rep.dim);
    for (unsigned u = 0; u < rep.dim; ++u) {
        auto v = vector_from_index(F, rep.m, u);
        for (auto& x : v) x = F.neg(x);
        neg[u] = static_cast<unsigned>(index_from_vector(F, v));
    }
    const unsigned w = rep.p - 1;
    std::map<ZetaInt, uint32_t> keys[3];
    std::vector<uint32_t> idx[3];
    for (auto& v : idx) v.resize(g.order());
    for (uint32_t e = 0; e < g.order(); ++e) {
        ZetaInt omega = rho[e].trace();
        ZetaInt t(w, 0);
        for (unsigned u = 0; u < rep.dim; ++u) {
            const int64_t* x = rho[e].at(neg[u], u);
            for (unsigned i = 0; i < w; ++i) t[i] += x[i];
        }
        ZetaInt parts[3] = {omega, omega, omega};
        for (unsigned i = 0; i < w; ++i) {
            if (omega[i] % scale || t[i] % scale) throw HomomorphismViolation("non-integral Weil trace");
            const int64_t o = omega[i] / scale, tt = t[i] / scale;
            if ((o + tt) % 2) throw HomomorphismViolation("odd Weil trace sum");
            parts[0][i] = o;
            parts[1][i] = (o + tt) / 2;
            parts[2][i] = (o - tt) / 2;
        }
        for (int k = 0; k < 3; ++k) {
            auto [it, fresh] = keys[k].try_emplace(parts[k], static_cast<uint32_t>(keys[k].size()));
            idx[k][e] = it->second;
        }
        rho[e] = ZetaMatrix();  // release as we go
    }
    auto make = [&](int k, const std::string& name) {
        std::vector<Cyclo> vals(keys[k].size());
        for (const auto& [z, i] : keys[k]) vals[i] = zeta_int_to_cyclo(rep.p, z).minimized();
        return ElementCharacter(g, name, std::move(idx[k]), std::move(vals));
    };
    const std::string base = "weil(" + g.spec().str() + ")";
    return {make(0, base + ".total"), make(1, base + ".even"), make(2, base + ".odd")};
}

std::pair<ElementCharacter, ElementCharacter> split_weil(const WeilRep& rep) {
    WeilCharacters c = weil_characters(rep);
    return {std::move(c.even), std::move(c.odd)};
}

namespace {

// rank and discriminant (product of pivots) of a symmetric matrix, by congruence
std::pair<unsigned, Elem> symmetric_rank_disc(const FqField& F, std::vector<Elem> a, unsigned n) {
    auto at = [&](unsigned i, unsigned j) -> Elem& { return a[i * n + j]; };
    Elem disc = 1;
    unsigned k = 0;
    for (; k < n; ++k) {
        unsigned piv = n;
        for (unsigned i = k; i < n && piv == n; ++i)
            if (at(i, i)) piv = i;
        if (piv == n) {
            // all remaining diagonal entries vanish: e_i += e_j makes one nonzero (q odd)
            unsigned pi = n, pj = n;
            for (unsigned i = k; i < n && pi == n; ++i)
                for (unsigned j = i + 1; j < n; ++j)
                    if (at(i, j)) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) break;
            for (unsigned c = 0; c < n; ++c) at(pi, c) = F.add(at(pi, c), at(pj, c));
            for (unsigned r = 0; r < n; ++r) at(r, pi) = F.add(at(r, pi), at(r, pj));
            piv = pi;
        }
        if (piv != k) {
            for (unsigned c = 0; c < n; ++c) std::swap(at(piv, c), at(k, c));
            for (unsigned r = 0; r < n; ++r) std::swap(at(r, piv), at(r, k));
        }
        const Elem d = at(k, k);
        disc = F.mul(disc, d);
        const Elem dinv = F.inv(d);
        for (unsigned r = k + 1; r < n; ++r) {
            Elem f = F.mul(at(r, k), dinv);
            if (!f) continue;
            for (unsigned c = k; c < n; ++c) at(r, c) = F.sub(at(r, c), F.mul(f, at(k, c)));
            for (unsigned c = k; c < n; ++c) at(c, r) = at(r, c);
        }
    }
    return {k, disc};
}

}  // namespace

WeilSignature weil_signature(const MatFq& g) {
    const FqField& F = g.field();
    const unsigned n = g.rows();
    if (n % 2 || g.cols() != n) throw ValidationError("weil_signature needs a 2m x 2m matrix");
    const MatFq J = FormSpace::symplectic(F, n).gram();
    WeilSignature s;
    s.fix_plus = kernel_dim(g, 1);
    s.fix_minus = kernel_dim(g, F.neg(1));
    const Elem quarter = F.inv(F.from_int(4));
    MatFq M = J * g - g.transpose() * J;
    std::vector<Elem> a(M.data());
    for (auto& x : a) x = F.mul(x, quarter);
    auto [r, disc] = symmetric_rank_disc(F, a, n);
    s.rank = r;
    s.eta = F.eta(disc);
    return s;
}

std::map<WeilSignature, uint64_t> weil_signature_histogram(const EnumeratedGroup& g, unsigned threads) {
    threads = std::max(1u, threads);
    std::vector<std::map<WeilSignature, uint64_t>> local(threads);
    const uint64_t n = g.order();
    auto work = [&](unsigned t) {
        for (uint64_t i = t; i < n; i += threads) ++local[t][weil_signature(g.element(static_cast<uint32_t>(i)))];
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& th : pool) th.join();
    std::map<WeilSignature, uint64_t> out;
    for (auto& l : local)
        for (auto& [k, v] : l) out[k] += v;
    return out;
}

Cyclo weil_cross_term(unsigned q, unsigned m, const WeilSignature& s) {
    const FqField& F = FqField::get(q);
    Cyclo G = zeta_int_to_cyclo(F.p(), gauss_sum(F));
    Rational qpow = 1;
    long e = static_cast<long>(m) - static_cast<long>(s.rank);
    for (long i = 0; i < std::labs(e); ++i) qpow *= q;
    if (e < 0) qpow = 1 / qpow;
    return Cyclo(qpow * s.eta) * G.pow(s.rank);
}

Cyclo weil_abs_square(unsigned q, unsigned m, const WeilSignature& s, WeilPart part) {
    Cyclo plus(ipow(Integer(q), s.fix_plus));
    if (part == WeilPart::Total) return plus;
    Cyclo minus(ipow(Integer(q), s.fix_minus));
    Cyclo S = weil_cross_term(q, m, s);
    Cyclo re2 = S + S.conj();  // 2 Re S
    Cyclo v = part == WeilPart::Even ? plus + minus + re2 : plus + minus - re2;
    return v * Cyclo(Rational(1, 4));
}

Integer weil_degree(unsigned q, unsigned m, WeilPart part) {
    Integer d = ipow(Integer(q), m);
    if (part == WeilPart::Even) return (d + 1) / 2;
    if (part == WeilPart::Odd) return (d - 1) / 2;
    return d;
}

CharOracle weil_formula_oracle(const EnumeratedGroup& g, WeilPart part, unsigned threads) {
    if (g.spec().family != Family::Sp || g.field().p() == 2) throw ValidationError("closed-form Weil route needs Sp over odd q");
    const unsigned q = g.field().q(), m = g.spec().n / 2;
    std::vector<std::pair<Cyclo, Integer>> sq;
    for (const auto& [sig, count] : weil_signature_histogram(g, threads))
        sq.emplace_back(weil_abs_square(q, m, sig, part), Integer(static_cast<unsigned long>(count)));
    return CharOracle::from_abs_squares("weil(" + g.spec().str() + ")." + to_string(part), CharOracle::Source::ClosedFormula,
                                        Integer(static_cast<unsigned long>(g.order())), weil_degree(q, m, part), sq);
}

int fs_indicator(const ElementCharacter& chi) {
    const EnumeratedGroup& g = chi.group();
    std::vector<uint64_t> counts(chi.distinct().size(), 0);
    for (uint32_t i = 0; i < g.order(); ++i) ++counts[chi.value_index(square_map(g, i))];
    Cyclo s(0);
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i]) s += chi.distinct()[i] * Cyclo(Integer(static_cast<unsigned long>(counts[i])));
    s *= Cyclo(Rational(Integer(1), Integer(static_cast<unsigned long>(g.order()))));
    Integer v = to_rational_integer(s);
    if (v < -1 || v > 1) throw NotRationalInteger("Frobenius-Schur sum " + v.get_str() + " is not -1, 0 or 1");
    return static_cast<int>(v.get_si());
}

}  // namespace momentforge
