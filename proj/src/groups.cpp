#include "momentforge/groups.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <map>
#include <sstream>

namespace momentforge {

namespace {

constexpr uint32_t kEmpty = 0xFFFFFFFFu;

Integer pw(unsigned q, unsigned e) { return ipow(Integer(q), e); }

}  // namespace

std::string to_string(Family f) {
    switch (f) {
        case Family::SL: return "SL";
        case Family::SU: return "SU";
        case Family::GU: return "GU";
        case Family::Sp: return "Sp";
        case Family::GOPlus: return "GO+";
        case Family::GOMinus: return "GO-";
        case Family::BinaryIcosahedral: return "2I";
    }
    return "?";
}

namespace {

Family parse_family(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "sl") return Family::SL;
    if (s == "su") return Family::SU;
    if (s == "gu") return Family::GU;
    if (s == "sp") return Family::Sp;
    if (s == "go+" || s == "o+" || s == "goplus") return Family::GOPlus;
    if (s == "go-" || s == "o-" || s == "gominus") return Family::GOMinus;
    if (s == "2i" || s == "binaryicosahedral" || s == "binary-icosahedral") return Family::BinaryIcosahedral;
    throw ValidationError("unknown group family '" + s + "'");
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    GroupSpec s;
    s.family = parse_family(parts[0]);
    if (s.family == Family::BinaryIcosahedral) {
        if (parts.size() != 1) throw ValidationError("binary icosahedral group takes no parameters");
        s.n = 2;
        s.q = 0;
        return s;
    }
    if (parts.size() != 3) throw ValidationError("group spec must look like family:n:q, got '" + text + "'");
    try {
        s.n = static_cast<unsigned>(std::stoul(parts[1]));
        s.q = static_cast<unsigned>(std::stoul(parts[2]));
    } catch (const std::exception&) {
        throw ValidationError("bad group parameters in '" + text + "'");
    }
    if (s.n == 0) throw ValidationError("degree must be positive");
    prime_power(s.q);
    if ((s.family == Family::Sp || s.family == Family::GOPlus || s.family == Family::GOMinus) && s.n % 2)
        throw ValidationError("symplectic and orthogonal groups need even degree");
    if (s.family == Family::SL && s.n < 2) throw ValidationError("SL needs degree at least 2");
    return s;
}

std::string GroupSpec::str() const {
    if (family == Family::BinaryIcosahedral) return "2I";
    std::string f = to_string(family);
    for (auto& c : f) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return f + ":" + std::to_string(n) + ":" + std::to_string(q);
}

unsigned GroupSpec::entry_field_size() const {
    if (family == Family::SU || family == Family::GU) return q * q;
    return q;
}

Integer classical_order(const GroupSpec& s) {
    const unsigned n = s.n, q = s.q;
    Integer r = 1;
    switch (s.family) {
        case Family::SL:
            r = pw(q, n * (n - 1) / 2);
            for (unsigned i = 2; i <= n; ++i) r *= pw(q, i) - 1;
            return r;
        case Family::Sp: {
            const unsigned m = n / 2;
            r = pw(q, m * m);
            for (unsigned i = 1; i <= m; ++i) r *= pw(q, 2 * i) - 1;
            return r;
        }
        case Family::GU:
        case Family::SU:
            r = pw(q, n * (n - 1) / 2);
            for (unsigned i = 1; i <= n; ++i) r *= pw(q, i) - (i % 2 ? -1 : 1);
            if (s.family == Family::SU) r /= q + 1;
            return r;
        case Family::GOPlus:
        case Family::GOMinus: {
            const unsigned m = n / 2;
            const int eps = s.family == Family::GOPlus ? 1 : -1;
            r = 2 * pw(q, m * (m - 1)) * (pw(q, m) - eps);
            for (unsigned i = 1; i < m; ++i) r *= pw(q, 2 * i) - 1;
            return r;
        }
        case Family::BinaryIcosahedral: return 120;
    }
    return r;
}

std::optional<FormSpace> natural_form(const GroupSpec& s) {
    switch (s.family) {
        case Family::Sp: return FormSpace::symplectic(FqField::get(s.q), s.n);
        case Family::GU:
        case Family::SU: return FormSpace::hermitian(FqField::get(s.q * s.q), s.n);
        case Family::GOPlus: return FormSpace::quadratic_plus(FqField::get(s.q), s.n);
        case Family::GOMinus: return FormSpace::quadratic_minus(FqField::get(s.q), s.n);
        default: return std::nullopt;
    }
}

// --- generators ----------------------------------------------------------

namespace {

MatFq perm_matrix(const FqField& F, const std::vector<unsigned>& img) {
    // column j is e_{img[j]}
    MatFq m(F, static_cast<unsigned>(img.size()), static_cast<unsigned>(img.size()));
    for (unsigned j = 0; j < img.size(); ++j) m(img[j], j) = 1;
    return m;
}

MatFq block_diag(const MatFq& a, const MatFq& b) {
    const unsigned n = a.rows(), m = b.rows();
    MatFq out(a.field(), n + m, n + m);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) out(i, j) = a(i, j);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) out(n + i, n + j) = b(i, j);
    return out;
}

std::vector<MatFq> sp_generators(unsigned n2, const FqField& F) {
    const unsigned m = n2 / 2;
    std::vector<MatFq> gens;
    auto levi = [&](const MatFq& a) { return block_diag(a, a.inverse().transpose()); };
    MatFq d = MatFq::identity(F, m);
    d(0, 0) = F.primitive();
    if (F.q() > 2) gens.push_back(levi(d));
    if (m >= 2) {
        MatFq u = MatFq::identity(F, m);
        u(0, 1) = 1;
        gens.push_back(levi(u));
        std::vector<unsigned> cyc(m);
        for (unsigned j = 0; j < m; ++j) cyc[j] = (j + 1) % m;
        gens.push_back(levi(perm_matrix(F, cyc)));
    }
    MatFq l = MatFq::identity(F, n2);
    l(m, 0) = 1;  // [[I, 0], [E11, I]]
    gens.push_back(l);
    MatFq w(F, n2, n2);
    for (unsigned i = 0; i < m; ++i) {
        w(i, m + i) = 1;
        w(m + i, i) = F.neg(1);
    }
    gens.push_back(w);
    return gens;
}

std::vector<MatFq> sl_generators(unsigned n, const FqField& F) {
    std::vector<MatFq> gens;
    if (F.q() > 2) {
        MatFq d = MatFq::identity(F, n);
        d(0, 0) = F.primitive();
        d(1, 1) = F.inv(F.primitive());
        gens.push_back(d);
    }
    MatFq u = MatFq::identity(F, n);
    u(0, 1) = 1;
    gens.push_back(u);
    std::vector<unsigned> cyc(n);
    for (unsigned j = 0; j < n; ++j) cyc[j] = (j + 1) % n;
    MatFq c = perm_matrix(F, cyc);
    if (n % 2 == 0) c(1, 0) = F.neg(1);  // fix det of an even-length cycle; column 0 maps to e_1
    gens.push_back(c);
    return gens;
}

bool unitary(const MatFq& g) { return g.transpose() * g.conjugate_transpose().transpose() == MatFq::identity(g.field(), g.rows()); }

bool monomial(const MatFq& m) {
    for (unsigned i = 0; i < m.rows(); ++i) {
        unsigned nz = 0;
        for (unsigned j = 0; j < m.cols(); ++j) nz += m(i, j) != 0;
        if (nz != 1) return false;
    }
    return true;
}

// Candidate non-monomial unitary k x k blocks in lexicographic entry order.
// Over F_4 every nonzero norm is 1, so no 2x2 block mixes coordinates and
// k = 3 is needed.
std::vector<MatFq> unitary_blocks(const FqField& F, unsigned k, bool det_one, std::size_t limit) {
    std::vector<MatFq> out;
    const unsigned Q = F.q(), cells = k * k;
    std::vector<unsigned> digit(cells, 0);
    while (out.size() < limit) {
        MatFq m(F, k, k);
        for (unsigned i = 0; i < cells; ++i) m(i / k, i % k) = static_cast<FqField::Elem>(digit[i]);
        if (!monomial(m) && unitary(m) && (!det_one || m.det() == 1)) out.push_back(m);
        unsigned pos = cells;
        while (true) {
            if (pos == 0) return out;
            --pos;
            if (++digit[pos] < Q) break;
            digit[pos] = 0;
        }
    }
    return out;
}

MatFq embed_block(const MatFq& b, unsigned n) {
    MatFq m = MatFq::identity(b.field(), n);
    for (unsigned i = 0; i < b.rows(); ++i)
        for (unsigned j = 0; j < b.cols(); ++j) m(i, j) = b(i, j);
    return m;
}

std::vector<MatFq> unitary_monomials(unsigned n, const FqField& F, unsigned q, bool det_one) {
    std::vector<MatFq> gens;
    const FqField::Elem lambda = F.pow(F.primitive(), q - 1);  // generator of the norm-one group
    if (!det_one) {
        MatFq d = MatFq::identity(F, n);
        d(0, 0) = lambda;
        gens.push_back(d);
    } else if (n >= 2) {
        MatFq d = MatFq::identity(F, n);
        d(0, 0) = lambda;
        d(1, 1) = F.inv(lambda);
        gens.push_back(d);
    }
    if (n >= 2) {
        std::vector<unsigned> tr(n);
        for (unsigned j = 0; j < n; ++j) tr[j] = j;
        std::swap(tr[0], tr[1]);
        MatFq t = perm_matrix(F, tr);
        if (det_one) t(0, 1) = F.neg(1);
        gens.push_back(t);
        if (n >= 3) {
            std::vector<unsigned> cyc(n);
            for (unsigned j = 0; j < n; ++j) cyc[j] = (j + 1) % n;
            MatFq c = perm_matrix(F, cyc);
            if (det_one && n % 2 == 0) c(1, 0) = F.neg(1);
            gens.push_back(c);
        }
    }
    return gens;
}

std::vector<MatFq> unitary_generators(const GroupSpec& s) {
    const FqField& F = FqField::get(s.q * s.q);
    const bool det_one = s.family == Family::SU;
    std::vector<MatFq> base = unitary_monomials(s.n, F, s.q, det_one);
    if (s.n == 1) {
        if (det_one) return {MatFq::identity(F, 1)};
        return base;
    }
    const uint64_t want = classical_order(s).get_ui();
    // greedy: the first block (in entry order) completing the generating set
    std::vector<MatFq> blocks = unitary_blocks(F, 2, det_one, 64);
    if (blocks.empty() && s.n >= 3) blocks = unitary_blocks(F, 3, det_one, 1024);
    for (std::size_t attempt = 0; attempt <= blocks.size(); ++attempt) {
        std::vector<MatFq> gens = base;
        if (attempt > 0) gens.push_back(embed_block(blocks[attempt - 1], s.n));
        try {
            EnumerateOptions opt;
            opt.order_cap = want;
            EnumeratedGroup g = enumerate_generated(s, gens, opt, want);
            return gens;
        } catch (const ClosureMismatch&) {
        }
    }
    // no single block suffices (SU_3(2) is not generated by the monomials plus
    // one block): add blocks greedily while they enlarge the closure
    std::vector<MatFq> gens = base;
    uint64_t have = enumerate_generated(s, gens, {}, std::nullopt).order();
    for (const auto& b : blocks) {
        gens.push_back(embed_block(b, s.n));
        EnumerateOptions opt;
        opt.order_cap = want;
        const uint64_t got = enumerate_generated(s, gens, opt, std::nullopt).order();
        if (got == want) return gens;
        if (got > have) have = got;
        else gens.pop_back();
    }
    throw ClosureMismatch("no unitary generating set found for " + s.str());
}

}  // namespace

std::vector<MatFq> standard_generators(const GroupSpec& s) {
    switch (s.family) {
        case Family::Sp: return sp_generators(s.n, FqField::get(s.q));
        case Family::SL: return sl_generators(s.n, FqField::get(s.q));
        case Family::GU:
        case Family::SU: return unitary_generators(s);
        case Family::GOPlus:
        case Family::GOMinus: return reflection_generators(*natural_form(s));
        case Family::BinaryIcosahedral: break;
    }
    throw ValidationError("no finite-field generators for " + s.str());
}

namespace {

std::vector<std::vector<FqField::Elem>> all_vectors(const FqField& F, unsigned dim) {
    uint64_t count = 1;
    for (unsigned i = 0; i < dim; ++i) count *= F.q();
    std::vector<std::vector<FqField::Elem>> v;
    v.reserve(count);
    for (uint64_t i = 0; i < count; ++i) v.push_back(vector_from_index(F, dim, i));
    return v;
}

// x -> x + c(x) v, as a matrix, for a linear functional c given by row `fun`
MatFq rank_one_update(const FqField& F, const std::vector<FqField::Elem>& fun, const std::vector<FqField::Elem>& v) {
    const unsigned d = static_cast<unsigned>(v.size());
    MatFq m = MatFq::identity(F, d);
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) m(i, j) = F.add(m(i, j), F.mul(v[i], fun[j]));
    return m;
}

std::vector<FqField::Elem> normalize_line(const FqField& F, std::vector<FqField::Elem> v) {
    for (auto x : v)
        if (x != 0) {
            FqField::Elem inv = F.inv(x);
            for (auto& y : v) y = F.mul(y, inv);
            break;
        }
    return v;
}

// Greedy generating subset: candidates[i] gives element maker(i); covered via orbit of chosen seeds.
std::vector<MatFq> greedy_cover(const FqField& F, unsigned dim, const std::vector<std::vector<FqField::Elem>>& cands,
                                const std::function<MatFq(const std::vector<FqField::Elem>&)>& maker, bool lines,
                                unsigned start) {
    auto key = [&](const std::vector<FqField::Elem>& v) {
        return index_from_vector(F, lines ? normalize_line(F, v) : v);
    };
    uint64_t total = 1;
    for (unsigned i = 0; i < dim; ++i) total *= F.q();
    std::vector<char> target(total, 0);
    uint64_t need = 0;
    for (const auto& v : cands) {
        uint64_t k = key(v);
        if (!target[k]) {
            target[k] = 1;
            ++need;
        }
    }
    std::vector<MatFq> chosen;
    std::vector<std::vector<FqField::Elem>> seeds;
    std::vector<char> covered(total, 0);
    uint64_t have = 0;
    auto recompute = [&]() {
        std::fill(covered.begin(), covered.end(), 0);
        have = 0;
        std::vector<std::vector<FqField::Elem>> stack;
        for (const auto& s : seeds) {
            uint64_t k = key(s);
            if (!covered[k]) {
                covered[k] = 1;
                ++have;
                stack.push_back(s);
            }
        }
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (const auto& g : chosen) {
                auto w = g.apply(v);
                uint64_t k = key(w);
                if (!covered[k]) {
                    covered[k] = 1;
                    ++have;
                    stack.push_back(w);
                }
            }
        }
    };
    for (std::size_t i = 0; i < cands.size() && have < need; ++i) {
        const auto& v = cands[(i + start) % cands.size()];
        if (covered[key(v)]) continue;
        chosen.push_back(maker(v));
        seeds.push_back(v);
        recompute();
    }
    return chosen;
}

}  // namespace

std::vector<MatFq> reflection_generators(const FormSpace& space, unsigned start) {
    const FqField& F = space.field();
    const unsigned d = space.dim();
    std::vector<std::vector<FqField::Elem>> cands;
    for (auto& v : all_vectors(F, d)) {
        bool zero = std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
        if (!zero && space.quad(v) != 0) cands.push_back(v);
    }
    auto maker = [&](const std::vector<FqField::Elem>& v) {
        // x -> x - (B(x, v) / Q(v)) v
        FqField::Elem s = F.neg(F.inv(space.quad(v)));
        std::vector<FqField::Elem> fun(d, 0);
        const MatFq& G = space.gram();
        for (unsigned j = 0; j < d; ++j) {
            FqField::Elem b = 0;
            for (unsigned i = 0; i < d; ++i) b = F.add(b, F.mul(G(j, i), v[i]));
            fun[j] = F.mul(s, b);
        }
        return rank_one_update(F, fun, v);
    };
    return greedy_cover(F, d, cands, maker, true, start);
}

std::vector<MatFq> transvection_generators(const FormSpace& space, unsigned start) {
    const FqField& F = space.field();
    const unsigned d = space.dim();
    std::vector<std::vector<FqField::Elem>> cands;
    for (auto& v : all_vectors(F, d)) {
        bool zero = std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
        if (!zero) cands.push_back(v);
    }
    auto maker = [&](const std::vector<FqField::Elem>& v) {
        // x -> x + <x, v> v, <x, v> = x^T J v
        std::vector<FqField::Elem> fun(d, 0);
        const MatFq& G = space.gram();
        for (unsigned j = 0; j < d; ++j) {
            FqField::Elem b = 0;
            for (unsigned i = 0; i < d; ++i) b = F.add(b, F.mul(G(j, i), v[i]));
            fun[j] = b;
        }
        return rank_one_update(F, fun, v);
    };
    return greedy_cover(F, d, cands, maker, false, start);
}

// --- enumeration ------------------------------------------------------------

uint64_t EnumeratedGroup::hash_key(const uint8_t* key) const {
    uint64_t h = 1469598103934665603ull;
    const std::size_t len = static_cast<std::size_t>(n_) * n_;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= key[i];
        h *= 1099511628211ull;
    }
    return h ^ (h >> 29);
}

std::optional<uint32_t> EnumeratedGroup::lookup(const uint8_t* key) const {
    const std::size_t len = static_cast<std::size_t>(n_) * n_;
    uint64_t h = hash_key(key) & mask_;
    while (true) {
        uint32_t idx = table_[h];
        if (idx == kEmpty) return std::nullopt;
        if (std::memcmp(&arena_[static_cast<std::size_t>(idx) * len], key, len) == 0) return idx;
        h = (h + 1) & mask_;
    }
}

void EnumeratedGroup::mul_raw(const uint8_t* a, const uint8_t* b, uint8_t* out) const {
    const unsigned n = n_;
    if (field_->f() == 1) {
        const unsigned p = field_->p();
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                unsigned s = 0;
                for (unsigned k = 0; k < n; ++k) s += unsigned(a[i * n + k]) * b[k * n + j];
                out[i * n + j] = static_cast<uint8_t>(s % p);
            }
        return;
    }
    const unsigned q = field_->q();
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            uint8_t s = 0;
            for (unsigned k = 0; k < n; ++k) s = add_tab_[s * q + mul_tab_[a[i * n + k] * q + b[k * n + j]]];
            out[i * n + j] = s;
        }
}

EnumeratedGroup enumerate_generated(const GroupSpec& spec, const std::vector<MatFq>& gens,
                                    const EnumerateOptions& opt, std::optional<uint64_t> expected) {
    if (spec.family == Family::BinaryIcosahedral) return enumerate_icosians(opt);
    if (gens.empty()) throw ValidationError("no generators");
    if (gens.size() > 255) throw ValidationError("too many generators");
    EnumeratedGroup G;
    G.spec_ = spec;
    G.n_ = gens[0].rows();
    G.field_ = &gens[0].field();
    G.gens_ = gens;
    const FqField& F = *G.field_;
    if (F.q() > 256) throw CapExceeded("enumeration supports fields of size <= 256");
    if (expected && *expected > opt.order_cap)
        throw OrderCapExceeded("predicted order " + std::to_string(*expected) + " of " + spec.str() + " exceeds cap " +
                               std::to_string(opt.order_cap));
    if (F.f() > 1) {
        const unsigned q = F.q();
        G.mul_tab_.resize(q * q);
        G.add_tab_.resize(q * q);
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b) {
                G.mul_tab_[a * q + b] = static_cast<uint8_t>(F.mul(a, b));
                G.add_tab_[a * q + b] = static_cast<uint8_t>(F.add(a, b));
            }
    }
    if (auto form = natural_form(spec))
        for (const auto& g : gens)
            if (!form->preserved_by(g)) throw ClosureMismatch("generator does not preserve the natural form");

    const std::size_t len = static_cast<std::size_t>(G.n_) * G.n_;
    uint64_t cap_hint = expected ? *expected : 1024;
    uint64_t tsize = 1024;
    while (tsize < 2 * cap_hint) tsize <<= 1;
    G.table_.assign(tsize, kEmpty);
    G.mask_ = tsize - 1;
    if (expected) G.arena_.reserve(*expected * len);

    uint64_t count = 0;
    auto insert = [&](const uint8_t* key, uint32_t parent, uint8_t via) -> uint32_t {
        if (count >= opt.order_cap) throw OrderCapExceeded("closure of " + spec.str() + " exceeds order cap");
        if (2 * (count + 1) > G.table_.size()) {
            std::vector<uint32_t> nt(G.table_.size() * 2, kEmpty);
            const uint64_t m = nt.size() - 1;
            for (uint64_t i = 0; i < count; ++i) {
                uint64_t h = G.hash_key(&G.arena_[i * len]) & m;
                while (nt[h] != kEmpty) h = (h + 1) & m;
                nt[h] = static_cast<uint32_t>(i);
            }
            G.table_.swap(nt);
            G.mask_ = m;
        }
        uint32_t idx = static_cast<uint32_t>(count++);
        G.arena_.insert(G.arena_.end(), key, key + len);
        uint64_t h = G.hash_key(key) & G.mask_;
        while (G.table_[h] != kEmpty) h = (h + 1) & G.mask_;
        G.table_[h] = idx;
        G.parent_.push_back(parent);
        G.via_.push_back(via);
        return idx;
    };

    std::vector<std::vector<uint8_t>> graw;
    for (const auto& g : gens) {
        if (g.rows() != G.n_ || g.cols() != G.n_) throw ValidationError("generator shape mismatch");
        std::vector<uint8_t> r(len);
        for (std::size_t i = 0; i < len; ++i) r[i] = static_cast<uint8_t>(g.data()[i]);
        graw.push_back(std::move(r));
    }
    std::vector<uint8_t> id(len, 0);
    for (unsigned i = 0; i < G.n_; ++i) id[i * G.n_ + i] = 1;
    insert(id.data(), 0, 0);

    std::vector<uint8_t> tmp(len), cur(len);
    for (uint64_t i = 0; i < count; ++i) {
        std::memcpy(cur.data(), &G.arena_[i * len], len);
        for (std::size_t s = 0; s < graw.size(); ++s) {
            G.mul_raw(cur.data(), graw[s].data(), tmp.data());
            auto found = G.lookup(tmp.data());
            uint32_t j = found ? *found : insert(tmp.data(), static_cast<uint32_t>(i), static_cast<uint8_t>(s));
            if (opt.keep_edges) G.edges_.push_back(j);
        }
    }
    G.order_ = count;
    if (expected && count != *expected)
        throw ClosureMismatch("closure of " + spec.str() + " has order " + std::to_string(count) + ", expected " +
                              std::to_string(*expected));
    return G;
}

EnumeratedGroup enumerate(const GroupSpec& spec, const EnumerateOptions& opt) {
    if (spec.family == Family::BinaryIcosahedral) return enumerate_icosians(opt);
    Integer ord = classical_order(spec);
    if (ord > Integer(std::to_string(opt.order_cap)))
        throw OrderCapExceeded("predicted order " + to_string(ord) + " of " + spec.str() + " exceeds cap " +
                               std::to_string(opt.order_cap));
    return enumerate_generated(spec, standard_generators(spec), opt, ord.get_ui());
}

MatFq EnumeratedGroup::element(uint32_t i) const {
    if (!is_matrix_fq()) throw ValidationError("not a finite-field matrix group");
    MatFq m(*field_, n_, n_);
    const uint8_t* r = raw(i);
    for (unsigned a = 0; a < n_; ++a)
        for (unsigned b = 0; b < n_; ++b) m(a, b) = r[a * n_ + b];
    return m;
}

std::optional<uint32_t> EnumeratedGroup::index_of(const MatFq& m) const {
    if (!is_matrix_fq() || m.rows() != n_ || m.cols() != n_) return std::nullopt;
    std::vector<uint8_t> key(static_cast<std::size_t>(n_) * n_);
    for (std::size_t i = 0; i < key.size(); ++i) key[i] = static_cast<uint8_t>(m.data()[i]);
    return lookup(key.data());
}

uint32_t EnumeratedGroup::multiply(uint32_t a, uint32_t b) const {
    if (!is_matrix_fq()) return cyc_mul_[static_cast<std::size_t>(a) * order_ + b];
    std::vector<uint8_t> tmp(static_cast<std::size_t>(n_) * n_);
    mul_raw(raw(a), raw(b), tmp.data());
    auto r = lookup(tmp.data());
    if (!r) throw ClosureMismatch("product left the enumerated group");
    return *r;
}

uint32_t EnumeratedGroup::power(uint32_t a, uint64_t e) const {
    uint32_t result = 0, base = a;
    while (e) {
        if (e & 1) result = multiply(result, base);
        e >>= 1;
        if (e) base = multiply(base, base);
    }
    return result;
}

unsigned EnumeratedGroup::element_order(uint32_t a) const {
    unsigned k = 1;
    uint32_t x = a;
    while (x != 0) {
        x = multiply(x, a);
        ++k;
    }
    return k;
}

uint32_t EnumeratedGroup::inverse(uint32_t a) const {
    if (!is_matrix_fq()) return power(a, element_order(a) - 1);
    auto r = index_of(element(a).inverse());
    if (!r) throw ClosureMismatch("inverse left the enumerated group");
    return *r;
}

FqField::Elem EnumeratedGroup::det(uint32_t i) const { return element(i).det(); }

uint32_t square_map(const EnumeratedGroup& g, uint32_t element) { return g.square(element); }

// --- binary icosahedral ---------------------------------------------------

namespace {

Mat2Cyclo quaternion(const Cyclo& a, const Cyclo& b, const Cyclo& c, const Cyclo& d) {
    const Cyclo i = Cyclo::zeta(4);
    return {a + b * i, c + d * i, -c + d * i, a - b * i};
}

Mat2Cyclo mul2(const Mat2Cyclo& x, const Mat2Cyclo& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

std::string key2(const Mat2Cyclo& m) {
    std::string k;
    for (const auto& e : m) {
        const Cyclo l = e.lift(20);
        for (const auto& c : l.coeffs()) k += c.get_str() + ",";
    }
    return k;
}

}  // namespace

std::vector<Mat2Cyclo> icosian_generators() {
    const Cyclo half = Cyclo(Rational(1, 2));
    const Cyclo phi = -(Cyclo::zeta(5, 2) + Cyclo::zeta(5, 3));
    const Cyclo phi_inv = Cyclo::zeta(5, 1) + Cyclo::zeta(5, 4);
    // (1 + i + j + k)/2 and (phi + phi^{-1} i + j)/2
    return {quaternion(half, half, half, half), quaternion(half * phi, half * phi_inv, half, Cyclo(0))};
}

EnumeratedGroup enumerate_icosians(const EnumerateOptions& opt) {
    EnumeratedGroup G;
    G.spec_.family = Family::BinaryIcosahedral;
    G.spec_.n = 2;
    G.spec_.q = 0;
    G.n_ = 2;
    G.cyc_gens_ = icosian_generators();
    if (opt.order_cap < 120) throw OrderCapExceeded("binary icosahedral group exceeds order cap");
    std::map<std::string, uint32_t> index;
    const Mat2Cyclo id = {Cyclo(1), Cyclo(0), Cyclo(0), Cyclo(1)};
    G.cyc_.push_back(id);
    index[key2(id)] = 0;
    G.parent_.push_back(0);
    G.via_.push_back(0);
    std::vector<uint32_t> edges;
    for (std::size_t i = 0; i < G.cyc_.size(); ++i)
        for (std::size_t s = 0; s < G.cyc_gens_.size(); ++s) {
            Mat2Cyclo p = mul2(G.cyc_[i], G.cyc_gens_[s]);
            auto k = key2(p);
            auto it = index.find(k);
            uint32_t j;
            if (it == index.end()) {
                j = static_cast<uint32_t>(G.cyc_.size());
                index[k] = j;
                G.cyc_.push_back(p);
                G.parent_.push_back(static_cast<uint32_t>(i));
                G.via_.push_back(static_cast<uint8_t>(s));
                if (G.cyc_.size() > 120) throw ClosureMismatch("icosian closure exceeds 120");
            } else {
                j = it->second;
            }
            edges.push_back(j);
        }
    G.order_ = G.cyc_.size();
    if (G.order_ != 120) throw ClosureMismatch("icosian closure has order " + std::to_string(G.order_));
    if (opt.keep_edges) G.edges_ = edges;
    G.cyc_mul_.resize(120 * 120);
    for (uint32_t a = 0; a < 120; ++a)
        for (uint32_t b = 0; b < 120; ++b) G.cyc_mul_[a * 120 + b] = index.at(key2(mul2(G.cyc_[a], G.cyc_[b])));
    return G;
}

}  // namespace momentforge
