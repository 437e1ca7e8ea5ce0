#include "momentforge/lie.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

namespace momentforge {

namespace {

long dot(const Weight& a, const Weight& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Weight add(Weight a, const Weight& b, long scale = 1) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
    return a;
}

// 2*rho, integral in every type
Weight rho2(const RootSystem& rs) {
    const unsigned n = rs.rank;
    Weight r(rs.coords());
    for (unsigned i = 0; i < rs.coords(); ++i) {
        switch (rs.type) {
            case LieType::A: r[i] = 2L * (n - i); break;
            case LieType::B: r[i] = 2L * (n - i) - 1; break;
            case LieType::C: r[i] = 2L * (n - i); break;
            case LieType::D: r[i] = 2L * (n - 1 - i); break;
        }
    }
    return r;
}

// sign of the permutation sorting `keys` into strictly decreasing order, or 0 on ties
int sort_desc_sign(std::vector<long>& keys) {
    int sign = 1;
    for (std::size_t i = 1; i < keys.size(); ++i)
        for (std::size_t j = i; j > 0 && keys[j - 1] <= keys[j]; --j) {
            if (keys[j - 1] == keys[j]) return 0;
            std::swap(keys[j - 1], keys[j]);
            sign = -sign;
        }
    return sign;
}

// Move a rho-shifted (doubled) vector into the dominant chamber.  Returns
// the sign of the Weyl element used, or 0 when x lies on a wall.
int reflect_to_dominant(const RootSystem& rs, Weight& x) {
    int sign = 1;
    if (rs.type == LieType::A) return sort_desc_sign(x);
    bool has_zero = false;
    int flips = 0;
    for (auto& v : x) {
        if (v == 0) has_zero = true;
        if (v < 0) {
            v = -v;
            ++flips;
        }
    }
    if (rs.type != LieType::D) {
        if (has_zero) return 0;
        if (flips % 2) sign = -sign;
        return sign * sort_desc_sign(x);
    }
    // D: only even sign changes; x_i = +-x_j is a wall, a single zero is not
    sign = sort_desc_sign(x);
    if (sign != 0 && flips % 2 && !has_zero) x.back() = -x.back();
    return sign;
}

}  // namespace

RootSystem::RootSystem(LieType t, unsigned r) : type(t), rank(r) {
    unsigned min = t == LieType::A ? 1 : t == LieType::D ? 3 : 2;
    if (r < min) throw ValidationError("rank " + std::to_string(r) + " too small for type " + str().substr(0, 1));
}

RootSystem RootSystem::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    std::size_t digits = s.find_first_of("0123456789");
    if (digits == std::string::npos || digits == 0) throw ValidationError("bad root system '" + text + "'");
    std::string head = s.substr(0, digits);
    unsigned num = 0;
    try {
        num = static_cast<unsigned>(std::stoul(s.substr(digits)));
    } catch (const std::exception&) {
        throw ValidationError("bad root system '" + text + "'");
    }
    if (head == "A") return {LieType::A, num};
    if (head == "B") return {LieType::B, num};
    if (head == "C") return {LieType::C, num};
    if (head == "D") return {LieType::D, num};
    if (head == "GL" || head == "SL") return {LieType::A, num - 1};
    if (head == "SP") {
        if (num % 2) throw ValidationError("Sp needs even degree");
        return {LieType::C, num / 2};
    }
    if (head == "SO" || head == "O") return num % 2 ? RootSystem{LieType::B, num / 2} : RootSystem{LieType::D, num / 2};
    throw ValidationError("bad root system '" + text + "'");
}

std::string RootSystem::str() const {
    const char* t = type == LieType::A ? "A" : type == LieType::B ? "B" : type == LieType::C ? "C" : "D";
    return t + std::to_string(rank);
}

unsigned RootSystem::natural_dim() const {
    switch (type) {
        case LieType::A: return rank + 1;
        case LieType::B: return 2 * rank + 1;
        case LieType::C:
        case LieType::D: return 2 * rank;
    }
    return 0;
}

std::string RootSystem::group_label() const {
    switch (type) {
        case LieType::A: return "GL" + std::to_string(natural_dim());
        case LieType::C: return "Sp" + std::to_string(natural_dim());
        default: return "SO" + std::to_string(natural_dim());
    }
}

bool is_dominant(const RootSystem& rs, const Weight& w) {
    if (w.size() != rs.coords()) return false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) return false;
    switch (rs.type) {
        case LieType::A: return true;
        case LieType::B:
        case LieType::C: return w.back() >= 0;
        case LieType::D: return w[w.size() - 2] >= std::abs(w.back());
    }
    return false;
}

void require_dominant(const RootSystem& rs, const Weight& w) {
    if (w.size() != rs.coords())
        throw NonDominantWeight("weight " + weight_str(w) + " has the wrong length for " + rs.str());
    if (!is_dominant(rs, w)) throw NonDominantWeight("weight " + weight_str(w) + " is not dominant for " + rs.str());
}

Weight zero_weight(const RootSystem& rs) { return Weight(rs.coords(), 0); }

Weight fundamental_weight(const RootSystem& rs, unsigned i) {
    if (i < 1 || i > rs.rank) throw ValidationError("fundamental weight index out of range");
    if (rs.type == LieType::B && i == rs.rank) throw ValidationError("spin weights are not supported");
    if (rs.type == LieType::D && i + 1 >= rs.rank) throw ValidationError("spin weights are not supported");
    Weight w = zero_weight(rs);
    for (unsigned j = 0; j < i; ++j) w[j] = 1;
    return w;
}

Weight highest_root(const RootSystem& rs) {
    Weight w = zero_weight(rs);
    switch (rs.type) {
        case LieType::A:
            w.front() = 1;
            w.back() = -1;
            break;
        case LieType::C: w[0] = 2; break;
        default:
            w[0] = 1;
            w[1] = 1;
    }
    return w;
}

std::vector<Weight> positive_roots(const RootSystem& rs) {
    std::vector<Weight> out;
    const unsigned c = rs.coords();
    for (unsigned i = 0; i < c; ++i)
        for (unsigned j = i + 1; j < c; ++j) {
            Weight a(c, 0);
            a[i] = 1;
            a[j] = -1;
            out.push_back(a);
            if (rs.type != LieType::A) {
                a[j] = 1;
                out.push_back(a);
            }
        }
    if (rs.type == LieType::B || rs.type == LieType::C)
        for (unsigned i = 0; i < c; ++i) {
            Weight a(c, 0);
            a[i] = rs.type == LieType::B ? 1 : 2;
            out.push_back(a);
        }
    return out;
}

std::vector<Weight> simple_roots(const RootSystem& rs) {
    std::vector<Weight> out;
    const unsigned c = rs.coords();
    for (unsigned i = 0; i + 1 < c; ++i) {
        Weight a(c, 0);
        a[i] = 1;
        a[i + 1] = -1;
        out.push_back(a);
    }
    Weight a(c, 0);
    switch (rs.type) {
        case LieType::A: break;
        case LieType::B: a[c - 1] = 1; out.push_back(a); break;
        case LieType::C: a[c - 1] = 2; out.push_back(a); break;
        case LieType::D:
            a[c - 2] = 1;
            a[c - 1] = 1;
            out.push_back(a);
            break;
    }
    return out;
}

Integer weyl_dim(const RootSystem& rs, const Weight& lambda) {
    require_dominant(rs, lambda);
    const Weight r2 = rho2(rs);
    const Weight shifted = add(r2, lambda, 2);
    Integer num = 1, den = 1;
    for (const Weight& a : positive_roots(rs)) {
        num *= dot(shifted, a);
        den *= dot(r2, a);
    }
    return num / den;
}

Weight dominant_of(const RootSystem& rs, const Weight& w) {
    Weight x = w;
    if (rs.type == LieType::A) {
        std::sort(x.rbegin(), x.rend());
        return x;
    }
    int neg = 0;
    bool zero = false;
    for (auto& v : x) {
        if (v < 0) {
            v = -v;
            ++neg;
        }
        if (v == 0) zero = true;
    }
    std::sort(x.rbegin(), x.rend());
    if (rs.type == LieType::D && neg % 2 && !zero) x.back() = -x.back();
    return x;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& dominant) {
    require_dominant(rs, dominant);
    const unsigned c = rs.coords();
    std::set<Weight> seen{dominant};
    std::deque<Weight> queue{dominant};
    while (!queue.empty()) {
        Weight w = queue.front();
        queue.pop_front();
        std::vector<Weight> next;
        for (unsigned i = 0; i + 1 < c; ++i) {
            Weight x = w;
            std::swap(x[i], x[i + 1]);
            next.push_back(std::move(x));
        }
        if (rs.type == LieType::B || rs.type == LieType::C) {
            Weight x = w;
            x[c - 1] = -x[c - 1];
            next.push_back(std::move(x));
        } else if (rs.type == LieType::D) {
            Weight x = w;
            x[c - 2] = -w[c - 1];
            x[c - 1] = -w[c - 2];
            next.push_back(std::move(x));
        }
        for (auto& x : next)
            if (seen.insert(x).second) queue.push_back(std::move(x));
    }
    return {seen.begin(), seen.end()};
}

std::map<Weight, Integer> freudenthal_mults(const RootSystem& rs, const Weight& lambda) {
    require_dominant(rs, lambda);
    const auto roots = positive_roots(rs);
    const Weight r2 = rho2(rs);

    // dominant weights below lambda: connected to lambda through dominant
    // weights by subtracting positive roots
    std::set<Weight> dom{lambda};
    std::deque<Weight> queue{lambda};
    while (!queue.empty()) {
        Weight w = queue.front();
        queue.pop_front();
        for (const Weight& a : roots) {
            Weight x = add(w, a, -1);
            if (is_dominant(rs, x) && dom.insert(x).second) queue.push_back(std::move(x));
        }
    }
    // process by depth <lambda - mu, 2 rho>, highest first
    std::vector<Weight> order(dom.begin(), dom.end());
    std::stable_sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
        return dot(add(lambda, a, -1), r2) < dot(add(lambda, b, -1), r2);
    });

    std::map<Weight, Integer> mult;
    mult[lambda] = 1;
    for (const Weight& mu : order) {
        if (mu == lambda) continue;
        // |lambda+rho|^2 - |mu+rho|^2 = <lambda - mu, lambda + mu + 2 rho>
        const long denom = dot(add(lambda, mu, -1), add(add(lambda, mu), r2));
        Integer acc = 0;
        for (const Weight& a : roots) {
            for (long j = 1;; ++j) {
                Weight x = add(mu, a, j);
                auto it = mult.find(dominant_of(rs, x));
                if (it == mult.end()) break;
                acc += it->second * dot(x, a);
            }
        }
        acc *= 2;
        if (denom <= 0 || acc % denom != 0) throw Error("Freudenthal recursion produced a non-integer multiplicity");
        Integer m = acc / denom;
        if (m != 0) mult[mu] = m;
    }
    return mult;
}

namespace {

// Add sign * m to the constituent with highest weight dom(x + rho) - rho, where x = base + nu.
void klimyk_add(const RootSystem& rs, const Weight& r2, const Weight& base, const Weight& nu, const Integer& m,
                Decomposition& out) {
    Weight x = add(r2, add(base, nu), 2);
    int sign = reflect_to_dominant(rs, x);
    if (sign == 0) return;
    Weight hw(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) hw[i] = (x[i] - r2[i]) / 2;
    Integer& slot = out[hw];
    slot += sign > 0 ? m : Integer(-m);
    if (slot == 0) out.erase(hw);
}

void check_nonnegative(const Decomposition& d) {
    for (const auto& [w, m] : d)
        if (m < 0) throw Error("negative multiplicity " + m.get_str() + " at " + weight_str(w));
}

}  // namespace

Decomposition tensor_by_natural(const RootSystem& rs, const Decomposition& input, bool dual) {
    const unsigned c = rs.coords();
    std::vector<Weight> weights;
    for (unsigned i = 0; i < c; ++i) {
        Weight e(c, 0);
        e[i] = dual && rs.type == LieType::A ? -1 : 1;
        weights.push_back(e);
        if (rs.type != LieType::A) {
            e[i] = -1;
            weights.push_back(e);
        }
    }
    if (rs.type == LieType::B) weights.push_back(Weight(c, 0));
    const Weight r2 = rho2(rs);
    Decomposition out;
    for (const auto& [lambda, m] : input) {
        require_dominant(rs, lambda);
        for (const Weight& nu : weights) klimyk_add(rs, r2, lambda, nu, m, out);
    }
    check_nonnegative(out);
    return out;
}

Decomposition tensor_product(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    require_dominant(rs, lambda);
    require_dominant(rs, mu);
    // expand the smaller factor into weights
    const bool swap = weyl_dim(rs, mu) > weyl_dim(rs, lambda);
    const Weight& big = swap ? mu : lambda;
    const Weight& small = swap ? lambda : mu;
    const Weight r2 = rho2(rs);
    Decomposition out;
    for (const auto& [nu, m] : freudenthal_mults(rs, small))
        for (const Weight& w : weyl_orbit(rs, nu)) klimyk_add(rs, r2, big, w, m, out);
    check_nonnegative(out);
    return out;
}

Integer hom_mult(const RootSystem& rs, const Weight& nu, const Weight& lambda, const Weight& mu) {
    require_dominant(rs, nu);
    Decomposition d = tensor_product(rs, lambda, mu);
    auto it = d.find(nu);
    return it == d.end() ? Integer(0) : it->second;
}

Integer decomposition_dim(const RootSystem& rs, const Decomposition& d) {
    Integer s = 0;
    for (const auto& [w, m] : d) s += m * weyl_dim(rs, w);
    return s;
}

Decomposition natural_tensor_power(const RootSystem& rs, unsigned k) {
    Decomposition d{{zero_weight(rs), Integer(1)}};
    for (unsigned i = 0; i < k; ++i) d = tensor_by_natural(rs, d);
    return d;
}

Integer classical_moment(const RootSystem& rs, unsigned k, unsigned cap) {
    if (k == 0) throw ValidationError("k must be positive");
    if (k > cap) throw CapExceeded("k = " + std::to_string(k) + " exceeds the moment cap " + std::to_string(cap));
    Integer s = 0;
    for (const auto& [w, m] : natural_tensor_power(rs, k)) s += m * m;
    return s;
}

std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

Weight parse_weight(const std::string& text) {
    Weight w;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        try {
            std::size_t used = 0;
            w.push_back(std::stol(cur, &used));
            if (used != cur.size()) throw std::invalid_argument(cur);
        } catch (const std::exception&) {
            throw ParseError("bad weight coordinate '" + cur + "'");
        }
        cur.clear();
    };
    for (char c : text) {
        if (c == '(' || c == ')' || c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c)))
            flush();
        else if (c == ',')
            flush();
        else
            cur += c;
    }
    flush();
    if (w.empty()) throw ParseError("empty weight");
    return w;
}

}  // namespace momentforge
