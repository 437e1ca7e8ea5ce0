#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "momentforge/rational.hpp"

namespace momentforge {

struct CycloContext;

/// Conductors above this are rejected (guards memory per scalar).
unsigned conductor_cap();
void set_conductor_cap(unsigned cap);

unsigned euler_phi(unsigned n);
unsigned gcd_u(unsigned a, unsigned b);
unsigned lcm_u(unsigned a, unsigned b);

/// Element of Q(zeta_N), stored as coefficients of 1, z, ..., z^{phi(N)-1}
/// after reduction modulo the N-th cyclotomic polynomial.  That reduced
/// vector is the canonical form; equality across conductors lifts to lcm.
class Cyclo {
public:
    Cyclo();
    Cyclo(long v);  // NOLINT: integers convert implicitly
    Cyclo(int v) : Cyclo(static_cast<long>(v)) {}
    Cyclo(const Integer& v);
    Cyclo(const Rational& v);
    Cyclo(unsigned conductor, std::vector<Rational> coeffs);  // canonical coeffs, length phi(N)

    /// zeta_N^k.
    static Cyclo zeta(unsigned n, long k = 1);
    /// Sum over a list of (exponent -> integer coefficient) in conductor n.
    static Cyclo from_powers(unsigned n, const std::vector<std::pair<long, long>>& terms);

    unsigned conductor() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Cyclo lift(unsigned n) const;  ///< embed into Q(zeta_n); requires conductor | n
    /// Same value in the smallest Q(zeta_M) with M | conductor containing it.
    Cyclo minimized() const;

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  ///< throws NotRationalInteger unless rational

    Cyclo conj() const;
    Cyclo galois(long a) const;  ///< zeta -> zeta^a, gcd(a, N) = 1
    Cyclo inverse() const;       ///< throws std::domain_error on zero

    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }
    Cyclo operator-() const;

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    Cyclo pow(unsigned long e) const;

    std::complex<double> numeric() const;
    std::string str() const;
    static Cyclo parse(std::string_view text);

    /// Total order valid between values of equal conductor (used for maps).
    bool less_same_conductor(const Cyclo& o) const;
    std::size_t hash() const;

private:
    const CycloContext* ctx_;
    std::vector<Rational> c_;

    explicit Cyclo(const CycloContext* ctx);
    void canonicalize_raw(std::vector<Rational>& raw);
};

Cyclo abs_square(const Cyclo& z);
Integer to_rational_integer(const Cyclo& z);
Cyclo cyclo_mul(const Cyclo& a, const Cyclo& b);

/// Rigorous-enough numeric sanity bound: |numeric(z)| error estimate.
double numeric_error_bound(const Cyclo& z);

struct CycloLess {
    bool operator()(const Cyclo& a, const Cyclo& b) const;
};

}  // namespace momentforge
