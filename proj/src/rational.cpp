#include "momentforge/rational.hpp"

#include <cctype>

#include "momentforge/errors.hpp"

namespace momentforge {

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty rational");
    Rational r;
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer double_factorial(long n) {
    Integer r = 1;
    for (long i = n; i > 1; i -= 2) r *= i;
    return r;
}

Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace momentforge
