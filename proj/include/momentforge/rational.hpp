#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace momentforge {

using Integer = mpz_class;
/// GMP keeps mpq values canonical (lowest terms, positive denominator).
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

Integer factorial(unsigned n);
Integer double_factorial(long n);  // (n)!! with (-1)!! = 1
Integer ipow(const Integer& base, unsigned long e);

}  // namespace momentforge
