#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sparsefac {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "a" or "a/b" with optional sign; result is canonical.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

Rational rational_pow(const Rational& base, unsigned e);
Integer integer_pow(const Integer& base, unsigned e);

}  // namespace sparsefac
