#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace kul {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// num/den in canonical form. den must be nonzero.
Rational make_rational(long num, long den = 1);

bool is_integer(const Rational& q);

/// Throws ConsistencyError when q is not an integer; `what` names the quantity.
Integer to_integer(const Rational& q, const char* what = "value");

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

/// Parses "n" or "n/d".
Rational parse_rational(const std::string& text);

/// Exact long conversion; throws InputError when z does not fit.
long to_long(const Integer& z);

Integer gcd(const Integer& a, const Integer& b);
Integer gcd(const IntVector& v);

IntVector to_int_vector(std::initializer_list<long> values);

}  // namespace kul
