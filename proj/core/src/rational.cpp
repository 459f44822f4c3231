#include "kul/rational.hpp"

#include "kul/error.hpp"

namespace kul {

Rational make_rational(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer to_integer(const Rational& q, const char* what) {
  if (!is_integer(q)) {
    throw ConsistencyError(std::string(what) + " is not an integer: " + to_string(q));
  }
  return q.get_num();
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw InputError("not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw InputError("integer out of range: " + z.get_str());
  return z.get_si();
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer gcd(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

IntVector to_int_vector(std::initializer_list<long> values) {
  IntVector out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace kul
