#pragma once

#include <doctest.h>

#include <ostream>

#include "kul/knum.hpp"
#include "kul/linalg.hpp"

// Printers so failed CHECKs show values.
inline std::ostream& operator<<(std::ostream& os, const kul::IntVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

namespace kul {
inline std::ostream& operator<<(std::ostream& os, const GradedClass& c) { return os << c.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const KnumClass& v) { return os << to_string(v); }
inline std::ostream& operator<<(std::ostream& os, const MukaiVector& v) { return os << to_string(v); }
template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
  }
  return os << ']';
}
}  // namespace kul

namespace testing {

inline kul::IntVector iv(std::initializer_list<long> values) { return kul::to_int_vector(values); }
inline kul::IntMatrix gram2(long a, long b, long c) { return kul::IntMatrix{{a, b}, {b, c}}; }
inline kul::Rational q(long num, long den = 1) { return kul::make_rational(num, den); }

}  // namespace testing
