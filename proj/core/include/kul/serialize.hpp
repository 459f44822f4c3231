#pragma once

// Canonical JSON renderings. Integers that fit in 64 bits are numbers,
// larger ones and all non-integral rationals are strings ("7/3").

#include <nlohmann/json.hpp>

#include "kul/functor.hpp"
#include "kul/k3picard.hpp"
#include "kul/lift.hpp"

namespace kul {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& z);
Json to_json(const Rational& q);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const GradedClass& c);  // {"model": ..., "terms": {"H": ..., ...}} with zero terms dropped
Json to_json(const KnumClass& v);
Json to_json(const MukaiVector& v);
Json to_json(const LiftCertificate& c);
Json to_json(const PicardLatticeReport& r);
Json to_json(const ImageLattice& image);
Json to_json(const KernelLattice& kernel);
Json to_json(const AllLiftsReport& r);

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);
IntMatrix int_matrix_from_json(const Json& j);
KnumClass knum_from_json(const Json& j);
MukaiVector mukai_from_json(const Json& j);

}  // namespace kul
