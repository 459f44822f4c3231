#include "kul/serialize.hpp"

#include "kul/error.hpp"

namespace kul {

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json to_json(const Rational& q) {
  if (is_integer(q)) return to_json(Integer(q.get_num()));
  return Json(to_string(q));
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const Integer& z : v) out.push_back(to_json(z));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const GradedClass& c) {
  Json terms = Json::object();
  for (std::size_t i = 0; i < c.coefficients().size(); ++i)
    if (c[i] != 0) terms[c.model().basis_class(i).name] = to_json(c[i]);
  return Json{{"model", std::string(c.model().name())}, {"terms", terms}, {"text", c.to_string()}};
}

Json to_json(const KnumClass& v) { return Json{{"basis", v.basis}, {"coords", to_json(v.coords)}}; }

Json to_json(const MukaiVector& v) {
  return Json{{"r", to_json(v.r)}, {"c", to_json(v.c)}, {"s", to_json(v.s)}, {"picard_gram", to_json(v.picard_gram)}};
}

Json to_json(const LiftCertificate& c) {
  Json out{{"fano_type", std::string(to_string(c.fano_type))},
           {"v", to_json(c.v)},
           {"lifted", to_json(c.lifted)},
           {"v_primitive", to_json(c.v_primitive)},
           {"multiplicity", to_json(c.multiplicity)},
           {"gram", to_json(c.gram)},
           {"x", c.x ? Json(*c.x) : Json(nullptr)},
           {"w", to_json(c.w.coordinates())},
           {"w_square", to_json(c.w_square)},
           {"formula_w_square", to_json(c.formula_w_square)},
           {"branch", c.branch},
           {"applicable_branches", c.applicable_branches},
           {"nonneg_ok", c.nonneg_ok},
           {"wall_ok", c.wall_ok},
           {"complete", true}};
  return out;
}

Json to_json(const PicardLatticeReport& r) {
  return Json{{"gram", to_json(r.gram)},
              {"family", std::string(to_string(r.family))},
              {"det", to_json(r.det)},
              {"orthogonal", to_json(r.orthogonal)},
              {"orthogonal_square", to_json(r.orthogonal_square)},
              {"hyperbolic_ok", r.hyperbolic_ok},
              {"minus_two_orthogonal", r.minus_two_orthogonal},
              {"family_condition", r.family_condition},
              {"family_condition_ok", r.family_condition_ok},
              {"verdict", r.verdict}};
}

Json to_json(const ImageLattice& image) {
  return Json{{"basis", image.basis}, {"generators", to_json(image.generators.transposed())}, {"index", to_json(image.index)}};
}

Json to_json(const KernelLattice& kernel) {
  return Json{{"basis", to_json(kernel.basis.transposed())},
              {"gram", to_json(kernel.gram)},
              {"negative_definite", kernel.negative_definite}};
}

Json to_json(const AllLiftsReport& r) {
  return Json{{"v", to_json(r.v)},
              {"bound", to_json(r.bound)},
              {"complete", r.complete},
              {"max_w_square", r.max_w_square ? to_json(*r.max_w_square) : Json(nullptr)},
              {"argmax", r.argmax ? to_json(*r.argmax) : Json(nullptr)},
              {"enumerated", r.enumerated},
              {"inequality_holds", r.inequality_holds}};
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    const Rational q = parse_rational(j.get<std::string>());
    if (!is_integer(q)) throw InputError("expected an integer, got " + j.dump());
    return q.get_num();
  }
  throw InputError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational, got " + j.dump());
}

IntVector int_vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array, got " + j.dump());
  IntVector out;
  for (const Json& e : j) out.push_back(integer_from_json(e));
  return out;
}

IntMatrix int_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("expected a non-empty array of rows, got " + j.dump());
  std::vector<IntVector> rows;
  for (const Json& r : j) rows.push_back(int_vector_from_json(r));
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw InputError("ragged matrix " + j.dump());
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

KnumClass knum_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("coords")) throw InputError("malformed class " + j.dump());
  return KnumClass{j.at("basis").get<std::string>(), int_vector_from_json(j.at("coords"))};
}

MukaiVector mukai_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("malformed Mukai vector " + j.dump());
  try {
    return MukaiVector{integer_from_json(j.at("r")), int_vector_from_json(j.at("c")), integer_from_json(j.at("s")),
                       int_matrix_from_json(j.at("picard_gram"))};
  } catch (const Json::out_of_range&) {
    throw InputError("malformed Mukai vector " + j.dump());
  }
}

}  // namespace kul
