#include "kul/k3picard.hpp"

#include "kul/error.hpp"

namespace kul {

std::string_view to_string(LatticeFamily family) {
  switch (family) {
    case LatticeFamily::GM_x2: return "10-x-2";
    case LatticeFamily::GM_50: return "10-5-0";
    case LatticeFamily::GM_x4: return "10-x-4";
    case LatticeFamily::QuarticLine: return "quartic-line";
  }
  return "?";
}

LatticeFamily parse_lattice_family(std::string_view name) {
  if (name == "10-x-2") return LatticeFamily::GM_x2;
  if (name == "10-5-0") return LatticeFamily::GM_50;
  if (name == "10-x-4") return LatticeFamily::GM_x4;
  if (name == "quartic-line") return LatticeFamily::QuarticLine;
  throw InputError("unknown lattice family: " + std::string(name) +
                   " (expected 10-x-2, 10-5-0, 10-x-4 or quartic-line)");
}

namespace {

void require_rank_two(const IntMatrix& gram) {
  if (gram.rows() != 2 || gram.cols() != 2) throw InputError("Picard Gram matrix must be 2x2");
  if (!gram.is_symmetric()) throw InputError("Picard Gram matrix must be symmetric");
}

}  // namespace

LatticeFamily guess_lattice_family(const IntMatrix& gram) {
  require_rank_two(gram);
  if (gram(0, 0) == 4) return LatticeFamily::QuarticLine;
  if (gram(0, 0) != 10) throw InputError("H² must be 10 or 4");
  if (gram(1, 1) == 0) return LatticeFamily::GM_50;
  if (gram(1, 1) == 4) return LatticeFamily::GM_x4;
  if (gram(1, 1) == 2) return LatticeFamily::GM_x2;
  throw InputError("L² = " + gram(1, 1).get_str() + " matches no supported family");
}

IntVector orthogonal_primitive(const IntMatrix& gram, std::size_t h_index) {
  require_rank_two(gram);
  if (h_index > 1) throw InputError("H index must be 0 or 1");
  // (u, v) with g(h,0) u + g(h,1) v = 0
  const Integer& a = gram(h_index, 0);
  const Integer& b = gram(h_index, 1);
  if (a == 0 && b == 0) throw InputError("H pairs to zero with the whole lattice");
  IntVector v{b, -a};
  const Integer g = gcd(v);
  for (Integer& e : v) e /= g;
  if (v[0] < 0 || (v[0] == 0 && v[1] < 0))
    for (Integer& e : v) e = -e;
  return v;
}

PicardLatticeReport validate_lattice(const IntMatrix& gram, LatticeFamily family) {
  require_rank_two(gram);
  const long expected_h = family == LatticeFamily::QuarticLine ? 4 : 10;
  if (gram(0, 0) != expected_h) {
    throw InputError("family " + std::string(to_string(family)) + " needs H² = " + std::to_string(expected_h));
  }
  PicardLatticeReport r;
  r.gram = gram;
  r.family = family;
  r.det = gram(0, 0) * gram(1, 1) - gram(0, 1) * gram(1, 0);
  r.hyperbolic_ok = r.det < 0;
  r.orthogonal = orthogonal_primitive(gram, 0);
  r.orthogonal_square = bilinear(gram, r.orthogonal, r.orthogonal);
  // t² v₀² = -2 forces t = ±1, so only the generator needs checking.
  r.minus_two_orthogonal = r.orthogonal_square == -2;
  switch (family) {
    case LatticeFamily::GM_x2:
      r.family_condition = "L^2 = 2 and x != 5";
      r.family_condition_ok = gram(1, 1) == 2 && gram(0, 1) != 5;
      break;
    case LatticeFamily::GM_50:
      r.family_condition = "x = 5 and L^2 = 0";
      r.family_condition_ok = gram(0, 1) == 5 && gram(1, 1) == 0;
      break;
    case LatticeFamily::GM_x4:
      r.family_condition = "L^2 = 4";
      r.family_condition_ok = gram(1, 1) == 4;
      break;
    case LatticeFamily::QuarticLine:
      r.family_condition = "H.L = 1 and L^2 = -2";
      r.family_condition_ok = gram(0, 1) == 1 && gram(1, 1) == -2;
      break;
  }
  r.verdict = r.hyperbolic_ok && !r.minus_two_orthogonal && r.family_condition_ok;
  return r;
}

}  // namespace kul
