#pragma once

// Checks on rank-2 Picard lattices of polarized K3 surfaces used as branch
// divisors: hyperbolicity, absence of (-2)-classes orthogonal to H, and the
// per-family side conditions.

#include <string>

#include "kul/linalg.hpp"

namespace kul {

enum class LatticeFamily {
  GM_x2,        // (10, x; x, 2)
  GM_50,        // (10, 5; 5, 0)
  GM_x4,        // (10, x; x, 4)
  QuarticLine,  // (4, 1; 1, -2)
};

std::string_view to_string(LatticeFamily family);
LatticeFamily parse_lattice_family(std::string_view name);
/// The family a Gram matrix belongs to, judged from H² and L².
LatticeFamily guess_lattice_family(const IntMatrix& gram);

struct PicardLatticeReport {
  IntMatrix gram;
  LatticeFamily family{};
  Integer det;
  IntVector orthogonal;       // primitive generator of H^⊥
  Integer orthogonal_square;
  bool hyperbolic_ok = false;
  bool minus_two_orthogonal = false;
  bool family_condition_ok = false;
  std::string family_condition;  // what was checked
  bool verdict = false;
};

/// Primitive integral generator of the orthogonal complement of basis
/// vector `h_index`, first nonzero coordinate positive. Throws InputError
/// unless gram is 2x2 symmetric with a nonzero row `h_index`.
IntVector orthogonal_primitive(const IntMatrix& gram, std::size_t h_index = 0);

/// Throws InputError on a malformed Gram matrix or one whose H² does not
/// match the family.
PicardLatticeReport validate_lattice(const IntMatrix& gram, LatticeFamily family);

}  // namespace kul
