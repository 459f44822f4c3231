#pragma once

// Lifting Kuznetsov classes v to K3 classes w with Φ_*(w) = v: the explicit
// constructions for quartic double solids and special GM threefolds, an
// exhaustive search used as an oracle, the wall inequality and expected
// moduli dimensions.

#include <optional>
#include <string>
#include <vector>

#include "kul/functor.hpp"

namespace kul {

enum class FanoType { QuarticDoubleSolid, GM3 };

std::string_view to_string(FanoType type);
FanoType parse_fano_type(std::string_view name);

struct LiftCertificate {
  FanoType fano_type{};
  KnumClass v;            // as requested
  KnumClass lifted;       // Φ_*(w) = lifted: v itself (QDS) or v_primitive (GM3)
  KnumClass v_primitive;  // v = multiplicity · v_primitive
  Integer multiplicity;
  IntMatrix gram;         // Picard lattice of the K3 used
  std::optional<long> x;  // off-diagonal Gram entry for the GM families
  MukaiVector w;
  Integer w_square;
  Integer formula_w_square;  // the branch's closed-form value of w²
  std::string branch;
  std::vector<std::string> applicable_branches;
  bool nonneg_ok = false;  // w² >= -2
  bool wall_ok = false;    // w² + 2 < -χ(lifted, lifted) + 1
};

/// QDS, v = a μ1 + b μ2, on the quartic K3 containing a line; v itself is
/// lifted, primitive or not. Throws InputError on the zero vector.
LiftCertificate closed_form_lift_qds(const Integer& a, const Integer& b);

/// GM3, v = p κ1 + q κ2. The primitive part of v is lifted. Throws
/// InputError on the zero vector and on classes the constructions do not
/// reach (primitive part (-1, 0)).
LiftCertificate closed_form_lift_gm3(const Integer& p, const Integer& q);

LiftCertificate closed_form_lift(FanoType type, const Integer& first, const Integer& second);

/// The cover setup a certificate lives on.
CoverSetup certificate_setup(const LiftCertificate& cert);

inline constexpr long default_box = 12;

/// Every w with standard source coordinates in [-box, box], Φ_*(w) = v and
/// w² >= -2, sorted by w² and then lexicographically.
std::vector<IntVector> brute_force_lift(const PhiMap& map, const KnumClass& v, long box);
std::vector<IntVector> brute_force_lift(const CoverSetup& setup, const KnumClass& v, long box);

/// Every w in the box with Φ_*(w) = v, without the w² filter.
std::vector<IntVector> lifts_in_box(const PhiMap& map, const KnumClass& v, long box);

/// w_square + 2 < -χ(v, v) + 1.
bool check_wall_inequality(const KuBasis& basis, const KnumClass& v, const Integer& w_square);

enum class ModuliKind { Enriques, CY2 };
Integer expected_dimension(const KuBasis& basis, const KnumClass& v, ModuliKind kind);

struct AllLiftsReport {
  KnumClass v;
  Integer bound;              // -χ(v, v) + 1
  bool complete = false;      // true when the maximum is over the whole coset
  std::optional<Integer> max_w_square;
  std::optional<IntVector> argmax;
  std::size_t enumerated = 0;  // lifts inspected (box mode only)
  bool inequality_holds = false;  // max w² + 2 < bound, or vacuous when no lift was seen
};

/// Checks w² + 2 < -χ(v, v) + 1 for every lift w of v. Exact over the full
/// coset when the kernel is negative definite; otherwise only over the box.
/// Throws InputError when v is not in the image.
AllLiftsReport all_lifts_inequality(const PhiMap& map, const KnumClass& v, long box);

}  // namespace kul
