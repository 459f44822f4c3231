#pragma once

// Integer lattices carrying Euler forms: the rank-2 numerical Grothendieck
// groups of Kuznetsov components (μ, κ, λ bases) and the algebraic Mukai
// lattices ℤ ⊕ Pic ⊕ ℤ of K3 surfaces.

#include <string>
#include <vector>

#include "kul/chow.hpp"
#include "kul/linalg.hpp"

namespace kul {

/// A basis of Knum(Ku) with its Euler form and the Chern characters of the
/// basis classes on the owning variety.
struct KuBasis {
  std::string name;  // "mu", "kappa" or "lambda"
  VarietyModel model;
  IntMatrix gram;
  std::vector<GradedClass> basis_ch;

  std::size_t rank() const { return basis_ch.size(); }
};

/// ch(μ1) = 1 - H²/2, ch(μ2) = H - H²/2 - 2/3 pt on the quartic double solid.
KuBasis mu_basis(const VarietyModel& quartic_double_solid);
/// ch(κ1) = 1 - H²/5, ch(κ2) = 2 - H + 5/6 pt on a GM threefold.
KuBasis kappa_basis(const VarietyModel& gm3);
/// ch(λ1) = -2 + σ₁,₁ - pt/2, ch(λ2) = -4 + 2H - H³/6 on a GM fourfold.
KuBasis lambda_basis(const VarietyModel& gm4);

struct KnumClass {
  std::string basis;
  IntVector coords;

  friend bool operator==(const KnumClass&, const KnumClass&) = default;
};

KnumClass make_knum(const KuBasis& basis, IntVector coords);

/// vᵀ·gram·w. Throws InputError on a basis mismatch.
Integer euler_form(const KuBasis& basis, const KnumClass& v, const KnumClass& w);

/// Every Gram entry recomputed as χ(basis_i, basis_j) via Hirzebruch-Riemann-Roch.
IntMatrix recompute_gram(const KuBasis& basis);

/// Exact solve of ch = Σ coords_i · basis_ch_i over the whole graded vector.
/// Throws ConsistencyError when ch is outside the span or the coordinates
/// are not integers.
KnumClass express_in_basis(const KuBasis& basis, const GradedClass& ch);

GradedClass to_ch(const KuBasis& basis, const KnumClass& v);

/// (r, c, s) with s = ch₂ + r, so every entry is an integer.
struct MukaiVector {
  Integer r;
  IntVector c;  // coordinates in the Picard basis (H, L, ...)
  Integer s;
  IntMatrix picard_gram;

  /// (r, c..., s)
  IntVector coordinates() const;
  static MukaiVector from_coordinates(const IntMatrix& picard_gram, const IntVector& coords);

  MukaiVector operator-() const;
  friend MukaiVector operator+(const MukaiVector& a, const MukaiVector& b);
  friend MukaiVector operator*(const Integer& k, const MukaiVector& a);
  friend bool operator==(const MukaiVector& a, const MukaiVector& b) = default;
};

/// Matrix of the Mukai pairing c·c' - r s' - r' s on (r, c..., s) coordinates.
IntMatrix mukai_form(const IntMatrix& picard_gram);

/// Throws InputError when `k3` is not a K3 model, ConsistencyError when ch is
/// not the Chern character of an integral class.
MukaiVector mukai_vector(const VarietyModel& k3, const GradedClass& ch);
GradedClass mukai_to_ch(const VarietyModel& k3, const MukaiVector& v);

/// c·c' - r s' - r' s. Throws InputError when the Picard lattices differ.
Integer mukai_pairing(const MukaiVector& a, const MukaiVector& b);

std::string to_string(const KnumClass& v);
std::string to_string(const MukaiVector& v);

}  // namespace kul
