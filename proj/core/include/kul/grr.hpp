#pragma once

// Chern characters, Euler pairings by Hirzebruch-Riemann-Roch and
// pushforward along the ramification divisor j: X -> Y of a double cover by
// Grothendieck-Riemann-Roch.

#include <optional>
#include <string>
#include <vector>

#include "kul/chow.hpp"
#include "kul/knum.hpp"

namespace kul {

/// ch(O(D)) = exp(D). Throws InputError unless D is purely codim 1.
GradedClass ch_line_bundle(const VarietyModel& model, const GradedClass& divisor);

/// td(O(D))⁻¹ = (1 - e^{-D}) / D.
GradedClass inverse_todd_line_bundle(const VarietyModel& model, const GradedClass& divisor);

/// χ(E, F) = ∫ ch(E)^∨ · ch(F) · td.
Rational euler_pairing(const VarietyModel& model, const GradedClass& ch_e, const GradedClass& ch_f);

/// Same pairing for classes of genuine objects; a fractional value means a
/// broken table and raises ConsistencyError instead of being rounded.
Integer euler_pairing_integral(const VarietyModel& model, const GradedClass& ch_e, const GradedClass& ch_f);

/// ch(U^∨) for the tautological rank-2 bundle on a GM threefold or fourfold
/// (c1 = H, c2 = σ₁,₁).
GradedClass ch_tautological_dual(const VarietyModel& gm);

struct ExceptionalObject {
  std::string name;
  GradedClass ch;
};

enum class SetupKind { QuarticDoubleSolid, GM3, GM4 };

std::string_view to_string(SetupKind kind);
SetupKind parse_setup_kind(std::string_view name);

/// One branched double cover with its ramification divisor X ⊂ Y.
struct CoverSetup {
  std::string name;
  SetupKind kind{};
  VarietyModel source;          // X
  VarietyModel target;          // Y
  GradedClass divisor_class;    // [X] on Y
  int twist = 0;                // d: Φ starts with - ⊗ O_X(dH)
  RatMatrix pullback;           // source.size() x target.size()
  RatMatrix pushforward;        // target.size() x source.size()
  GradedClass td_tj;            // td(N_{X/Y})⁻¹ on X
  std::vector<ExceptionalObject> exceptional_collection;  // ⟨E_1, ..., E_n⟩ on Y
  KuBasis target_basis;
  std::optional<KuBasis> source_basis;  // κ on the GM threefold for the GM4 setup
};

/// Quartic double solid over P³ with ramification quartic K3 X (Picard Gram
/// defaults to ⟨4⟩; (4,1;1,-2) is the K3 containing a line), d = 2,
/// collection ⟨O_Y, O_Y(H)⟩, target basis μ.
CoverSetup make_qds_setup(std::optional<IntMatrix> k3_gram = std::nullopt);
/// Special GM threefold branched in a degree-10 K3 S (Gram defaults to ⟨10⟩),
/// d = 1, collection ⟨O_Y, U_Y^∨⟩, target basis κ.
CoverSetup make_gm3_setup(std::optional<IntMatrix> k3_gram = std::nullopt);
/// Special GM fourfold W branched in an ordinary GM threefold X, d = 1,
/// collection ⟨O_W, U_W^∨⟩, source basis κ, target basis λ.
CoverSetup make_gm4_setup();

CoverSetup make_setup(SetupKind kind, std::optional<IntMatrix> k3_gram = std::nullopt);

GradedClass pullback(const CoverSetup& setup, const GradedClass& on_target);
GradedClass pushforward(const CoverSetup& setup, const GradedClass& on_source);

/// ch(j_* F) = j_*(ch(F) · td_Tj).
GradedClass divisor_pushforward(const CoverSetup& setup, const GradedClass& ch_f);

/// χ_Y(E, j_* F) computed on X as χ_X(j^* E, F).
Rational adjoint_euler(const CoverSetup& setup, const GradedClass& ch_e_on_target,
                       const GradedClass& ch_f_on_source);

}  // namespace kul
