#pragma once

// Class-level transport along a branched double cover: twist by O(dH),
// push forward along the ramification divisor, then left-mutate through the
// exceptional collection and read the result off in the Kuznetsov basis.

#include <optional>
#include <string>
#include <vector>

#include "kul/grr.hpp"
#include "kul/knum.hpp"

namespace kul {

/// [L_E F] = [F] - χ(E, F)[E].
GradedClass mutate_class(const VarietyModel& model, const GradedClass& ch_f, const GradedClass& ch_e);

struct MutationStep {
  std::string object;   // name of E
  Integer chi;          // χ(E, F) just before mutating through E
  GradedClass result;   // [L_E F]
};

/// Every intermediate class of the pipeline, for inspection and replay.
struct PhiTrace {
  GradedClass twisted;    // ch(F ⊗ O_X(dH)) on X
  GradedClass pushed;     // ch(j_*(F ⊗ O_X(dH))) on Y
  std::vector<MutationStep> steps;  // in the order applied (last collection member first)
  GradedClass result;     // ch of the class in Ku(Y)
};

/// Runs the pipeline on a Chern character living on setup.source.
PhiTrace phi_trace(const CoverSetup& setup, const GradedClass& ch_on_source);
GradedClass phi_ch(const CoverSetup& setup, const GradedClass& ch_on_source);

/// Chern character of a source-lattice coordinate vector: Mukai coordinates
/// (r, c..., s) on a K3 source, κ-coordinates on the GM threefold source.
GradedClass source_ch(const CoverSetup& setup, const IntVector& coords);
std::size_t source_rank(const CoverSetup& setup);
/// Pairing used for w²: the Mukai form on a K3 source, χ(·,·) for κ.
IntMatrix source_form(const CoverSetup& setup);
std::vector<std::string> source_labels(const CoverSetup& setup);

KnumClass phi_star(const CoverSetup& setup, const MukaiVector& w);
KnumClass phi_star(const CoverSetup& setup, const KnumClass& w);
KnumClass phi_star_coords(const CoverSetup& setup, const IntVector& coords);

struct PhiMap {
  CoverSetup setup;
  IntMatrix matrix;                 // target rank x source rank
  IntMatrix source_basis;           // columns: the source vectors used, in standard coordinates
  std::vector<std::string> source_labels;

  /// Φ_* of a vector given in standard source coordinates.
  KnumClass apply(const IntVector& coords) const;
};

/// Columns of the matrix are Φ_* of the standard source basis, unless a
/// custom basis (columns in standard coordinates) is supplied.
PhiMap phi_matrix(const CoverSetup& setup);
PhiMap phi_matrix(const CoverSetup& setup, const IntMatrix& custom_basis, std::vector<std::string> labels = {});

/// Matrix of the map in standard source coordinates, whatever basis `map`
/// was built on.
IntMatrix standard_matrix(const PhiMap& map);

struct ImageLattice {
  std::string basis;     // target basis name
  IntMatrix generators;  // Hermite basis of the image, one column per generator
  ColumnHermite hnf;     // of the map matrix in standard coordinates
  Integer index;         // [ℤ^n : image], 0 when the image has lower rank
};

ImageLattice image_lattice(const PhiMap& map);
bool in_image(const ImageLattice& image, const KnumClass& v);
/// One integral preimage in standard source coordinates, if any.
std::optional<IntVector> preimage(const PhiMap& map, const KnumClass& v);

struct KernelLattice {
  IntMatrix basis;  // saturated ℤ-basis of ker Φ_*, one column per vector
  IntMatrix gram;   // source form restricted to the kernel
  bool negative_definite = false;
};

KernelLattice kernel_lattice(const PhiMap& map);

}  // namespace kul
