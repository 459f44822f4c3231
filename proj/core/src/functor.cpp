#include "kul/functor.hpp"

#include <ranges>

#include "kul/error.hpp"

namespace kul {

GradedClass mutate_class(const VarietyModel& model, const GradedClass& ch_f, const GradedClass& ch_e) {
  return ch_f - Rational(euler_pairing_integral(model, ch_e, ch_f)) * ch_e;
}

PhiTrace phi_trace(const CoverSetup& setup, const GradedClass& ch_on_source) {
  if (!ch_on_source.model().same_as(setup.source)) throw InputError("class is not on the source of " + setup.name);
  const VarietyModel& x = setup.source;
  const VarietyModel& y = setup.target;
  GradedClass twisted = multiply(x, ch_on_source, ch_line_bundle(x, setup.twist * x.hyperplane()));
  GradedClass pushed = divisor_pushforward(setup, twisted);
  PhiTrace trace{twisted, pushed, {}, pushed};
  // L_{<E1,...,En>} = L_{E1} ∘ ... ∘ L_{En}: the last object acts first.
  for (const ExceptionalObject& e : setup.exceptional_collection | std::views::reverse) {
    Integer chi = euler_pairing_integral(y, e.ch, trace.result);
    trace.result = trace.result - Rational(chi) * e.ch;
    trace.steps.push_back({e.name, chi, trace.result});
  }
  return trace;
}

GradedClass phi_ch(const CoverSetup& setup, const GradedClass& ch_on_source) {
  return phi_trace(setup, ch_on_source).result;
}

std::size_t source_rank(const CoverSetup& setup) {
  if (setup.source_basis) return setup.source_basis->rank();
  return setup.source.picard_gram()->rows() + 2;
}

GradedClass source_ch(const CoverSetup& setup, const IntVector& coords) {
  if (coords.size() != source_rank(setup)) {
    throw InputError("source lattice of " + setup.name + " has rank " + std::to_string(source_rank(setup)));
  }
  if (setup.source_basis) return to_ch(*setup.source_basis, make_knum(*setup.source_basis, coords));
  return mukai_to_ch(setup.source, MukaiVector::from_coordinates(*setup.source.picard_gram(), coords));
}

IntMatrix source_form(const CoverSetup& setup) {
  if (setup.source_basis) return setup.source_basis->gram;
  return mukai_form(*setup.source.picard_gram());
}

std::vector<std::string> source_labels(const CoverSetup& setup) {
  if (setup.source_basis) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < setup.source_basis->rank(); ++i)
      out.push_back(setup.source_basis->name + std::to_string(i + 1));
    return out;
  }
  std::vector<std::string> out{"r"};
  for (std::size_t i = 1; i + 1 < setup.source.size(); ++i) out.push_back(setup.source.basis_class(i).name);
  out.push_back("s");
  return out;
}

KnumClass phi_star_coords(const CoverSetup& setup, const IntVector& coords) {
  return express_in_basis(setup.target_basis, phi_ch(setup, source_ch(setup, coords)));
}

KnumClass phi_star(const CoverSetup& setup, const MukaiVector& w) {
  if (setup.source_basis) throw InputError(setup.name + " takes Kuznetsov classes, not Mukai vectors");
  if (!(w.picard_gram == *setup.source.picard_gram())) {
    throw InputError("Mukai vector " + to_string(w) + " is not on the source K3 of " + setup.name);
  }
  return phi_star_coords(setup, w.coordinates());
}

KnumClass phi_star(const CoverSetup& setup, const KnumClass& w) {
  if (!setup.source_basis || w.basis != setup.source_basis->name) {
    throw InputError("class " + to_string(w) + " is not in the source lattice of " + setup.name);
  }
  return phi_star_coords(setup, w.coords);
}

KnumClass PhiMap::apply(const IntVector& coords) const {
  if (coords.size() != matrix.cols()) throw InputError("source vector has the wrong rank");
  return KnumClass{setup.target_basis.name, matrix * coords};
}

PhiMap phi_matrix(const CoverSetup& setup) {
  return phi_matrix(setup, IntMatrix::identity(source_rank(setup)), source_labels(setup));
}

PhiMap phi_matrix(const CoverSetup& setup, const IntMatrix& custom_basis, std::vector<std::string> labels) {
  const std::size_t n = source_rank(setup);
  if (custom_basis.rows() != n) throw InputError("custom basis vectors must have rank " + std::to_string(n));
  PhiMap map{setup, IntMatrix(setup.target_basis.rank(), custom_basis.cols()), custom_basis, std::move(labels)};
  for (std::size_t j = 0; j < custom_basis.cols(); ++j) {
    const IntVector image = phi_star_coords(setup, custom_basis.column(j)).coords;
    map.matrix.set_column(j, std::span<const Integer>(image));
  }
  if (map.source_labels.size() != custom_basis.cols()) {
    map.source_labels.clear();
    for (std::size_t j = 0; j < custom_basis.cols(); ++j) map.source_labels.push_back("b" + std::to_string(j + 1));
  }
  return map;
}

IntMatrix standard_matrix(const PhiMap& map) {
  const std::size_t n = source_rank(map.setup);
  if (map.source_basis == IntMatrix::identity(n)) return map.matrix;
  return phi_matrix(map.setup).matrix;
}

ImageLattice image_lattice(const PhiMap& map) {
  ImageLattice image{map.setup.target_basis.name, {}, column_hermite(standard_matrix(map)), 0};
  image.generators = image.hnf.h;
  if (image.hnf.rank == image.generators.rows()) {
    image.index = 1;
    for (std::size_t j = 0; j < image.hnf.rank; ++j) image.index *= image.generators(image.hnf.pivot_rows[j], j);
    image.index = abs(image.index);
  }
  return image;
}

bool in_image(const ImageLattice& image, const KnumClass& v) {
  if (v.basis != image.basis || v.coords.size() != image.generators.rows()) {
    throw InputError("class " + to_string(v) + " is not in the " + image.basis + " lattice");
  }
  return solve_hermite(image.hnf, v.coords).has_value();
}

std::optional<IntVector> preimage(const PhiMap& map, const KnumClass& v) {
  if (v.basis != map.setup.target_basis.name) {
    throw InputError("class " + to_string(v) + " is not in the " + map.setup.target_basis.name + " lattice");
  }
  const ColumnHermite hnf = column_hermite(standard_matrix(map));
  const auto y = solve_hermite(hnf, v.coords);
  if (!y) return std::nullopt;
  // a·u = [h | 0], so x = u·(y, 0) solves a·x = v.
  IntVector padded(hnf.u.cols());
  std::copy(y->begin(), y->end(), padded.begin());
  return hnf.u * padded;
}

KernelLattice kernel_lattice(const PhiMap& map) {
  const ColumnHermite hnf = column_hermite(standard_matrix(map));
  const std::size_t n = hnf.u.cols();
  KernelLattice k;
  k.basis = IntMatrix(n, n - hnf.rank);
  for (std::size_t j = hnf.rank; j < n; ++j) {
    const IntVector col = hnf.u.column(j);
    k.basis.set_column(j - hnf.rank, std::span<const Integer>(col));
  }
  const IntMatrix form = source_form(map.setup);
  k.gram = k.basis.transposed() * form * k.basis;
  k.negative_definite = k.gram.rows() > 0 && is_negative_definite(k.gram);
  return k;
}

}  // namespace kul
