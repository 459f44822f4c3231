#pragma once

// Numerical cohomology rings of the varieties in play: P³, the quartic double
// solid, quartic and degree-10 K3 surfaces, the quintic del Pezzo threefold,
// and Gushel-Mukai threefolds and fourfolds.
//
// Every model is graded by codimension, has a unit `1` (index 0) and a point
// class `pt` (last index, degree 1). On Picard-rank-1 threefolds the curve
// classes are collapsed to the line class `l` with H·l = pt.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kul/linalg.hpp"
#include "kul/rational.hpp"

namespace kul {

enum class VarietyKind {
  P3,
  QuarticDoubleSolid,
  QuarticK3,
  QuinticDelPezzo3fold,
  GM3fold,
  GM4fold,
  Degree10K3,
};

std::string_view to_string(VarietyKind kind);
/// Accepts the enum spelling ("GM3fold") and the short CLI names ("gm3").
VarietyKind parse_variety_kind(std::string_view name);
bool is_k3(VarietyKind kind);

struct BasisClass {
  int codim = 0;
  std::string name;
};

/// Replaces the product of two basis classes; used to test that a wrong
/// table is caught downstream.
struct IntersectionOverride {
  std::string a;
  std::string b;
  std::vector<std::pair<std::string, Rational>> product;
};

struct VarietySpec {
  VarietyKind kind = VarietyKind::P3;
  std::optional<IntMatrix> gram;  // Picard lattice of a K3, H first
  std::vector<IntersectionOverride> overrides;
};

class GradedClass;

/// Immutable after construction; copies share the same tables.
class VarietyModel {
 public:
  VarietyKind kind() const;
  std::string_view name() const;
  int dim() const;
  std::size_t size() const;
  const std::vector<BasisClass>& basis() const;
  const BasisClass& basis_class(std::size_t i) const;
  std::size_t index_of(std::string_view name) const;
  bool has_class(std::string_view name) const;
  std::vector<std::size_t> indices_in_codim(int codim) const;

  /// Coefficient of basis class k in (basis i)·(basis j).
  const Rational& structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

  /// Picard lattice Gram (K3 models only), H first.
  const std::optional<IntMatrix>& picard_gram() const;
  bool is_k3() const;

  GradedClass zero() const;
  GradedClass unit() const;
  GradedClass point() const;
  GradedClass hyperplane() const;
  /// A basis class or a named alias such as "H^2", "H^3", "sigma11", "p".
  GradedClass named(std::string_view name) const;
  GradedClass from_coefficients(RatVector coefficients) const;
  GradedClass todd() const;

  /// ∫ H^dim.
  Rational degree() const;

  bool same_as(const VarietyModel& other) const { return data_ == other.data_; }

  struct Data;  // tables; defined in chow.cpp

 private:
  explicit VarietyModel(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;

  friend VarietyModel make_variety_model(const VarietySpec& spec);
};

/// A vector of exact rationals over the graded basis of one model.
class GradedClass {
 public:
  GradedClass(VarietyModel model, RatVector coefficients);

  const VarietyModel& model() const { return model_; }
  const RatVector& coefficients() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  const Rational& coeff(std::string_view basis_name) const;

  /// Component in one codimension (other parts zeroed).
  GradedClass part(int codim) const;
  /// True when only codimension-`codim` coefficients are nonzero.
  bool is_pure(int codim) const;
  bool is_zero() const;

  GradedClass& operator+=(const GradedClass& other);
  GradedClass& operator-=(const GradedClass& other);
  GradedClass& operator*=(const Rational& s);

  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator-(GradedClass a) { return a *= Rational(-1); }
  friend GradedClass operator*(const Rational& s, GradedClass a) { return a *= s; }
  friend GradedClass operator*(long s, GradedClass a) { return a *= Rational(s); }
  friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
  friend bool operator==(const GradedClass& a, const GradedClass& b);

  /// "2 - H - 1/2 H^2 + 2/3 pt" style rendering in basis names.
  std::string to_string() const;

 private:
  void require_same_model(const GradedClass& other) const;
  VarietyModel model_;
  RatVector coeffs_;
};

/// Builds the tables for one supported variety. Throws InputError on an
/// unsupported request or a malformed Gram matrix.
VarietyModel make_variety_model(const VarietySpec& spec);
VarietyModel make_variety_model(VarietyKind kind, std::optional<IntMatrix> gram = std::nullopt);

/// Bilinear product via the structure constants; parts above dim vanish.
GradedClass multiply(const VarietyModel& model, const GradedClass& a, const GradedClass& b);
/// Degree of the top-codimension part.
Rational integrate(const VarietyModel& model, const GradedClass& a);
/// Multiplies the codim-k part by (-1)^k.
GradedClass dual_ch(const VarietyModel& model, const GradedClass& a);

/// Σ_{k<=dim} x^k / k!  (x must have no codim-0 part).
GradedClass exp_series(const VarietyModel& model, const GradedClass& x);
/// Truncated power series Σ coeffs[k] x^k.
GradedClass power_series(const VarietyModel& model, const GradedClass& x, const RatVector& coeffs);

/// 1 + c1/2 + (c1²+c2)/12 + c1·c2/24, truncated at the model's dimension.
GradedClass todd_from_chern(const VarietyModel& model, const GradedClass& c1, const GradedClass& c2);

/// Chern character of a rank-r bundle with given c1, c2 and c3 = c4 = 0.
GradedClass ch_from_chern(const VarietyModel& model, long rank, const GradedClass& c1,
                          const GradedClass& c2);

}  // namespace kul
