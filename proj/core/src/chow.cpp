#include "kul/chow.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "kul/error.hpp"

namespace kul {

struct VarietyModel::Data {
  VarietyKind kind{};
  int dim = 0;
  std::vector<BasisClass> basis;
  std::vector<Rational> mult;  // n*n*n, index (i*n + j)*n + k
  std::optional<IntMatrix> picard_gram;
  RatVector todd;
  std::map<std::string, RatVector, std::less<>> aliases;

  std::size_t n() const { return basis.size(); }
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return mult[(i * n() + j) * n() + k]; }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
    return mult[(i * n() + j) * n() + k];
  }
  std::size_t index(std::string_view name) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i].name == name) return i;
    return basis.size();
  }
};

namespace {

struct KindName {
  VarietyKind kind;
  std::string_view canonical;
  std::string_view short_name;
};

constexpr std::array<KindName, 7> kKindNames{{
    {VarietyKind::P3, "P3", "p3"},
    {VarietyKind::QuarticDoubleSolid, "QuarticDoubleSolid", "qds"},
    {VarietyKind::QuarticK3, "QuarticK3", "quartic-k3"},
    {VarietyKind::QuinticDelPezzo3fold, "QuinticDelPezzo3fold", "v5"},
    {VarietyKind::GM3fold, "GM3fold", "gm3"},
    {VarietyKind::GM4fold, "GM4fold", "gm4"},
    {VarietyKind::Degree10K3, "Degree10K3", "degree10-k3"},
}};

// Symmetric product entry: (a·b) = Σ value_k basis_k.
void set_product(VarietyModel::Data& d, std::size_t a, std::size_t b, std::size_t k, const Rational& value) {
  d.at(a, b, k) = value;
  d.at(b, a, k) = value;
}

void init_tables(VarietyModel::Data& d) {
  const std::size_t n = d.n();
  d.mult.assign(n * n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) set_product(d, 0, i, i, 1);
}

// Picard-rank-1 threefold: 1; H; l; pt with H² = degree·l and H·l = pt.
void build_threefold(VarietyModel::Data& d, long degree) {
  d.dim = 3;
  d.basis = {{0, "1"}, {1, "H"}, {2, "l"}, {3, "pt"}};
  init_tables(d);
  set_product(d, 1, 1, 2, degree);
  set_product(d, 1, 2, 3, 1);
  d.aliases["H^2"] = {0, 0, degree, 0};
  d.aliases["H^3"] = {0, 0, 0, degree};
}

void validate_gram(const IntMatrix& g, long h_square, VarietyKind kind) {
  const std::string who(to_string(kind));
  if (g.rows() == 0 || !g.is_square()) throw InputError(who + ": Gram matrix must be square");
  if (g.rows() > 2) throw InputError(who + ": Picard lattices of rank > 2 are not modelled");
  if (!g.is_symmetric()) throw InputError(who + ": Gram matrix must be symmetric");
  if (g(0, 0) != h_square) {
    throw InputError(who + ": H² must be " + std::to_string(h_square) + ", got " + g(0, 0).get_str());
  }
  if (g.rows() == 2 && g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0) == 0) {
    throw InputError(who + ": Gram matrix must be nondegenerate");
  }
}

void build_k3(VarietyModel::Data& d, const IntMatrix& gram) {
  d.dim = 2;
  d.basis = {{0, "1"}, {1, "H"}};
  if (gram.rows() == 2) d.basis.push_back({1, "L"});
  d.basis.push_back({2, "pt"});
  init_tables(d);
  const std::size_t pt = d.n() - 1;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j) d.at(1 + i, 1 + j, pt) = Rational(gram(i, j));
  RatVector h2(d.n());
  h2[pt] = Rational(gram(0, 0));
  d.aliases["H^2"] = h2;
  d.picard_gram = gram;
}

// Double cover of a codim-2 linear section of Gr(2,5): codim 2 is spanned by
// H² and γ*σ₂. Numbers are twice the Schubert degrees ∫_Gr(2,5) (-)·σ₁².
void build_gm4(VarietyModel::Data& d) {
  d.dim = 4;
  d.basis = {{0, "1"}, {1, "H"}, {2, "H^2"}, {2, "sigma2"}, {3, "l"}, {4, "pt"}};
  init_tables(d);
  set_product(d, 1, 1, 2, 1);
  set_product(d, 1, 2, 4, 10);
  set_product(d, 1, 3, 4, 6);
  set_product(d, 1, 4, 5, 1);
  set_product(d, 2, 2, 5, 10);
  set_product(d, 2, 3, 5, 6);
  set_product(d, 3, 3, 5, 4);
  d.aliases["H^3"] = {0, 0, 0, 0, 10, 0};
  d.aliases["H^4"] = {0, 0, 0, 0, 0, 10};
  d.aliases["sigma11"] = {0, 0, 1, -1, 0, 0};
}

void apply_overrides(VarietyModel::Data& d, const std::vector<IntersectionOverride>& overrides) {
  for (const auto& o : overrides) {
    const std::size_t a = d.index(o.a);
    const std::size_t b = d.index(o.b);
    if (a == d.n() || b == d.n()) throw InputError("intersection override names an unknown class");
    for (std::size_t k = 0; k < d.n(); ++k) set_product(d, a, b, k, 0);
    for (const auto& [name, value] : o.product) {
      const std::size_t k = d.index(name);
      if (k == d.n()) throw InputError("intersection override names an unknown class: " + name);
      if (d.basis[k].codim != d.basis[a].codim + d.basis[b].codim) {
        throw InputError("intersection override breaks the grading: " + o.a + "*" + o.b + " -> " + name);
      }
      set_product(d, a, b, k, value);
    }
  }
}

}  // namespace

std::string_view to_string(VarietyKind kind) {
  for (const auto& k : kKindNames)
    if (k.kind == kind) return k.canonical;
  return "?";
}

VarietyKind parse_variety_kind(std::string_view name) {
  for (const auto& k : kKindNames)
    if (k.canonical == name || k.short_name == name) return k.kind;
  throw InputError("unsupported variety: " + std::string(name));
}

bool is_k3(VarietyKind kind) { return kind == VarietyKind::QuarticK3 || kind == VarietyKind::Degree10K3; }

VarietyModel make_variety_model(const VarietySpec& spec) {
  auto d = std::make_shared<VarietyModel::Data>();
  d->kind = spec.kind;
  if (spec.gram && !is_k3(spec.kind)) {
    throw InputError(std::string(to_string(spec.kind)) + " does not take a Gram matrix");
  }
  // c1, c2 as coefficient vectors; empty c2 means "Todd class given verbatim".
  RatVector c1, c2;
  switch (spec.kind) {
    case VarietyKind::P3:
      build_threefold(*d, 1);
      c1 = {0, 4, 0, 0};
      c2 = {0, 0, 6, 0};
      break;
    case VarietyKind::QuarticDoubleSolid:
      // c(T) = (1+H)^4 (1+2H) / (1+4H) in the weighted projective space P(1,1,1,1,2).
      build_threefold(*d, 2);
      c1 = {0, 2, 0, 0};
      c2 = {0, 0, 12, 0};
      break;
    case VarietyKind::QuinticDelPezzo3fold:
      // index 2, χ(O) = c1·c2/24 = 1 forces H·c2 = 12
      build_threefold(*d, 5);
      c1 = {0, 2, 0, 0};
      c2 = {0, 0, 12, 0};
      break;
    case VarietyKind::GM3fold:
      build_threefold(*d, 10);
      // restricted Schubert cycles: H·σ = 2 ∫_Gr(2,5) σ·σ₁⁴
      d->aliases["sigma2"] = {0, 0, 6, 0};
      d->aliases["sigma11"] = {0, 0, 4, 0};
      d->todd = {1, make_rational(1, 2), make_rational(17, 6), 1};
      break;
    case VarietyKind::GM4fold:
      build_gm4(*d);
      d->todd = {1, 1, make_rational(2, 3), make_rational(-1, 12), make_rational(17, 6), 1};
      break;
    case VarietyKind::QuarticK3:
    case VarietyKind::Degree10K3: {
      const long h2 = spec.kind == VarietyKind::QuarticK3 ? 4 : 10;
      const IntMatrix gram = spec.gram.value_or(IntMatrix{{h2}});
      validate_gram(gram, h2, spec.kind);
      build_k3(*d, gram);
      c1.assign(d->n(), 0);
      c2.assign(d->n(), 0);
      c2.back() = 24;
      break;
    }
  }
  d->aliases["p"] = RatVector(d->n());
  d->aliases["p"].back() = 1;
  apply_overrides(*d, spec.overrides);

  if (d->todd.empty()) {
    d->todd = RatVector(d->n());
    d->todd[0] = 1;  // placeholder so the model is well-formed while computing
    VarietyModel partial(d);
    d->todd = todd_from_chern(partial, GradedClass(partial, c1), GradedClass(partial, c2)).coefficients();
  }
  return VarietyModel(std::shared_ptr<const VarietyModel::Data>(std::move(d)));
}

VarietyModel make_variety_model(VarietyKind kind, std::optional<IntMatrix> gram) {
  return make_variety_model(VarietySpec{kind, std::move(gram), {}});
}

VarietyKind VarietyModel::kind() const { return data_->kind; }
std::string_view VarietyModel::name() const { return to_string(data_->kind); }
int VarietyModel::dim() const { return data_->dim; }
std::size_t VarietyModel::size() const { return data_->n(); }
const std::vector<BasisClass>& VarietyModel::basis() const { return data_->basis; }
const BasisClass& VarietyModel::basis_class(std::size_t i) const { return data_->basis.at(i); }

std::size_t VarietyModel::index_of(std::string_view name) const {
  const std::size_t i = data_->index(name);
  if (i == data_->n()) {
    throw InputError("no basis class '" + std::string(name) + "' on " + std::string(this->name()));
  }
  return i;
}

bool VarietyModel::has_class(std::string_view name) const { return data_->index(name) != data_->n(); }

std::vector<std::size_t> VarietyModel::indices_in_codim(int codim) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < data_->n(); ++i)
    if (data_->basis[i].codim == codim) out.push_back(i);
  return out;
}

const Rational& VarietyModel::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  return data_->at(i, j, k);
}

const std::optional<IntMatrix>& VarietyModel::picard_gram() const { return data_->picard_gram; }
bool VarietyModel::is_k3() const { return kul::is_k3(data_->kind); }

GradedClass VarietyModel::zero() const { return GradedClass(*this, RatVector(size())); }

GradedClass VarietyModel::unit() const {
  RatVector c(size());
  c[0] = 1;
  return GradedClass(*this, std::move(c));
}

GradedClass VarietyModel::point() const {
  RatVector c(size());
  c.back() = 1;
  return GradedClass(*this, std::move(c));
}

GradedClass VarietyModel::hyperplane() const { return named("H"); }

GradedClass VarietyModel::named(std::string_view name) const {
  const std::size_t i = data_->index(name);
  if (i != data_->n()) {
    RatVector c(size());
    c[i] = 1;
    return GradedClass(*this, std::move(c));
  }
  if (auto it = data_->aliases.find(name); it != data_->aliases.end()) return GradedClass(*this, it->second);
  throw InputError("no class '" + std::string(name) + "' on " + std::string(this->name()));
}

GradedClass VarietyModel::from_coefficients(RatVector coefficients) const {
  return GradedClass(*this, std::move(coefficients));
}

GradedClass VarietyModel::todd() const { return GradedClass(*this, data_->todd); }

Rational VarietyModel::degree() const {
  GradedClass power = unit();
  const GradedClass h = hyperplane();
  for (int k = 0; k < dim(); ++k) power = multiply(*this, power, h);
  return integrate(*this, power);
}

GradedClass::GradedClass(VarietyModel model, RatVector coefficients)
    : model_(std::move(model)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != model_.size()) {
    throw InputError("class has " + std::to_string(coeffs_.size()) + " coefficients, " +
                     std::string(model_.name()) + " has " + std::to_string(model_.size()) + " basis classes");
  }
}

const Rational& GradedClass::coeff(std::string_view basis_name) const {
  return coeffs_[model_.index_of(basis_name)];
}

GradedClass GradedClass::part(int codim) const {
  RatVector c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (model_.basis_class(i).codim == codim) c[i] = coeffs_[i];
  return GradedClass(model_, std::move(c));
}

bool GradedClass::is_pure(int codim) const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0 && model_.basis_class(i).codim != codim) return false;
  return true;
}

bool GradedClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

void GradedClass::require_same_model(const GradedClass& other) const {
  if (!model_.same_as(other.model_)) {
    throw InputError("classes live on different models (" + std::string(model_.name()) + ", " +
                     std::string(other.model_.name()) + ")");
  }
}

GradedClass& GradedClass::operator+=(const GradedClass& other) {
  require_same_model(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& other) {
  require_same_model(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

GradedClass& GradedClass::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

GradedClass operator*(const GradedClass& a, const GradedClass& b) { return multiply(a.model(), a, b); }

bool operator==(const GradedClass& a, const GradedClass& b) {
  return a.model_.same_as(b.model_) && a.coeffs_ == b.coeffs_;
}

std::string GradedClass::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    const std::string& name = model_.basis_class(i).name;
    if (name == "1") {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << ' ';
      out << name;
    }
    first = false;
  }
  return first ? "0" : out.str();
}

GradedClass multiply(const VarietyModel& model, const GradedClass& a, const GradedClass& b) {
  if (!a.model().same_as(model) || !b.model().same_as(model)) {
    throw InputError("multiply: classes do not belong to " + std::string(model.name()));
  }
  const std::size_t n = model.size();
  RatVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      const Rational ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& s = model.structure_constant(i, j, k);
        if (s != 0) out[k] += ab * s;
      }
    }
  }
  return GradedClass(model, std::move(out));
}

Rational integrate(const VarietyModel& model, const GradedClass& a) {
  if (!a.model().same_as(model)) throw InputError("integrate: class does not belong to the model");
  Rational total = 0;
  for (std::size_t i : model.indices_in_codim(model.dim())) total += a[i];
  return total;
}

GradedClass dual_ch(const VarietyModel& model, const GradedClass& a) {
  if (!a.model().same_as(model)) throw InputError("dual_ch: class does not belong to the model");
  RatVector c = a.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (model.basis_class(i).codim % 2 != 0) c[i] = -c[i];
  return GradedClass(model, std::move(c));
}

GradedClass power_series(const VarietyModel& model, const GradedClass& x, const RatVector& coeffs) {
  if (x[0] != 0) throw InputError("power series argument must have no codim-0 part");
  GradedClass result = model.zero();
  GradedClass power = model.unit();
  for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= model.dim(); ++k) {
    if (k > 0) power = multiply(model, power, x);
    if (coeffs[k] != 0) result += coeffs[k] * power;
  }
  return result;
}

GradedClass exp_series(const VarietyModel& model, const GradedClass& x) {
  RatVector coeffs;
  Rational term = 1;
  for (int k = 0; k <= model.dim(); ++k) {
    if (k > 0) term /= k;
    coeffs.push_back(term);
  }
  return power_series(model, x, coeffs);
}

GradedClass todd_from_chern(const VarietyModel& model, const GradedClass& c1, const GradedClass& c2) {
  const GradedClass c1sq = multiply(model, c1, c1);
  return model.unit() + make_rational(1, 2) * c1 + make_rational(1, 12) * (c1sq + c2) +
         make_rational(1, 24) * multiply(model, c1, c2);
}

GradedClass ch_from_chern(const VarietyModel& model, long rank, const GradedClass& c1, const GradedClass& c2) {
  const GradedClass c1sq = multiply(model, c1, c1);
  const GradedClass c1c2 = multiply(model, c1, c2);
  const GradedClass c1cube = multiply(model, c1sq, c1);
  const GradedClass c1fourth = multiply(model, c1cube, c1);
  const GradedClass c1sq_c2 = multiply(model, c1sq, c2);
  const GradedClass c2sq = multiply(model, c2, c2);
  return Rational(rank) * model.unit() + c1 + make_rational(1, 2) * (c1sq - 2 * c2) +
         make_rational(1, 6) * (c1cube - 3 * c1c2) +
         make_rational(1, 24) * (c1fourth - 4 * c1sq_c2 + 2 * c2sq);
}

}  // namespace kul
