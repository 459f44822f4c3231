#include "kul/knum.hpp"

#include <sstream>

#include "kul/error.hpp"
#include "kul/grr.hpp"

namespace kul {

namespace {

void require_kind(const VarietyModel& model, VarietyKind kind, const char* basis) {
  if (model.kind() != kind) {
    throw InputError(std::string("the ") + basis + " basis lives on " + std::string(to_string(kind)) + ", not " +
                     std::string(model.name()));
  }
}

void require_basis(const KuBasis& basis, const KnumClass& v) {
  if (v.basis != basis.name || v.coords.size() != basis.rank()) {
    throw InputError("class " + to_string(v) + " is not in the " + basis.name + " lattice");
  }
}

void require_same_lattice(const MukaiVector& a, const MukaiVector& b) {
  if (!(a.picard_gram == b.picard_gram) || a.c.size() != b.c.size()) {
    throw InputError("Mukai vectors live on different Picard lattices");
  }
}

}  // namespace

KuBasis mu_basis(const VarietyModel& qds) {
  require_kind(qds, VarietyKind::QuarticDoubleSolid, "mu");
  const GradedClass h2 = qds.named("H^2");
  return KuBasis{"mu",
                 qds,
                 IntMatrix{{-1, -1}, {-1, -2}},
                 {qds.unit() - make_rational(1, 2) * h2,
                  qds.hyperplane() - make_rational(1, 2) * h2 - make_rational(2, 3) * qds.point()}};
}

KuBasis kappa_basis(const VarietyModel& gm3) {
  require_kind(gm3, VarietyKind::GM3fold, "kappa");
  return KuBasis{"kappa",
                 gm3,
                 IntMatrix{{-1, 0}, {0, -1}},
                 {gm3.unit() - make_rational(1, 5) * gm3.named("H^2"),
                  2 * gm3.unit() - gm3.hyperplane() + make_rational(5, 6) * gm3.point()}};
}

KuBasis lambda_basis(const VarietyModel& gm4) {
  require_kind(gm4, VarietyKind::GM4fold, "lambda");
  return KuBasis{"lambda",
                 gm4,
                 IntMatrix{{-2, 0}, {0, -2}},
                 {-2 * gm4.unit() + gm4.named("sigma11") - make_rational(1, 2) * gm4.point(),
                  -4 * gm4.unit() + 2 * gm4.hyperplane() - make_rational(1, 6) * gm4.named("H^3")}};
}

KnumClass make_knum(const KuBasis& basis, IntVector coords) {
  if (coords.size() != basis.rank()) {
    throw InputError("the " + basis.name + " lattice has rank " + std::to_string(basis.rank()));
  }
  return KnumClass{basis.name, std::move(coords)};
}

Integer euler_form(const KuBasis& basis, const KnumClass& v, const KnumClass& w) {
  require_basis(basis, v);
  require_basis(basis, w);
  return bilinear(basis.gram, v.coords, w.coords);
}

IntMatrix recompute_gram(const KuBasis& basis) {
  IntMatrix g(basis.rank(), basis.rank());
  for (std::size_t i = 0; i < basis.rank(); ++i)
    for (std::size_t j = 0; j < basis.rank(); ++j)
      g(i, j) = euler_pairing_integral(basis.model, basis.basis_ch[i], basis.basis_ch[j]);
  return g;
}

KnumClass express_in_basis(const KuBasis& basis, const GradedClass& ch) {
  if (!ch.model().same_as(basis.model)) {
    throw InputError("class does not live on the model of the " + basis.name + " basis");
  }
  RatMatrix a(basis.model.size(), basis.rank());
  for (std::size_t j = 0; j < basis.rank(); ++j) a.set_column(j, std::span<const Rational>(basis.basis_ch[j].coefficients()));
  const auto sol = solve(a, ch.coefficients());
  if (!sol) {
    throw ConsistencyError("ch = " + ch.to_string() + " is not in the span of the " + basis.name + " basis");
  }
  IntVector coords;
  for (const auto& x : sol->x) coords.push_back(to_integer(x, ("coordinate in the " + basis.name + " basis").c_str()));
  return KnumClass{basis.name, std::move(coords)};
}

GradedClass to_ch(const KuBasis& basis, const KnumClass& v) {
  require_basis(basis, v);
  GradedClass out = basis.model.zero();
  for (std::size_t i = 0; i < basis.rank(); ++i) out += Rational(v.coords[i]) * basis.basis_ch[i];
  return out;
}

IntVector MukaiVector::coordinates() const {
  IntVector out;
  out.reserve(c.size() + 2);
  out.push_back(r);
  out.insert(out.end(), c.begin(), c.end());
  out.push_back(s);
  return out;
}

MukaiVector MukaiVector::from_coordinates(const IntMatrix& picard_gram, const IntVector& coords) {
  if (coords.size() != picard_gram.rows() + 2) {
    throw InputError("Mukai vector needs " + std::to_string(picard_gram.rows() + 2) + " coordinates");
  }
  return MukaiVector{coords.front(), IntVector(coords.begin() + 1, coords.end() - 1), coords.back(), picard_gram};
}

MukaiVector MukaiVector::operator-() const {
  MukaiVector out = *this;
  out.r = -out.r;
  for (auto& x : out.c) x = -x;
  out.s = -out.s;
  return out;
}

MukaiVector operator+(const MukaiVector& a, const MukaiVector& b) {
  require_same_lattice(a, b);
  MukaiVector out = a;
  out.r += b.r;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] += b.c[i];
  out.s += b.s;
  return out;
}

MukaiVector operator*(const Integer& k, const MukaiVector& a) {
  MukaiVector out = a;
  out.r *= k;
  for (auto& x : out.c) x *= k;
  out.s *= k;
  return out;
}

IntMatrix mukai_form(const IntMatrix& picard_gram) {
  const std::size_t rho = picard_gram.rows();
  IntMatrix f(rho + 2, rho + 2);
  f(0, rho + 1) = -1;
  f(rho + 1, 0) = -1;
  for (std::size_t i = 0; i < rho; ++i)
    for (std::size_t j = 0; j < rho; ++j) f(1 + i, 1 + j) = picard_gram(i, j);
  return f;
}

MukaiVector mukai_vector(const VarietyModel& k3, const GradedClass& ch) {
  if (!k3.is_k3()) throw InputError("Mukai vectors need a K3 model, got " + std::string(k3.name()));
  if (!ch.model().same_as(k3)) throw InputError("class does not live on this K3 model");
  const IntMatrix& gram = *k3.picard_gram();
  auto integral = [](const Rational& q, const char* what) {
    if (!is_integer(q)) throw ConsistencyError(std::string("non-integral ") + what + ": " + to_string(q));
    return Integer(q.get_num());
  };
  MukaiVector v;
  v.picard_gram = gram;
  v.r = integral(ch[0], "rank");
  for (std::size_t i = 0; i < gram.rows(); ++i) v.c.push_back(integral(ch[1 + i], "first Chern class"));
  v.s = integral(ch[k3.size() - 1] + v.r, "Mukai s = ch2 + r");
  return v;
}

GradedClass mukai_to_ch(const VarietyModel& k3, const MukaiVector& v) {
  if (!k3.is_k3()) throw InputError("Mukai vectors need a K3 model, got " + std::string(k3.name()));
  if (!(v.picard_gram == *k3.picard_gram())) throw InputError("Mukai vector is on a different Picard lattice");
  RatVector c(k3.size());
  c[0] = v.r;
  for (std::size_t i = 0; i < v.c.size(); ++i) c[1 + i] = v.c[i];
  c.back() = Rational(v.s - v.r);
  return k3.from_coefficients(std::move(c));
}

Integer mukai_pairing(const MukaiVector& a, const MukaiVector& b) {
  require_same_lattice(a, b);
  Integer cc = bilinear(a.picard_gram, a.c, b.c);
  return cc - a.r * b.s - b.r * a.s;
}

std::string to_string(const KnumClass& v) {
  std::ostringstream out;
  out << v.basis << '(';
  for (std::size_t i = 0; i < v.coords.size(); ++i) out << (i ? "," : "") << v.coords[i].get_str();
  out << ')';
  return out.str();
}

std::string to_string(const MukaiVector& v) {
  std::ostringstream out;
  out << '(' << v.r.get_str() << ", ";
  static const char* const kNames[] = {"H", "L"};
  bool any = false;
  for (std::size_t i = 0; i < v.c.size(); ++i) {
    if (v.c[i] == 0) continue;
    const Integer& x = v.c[i];
    if (any) out << (x < 0 ? "-" : "+");
    else if (x < 0) out << '-';
    if (abs(x) != 1) out << Integer(abs(x)).get_str();
    out << (i < 2 ? kNames[i] : "D");
    any = true;
  }
  if (!any) out << '0';
  out << ", " << v.s.get_str() << ')';
  return out.str();
}

}  // namespace kul
