#include "kul/grr.hpp"

#include <sstream>

#include "kul/error.hpp"

namespace kul {

GradedClass ch_line_bundle(const VarietyModel& model, const GradedClass& divisor) {
  if (!divisor.is_pure(1)) throw InputError("line bundle needs a pure codim-1 class, got " + divisor.to_string());
  return exp_series(model, divisor);
}

GradedClass inverse_todd_line_bundle(const VarietyModel& model, const GradedClass& divisor) {
  if (!divisor.is_pure(1)) throw InputError("line bundle needs a pure codim-1 class, got " + divisor.to_string());
  // (1 - e^{-x}) / x = Σ (-1)^k x^k / (k+1)!
  RatVector coeffs;
  Rational factorial = 1;
  for (int k = 0; k <= model.dim(); ++k) {
    factorial *= k + 1;
    coeffs.push_back((k % 2 == 0 ? 1 : -1) / factorial);
  }
  return power_series(model, divisor, coeffs);
}

Rational euler_pairing(const VarietyModel& model, const GradedClass& ch_e, const GradedClass& ch_f) {
  return integrate(model, multiply(model, multiply(model, dual_ch(model, ch_e), ch_f), model.todd()));
}

Integer euler_pairing_integral(const VarietyModel& model, const GradedClass& ch_e, const GradedClass& ch_f) {
  const Rational chi = euler_pairing(model, ch_e, ch_f);
  if (!is_integer(chi)) {
    throw ConsistencyError("χ(" + ch_e.to_string() + ", " + ch_f.to_string() + ") = " + to_string(chi) +
                           " on " + std::string(model.name()) + " is not an integer");
  }
  return chi.get_num();
}

GradedClass ch_tautological_dual(const VarietyModel& gm) {
  if (gm.kind() != VarietyKind::GM3fold && gm.kind() != VarietyKind::GM4fold) {
    throw InputError("U^v is only defined on GM threefolds and fourfolds");
  }
  return ch_from_chern(gm, 2, gm.hyperplane(), gm.named("sigma11"));
}

std::string_view to_string(SetupKind kind) {
  switch (kind) {
    case SetupKind::QuarticDoubleSolid: return "qds";
    case SetupKind::GM3: return "gm3";
    case SetupKind::GM4: return "gm4";
  }
  return "?";
}

SetupKind parse_setup_kind(std::string_view name) {
  if (name == "qds") return SetupKind::QuarticDoubleSolid;
  if (name == "gm3") return SetupKind::GM3;
  if (name == "gm4") return SetupKind::GM4;
  throw InputError("unknown setup kind: " + std::string(name));
}

namespace {

std::string gram_suffix(const IntMatrix& g) {
  std::ostringstream out;
  out << '(';
  for (std::size_t r = 0; r < g.rows(); ++r) {
    if (r) out << ';';
    for (std::size_t c = 0; c < g.cols(); ++c) out << (c ? "," : "") << g(r, c).get_str();
  }
  out << ')';
  return out.str();
}

// K3 surface X as a divisor of class k·H on a Picard-rank-1 threefold Y:
// j_* sends a curve D to (H·D) l, a point to a point; j^* l = (l·[X]) pt.
void fill_k3_in_threefold(CoverSetup& s, long divisor_multiple) {
  const VarietyModel& x = s.source;
  const VarietyModel& y = s.target;
  const IntMatrix& gram = *x.picard_gram();
  s.pullback = RatMatrix(x.size(), y.size());
  s.pullback(0, 0) = 1;
  s.pullback(x.index_of("H"), y.index_of("H")) = 1;
  s.pullback(x.size() - 1, y.index_of("l")) = divisor_multiple;
  s.pushforward = RatMatrix(y.size(), x.size());
  s.pushforward(y.index_of("H"), 0) = divisor_multiple;
  for (std::size_t i = 0; i < gram.rows(); ++i) s.pushforward(y.index_of("l"), 1 + i) = Rational(gram(0, i));
  s.pushforward(y.size() - 1, x.size() - 1) = 1;
}

}  // namespace

CoverSetup make_qds_setup(std::optional<IntMatrix> k3_gram) {
  VarietyModel x = make_variety_model(VarietyKind::QuarticK3, std::move(k3_gram));
  VarietyModel y = make_variety_model(VarietyKind::QuarticDoubleSolid);
  CoverSetup s{.name = "qds" + (x.picard_gram()->rows() > 1 ? gram_suffix(*x.picard_gram()) : std::string()),
               .kind = SetupKind::QuarticDoubleSolid,
               .source = x,
               .target = y,
               .divisor_class = 2 * y.hyperplane(),
               .twist = 2,
               .pullback = {},
               .pushforward = {},
               .td_tj = inverse_todd_line_bundle(x, 2 * x.hyperplane()),
               .exceptional_collection = {{"O", y.unit()}, {"O(H)", ch_line_bundle(y, y.hyperplane())}},
               .target_basis = mu_basis(y),
               .source_basis = std::nullopt};
  fill_k3_in_threefold(s, 2);
  return s;
}

CoverSetup make_gm3_setup(std::optional<IntMatrix> k3_gram) {
  VarietyModel x = make_variety_model(VarietyKind::Degree10K3, std::move(k3_gram));
  VarietyModel y = make_variety_model(VarietyKind::GM3fold);
  CoverSetup s{.name = "gm3" + (x.picard_gram()->rows() > 1 ? gram_suffix(*x.picard_gram()) : std::string()),
               .kind = SetupKind::GM3,
               .source = x,
               .target = y,
               .divisor_class = y.hyperplane(),
               .twist = 1,
               .pullback = {},
               .pushforward = {},
               .td_tj = inverse_todd_line_bundle(x, x.hyperplane()),
               .exceptional_collection = {{"O", y.unit()}, {"U^v", ch_tautological_dual(y)}},
               .target_basis = kappa_basis(y),
               .source_basis = std::nullopt};
  fill_k3_in_threefold(s, 1);
  return s;
}

CoverSetup make_gm4_setup() {
  VarietyModel x = make_variety_model(VarietyKind::GM3fold);
  VarietyModel w = make_variety_model(VarietyKind::GM4fold);
  // td(T_j) = 1 - H/2 + H²/6 - 5/12 pt, with H² = 10 l on X
  GradedClass td_tj = x.from_coefficients({1, make_rational(-1, 2), make_rational(5, 3), make_rational(-5, 12)});
  CoverSetup s{.name = "gm4",
               .kind = SetupKind::GM4,
               .source = x,
               .target = w,
               .divisor_class = w.hyperplane(),
               .twist = 1,
               .pullback = RatMatrix(x.size(), w.size()),
               .pushforward = RatMatrix(w.size(), x.size()),
               .td_tj = td_tj,
               .exceptional_collection = {{"O", w.unit()}, {"U^v", ch_tautological_dual(w)}},
               .target_basis = lambda_basis(w),
               .source_basis = kappa_basis(x)};
  // j^*: 1, H, H², σ₂, l, pt  ->  1, H, 10 l, 6 l, pt, 0
  s.pullback(0, 0) = 1;
  s.pullback(1, 1) = 1;
  s.pullback(2, 2) = 10;
  s.pullback(2, 3) = 6;
  s.pullback(3, 4) = 1;
  // j_*: 1, H, l, pt  ->  H, H², l, pt
  s.pushforward(1, 0) = 1;
  s.pushforward(2, 1) = 1;
  s.pushforward(4, 2) = 1;
  s.pushforward(5, 3) = 1;
  return s;
}

CoverSetup make_setup(SetupKind kind, std::optional<IntMatrix> k3_gram) {
  switch (kind) {
    case SetupKind::QuarticDoubleSolid: return make_qds_setup(std::move(k3_gram));
    case SetupKind::GM3: return make_gm3_setup(std::move(k3_gram));
    case SetupKind::GM4:
      if (k3_gram) throw InputError("the gm4 setup takes no Gram matrix");
      return make_gm4_setup();
  }
  throw InputError("unknown setup kind");
}

GradedClass pullback(const CoverSetup& setup, const GradedClass& on_target) {
  if (!on_target.model().same_as(setup.target)) throw InputError("pullback: class is not on the target variety");
  return setup.source.from_coefficients(setup.pullback * on_target.coefficients());
}

GradedClass pushforward(const CoverSetup& setup, const GradedClass& on_source) {
  if (!on_source.model().same_as(setup.source)) throw InputError("pushforward: class is not on the source variety");
  return setup.target.from_coefficients(setup.pushforward * on_source.coefficients());
}

GradedClass divisor_pushforward(const CoverSetup& setup, const GradedClass& ch_f) {
  return pushforward(setup, multiply(setup.source, ch_f, setup.td_tj));
}

Rational adjoint_euler(const CoverSetup& setup, const GradedClass& ch_e_on_target, const GradedClass& ch_f_on_source) {
  return euler_pairing(setup.source, pullback(setup, ch_e_on_target), ch_f_on_source);
}

}  // namespace kul
