#include "kul/replay.hpp"

#include <functional>
#include <regex>
#include <sstream>

#include "kul/error.hpp"
#include "kul/expr.hpp"
#include "kul/k3picard.hpp"

namespace kul {

namespace {

struct Outcome {
  std::string expected;
  std::string computed;
};

struct CheckDef {
  std::string id;
  std::string description;
  std::function<Outcome()> run;
};

std::string str(const Integer& z) { return z.get_str(); }
std::string str(const Rational& q) { return to_string(q); }
std::string str(const KnumClass& v) { return to_string(v); }
std::string str(const IntMatrix& m) { return to_json(m).dump(); }
std::string str(bool b) { return b ? "true" : "false"; }

KnumClass mu(long a, long b) { return KnumClass{"mu", {a, b}}; }
KnumClass kappa(long p, long q) { return KnumClass{"kappa", {p, q}}; }
KnumClass lambda(long p, long q) { return KnumClass{"lambda", {p, q}}; }

IntMatrix gram2(long a, long b, long c) { return IntMatrix{{a, b}, {b, c}}; }

Outcome phi_of(const CoverSetup& setup, const std::string& expr, const KnumClass& expected) {
  return {str(expected), str(express_in_basis(setup.target_basis, phi_ch(setup, parse_class(setup.source, expr))))};
}

Outcome chi_of(const VarietyModel& y, const GradedClass& e, const GradedClass& f, long expected) {
  return {std::to_string(expected), str(euler_pairing(y, e, f))};
}

std::vector<CheckDef> qds_checks() {
  std::vector<CheckDef> out;
  out.push_back({"qds.gram.mu", "Euler matrix of mu recomputed by HRR", [] {
                   const CoverSetup s = make_qds_setup();
                   return Outcome{str(IntMatrix{{-1, -1}, {-1, -2}}), str(recompute_gram(s.target_basis))};
                 }});
  out.push_back({"qds.chi.O.O(H)", "chi(O_Y, O_Y(H))", [] {
                   const VarietyModel y = make_variety_model(VarietyKind::QuarticDoubleSolid);
                   return chi_of(y, y.unit(), parse_class(y, "O(H)"), 4);
                 }});
  out.push_back({"qds.chi.O(H).jO_X(H)", "chi(O_Y(H), j_*O_X(H))", [] {
                   const CoverSetup s = make_qds_setup();
                   return chi_of(s.target, parse_class(s.target, "O(H)"),
                                 divisor_pushforward(s, parse_class(s.source, "O(H)")), 2);
                 }});
  out.push_back({"qds.chi.O.jO_X(H)", "chi(O_Y, j_*O_X(H))", [] {
                   const CoverSetup s = make_qds_setup();
                   return chi_of(s.target, s.target.unit(), divisor_pushforward(s, parse_class(s.source, "O(H)")), 4);
                 }});
  out.push_back({"qds.adjoint.O(H).O_X(H)", "chi(O_Y(H), j_*O_X(H)) computed on X", [] {
                   const CoverSetup s = make_qds_setup();
                   return Outcome{"2", str(adjoint_euler(s, parse_class(s.target, "O(H)"), parse_class(s.source, "O(H)")))};
                 }});
  const std::vector<std::tuple<std::string, std::string, KnumClass>> phis{
      {"O_x", "O_x", mu(2, -1)}, {"O_X(-H)", "O(-H)", mu(2, 0)}, {"O_X", "O", mu(2, -2)},
      {"O_H", "O_H", mu(0, -2)}, {"O_L", "O_L", mu(3, -2)}};
  for (const auto& [label, expr, expected] : phis) {
    out.push_back({"qds.phi." + label, "Phi_*[" + label + "] on the quartic K3 with a line",
                   [expr, expected] { return phi_of(make_qds_setup(gram2(4, 1, -2)), expr, expected); }});
  }
  // K_x sits in K_x -> O^3 -> I_{x/Y}(H): the class of the mutation, up to shift.
  out.push_back({"qds.Kx.chi", "chi(O_Y, I_{x/Y}(H))", [] {
                   const VarietyModel y = make_variety_model(VarietyKind::QuarticDoubleSolid);
                   return chi_of(y, y.unit(), parse_class(y, "O(H) - O_x"), 3);
                 }});
  out.push_back({"qds.Kx.ch", "ch(K_x)", [] {
                   const VarietyModel y = make_variety_model(VarietyKind::QuarticDoubleSolid);
                   const GradedClass k = -mutate_class(y, parse_class(y, "O(H) - O_x"), y.unit());
                   const GradedClass expected =
                       2 * y.unit() - y.hyperplane() - make_rational(1, 2) * y.named("H^2") + make_rational(2, 3) * y.point();
                   return Outcome{expected.to_string(), k.to_string()};
                 }});
  out.push_back({"qds.Kx.class", "[K_x] in the mu basis", [] {
                   const CoverSetup s = make_qds_setup();
                   const VarietyModel& y = s.target;
                   const GradedClass k = -mutate_class(y, parse_class(y, "O(H) - O_x"), y.unit());
                   return Outcome{str(mu(2, -1)), str(express_in_basis(s.target_basis, k))};
                 }});
  out.push_back({"qds.Kx.euler", "chi(K_x, K_x)", [] {
                   const CoverSetup s = make_qds_setup();
                   return Outcome{"-2", str(euler_form(s.target_basis, mu(2, -1), mu(2, -1)))};
                 }});
  out.push_back({"qds.image.rank1", "image of Phi_* for Picard rank 1 is {a even}", [] {
                   const ImageLattice img = image_lattice(phi_matrix(make_qds_setup()));
                   return Outcome{"index 2, mu(1,0) excluded",
                                  "index " + str(img.index) + ", mu(1,0) " + (in_image(img, mu(1, 0)) ? "included" : "excluded")};
                 }});
  out.push_back({"qds.image.line", "image of Phi_* on the quartic K3 with a line", [] {
                   return Outcome{"1", str(image_lattice(phi_matrix(make_qds_setup(gram2(4, 1, -2)))).index)};
                 }});
  out.push_back({"qds.lift.closed-form", "explicit lifts for coprime |a|,|b| <= 12", [] {
                   std::size_t count = 0, bad = 0;
                   for (long a = -12; a <= 12; ++a)
                     for (long b = -12; b <= 12; ++b) {
                       if (gcd(Integer(a), Integer(b)) != 1) continue;
                       ++count;
                       const LiftCertificate c = closed_form_lift_qds(a, b);
                       if (!c.nonneg_ok || !c.wall_ok || c.w_square != c.formula_w_square) ++bad;
                     }
                   return Outcome{std::to_string(count) + " ok", std::to_string(count - bad) + " ok"};
                 }});
  out.push_back({"qds.lift.odd-rank1", "no lift of a odd for Picard rank 1, |a|,|b| <= 12", [] {
                   const ImageLattice img = image_lattice(phi_matrix(make_qds_setup()));
                   std::size_t hits = 0;
                   for (long a = -11; a <= 11; a += 2)
                     for (long b = -12; b <= 12; ++b) hits += in_image(img, mu(a, b));
                   return Outcome{"0", std::to_string(hits)};
                 }});
  out.push_back({"qds.wall.mu(0,1)", "wall inequality for mu(0,1), w^2 = 0", [] {
                   return Outcome{"true", str(check_wall_inequality(make_qds_setup().target_basis, mu(0, 1), 0))};
                 }});
  out.push_back({"qds.dim.mu(0,1)", "expected dimension, Enriques", [] {
                   return Outcome{"3", str(expected_dimension(make_qds_setup().target_basis, mu(0, 1), ModuliKind::Enriques))};
                 }});
  out.push_back({"qds.lattice.4-1-1--2", "quartic K3 with a line", [] {
                   return Outcome{"true", str(validate_lattice(gram2(4, 1, -2), LatticeFamily::QuarticLine).verdict)};
                 }});
  return out;
}

std::vector<CheckDef> gm3_checks() {
  std::vector<CheckDef> out;
  out.push_back({"gm3.gram.kappa", "Euler matrix of kappa recomputed by HRR", [] {
                   const CoverSetup s = make_gm3_setup();
                   return Outcome{str(IntMatrix{{-1, 0}, {0, -1}}), str(recompute_gram(s.target_basis))};
                 }});
  out.push_back({"gm3.chi.O.O_S", "chi(O_Y, j_*O_S)", [] {
                   const CoverSetup s = make_gm3_setup();
                   return chi_of(s.target, s.target.unit(), divisor_pushforward(s, s.source.unit()), 2);
                 }});
  out.push_back({"gm3.trace.O_S(-H)", "chi values met while mutating j_*O_S", [] {
                   const CoverSetup s = make_gm3_setup();
                   const PhiTrace t = phi_trace(s, parse_class(s.source, "O(-H)"));
                   std::string computed;
                   for (const auto& step : t.steps) computed += (computed.empty() ? "" : ", ") + step.object + ":" + str(step.chi);
                   return Outcome{"U^v:5, O:-23", computed};
                 }});
  out.push_back({"gm3.ch.O_S(-H)", "ch(Phi(O_S(-H)))", [] {
                   const CoverSetup s = make_gm3_setup();
                   const VarietyModel& y = s.target;
                   const GradedClass expected =
                       13 * y.unit() - 4 * y.hyperplane() - y.named("H^2") + make_rational(10, 3) * y.point();
                   return Outcome{expected.to_string(), phi_ch(s, parse_class(s.source, "O(-H)")).to_string()};
                 }});
  const std::vector<std::tuple<std::string, std::string, KnumClass>> phis{
      {"O_S(-H)", "O(-H)", kappa(5, 4)}, {"O_S", "O", kappa(0, 4)}, {"O_x", "O_x", kappa(1, 2)}};
  for (const auto& [label, expr, expected] : phis) {
    out.push_back({"gm3.phi." + label, "Phi_*[" + label + "]",
                   [expr, expected] { return phi_of(make_gm3_setup(), expr, expected); }});
  }
  for (long x = 6; x <= 26; ++x) {
    const std::string g = "10-" + std::to_string(x) + "-" + std::to_string(x) + "-2";
    out.push_back({"gm3.adjoint.Uv.O_S(L+H)." + g, "chi(U^v, j_*O_S(L+H)) = 7 + x", [x] {
                     const CoverSetup s = make_gm3_setup(gram2(10, x, 2));
                     return Outcome{std::to_string(7 + x),
                                    str(adjoint_euler(s, parse_class(s.target, "U^v"), parse_class(s.source, "O(L+H)")))};
                   }});
    out.push_back({"gm3.phi.O_S(L)." + g, "Phi_*[O_S(L)] = kappa(1, 6+x)",
                   [x] { return phi_of(make_gm3_setup(gram2(10, x, 2)), "O(L)", kappa(1, 6 + x)); }});
  }
  out.push_back({"gm3.phi.O_S(L).10-5-5-0", "Phi_*[O_S(L)]",
                 [] { return phi_of(make_gm3_setup(gram2(10, 5, 0)), "O(L)", kappa(0, 9)); }});
  out.push_back({"gm3.phi.O_S(L).10-9-9-4", "Phi_*[O_S(L)]",
                 [] { return phi_of(make_gm3_setup(gram2(10, 9, 4)), "O(L)", kappa(2, 17)); }});
  out.push_back({"gm3.phi.O_S(L).10-7-7-4", "Phi_*[O_S(L)]",
                 [] { return phi_of(make_gm3_setup(gram2(10, 7, 4)), "O(L)", kappa(2, 15)); }});
  out.push_back({"gm3.lift.closed-form", "explicit lifts for covered coprime |p|,|q| <= 12", [] {
                   std::size_t count = 0, bad = 0;
                   for (long p = -12; p <= 12; ++p)
                     for (long q = -12; q <= 12; ++q) {
                       if (gcd(Integer(p), Integer(q)) != 1 || (p == -1 && q == 0)) continue;
                       ++count;
                       const LiftCertificate c = closed_form_lift_gm3(p, q);
                       if (!c.nonneg_ok || !c.wall_ok || c.w_square != c.formula_w_square) ++bad;
                     }
                   return Outcome{std::to_string(count) + " ok", std::to_string(count - bad) + " ok"};
                 }});
  const std::vector<std::tuple<long, IntMatrix>> specials{
      {0, gram2(10, 5, 0)}, {2, gram2(10, 9, 4)}, {-2, gram2(10, 7, 4)}};
  for (const auto& [p, g] : specials) {
    out.push_back({"gm3.lift.kappa(" + std::to_string(p) + ",1)", "square -2 lift on the special lattice", [p, g] {
                     const LiftCertificate c = closed_form_lift_gm3(p, 1);
                     return Outcome{str(g) + " w^2=-2", str(c.gram) + " w^2=" + str(c.w_square)};
                   }});
  }
  for (long x = 6; x <= 26; ++x) {
    out.push_back({"gm3.lattice.10-" + std::to_string(x) + "-" + std::to_string(x) + "-2", "lattice is admissible",
                   [x] { return Outcome{"true", str(validate_lattice(gram2(10, x, 2), LatticeFamily::GM_x2).verdict)}; }});
  }
  out.push_back({"gm3.lattice.10-5-5-0", "lattice is admissible",
                 [] { return Outcome{"true", str(validate_lattice(gram2(10, 5, 0), LatticeFamily::GM_50).verdict)}; }});
  out.push_back({"gm3.lattice.10-7-7-4", "lattice is admissible",
                 [] { return Outcome{"true", str(validate_lattice(gram2(10, 7, 4), LatticeFamily::GM_x4).verdict)}; }});
  out.push_back({"gm3.lattice.10-9-9-4", "lattice is admissible",
                 [] { return Outcome{"true", str(validate_lattice(gram2(10, 9, 4), LatticeFamily::GM_x4).verdict)}; }});
  out.push_back({"gm3.lattice.10-5-5-2", "x = 5 is excluded",
                 [] { return Outcome{"false", str(validate_lattice(gram2(10, 5, 2), LatticeFamily::GM_x2).verdict)}; }});
  out.push_back({"gm3.dim.kappa(1,1)", "expected dimension, Enriques", [] {
                   return Outcome{"3",
                                  str(expected_dimension(make_gm3_setup().target_basis, kappa(1, 1), ModuliKind::Enriques))};
                 }});
  return out;
}

std::vector<CheckDef> gm4_checks() {
  std::vector<CheckDef> out;
  out.push_back({"gm4.td.X", "Todd class of the GM threefold", [] {
                   const VarietyModel x = make_variety_model(VarietyKind::GM3fold);
                   const GradedClass expected = x.unit() + make_rational(1, 2) * x.hyperplane() +
                                                make_rational(17, 60) * x.named("H^2") + x.point();
                   return Outcome{expected.to_string(), x.todd().to_string()};
                 }});
  out.push_back({"gm4.td.W", "Todd class of the GM fourfold", [] {
                   const VarietyModel w = make_variety_model(VarietyKind::GM4fold);
                   const GradedClass expected = w.unit() + w.hyperplane() + make_rational(2, 3) * w.named("H^2") -
                                                make_rational(1, 12) * w.named("sigma2") +
                                                make_rational(17, 60) * w.named("H^3") + w.point();
                   return Outcome{expected.to_string(), w.todd().to_string()};
                 }});
  out.push_back({"gm4.td.Tj", "relative Todd class agrees with td(O_X(H))^-1", [] {
                   const CoverSetup s = make_gm4_setup();
                   return Outcome{s.td_tj.to_string(), inverse_todd_line_bundle(s.source, s.source.hyperplane()).to_string()};
                 }});
  out.push_back({"gm4.ch.kappa1", "ch of the image of kappa1", [] {
                   const CoverSetup s = make_gm4_setup();
                   const VarietyModel& w = s.target;
                   const GradedClass expected = -2 * w.unit() + w.named("sigma11") - make_rational(1, 2) * w.point();
                   return Outcome{expected.to_string(), phi_ch(s, parse_class(s.source, "kappa(1,0)")).to_string()};
                 }});
  out.push_back({"gm4.ch.kappa2", "ch of the image of kappa2", [] {
                   const CoverSetup s = make_gm4_setup();
                   const VarietyModel& w = s.target;
                   const GradedClass expected =
                       -4 * w.unit() + 2 * w.hyperplane() - make_rational(1, 6) * w.named("H^3");
                   return Outcome{expected.to_string(), phi_ch(s, parse_class(s.source, "kappa(0,1)")).to_string()};
                 }});
  out.push_back({"gm4.phi.kappa1", "Phi_* kappa1", [] { return phi_of(make_gm4_setup(), "kappa(1,0)", lambda(1, 0)); }});
  out.push_back({"gm4.phi.kappa2", "Phi_* kappa2", [] { return phi_of(make_gm4_setup(), "kappa(0,1)", lambda(0, 1)); }});
  out.push_back({"gm4.gram.lambda", "Euler matrix of lambda recomputed by HRR", [] {
                   return Outcome{str(IntMatrix{{-2, 0}, {0, -2}}), str(recompute_gram(make_gm4_setup().target_basis))};
                 }});
  out.push_back({"gm4.dim.lambda(1,0)", "expected dimension, CY2", [] {
                   return Outcome{"4", str(expected_dimension(make_gm4_setup().target_basis, lambda(1, 0), ModuliKind::CY2))};
                 }});
  return out;
}

std::vector<CheckDef> all_checks() {
  std::vector<CheckDef> out = qds_checks();
  for (auto* more : {gm3_checks, gm4_checks}) {
    auto v = more();
    std::move(v.begin(), v.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace

std::size_t VerificationReport::passed() const {
  std::size_t n = 0;
  for (const Check& c : checks) n += c.pass;
  return n;
}

VerificationReport verify_reference_values(const std::string& filter) {
  std::regex pattern;
  try {
    pattern = std::regex(filter);
  } catch (const std::regex_error& e) {
    throw InputError("invalid filter pattern '" + filter + "': " + e.what());
  }
  VerificationReport report;
  for (const CheckDef& def : all_checks()) {
    if (!filter.empty() && !std::regex_search(def.id, pattern)) continue;
    Check c{def.id, def.description, {}, {}, false};
    try {
      Outcome o = def.run();
      c.expected = std::move(o.expected);
      c.computed = std::move(o.computed);
      c.pass = c.expected == c.computed;
    } catch (const std::exception& e) {
      c.computed = std::string("error: ") + e.what();
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

std::vector<std::string> reference_check_ids() {
  std::vector<std::string> ids;
  for (const CheckDef& def : all_checks()) ids.push_back(def.id);
  return ids;
}

Json to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const Check& c : report.checks) {
    checks.push_back(Json{{"check_id", c.id},
                          {"description", c.description},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"pass", c.pass}});
  }
  return Json{{"checks", checks},
              {"summary", Json{{"total", report.checks.size()}, {"passed", report.passed()}, {"failed", report.failed()}}}};
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const Check& c : report.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << c.description;
    if (!c.pass) out << "\n     expected: " << c.expected << "\n     computed: " << c.computed;
    out << '\n';
  }
  out << report.passed() << "/" << report.checks.size() << " checks passed\n";
  return out.str();
}

}  // namespace kul
