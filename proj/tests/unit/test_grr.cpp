#include "kul/error.hpp"
#include "kul/expr.hpp"
#include "kul/grr.hpp"
#include "support.hpp"

using namespace kul;
using testing::gram2;
using testing::q;

namespace {

std::vector<CoverSetup> all_setups() {
  return {make_qds_setup(), make_qds_setup(gram2(4, 1, -2)), make_gm3_setup(), make_gm3_setup(gram2(10, 7, 2)),
          make_gm3_setup(gram2(10, 5, 0)), make_gm3_setup(gram2(10, 9, 4)), make_gm4_setup()};
}

GradedClass basis_vector(const VarietyModel& m, std::size_t i) {
  RatVector c(m.size());
  c[i] = 1;
  return m.from_coefficients(c);
}

}  // namespace

TEST_SUITE("grr") {
  TEST_CASE("Chern characters of line bundles") {
    const VarietyModel k3 = make_variety_model(VarietyKind::QuarticK3);
    CHECK(ch_line_bundle(k3, k3.zero()) == k3.unit());
    CHECK(ch_line_bundle(k3, 2 * k3.hyperplane()) == k3.unit() + 2 * k3.hyperplane() + 8 * k3.point());
    const VarietyModel y = make_variety_model(VarietyKind::QuarticDoubleSolid);
    CHECK(ch_line_bundle(y, y.hyperplane()) ==
          y.unit() + y.hyperplane() + q(1, 2) * y.named("H^2") + q(1, 3) * y.point());
    CHECK_THROWS_AS(ch_line_bundle(y, y.point()), InputError);
    CHECK_THROWS_AS(ch_line_bundle(y, y.unit() + y.hyperplane()), InputError);
  }

  TEST_CASE("inverse Todd class of a line bundle inverts its Todd class") {
    for (const CoverSetup& s : all_setups()) {
      const VarietyModel& x = s.source;
      const GradedClass d = s.twist * x.hyperplane();
      // td(L) = D / (1 - e^{-D}) = 1 + D/2 + D²/12 - D⁴/720
      const RatVector coeffs{q(1), q(1, 2), q(1, 12), q(0), q(-1, 720)};
      const GradedClass td = power_series(x, d, coeffs);
      CHECK(multiply(x, td, inverse_todd_line_bundle(x, d)) == x.unit());
    }
  }

  TEST_CASE("Euler pairings on the quartic double solid") {
    const CoverSetup s = make_qds_setup();
    const VarietyModel& y = s.target;
    const GradedClass oh = parse_class(y, "O(H)");
    CHECK(euler_pairing(y, y.unit(), oh) == 4);
    const GradedClass j_oh = divisor_pushforward(s, parse_class(s.source, "O(H)"));
    CHECK(euler_pairing(y, oh, j_oh) == 2);
    CHECK(euler_pairing(y, y.unit(), j_oh) == 4);
    CHECK(adjoint_euler(s, oh, parse_class(s.source, "O(H)")) == 2);
  }

  TEST_CASE("Euler pairings in the GM threefold setup") {
    const CoverSetup s = make_gm3_setup();
    CHECK(euler_pairing(s.target, s.target.unit(), divisor_pushforward(s, s.source.unit())) == 2);
    CHECK(adjoint_euler(s, s.target.unit(), s.source.unit()) == 2);
    for (long x = 6; x <= 26; ++x) {
      const CoverSetup sx = make_gm3_setup(gram2(10, x, 2));
      CHECK(adjoint_euler(sx, ch_tautological_dual(sx.target), parse_class(sx.source, "O(L+H)")) == 7 + x);
    }
  }

  TEST_CASE("the tautological bundle is exceptional and orthogonal to O") {
    for (VarietyKind kind : {VarietyKind::GM3fold, VarietyKind::GM4fold}) {
      const VarietyModel m = make_variety_model(kind);
      const GradedClass u = ch_tautological_dual(m);
      CHECK(euler_pairing(m, u, u) == 1);
      CHECK(euler_pairing(m, m.unit(), u) == 5);
      CHECK(euler_pairing(m, u, m.unit()) == 0);
    }
    CHECK_THROWS_AS(ch_tautological_dual(make_variety_model(VarietyKind::P3)), InputError);
  }

  TEST_CASE("fractional Euler characteristics are an error, not rounded") {
    const VarietyModel y = make_variety_model(VarietyKind::QuarticDoubleSolid);
    CHECK(euler_pairing(y, y.unit(), q(1, 2) * y.point()) == q(1, 2));
    CHECK_THROWS_AS(euler_pairing_integral(y, y.unit(), q(1, 2) * y.point()), ConsistencyError);
  }

  TEST_CASE("pushforward of the structure sheaf follows the divisor sequence") {
    const CoverSetup qds = make_qds_setup();
    CHECK(divisor_pushforward(qds, qds.source.unit()) == qds.target.unit() - parse_class(qds.target, "O(-2H)"));
    const CoverSetup gm3 = make_gm3_setup();
    CHECK(divisor_pushforward(gm3, gm3.source.unit()) == gm3.target.unit() - parse_class(gm3.target, "O(-H)"));
    const CoverSetup gm4 = make_gm4_setup();
    CHECK(divisor_pushforward(gm4, gm4.source.unit()) == gm4.target.unit() - parse_class(gm4.target, "O(-H)"));
    for (const CoverSetup& s : all_setups()) CHECK(divisor_pushforward(s, s.source.point()) == s.target.point());
  }

  TEST_CASE("setup invariants: td_Tj, projection formula, adjunction") {
    for (const CoverSetup& s : all_setups()) {
      CAPTURE(s.name);
      CHECK(s.td_tj[0] == 1);
      for (std::size_t i = 0; i < s.source.size(); ++i) {
        const GradedClass a = basis_vector(s.source, i);
        for (std::size_t j = 0; j < s.target.size(); ++j) {
          const GradedClass b = basis_vector(s.target, j);
          CHECK(integrate(s.source, multiply(s.source, a, pullback(s, b))) ==
                integrate(s.target, multiply(s.target, pushforward(s, a), b)));
        }
        for (const ExceptionalObject& e : s.exceptional_collection) {
          CHECK(euler_pairing(s.target, e.ch, divisor_pushforward(s, a)) == adjoint_euler(s, e.ch, a));
        }
      }
    }
  }

  TEST_CASE("the GM4 relative Todd class equals the line-bundle series") {
    const CoverSetup s = make_gm4_setup();
    CHECK(s.td_tj == inverse_todd_line_bundle(s.source, s.source.hyperplane()));
    CHECK(s.td_tj == s.source.unit() - q(1, 2) * s.source.hyperplane() + q(1, 6) * s.source.named("H^2") -
                         q(5, 12) * s.source.point());
  }

  TEST_CASE("twisting preserves chi(L, L)") {
    for (const CoverSetup& s : all_setups()) {
      for (const VarietyModel* m : {&s.source, &s.target}) {
        for (long k = -3; k <= 3; ++k) {
          const GradedClass l = ch_line_bundle(*m, k * m->hyperplane());
          CHECK(euler_pairing(*m, l, l) == euler_pairing(*m, m->unit(), m->unit()));
        }
      }
    }
  }

  TEST_CASE("exceptional collections are exceptional") {
    for (const CoverSetup& s : all_setups()) {
      const auto& c = s.exceptional_collection;
      for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(euler_pairing(s.target, c[i].ch, c[i].ch) == 1);
        for (std::size_t j = 0; j < i; ++j) CHECK(euler_pairing(s.target, c[i].ch, c[j].ch) == 0);
      }
    }
  }

  TEST_CASE("setup lookup by name") {
    CHECK(parse_setup_kind("gm4") == SetupKind::GM4);
    CHECK_THROWS_AS(parse_setup_kind("cubic"), InputError);
    CHECK_THROWS_AS(make_setup(SetupKind::GM4, gram2(10, 6, 2)), InputError);
    CHECK(make_setup(SetupKind::GM3, gram2(10, 6, 2)).name == "gm3(10,6;6,2)");
  }
}
