#include "kul/error.hpp"
#include "kul/expr.hpp"
#include "kul/functor.hpp"
#include "../oracles/generators.hpp"
#include "support.hpp"

using namespace kul;
using testing::gram2;
using testing::iv;

namespace {

KnumClass mu(long a, long b) { return KnumClass{"mu", iv({a, b})}; }
KnumClass kappa(long p, long q) { return KnumClass{"kappa", iv({p, q})}; }

KnumClass phi_expr(const CoverSetup& s, const char* expr) {
  return express_in_basis(s.target_basis, phi_ch(s, parse_class(s.source, expr)));
}

}  // namespace

TEST_SUITE("functor") {
  TEST_CASE("mutation of a class through an exceptional object") {
    const VarietyModel y = make_variety_model(VarietyKind::GM3fold);
    const GradedClass u = ch_tautological_dual(y);
    CHECK(mutate_class(y, u, u).is_zero());
    const CoverSetup s = make_gm3_setup(gram2(10, 8, 2));
    const GradedClass f = divisor_pushforward(s, parse_class(s.source, "O(L+H)"));
    const GradedClass us = ch_tautological_dual(s.target);
    const GradedClass m = mutate_class(s.target, f, us);
    // U^v is exceptional, so the mutation lands in its right orthogonal
    CHECK(euler_pairing(s.target, us, m) == 0);
    CHECK(m - f == Rational(-euler_pairing(s.target, us, f)) * us);
    const VarietyModel qds = make_variety_model(VarietyKind::QuarticDoubleSolid);
    const GradedClass ix_h = parse_class(qds, "O(H) - O_x");
    CHECK(mutate_class(qds, ix_h, qds.unit()) == ix_h - 3 * qds.unit());
  }

  TEST_CASE("quartic double solid: images of standard sheaves") {
    const CoverSetup s = make_qds_setup(gram2(4, 1, -2));
    CHECK(phi_expr(s, "O_x") == mu(2, -1));
    CHECK(phi_expr(s, "O(-H)") == mu(2, 0));
    CHECK(phi_expr(s, "O") == mu(2, -2));
    CHECK(phi_expr(s, "O_H") == mu(0, -2));
    CHECK(phi_expr(s, "O_L") == mu(3, -2));
    CHECK(phi_star(s, MukaiVector::from_coordinates(*s.source.picard_gram(), iv({0, 0, 1, 1}))) == mu(3, -2));
  }

  TEST_CASE("GM threefold: images of standard sheaves and the mutation trace") {
    const CoverSetup s = make_gm3_setup();
    CHECK(phi_expr(s, "O(-H)") == kappa(5, 4));
    CHECK(phi_expr(s, "O") == kappa(0, 4));
    CHECK(phi_expr(s, "O_x") == kappa(1, 2));
    const PhiTrace t = phi_trace(s, parse_class(s.source, "O(-H)"));
    REQUIRE(t.steps.size() == 2);
    const VarietyModel& y = s.target;
    CHECK(t.steps[0].object == "U^v");
    CHECK(t.steps[1].object == "O");
    CHECK(t.twisted == parse_class(s.source, "O"));
    GradedClass expected = t.pushed;
    for (const MutationStep& step : t.steps) {
      const GradedClass e = step.object == "O" ? y.unit() : ch_tautological_dual(y);
      CHECK(Rational(step.chi) == euler_pairing(y, e, expected));
      expected = mutate_class(y, expected, e);
      CHECK(step.result == expected);
    }
    CHECK(euler_pairing(y, y.unit(), t.result) == 0);
    CHECK(euler_pairing(y, ch_tautological_dual(y), t.result) == 0);
    CHECK(t.result == 13 * y.unit() - 4 * y.hyperplane() - y.named("H^2") + testing::q(10, 3) * y.point());
  }

  TEST_CASE("GM fourfold: kappa maps to lambda") {
    const CoverSetup s = make_gm4_setup();
    CHECK(phi_star(s, KnumClass{"kappa", iv({1, 0})}) == KnumClass{"lambda", iv({1, 0})});
    CHECK(phi_star(s, KnumClass{"kappa", iv({0, 1})}) == KnumClass{"lambda", iv({0, 1})});
    const VarietyModel& w = s.target;
    CHECK(phi_ch(s, parse_class(s.source, "kappa(1,0)")) ==
          -2 * w.unit() + w.named("sigma11") - testing::q(1, 2) * w.point());
    CHECK(phi_ch(s, parse_class(s.source, "kappa(0,1)")) ==
          -4 * w.unit() + 2 * w.hyperplane() - testing::q(1, 6) * w.named("H^3"));
    CHECK_THROWS_AS(phi_star(s, KnumClass{"mu", iv({1, 0})}), InputError);
    CHECK_THROWS_AS(phi_star(s, MukaiVector::from_coordinates(gram2(4, 1, -2), iv({1, 0, 0, 0}))), InputError);
  }

  TEST_CASE("matrix on a custom basis") {
    const CoverSetup s = make_qds_setup();
    const IntMatrix basis{{1, 1, 0}, {0, -1, 0}, {1, 3, 1}};  // columns O_X, O_X(-H), O_x
    const PhiMap m = phi_matrix(s, basis, {"O_X", "O_X(-H)", "O_x"});
    CHECK(m.matrix == IntMatrix{{2, 2, 2}, {-2, 0, -1}});
    CHECK(phi_matrix(s).apply(iv({0, 0, 0})) == mu(0, 0));
    CHECK(phi_star_coords(s, iv({0, 0, 0})) == mu(0, 0));
  }

  TEST_CASE("pipeline and matrix agree and are linear on random vectors") {
    oracle::Gen gen(7);
    for (const CoverSetup& s : {make_qds_setup(), make_qds_setup(gram2(4, 1, -2)), make_gm3_setup(),
                                make_gm3_setup(gram2(10, 11, 2)), make_gm4_setup()}) {
      CAPTURE(s.name);
      const PhiMap m = phi_matrix(s);
      const std::size_t n = source_rank(s);
      for (int i = 0; i < 500; ++i) {
        const IntVector a = gen.vector(n, 50), b = gen.vector(n, 50);
        IntVector sum(n), neg(n);
        for (std::size_t k = 0; k < n; ++k) {
          sum[k] = a[k] + b[k];
          neg[k] = -a[k];
        }
        const KnumClass pa = phi_star_coords(s, a), pb = phi_star_coords(s, b);
        CHECK(pa == m.apply(a));
        IntVector added(pa.coords.size());
        for (std::size_t k = 0; k < added.size(); ++k) added[k] = pa.coords[k] + pb.coords[k];
        CHECK(phi_star_coords(s, sum).coords == added);
        IntVector negated = pa.coords;
        for (Integer& z : negated) z = -z;
        CHECK(phi_star_coords(s, neg).coords == negated);
      }
    }
  }

  TEST_CASE("image lattices") {
    const ImageLattice rank1 = image_lattice(phi_matrix(make_qds_setup()));
    CHECK(rank1.index == 2);
    CHECK_FALSE(in_image(rank1, mu(1, 0)));
    CHECK(in_image(rank1, mu(0, 0)));
    for (long a = -12; a <= 12; ++a)
      for (long b = -12; b <= 12; ++b) CHECK(in_image(rank1, mu(a, b)) == (a % 2 == 0));
    const ImageLattice line = image_lattice(phi_matrix(make_qds_setup(gram2(4, 1, -2))));
    CHECK(line.index == 1);
    CHECK(in_image(line, mu(1, 0)));
    CHECK_THROWS_AS(in_image(line, kappa(1, 0)), InputError);
    CHECK(image_lattice(phi_matrix(make_gm4_setup())).index == 1);
  }

  TEST_CASE("image lattice does not depend on redundant generators") {
    const CoverSetup s = make_qds_setup(gram2(4, 1, -2));
    const IntMatrix redundant{{1, 0, 0, 0, 1, 2}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, -3}, {0, 0, 0, 1, 1, 1}};
    const PhiMap m = phi_matrix(s, redundant);
    const ImageLattice a = image_lattice(phi_matrix(s));
    CHECK(column_hermite(m.matrix).h == a.generators);
  }

  TEST_CASE("preimages") {
    const PhiMap m = phi_matrix(make_qds_setup(gram2(4, 1, -2)));
    for (long a = -5; a <= 5; ++a)
      for (long b = -5; b <= 5; ++b) {
        const auto x = preimage(m, mu(a, b));
        REQUIRE(x);
        CHECK(m.apply(*x) == mu(a, b));
      }
    CHECK_FALSE(preimage(phi_matrix(make_qds_setup()), mu(1, 0)));
  }

  TEST_CASE("kernel lattices") {
    const PhiMap rank1 = phi_matrix(make_qds_setup());
    const KernelLattice k1 = kernel_lattice(rank1);
    CHECK(k1.basis.cols() == 1);
    const PhiMap line = phi_matrix(make_qds_setup(gram2(4, 1, -2)));
    const KernelLattice k2 = kernel_lattice(line);
    CHECK(k2.basis.cols() == 2);
    CHECK(k2.negative_definite);
    const KernelLattice k4 = kernel_lattice(phi_matrix(make_gm4_setup()));
    CHECK(k4.basis.cols() == 0);
    CHECK_FALSE(k4.negative_definite);
    for (const PhiMap* m : {&rank1, &line}) {
      const KernelLattice k = kernel_lattice(*m);
      // rank-nullity against an independent row reduction
      CHECK(k.basis.cols() == m->matrix.cols() - rref(to_rational(m->matrix)).pivots.size());
      for (std::size_t j = 0; j < k.basis.cols(); ++j) {
        CHECK(m->apply(k.basis.column(j)).coords == IntVector(2));
      }
      // saturated: the kernel basis extends to a unimodular matrix, so its
      // maximal minors have gcd 1
      if (k.basis.cols() == 1) CHECK(gcd(k.basis.column(0)) == 1);
    }
    // rank-1 kernel vector (-2, H, -2) up to sign, square -4
    const IntVector v = k1.basis.column(0);
    CHECK((v == iv({-2, 1, -2}) || v == iv({2, -1, 2})));
    CHECK(k1.gram == IntMatrix{{-4}});
  }
}
