#include <algorithm>
#include <numeric>

#include "kul/error.hpp"
#include "kul/lift.hpp"
#include "../oracles/scan.hpp"
#include "support.hpp"

using namespace kul;
using testing::gram2;
using testing::iv;

namespace {

KnumClass mu(long a, long b) { return KnumClass{"mu", iv({a, b})}; }
KnumClass kappa(long p, long q) { return KnumClass{"kappa", iv({p, q})}; }

// Φ_* on the quartic K3 with a line in Mukai coordinates (r, H, L, s),
// assembled by hand from the images of I_x, O_H + 2 O_x, O_L - O_x and O_x.
const IntMatrix& qds_line_matrix() {
  static const IntMatrix m{{0, 4, 1, 2}, {-1, -4, -1, -1}};
  return m;
}

Integer mukai_square(const IntMatrix& gram, const IntVector& w) {
  const Integer c = w[1] * w[1] * gram(0, 0) + 2 * w[1] * w[2] * gram(0, 1) + w[2] * w[2] * gram(1, 1);
  return c - 2 * w[0] * w[3];
}

Integer max_abs(const IntVector& v) {
  Integer m = 0;
  for (const Integer& z : v) m = std::max<Integer>(m, abs(z));
  return m;
}

void check_certificate(const LiftCertificate& c) {
  CAPTURE(to_string(c.v));
  CHECK(phi_star(certificate_setup(c), c.w) == c.lifted);
  CHECK(mukai_pairing(c.w, c.w) == c.w_square);
  CHECK(c.w_square == c.formula_w_square);
  CHECK(c.w_square >= -2);
  CHECK(c.nonneg_ok);
  CHECK(c.wall_ok);
  CHECK(check_wall_inequality(certificate_setup(c).target_basis, c.lifted, c.w_square));
  CHECK(std::find(c.applicable_branches.begin(), c.applicable_branches.end(), c.branch) !=
        c.applicable_branches.end());
  IntVector scaled = c.v_primitive.coords;
  for (Integer& z : scaled) z *= c.multiplicity;
  CHECK(scaled == c.v.coords);
  CHECK(gcd(c.v_primitive.coords) == 1);
}

}  // namespace

TEST_SUITE("lift") {
  TEST_CASE("quartic double solid examples") {
    const LiftCertificate a = closed_form_lift_qds(2, 0);
    CHECK(a.w.coordinates() == iv({-1, 0, 0, 1}));  // O_x - I_x
    CHECK(a.w_square == 2);
    CHECK(a.lifted == mu(2, 0));
    CHECK(a.multiplicity == 2);
    check_certificate(a);

    const LiftCertificate b = closed_form_lift_qds(0, 1);
    CHECK(b.w.coordinates() == iv({-1, 0, 0, 0}));  // -I_x
    CHECK(b.w_square == 0);
    check_certificate(b);

    const LiftCertificate c = closed_form_lift_qds(1, -1);
    CHECK(c.w.coordinates() == iv({0, 0, 1, 0}));  // O_L - O_x
    CHECK(c.w_square == -2);
    check_certificate(c);

    const LiftCertificate n = closed_form_lift_qds(-3, -2);
    CHECK(n.w == -closed_form_lift_qds(3, 2).w);
    CHECK(n.branch.rfind("negated/", 0) == 0);
  }

  TEST_CASE("GM threefold examples") {
    const LiftCertificate a = closed_form_lift_gm3(1, 1);
    CHECK(a.x == 7);
    CHECK(a.gram == gram2(10, 7, 2));
    CHECK(a.w_square + 2 == 0);
    check_certificate(a);

    CHECK(closed_form_lift_gm3(0, 1).gram == gram2(10, 5, 0));
    CHECK(closed_form_lift_gm3(2, 1).gram == gram2(10, 9, 4));
    CHECK(closed_form_lift_gm3(-2, 1).gram == gram2(10, 7, 4));
    CHECK(closed_form_lift_gm3(4, 1).gram == gram2(10, 9, 2));
    for (const auto& [p, q] : {std::pair{0L, 1L}, {2L, 1L}, {-2L, 1L}, {4L, 1L}, {3L, 5L}, {4L, 7L}})
      check_certificate(closed_form_lift_gm3(p, q));

    const LiftCertificate m = closed_form_lift_gm3(3, 3);
    CHECK(m.multiplicity == 3);
    CHECK(m.lifted == kappa(1, 1));
    CHECK(m.v == kappa(3, 3));

    const LiftCertificate n = closed_form_lift_gm3(-3, -4);
    CHECK(n.w == -closed_form_lift_gm3(3, 4).w);
  }

  TEST_CASE("closed forms hold on every coprime class in the range") {
    for (long a = -12; a <= 12; ++a)
      for (long b = -12; b <= 12; ++b) {
        if (std::gcd(a, b) != 1) continue;
        const LiftCertificate c = closed_form_lift_qds(a, b);
        check_certificate(c);
        CHECK(c.v == mu(a, b));
        // independent check against the hand-built matrix and square
        CHECK(qds_line_matrix() * c.w.coordinates() == iv({a, b}));
        CHECK(mukai_square(gram2(4, 1, -2), c.w.coordinates()) == c.w_square);
        CHECK(c.w_square + 2 < a * a + 2 * a * b + 2 * b * b + 1);
        if (a == -1 && b == 0) {
          CHECK_THROWS_AS(closed_form_lift_gm3(a, b), InputError);
        } else {
          check_certificate(closed_form_lift_gm3(a, b));
        }
      }
  }

  TEST_CASE("non-primitive classes") {
    for (long k = 2; k <= 4; ++k)
      for (long a = -5; a <= 5; ++a)
        for (long b = -5; b <= 5; ++b) {
          if (std::gcd(a, b) != 1) continue;
          const LiftCertificate q = closed_form_lift_qds(k * a, k * b);
          CHECK(q.lifted == mu(k * a, k * b));
          CHECK(phi_star(certificate_setup(q), q.w) == q.lifted);
          CHECK(q.w_square == q.formula_w_square);
          if (a == -1 && b == 0) continue;
          const LiftCertificate g = closed_form_lift_gm3(k * a, k * b);
          CHECK(g.lifted == kappa(a, b));
          CHECK(g.multiplicity == k);
        }
  }

  TEST_CASE("brute force agrees with a naive scan") {
    const CoverSetup s = make_qds_setup(gram2(4, 1, -2));
    const PhiMap map = phi_matrix(s);
    const long box = 4;
    for (long a = -3; a <= 3; ++a)
      for (long b = -3; b <= 3; ++b) {
        std::vector<IntVector> naive;
        oracle::scan_box(4, box, [&](const IntVector& w) {
          if (qds_line_matrix() * w == iv({a, b}) && mukai_square(gram2(4, 1, -2), w) >= -2) naive.push_back(w);
        });
        std::vector<IntVector> fast = brute_force_lift(map, mu(a, b), box);
        CHECK(fast.size() == naive.size());
        std::sort(naive.begin(), naive.end());
        std::vector<IntVector> sorted = fast;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == naive);
        for (std::size_t i = 1; i < fast.size(); ++i)
          CHECK(mukai_square(gram2(4, 1, -2), fast[i - 1]) <= mukai_square(gram2(4, 1, -2), fast[i]));
      }
  }

  TEST_CASE("unfiltered enumeration agrees with the pipeline on a GM lattice") {
    const CoverSetup s = make_gm3_setup(gram2(10, 7, 2));
    const PhiMap map = phi_matrix(s);
    for (const KnumClass& v : {kappa(1, 1), kappa(0, 0), kappa(2, 3)}) {
      std::vector<IntVector> naive;
      oracle::scan_box(4, 3, [&](const IntVector& w) {
        if (phi_star_coords(s, w) == v) naive.push_back(w);
      });
      std::vector<IntVector> fast = lifts_in_box(map, v, 3);
      std::sort(naive.begin(), naive.end());
      std::sort(fast.begin(), fast.end());
      CHECK(fast == naive);
    }
  }

  TEST_CASE("brute force finds the closed-form lift in a large enough box") {
    for (const auto& [a, b] : {std::pair{2L, 0L}, {0L, 1L}, {1L, -1L}, {3L, 2L}, {-1L, 2L}}) {
      const LiftCertificate c = closed_form_lift_qds(a, b);
      const long box = std::max(default_box, to_long(max_abs(c.w.coordinates())));
      const std::vector<IntVector> all = brute_force_lift(phi_matrix(certificate_setup(c)), c.lifted, box);
      CHECK(std::find(all.begin(), all.end(), c.w.coordinates()) != all.end());
    }
    const LiftCertificate g = closed_form_lift_gm3(1, 1);
    const std::vector<IntVector> all = brute_force_lift(certificate_setup(g), g.lifted, default_box);
    CHECK(std::find(all.begin(), all.end(), g.w.coordinates()) != all.end());
  }

  TEST_CASE("rank-one Picard lattice misses odd first coordinates") {
    const PhiMap m = phi_matrix(make_qds_setup());
    for (long b = -3; b <= 3; ++b) {
      CHECK(brute_force_lift(m, mu(1, b), 6).empty());
      CHECK(lifts_in_box(m, mu(3, b), 6).empty());
    }
    const std::vector<IntVector> zero = lifts_in_box(m, mu(0, 0), 3);
    CHECK(std::find(zero.begin(), zero.end(), IntVector(3)) != zero.end());
  }

  TEST_CASE("wall inequality and expected dimensions") {
    const KuBasis& mu_b = make_qds_setup().target_basis;
    CHECK(check_wall_inequality(mu_b, mu(0, 1), 0));
    CHECK_FALSE(check_wall_inequality(mu_b, mu(0, 1), 1));
    CHECK(expected_dimension(mu_b, mu(0, 1), ModuliKind::Enriques) == 3);
    CHECK(expected_dimension(mu_b, mu(0, 1), ModuliKind::CY2) == 4);
    for (long a = -6; a <= 6; ++a)
      for (long b = -6; b <= 6; ++b)
        CHECK(-euler_form(mu_b, mu(a, b), mu(a, b)) == a * a + 2 * a * b + 2 * b * b);
    const CoverSetup gm4 = make_gm4_setup();
    CHECK(expected_dimension(gm4.target_basis, KnumClass{"lambda", iv({1, 0})}, ModuliKind::CY2) == 4);
  }

  TEST_CASE("maximum over all lifts matches a large box") {
    const PhiMap map = phi_matrix(make_qds_setup(gram2(4, 1, -2)));
    const IntMatrix form = source_form(map.setup);
    for (long a = -3; a <= 3; ++a)
      for (long b = -3; b <= 3; ++b) {
        const AllLiftsReport r = all_lifts_inequality(map, mu(a, b), default_box);
        CHECK(r.complete);
        REQUIRE(r.max_w_square);
        // v = 0 is lifted by w = 0, and 0 + 2 < 1 fails
        CHECK(r.inequality_holds == (a != 0 || b != 0));
        CHECK(r.bound == a * a + 2 * a * b + 2 * b * b + 1);
        std::optional<Integer> best;
        for (const IntVector& w : lifts_in_box(map, mu(a, b), 10)) {
          const Integer sq = bilinear(form, w, w);
          if (!best || sq > *best) best = sq;
        }
        REQUIRE(best);
        CHECK(*best == *r.max_w_square);
        REQUIRE(r.argmax);
        CHECK(map.apply(*r.argmax) == mu(a, b));
        CHECK(bilinear(form, *r.argmax, *r.argmax) == *r.max_w_square);
      }
    CHECK_THROWS_AS(all_lifts_inequality(phi_matrix(make_qds_setup()), mu(1, 0), 5), InputError);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(closed_form_lift_qds(0, 0), InputError);
    CHECK_THROWS_AS(closed_form_lift_gm3(0, 0), InputError);
    CHECK_THROWS_AS(closed_form_lift_gm3(-1, 0), InputError);
    CHECK_THROWS_AS(closed_form_lift_gm3(-4, 0), InputError);
    CHECK_THROWS_AS(parse_fano_type("p3"), InputError);
    CHECK(parse_fano_type("gm3") == FanoType::GM3);
    CHECK_THROWS_AS(brute_force_lift(make_qds_setup(), mu(2, 0), 0), InputError);
    CHECK_THROWS_AS(brute_force_lift(make_qds_setup(), kappa(2, 0), 3), InputError);
  }
}
