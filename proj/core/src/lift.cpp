#include "kul/lift.hpp"

#include <algorithm>
#include <tuple>

#include "kul/error.hpp"

namespace kul {

std::string_view to_string(FanoType type) {
  return type == FanoType::QuarticDoubleSolid ? "qds" : "gm3";
}

FanoType parse_fano_type(std::string_view name) {
  if (name == "qds") return FanoType::QuarticDoubleSolid;
  if (name == "gm3") return FanoType::GM3;
  throw InputError("unknown Fano type: " + std::string(name) + " (expected qds or gm3)");
}

namespace {

const IntMatrix& quartic_with_line() {
  static const IntMatrix g{{4, 1}, {1, -2}};
  return g;
}

IntMatrix gm_gram(long x, long l_square) { return IntMatrix{{10, x}, {x, l_square}}; }

// Mukai coordinates (r, H, L, s) on a rank-2 Picard lattice.
IntVector mukai(long r, long h, long l, const Integer& s) { return IntVector{r, h, l, s}; }

IntVector combine(std::initializer_list<std::pair<Integer, IntVector>> terms) {
  IntVector out(4);
  for (const auto& [k, vec] : terms)
    for (std::size_t i = 0; i < 4; ++i) out[i] += k * vec[i];
  return out;
}

struct Construction {
  IntMatrix gram;
  std::optional<long> x;
  IntVector w;
  Integer formula;
  std::string branch;
};

// a >= 0, (a, b) primitive.
Construction qds_construction(const Integer& a, const Integer& b) {
  const IntVector o_x = mukai(0, 0, 0, 1);
  const IntVector i_x = mukai(1, 0, 0, 0);
  const IntVector o_surface = mukai(1, 0, 0, 1);
  const IntVector o_h = mukai(0, 1, 0, -2);
  const IntVector o_l = mukai(0, 0, 1, 1);
  const Integer ap = a / 2;
  Construction c{quartic_with_line(), std::nullopt, {}, 0, {}};
  if (a % 2 == 0) {
    const Integer sum = ap + b;
    if (sum >= 0) {
      c.w = combine({{ap, o_x}, {-sum, i_x}});
      c.formula = 2 * ap * sum;
      c.branch = "a-even/nonneg";
    } else {
      const Integer k = -sum;
      if (k % 2 == 0) {
        const Integer h = k / 2;
        c.w = combine({{ap, o_x}, {h, o_h}});
        c.formula = 4 * h * h;
        c.branch = "a-even/k-even";
      } else {
        const Integer h = (k + 1) / 2;
        c.w = combine({{ap, o_x}, {-1, i_x}, {h, o_h}});
        c.formula = 4 * h * h + 2 * ap - 4 * h;
        c.branch = "a-even/k-odd";
      }
    }
  } else {
    const Integer sum = ap + b + 1;
    if (sum >= 0) {
      c.w = combine({{ap, o_x}, {-(ap + b), i_x}, {1, o_l}, {-1, o_surface}});
      c.formula = -2 + 2 * ap * sum;
      c.branch = "a-odd/nonneg";
    } else {
      const Integer k = -sum;
      if (k % 2 != 0) {
        const Integer h = (k + 1) / 2;
        c.w = combine({{ap, o_x}, {h, o_h}, {1, o_l}, {-1, o_surface}});
        c.formula = 4 * h * h - 2 * h - 2 + 2 * ap;
        c.branch = "a-odd/k-odd";
      } else {
        const Integer h = k / 2;
        c.w = combine({{ap, o_x}, {1, o_l}, {-1, o_x}, {h, o_h}});
        c.formula = -2 + 4 * h * h + 2 * h;
        c.branch = "a-odd/k-even";
      }
    }
  }
  return c;
}

// q > 0, or (p, q) = (1, 0); (p, q) primitive.
Construction gm3_construction(const Integer& p, const Integer& q) {
  const auto build = [&](long x, long l_square) {
    Construction c{gm_gram(x, l_square), x, {}, 0, {}};
    return c;
  };
  const auto o_l = [](long l_square) { return mukai(1, 0, 1, l_square / 2 + 1); };
  const IntVector o = mukai(1, 0, 0, 1);
  const IntVector o_x = mukai(0, 0, 0, 1);
  const IntVector o_minus_h = mukai(1, -1, 0, 6);

  if (p % 2 != 0) {
    Construction c = build(to_long(q) + 6, 2);
    const Integer b = -q + (5 - p) / 2;
    c.w = combine({{-1, o_l(2)}, {b, o}, {-q, o_minus_h}, {p + 5 * q + 1, o_x}});
    c.formula = (p * p - 1) / 2 - 2;
    c.branch = "p-odd";
    return c;
  }
  if (q != 1) {
    Construction c = build(to_long(q) + 4, 2);
    const Integer b = -q + 2 - p / 2;
    c.w = combine({{-1, o_l(2)}, {b, o}, {-q, o_minus_h}, {p + 5 * q + 1, o_x}});
    c.formula = p * p / 2;
    c.branch = "p-even";
    return c;
  }
  if (p == 0) {
    Construction c = build(5, 0);
    c.w = combine({{1, o_l(0)}, {-2, o}});
    c.formula = -2;
    c.branch = "p-even/q=1/p=0";
    return c;
  }
  if (p == 2) {
    Construction c = build(9, 4);
    c.w = combine({{1, o_l(4)}, {-4, o}});
    c.formula = -2;
    c.branch = "p-even/q=1/p=2";
    return c;
  }
  if (p == -2) {
    Construction c = build(7, 4);
    c.w = combine({{-1, o_l(4)}, {4, o}});
    c.formula = -2;
    c.branch = "p-even/q=1/p=-2";
    return c;
  }
  Construction c = build(9, 2);
  c.w = combine({{-1, o_l(2)}, {-p / 2 + 2, o}, {-1, o_minus_h}, {p + 6, o_x}});
  c.formula = p * p / 2 - 6;
  c.branch = "p-even/q=1";
  return c;
}

LiftCertificate certify(FanoType type, KnumClass v, KnumClass lifted, KnumClass v0, Integer k, Construction c,
                        std::vector<std::string> applicable) {
  LiftCertificate cert;
  cert.fano_type = type;
  cert.v = std::move(v);
  cert.lifted = std::move(lifted);
  cert.v_primitive = std::move(v0);
  cert.multiplicity = std::move(k);
  cert.gram = c.gram;
  cert.x = c.x;
  cert.w = MukaiVector::from_coordinates(c.gram, c.w);
  cert.w_square = mukai_pairing(cert.w, cert.w);
  cert.formula_w_square = c.formula;
  cert.branch = c.branch;
  cert.applicable_branches = std::move(applicable);
  const CoverSetup setup = certificate_setup(cert);
  const KnumClass image = phi_star(setup, cert.w);
  if (!(image == cert.lifted)) {
    throw ConsistencyError("lift " + to_string(cert.w) + " maps to " + to_string(image) + ", not " +
                           to_string(cert.lifted));
  }
  cert.nonneg_ok = cert.w_square >= -2;
  cert.wall_ok = check_wall_inequality(setup.target_basis, cert.lifted, cert.w_square);
  return cert;
}

std::pair<Integer, Integer> primitive_part(const Integer& a, const Integer& b, Integer& k) {
  k = gcd(a, b);
  if (k == 0) throw InputError("zero vector has no lift");
  return {a / k, b / k};
}

Construction negated(Construction c) {
  for (Integer& e : c.w) e = -e;
  c.branch = "negated/" + c.branch;
  return c;
}

}  // namespace

LiftCertificate closed_form_lift_qds(const Integer& a, const Integer& b) {
  // The constructions need no primitivity, so v itself is lifted.
  Integer k;
  const auto [a0, b0] = primitive_part(a, b, k);
  std::vector<std::string> applicable;
  std::optional<Construction> chosen;
  if (a >= 0) {
    chosen = qds_construction(a, b);
    applicable.push_back(chosen->branch);
  }
  if (a <= 0) {
    Construction alt = negated(qds_construction(-a, -b));
    applicable.push_back(alt.branch);
    if (!chosen) chosen = std::move(alt);
  }
  KnumClass v{"mu", {a, b}};
  return certify(FanoType::QuarticDoubleSolid, v, v, KnumClass{"mu", {a0, b0}}, k, std::move(*chosen),
                 std::move(applicable));
}

LiftCertificate closed_form_lift_gm3(const Integer& p, const Integer& q) {
  Integer k;
  const auto [p0, q0] = primitive_part(p, q, k);
  if (q0 == 0 && p0 == -1) {
    throw InputError("kappa(-1,0) is outside the coverage of the explicit GM3 constructions");
  }
  Construction c = q0 < 0 ? negated(gm3_construction(-p0, -q0)) : gm3_construction(p0, q0);
  std::vector<std::string> applicable{c.branch};
  // The constructions assume gcd(p, q) = 1, so the primitive part is lifted.
  const KnumClass v0{"kappa", {p0, q0}};
  return certify(FanoType::GM3, KnumClass{"kappa", {p, q}}, v0, v0, k, std::move(c), std::move(applicable));
}

LiftCertificate closed_form_lift(FanoType type, const Integer& first, const Integer& second) {
  return type == FanoType::QuarticDoubleSolid ? closed_form_lift_qds(first, second)
                                              : closed_form_lift_gm3(first, second);
}

CoverSetup certificate_setup(const LiftCertificate& cert) {
  return cert.fano_type == FanoType::QuarticDoubleSolid ? make_qds_setup(cert.gram) : make_gm3_setup(cert.gram);
}

namespace {

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil_of(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

// Calls f on every integer vector with lo[i] <= t[i] <= hi[i].
template <class F>
void for_each_point(const IntVector& lo, const IntVector& hi, F&& f) {
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;
  IntVector t = lo;
  while (true) {
    f(t);
    std::size_t i = 0;
    while (i < n && t[i] == hi[i]) {
      t[i] = lo[i];
      ++i;
    }
    if (i == n) return;
    ++t[i];
  }
}

void require_target(const PhiMap& map, const KnumClass& v) {
  if (v.basis != map.setup.target_basis.name || v.coords.size() != map.setup.target_basis.rank()) {
    throw InputError("class " + to_string(v) + " is not in the " + map.setup.target_basis.name + " lattice");
  }
}

}  // namespace

std::vector<IntVector> lifts_in_box(const PhiMap& map, const KnumClass& v, long box) {
  if (box < 0) throw InputError("box must be non-negative");
  require_target(map, v);
  const IntMatrix a = standard_matrix(map);
  const std::size_t n = a.cols();
  RatMatrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = v.coords[r];
  }
  const RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == n) return {};

  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (std::find(e.pivots.begin(), e.pivots.end(), c) == e.pivots.end()) free.push_back(c);

  std::vector<IntVector> out;
  const Integer bound = box;
  for_each_point(IntVector(free.size(), Integer(-box)), IntVector(free.size(), bound), [&](const IntVector& t) {
    IntVector w(n);
    for (std::size_t i = 0; i < free.size(); ++i) w[free[i]] = t[i];
    for (std::size_t row = 0; row < e.pivots.size(); ++row) {
      Rational value = e.reduced(row, n);
      for (std::size_t i = 0; i < free.size(); ++i) value -= e.reduced(row, free[i]) * Rational(t[i]);
      if (!is_integer(value)) return;
      const Integer z = value.get_num();
      if (abs(z) > bound) return;
      w[e.pivots[row]] = z;
    }
    out.push_back(std::move(w));
  });
  return out;
}

std::vector<IntVector> brute_force_lift(const PhiMap& map, const KnumClass& v, long box) {
  if (box < 1) throw InputError("box must be at least 1");
  const IntMatrix form = source_form(map.setup);
  std::vector<std::pair<Integer, IntVector>> found;
  for (IntVector& w : lifts_in_box(map, v, box)) {
    Integer sq = bilinear(form, w, w);
    if (sq >= -2) found.emplace_back(std::move(sq), std::move(w));
  }
  std::sort(found.begin(), found.end());
  std::vector<IntVector> out;
  out.reserve(found.size());
  for (auto& [sq, w] : found) out.push_back(std::move(w));
  return out;
}

std::vector<IntVector> brute_force_lift(const CoverSetup& setup, const KnumClass& v, long box) {
  return brute_force_lift(phi_matrix(setup), v, box);
}

bool check_wall_inequality(const KuBasis& basis, const KnumClass& v, const Integer& w_square) {
  return w_square + 2 < -euler_form(basis, v, v) + 1;
}

Integer expected_dimension(const KuBasis& basis, const KnumClass& v, ModuliKind kind) {
  return -euler_form(basis, v, v) + (kind == ModuliKind::Enriques ? 1 : 2);
}

AllLiftsReport all_lifts_inequality(const PhiMap& map, const KnumClass& v, long box) {
  require_target(map, v);
  const std::optional<IntVector> x0 = preimage(map, v);
  if (!x0) throw InputError("class " + to_string(v) + " is not in the image of " + map.setup.name);

  AllLiftsReport report;
  report.v = v;
  report.bound = -euler_form(map.setup.target_basis, v, v) + 1;
  const IntMatrix form = source_form(map.setup);
  const KernelLattice kernel = kernel_lattice(map);
  const std::size_t k = kernel.basis.cols();

  const auto consider = [&](IntVector w) {
    const Integer sq = bilinear(form, w, w);
    if (!report.max_w_square || sq > *report.max_w_square || (sq == *report.max_w_square && w < *report.argmax)) {
      report.max_w_square = sq;
      report.argmax = std::move(w);
    }
  };

  if (k == 0 || kernel.negative_definite) {
    // w = x0 + K t, w² = c + 2 bᵀt - tᵀN t with N = -Kᵀ M K positive definite.
    // The maximum sits at the lattice point closest to t* = N⁻¹ b in the N-norm;
    // every such point lies in the ellipsoid through round(t*).
    report.complete = true;
    RatMatrix n(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) n(i, j) = -kernel.gram(i, j);
    const IntVector mx0 = form * *x0;
    RatVector b(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t r = 0; r < x0->size(); ++r) b[i] += Rational(kernel.basis(r, i) * mx0[r]);
    const RatMatrix n_inv = k == 0 ? RatMatrix() : *inverse(n);
    const RatVector t_star = n_inv * b;
    RatVector offset(k);
    for (std::size_t i = 0; i < k; ++i) offset[i] = Rational(floor_of(t_star[i] + make_rational(1, 2))) - t_star[i];
    Rational radius = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) radius += offset[i] * n(i, j) * offset[j];
    IntVector lo(k), hi(k);
    for (std::size_t i = 0; i < k; ++i) {
      const Integer reach = ceil_sqrt(radius * n_inv(i, i));
      lo[i] = floor_of(t_star[i]) - reach;
      hi[i] = ceil_of(t_star[i]) + reach;
    }
    for_each_point(lo, hi, [&](const IntVector& t) {
      IntVector w = *x0;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t r = 0; r < w.size(); ++r) w[r] += kernel.basis(r, i) * t[i];
      ++report.enumerated;
      consider(std::move(w));
    });
  } else {
    for (IntVector& w : lifts_in_box(map, v, box)) {
      ++report.enumerated;
      consider(std::move(w));
    }
  }
  report.inequality_holds = !report.max_w_square || *report.max_w_square + 2 < report.bound;
  return report;
}

}  // namespace kul
