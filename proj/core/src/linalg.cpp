#include "kul/linalg.hpp"

#include <utility>

#include "kul/error.hpp"

namespace kul {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

Integer bilinear(const IntMatrix& gram, std::span<const Integer> x, std::span<const Integer> y) {
  Integer acc = 0;
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < gram.cols(); ++j) acc += x[i] * gram(i, j) * y[j];
  }
  return acc;
}

RowEchelon rref(RatMatrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::optional<LinearSolution> solve(const RatMatrix& a, std::span<const Rational> b) {
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const RowEchelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  LinearSolution s;
  s.x.assign(a.cols(), Rational(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) s.x[e.pivots[i]] = e.reduced(i, a.cols());
  s.unique = e.pivots.size() == a.cols();
  return s;
}

Rational determinant(RatMatrix m) {
  if (!m.is_square()) throw InputError("determinant of a non-square matrix");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Rational f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RowEchelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

namespace {

void swap_columns(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// column[dst] -= q * column[src]
void sub_column(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

void negate_column(IntMatrix& m, std::size_t c) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = -m(r, c);
}

}  // namespace

ColumnHermite column_hermite(const IntMatrix& a) {
  IntMatrix w = a;
  IntMatrix u = IntMatrix::identity(a.cols());
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
  for (std::size_t row = 0; row < w.rows() && rank < w.cols(); ++row) {
    // Euclid across columns rank.. until one nonzero entry remains in this row.
    for (;;) {
      std::size_t best = w.cols();
      for (std::size_t c = rank; c < w.cols(); ++c) {
        if (w(row, c) == 0) continue;
        if (best == w.cols() || abs(w(row, c)) < abs(w(row, best))) best = c;
      }
      if (best == w.cols()) break;
      bool reduced_all = true;
      for (std::size_t c = rank; c < w.cols(); ++c) {
        if (c == best || w(row, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), w(row, c).get_mpz_t(), w(row, best).get_mpz_t());
        sub_column(w, c, best, q);
        sub_column(u, c, best, q);
        if (w(row, c) != 0) reduced_all = false;
      }
      if (reduced_all) {
        swap_columns(w, rank, best);
        swap_columns(u, rank, best);
        break;
      }
    }
    if (w(row, rank) == 0) continue;
    if (w(row, rank) < 0) {
      negate_column(w, rank);
      negate_column(u, rank);
    }
    for (std::size_t c = 0; c < rank; ++c) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), w(row, c).get_mpz_t(), w(row, rank).get_mpz_t());
      sub_column(w, c, rank, q);
      sub_column(u, c, rank, q);
    }
    pivot_rows.push_back(row);
    ++rank;
  }
  ColumnHermite out;
  out.h = IntMatrix(w.rows(), rank);
  for (std::size_t r = 0; r < w.rows(); ++r)
    for (std::size_t c = 0; c < rank; ++c) out.h(r, c) = w(r, c);
  out.u = std::move(u);
  out.rank = rank;
  out.pivot_rows = std::move(pivot_rows);
  return out;
}

std::optional<IntVector> solve_hermite(const ColumnHermite& hnf, std::span<const Integer> v) {
  IntVector y(hnf.rank);
  for (std::size_t k = 0; k < hnf.rank; ++k) {
    const std::size_t row = hnf.pivot_rows[k];
    Integer rest = v[row];
    for (std::size_t l = 0; l < k; ++l) rest -= hnf.h(row, l) * y[l];
    if (!mpz_divisible_p(rest.get_mpz_t(), hnf.h(row, k).get_mpz_t())) return std::nullopt;
    mpz_divexact(y[k].get_mpz_t(), rest.get_mpz_t(), hnf.h(row, k).get_mpz_t());
  }
  for (std::size_t r = 0; r < hnf.h.rows(); ++r) {
    Integer acc = 0;
    for (std::size_t k = 0; k < hnf.rank; ++k) acc += hnf.h(r, k) * y[k];
    if (acc != v[r]) return std::nullopt;
  }
  return y;
}

bool is_negative_definite(const IntMatrix& gram) {
  if (!gram.is_symmetric()) throw InputError("definiteness of a non-symmetric matrix");
  const std::size_t n = gram.rows();
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix minor(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) minor(r, c) = Rational(-gram(r, c));
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

Integer ceil_sqrt(const Rational& q) {
  if (q <= 0) return 0;
  Integer num = q.get_num();
  Integer den = q.get_den();
  Integer bound;
  mpz_cdiv_q(bound.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Integer t;
  mpz_sqrt(t.get_mpz_t(), bound.get_mpz_t());
  while (Rational(t * t) < q) ++t;
  while (t > 0 && Rational((t - 1) * (t - 1)) >= q) --t;
  return t;
}

}  // namespace kul
