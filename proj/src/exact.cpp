#include "latticebound/exact.hpp"

#include <algorithm>
#include <utility>

namespace latticebound {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
  // mpq renders integral values without the "/1"
  return v.get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw DomainError("not a rational: '" + text + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

bool is_integral(const Rational& v) { return v.get_den() == 1; }

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

RatVector to_rational(const IntVector& v) { return RatVector(v.begin(), v.end()); }

namespace {

// Multiplies every row by the lcm of its denominators. Returns the integer
// matrix together with the product of the row multipliers.
std::pair<IntMatrix, Integer> clear_denominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  Integer scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
    scale *= l;
  }
  return {std::move(out), scale};
}

// In-place Bareiss elimination on the first `n` columns; returns the sign of
// the applied row permutation, or 0 if a zero pivot column was met.
int bareiss_forward(IntMatrix& a, std::size_t n) {
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < a.cols(); ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign;
}

}  // namespace

Integer det(const IntMatrix& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  const int sign = bareiss_forward(a, n);
  if (sign == 0) return 0;
  return sign > 0 ? Integer(a(n - 1, n - 1)) : Integer(-a(n - 1, n - 1));
}

Rational det(const RatMatrix& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  auto [a, scale] = clear_denominators(m);
  return make_rational(det(a), scale);
}

RatVector solve(const RatMatrix& m, const RatVector& rhs) {
  if (!m.square()) throw DimensionError("solve needs a square matrix");
  if (rhs.size() != m.rows()) throw DimensionError("right-hand side length mismatch");
  const std::size_t n = m.rows();
  RatMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = rhs[r];
  }
  auto [a, scale] = clear_denominators(aug);
  (void)scale;  // row scaling leaves the solution unchanged
  if (bareiss_forward(a, n) == 0) throw DegeneracyError("singular matrix");
  RatVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(a(i, n));
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(a(i, j)) * x[j];
    x[i] = acc / Rational(a(i, i));
  }
  return x;
}

std::size_t rank(const RatMatrix& m) {
  auto [a, scale] = clear_denominators(m);
  (void)scale;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const Integer f = a(i, c);
      const Integer g = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) * g - a(r, j) * f;
    }
    ++r;
  }
  return r;
}

namespace {

// rows (a, b) <- (x·a + y·b, -(B/g)·a + (A/g)·b), a 2x2 transform of determinant 1
void combine_rows(IntMatrix& m, std::size_t a, std::size_t b, const Integer& x, const Integer& y,
                  const Integer& p, const Integer& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Integer ra = x * m(a, c) + y * m(b, c);
    Integer rb = p * m(a, c) + q * m(b, c);
    m(a, c) = std::move(ra);
    m(b, c) = std::move(rb);
  }
}

void add_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += f * m(src, c);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace

HermiteResult hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  if (m.cols() > m.rows()) throw RankError("more columns than rows: not of full column rank");

  for (std::size_t j = 0; j < h.cols(); ++j) {
    std::size_t p = j;
    while (p < h.rows() && h(p, j) == 0) ++p;
    if (p == h.rows()) throw RankError("matrix does not have full column rank");
    h.swap_rows(p, j);
    u.swap_rows(p, j);

    for (std::size_t i = j + 1; i < h.rows(); ++i) {
      if (h(i, j) == 0) continue;
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), h(j, j).get_mpz_t(), h(i, j).get_mpz_t());
      const Integer p_coef = -h(i, j) / g;
      const Integer q_coef = h(j, j) / g;
      combine_rows(h, j, i, x, y, p_coef, q_coef);
      combine_rows(u, j, i, x, y, p_coef, q_coef);
    }
    if (h(j, j) < 0) {
      negate_row(h, j);
      negate_row(u, j);
    }
    for (std::size_t i = 0; i < j; ++i) {
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), h(i, j).get_mpz_t(), h(j, j).get_mpz_t());
      if (f == 0) continue;
      add_multiple(h, i, j, -f);
      add_multiple(u, i, j, -f);
    }
  }
  return {std::move(h), std::move(u)};
}

}  // namespace latticebound
