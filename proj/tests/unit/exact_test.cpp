#include <doctest.h>

#include <random>

#include "latticebound/exact.hpp"
#include "test_support.hpp"

using namespace latticebound;
using lbtest::q;

namespace {

IntMatrix random_int_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> dist(-range, range);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

RatMatrix random_rat_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = q(num(rng), den(rng));
  return m;
}

// cofactor expansion, independent of the elimination code
Rational laplace(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    RatMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    const Rational term = m(0, c) * laplace(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

bool is_hnf(const IntMatrix& h) {
  const std::size_t n = h.cols();
  for (std::size_t j = 0; j < n; ++j) {
    if (h(j, j) <= 0) return false;
    for (std::size_t i = j + 1; i < h.rows(); ++i)
      if (h(i, j) != 0) return false;
    for (std::size_t i = 0; i < j; ++i)
      if (h(i, j) < 0 || h(i, j) >= h(j, j)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rationals are canonical and printed exactly") {
  const Rational a = make_rational(6, -4);
  CHECK(a.get_num() == -3);
  CHECK(a.get_den() == 2);
  CHECK(to_string(a) == "-3/2");
  CHECK(to_string(q(8, 4)) == "2");
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK(parse_rational("10/4") == q(5, 2));
  CHECK(parse_rational("-7") == q(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("x"), DomainError);
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
  CHECK(is_integral(q(4, 2)));
  CHECK_FALSE(is_integral(q(1, 2)));
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
}

TEST_CASE("det") {
  CHECK(det(RatMatrix::identity(3)) == 1);
  CHECK(det(RatMatrix{{2, 0}, {0, 3}}) == 6);
  CHECK(det(IntMatrix{{2, 0, 0}, {0, 3, 0}, {0, 0, 12}}) == 72);
  CHECK(det(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(det(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(det(RatMatrix{{q(1, 2), q(1, 3)}, {q(1, 5), q(1, 7)}}) == q(1, 14) - q(1, 15));
  CHECK_THROWS_AS(det(RatMatrix(2, 3)), DimensionError);

  SUBCASE("agrees with cofactor expansion") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const auto m = random_rat_matrix(1 + trial % 5, rng);
      CHECK(det(m) == laplace(m));
    }
  }
  SUBCASE("multiplicative") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + trial % 4;
      const auto a = random_rat_matrix(n, rng);
      const auto b = random_rat_matrix(n, rng);
      CHECK(det(a * b) == det(a) * det(b));
    }
  }
}

TEST_CASE("solve") {
  CHECK(solve(RatMatrix::identity(2), {5, 7}) == RatVector{5, 7});
  CHECK(solve(RatMatrix{{2, 0}, {0, 3}}, {1, 1}) == RatVector{q(1, 2), q(1, 3)});

  // barycentric system of (1,1) in conv(o, 2e1, 3e2): rows x, y and the affine row
  const RatMatrix bary{{0, 2, 0}, {0, 0, 3}, {1, 1, 1}};
  CHECK(solve(bary, {1, 1, 1}) == RatVector{q(1, 6), q(1, 2), q(1, 3)});

  CHECK_THROWS_AS(solve(RatMatrix{{1, 2}, {2, 4}}, {1, 1}), DegeneracyError);
  CHECK_THROWS_AS(solve(RatMatrix::identity(2), {1}), DimensionError);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto m = random_rat_matrix(n, rng);
    if (det(m) == 0) continue;
    RatVector rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = q(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 4));
    CHECK(m * solve(m, rhs) == rhs);
  }
}

TEST_CASE("rank") {
  CHECK(rank(RatMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(RatMatrix{{1, 0, 1}, {0, 1, 1}}) == 2);
  CHECK(rank(RatMatrix(3, 2)) == 0);
}

TEST_CASE("hnf examples") {
  auto r = hnf(IntMatrix::identity(3));
  CHECK(r.h == IntMatrix::identity(3));
  CHECK(r.u == IntMatrix::identity(3));

  r = hnf(IntMatrix{{0, 1}, {1, 0}});
  CHECK(r.h == IntMatrix::identity(2));
  CHECK(r.u == IntMatrix{{0, 1}, {1, 0}});

  // the pivot 1 in column 2 forces the entry above it to 0
  r = hnf(IntMatrix{{2, 1}, {0, 1}});
  CHECK(r.h == IntMatrix{{2, 0}, {0, 1}});
  CHECK(r.u == IntMatrix{{1, -1}, {0, 1}});

  r = hnf(IntMatrix{{2, 1}, {0, 3}});
  CHECK(r.h == IntMatrix{{2, 1}, {0, 3}});
  CHECK(r.u == IntMatrix::identity(2));

  CHECK_THROWS_AS(hnf(IntMatrix{{1, 2}, {2, 4}}), RankError);
  CHECK_THROWS_AS(hnf(IntMatrix{{1, 2, 3}}), RankError);

  // tall full-column-rank input leaves zero rows at the bottom
  r = hnf(IntMatrix{{2}, {3}});
  CHECK(r.h == IntMatrix{{1}, {0}});
  CHECK(r.u * IntMatrix{{2}, {3}} == r.h);
}

TEST_CASE("hnf properties on random matrices") {
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto m = random_int_matrix(n, n, rng, 6);
    if (det(m) == 0) {
      CHECK_THROWS_AS(hnf(m), RankError);
      continue;
    }
    const auto r = hnf(m);
    CHECK(r.h == r.u * m);
    CHECK(abs(det(r.u)) == 1);
    CHECK(is_hnf(r.h));
    CHECK(hnf(r.h).h == r.h);
    CHECK(abs(det(r.h)) == abs(det(m)));
    ++checked;
  }
  CHECK(checked > 300);
}

TEST_CASE("hnf is the unique reduced form in the left orbit (2x2 brute force)") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_int_matrix(2, 2, rng, 3);
    if (det(m) == 0) continue;
    const auto h = hnf(m).h;
    int found = 0;
    for (long a = -5; a <= 5; ++a)
      for (long b = -5; b <= 5; ++b)
        for (long c = -5; c <= 5; ++c)
          for (long d = -5; d <= 5; ++d) {
            if (a * d - b * c != 1 && a * d - b * c != -1) continue;
            const auto cand = IntMatrix{{a, b}, {c, d}} * m;
            if (!is_hnf(cand)) continue;
            CHECK(cand == h);
            ++found;
          }
    CHECK(found >= 1);
  }
}
