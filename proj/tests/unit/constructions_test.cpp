#include <doctest.h>

#include <thread>

#include "test_support.hpp"

using namespace latticebound;
using lbtest::pt;
using lbtest::q;
using lbtest::simplex;

TEST_CASE("sylvester sequence") {
  CHECK(sylvester(1) == 2);
  CHECK(sylvester(4) == 43);
  CHECK(sylvester(6) == 3263443);
  CHECK(sylvester(7) == Integer("10650056950807"));
  CHECK_THROWS_AS(sylvester(0), DomainError);

  Integer product = 1;
  Rational egyptian = 0;
  for (std::size_t d = 2; d <= 10; ++d) {
    product *= sylvester(d - 1);
    egyptian += Rational(1) / Rational(sylvester(d - 1));
    CHECK(product == sylvester(d) - 1);
    CHECK(egyptian == 1 - Rational(1) / Rational(sylvester(d) - 1));
  }
}

TEST_CASE("sylvester cache is safe under concurrent extension") {
  std::vector<Integer> seen(8);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < seen.size(); ++t) pool.emplace_back([&, t] { seen[t] = sylvester(12 + t % 3); });
  for (auto& th : pool) th.join();
  for (std::size_t t = 0; t < seen.size(); ++t) CHECK(seen[t] == sylvester(12 + t % 3));
  CHECK(sylvester(13) == sylvester(12) * (sylvester(12) - 1) + 1);
}

TEST_CASE("zpw simplices") {
  CHECK(zpw_simplex(2, 1) == simplex({{0, 0}, {2, 0}, {0, 4}}));
  CHECK(zpw_simplex(3, 1) == simplex({{0, 0, 0}, {2, 0, 0}, {0, 3, 0}, {0, 0, 12}}));
  CHECK(zpw_simplex(3, 0) == simplex({{0, 0, 0}, {2, 0, 0}, {0, 3, 0}, {0, 0, 6}}));
  CHECK(zpw_simplex(1, 2) == simplex({{0}, {3}}));
  CHECK_THROWS_AS(zpw_simplex(0, 1), DomainError);
  CHECK(zpw_volume(3, 2) == 18);
  CHECK(zpw_volume(4, 0) == q(42 * 42, 24));

  for (std::size_t d = 1; d <= 4; ++d)
    for (std::size_t k = 0; k <= 3; ++k) {
      CAPTURE(d);
      CAPTURE(k);
      const auto s = zpw_simplex(d, k);
      CHECK(volume(s) == zpw_volume(d, k));
      std::vector<LatticePoint> expected;
      for (std::size_t j = 1; j <= k; ++j) {
        LatticePoint p(d, Integer(1));
        p.back() = static_cast<unsigned long>(j);
        expected.push_back(p);
      }
      CHECK(interior_points(s) == expected);
      LatticePoint base_point(d, Integer(1));
      base_point.back() = 0;
      CHECK(relint_points(facets(s).back()) == (d == 1 ? std::vector<LatticePoint>{} : std::vector<LatticePoint>{base_point}));
    }
}

TEST_CASE("t simplices") {
  CHECK(t_simplex(2) == simplex({{0, 0}, {2, 0}, {0, 3}}));
  CHECK(interior_points(t_simplex(2)) == std::vector<LatticePoint>{pt({1, 1})});
  CHECK(t_simplex(3) == simplex({{0, 0, 0}, {2, 0, 0}, {0, 3, 0}, {0, 0, 7}}));
  CHECK(interior_points(t_simplex(3)) == std::vector<LatticePoint>{pt({1, 1, 1})});
  CHECK(t_simplex(1) == simplex({{0}, {2}}));
  CHECK(interior_points(t_simplex(1)) == std::vector<LatticePoint>{pt({1})});
  CHECK(interior_points(t_simplex(4)).size() == 1);
}

TEST_CASE("exceptional maximizer") {
  const auto p = exceptional_p31();
  CHECK(volume(p) == 12);
  CHECK(interior_points(p) == lbtest::oracle_interior(p));
  CHECK(interior_points(p).size() == 1);
  CHECK_FALSE(equivalent(p, zpw_simplex(3, 1)));
}

TEST_CASE("lift") {
  const auto tri = lift(simplex({{-1}, {1}}), 0);
  CHECK(tri == simplex({{-1, 0}, {1, 0}, {0, 1}}));
  CHECK(interior_points(tri).empty());

  const auto t = lift(simplex({{-1}, {1}}), 1);
  CHECK(t == simplex({{-1, 0}, {1, 0}, {0, 2}}));
  CHECK(interior_points(t) == std::vector<LatticePoint>{pt({0, 1})});
  CHECK(volume(t) == 2);

  // [-1, 2] contains the interior lattice point 1 besides o
  CHECK_THROWS_AS(lift(simplex({{-1}, {2}}), 1), PreconditionError);
  CHECK_THROWS_AS(lift(simplex({{1}, {3}}), 1), PreconditionError);
  CHECK_THROWS_AS(lift(simplex({{0}, {1}}), 1), PreconditionError);

  // T_2 moved so that (1,1) sits at the origin
  const auto base = simplex({{-1, -1}, {1, -1}, {-1, 2}});
  const auto s = lift(base, 2);
  CHECK(interior_points(s) == std::vector<LatticePoint>{pt({0, 0, 1}), pt({0, 0, 2})});
  CHECK(relint_points(facets(s).back()) == std::vector<LatticePoint>{pt({0, 0, 0})});
  CHECK(volume(s) == 3);

  for (std::size_t k = 0; k <= 4; ++k) {
    const auto l = lift(simplex({{-1, -1}, {1, 0}, {0, 1}}), k);
    CHECK(interior_points(l).size() == k);
    CHECK(l.dim() == 3);
  }
}

TEST_CASE("inscribed cube scale") {
  CHECK(inscribed_cube_scale(2) == 2);
  CHECK(inscribed_cube_scale(3) == q(6, 5));
  CHECK(inscribed_cube_scale(4) == q(42, 41));
  CHECK_THROWS_AS(inscribed_cube_scale(1), DomainError);
  for (std::size_t d = 2; d <= 8; ++d) {
    // the corner (λ,…,λ) lies on the slanted facet of T_{d-1}
    Rational sum = 0;
    for (std::size_t i = 1; i < d; ++i) sum += Rational(1) / Rational(sylvester(i));
    CHECK(inscribed_cube_scale(d) * sum == 1);
  }
}
