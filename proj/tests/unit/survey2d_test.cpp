#include <doctest.h>

#include "latticebound/survey2d.hpp"
#include "test_support.hpp"
#include "triangle_oracle.hpp"

using namespace latticebound;
using lbtest::q;
using lbtest::simplex;
using lbtest::keys;
using lbtest::oracle_census;


TEST_CASE("census of hollow triangles") {
  const auto c = enumerate_triangles(0, 6);
  CHECK(c.k == 0);
  bool unit = false, s20 = false;
  for (const auto& t : c.representatives) {
    CHECK(interior_points(t).empty());
    CHECK(volume(t) <= 6);
    unit = unit || equivalent(t, simplex({{0, 0}, {1, 0}, {0, 1}}));
    s20 = s20 || equivalent(t, zpw_simplex(2, 0));
  }
  CHECK(unit);
  CHECK(s20);
  CHECK(std::is_sorted(c.forms.begin(), c.forms.end()));
  for (std::size_t i = 0; i < c.forms.size(); ++i) CHECK(canonical_form(c.representatives[i]) == c.forms[i]);
  CHECK_THROWS_AS(enumerate_triangles(2, 5), PreconditionError);
  CHECK_NOTHROW(enumerate_triangles(2, 6));
}

TEST_CASE("one interior point") {
  const auto c = enumerate_triangles(1, default_cap(1));
  CHECK(c.representatives.size() == 5);
  CHECK(c.max_area == q(9, 2));
  REQUIRE(c.maximizers.size() == 1);
  CHECK(equivalent(c.maximizers.front(), simplex({{0, 0}, {3, 0}, {0, 3}})));

  const auto f = filter_one_relint_facet(c);
  bool has_s21 = false, has_exceptional = false;
  for (const auto& t : f.representatives) {
    has_s21 = has_s21 || equivalent(t, zpw_simplex(2, 1));
    has_exceptional = has_exceptional || equivalent(t, simplex({{0, 0}, {3, 0}, {0, 3}}));
  }
  CHECK(has_s21);
  CHECK_FALSE(has_exceptional);
  CHECK(f.max_area == 4);

  // τ is minimal exactly at T_2
  Rational min_tau = 1;
  std::vector<LatticeSimplex> at_min;
  for (const auto& t : c.representatives) {
    const Rational v = tau(t);
    if (v < min_tau) {
      min_tau = v;
      at_min.clear();
    }
    if (v == min_tau) at_min.push_back(t);
  }
  CHECK(min_tau == q(1, 36));
  REQUIRE(at_min.size() == 1);
  CHECK(equivalent(at_min.front(), t_simplex(2)));
}

TEST_CASE("two interior points") {
  const auto c = enumerate_triangles(2, default_cap(2));
  CHECK(c.max_area == 6);
  bool has_s22 = false;
  for (const auto& t : c.maximizers) has_s22 = has_s22 || equivalent(t, zpw_simplex(2, 2));
  CHECK(has_s22);
  const auto f = filter_one_relint_facet(c);
  CHECK(f.max_area == 6);
  REQUIRE(f.maximizers.size() == 1);
  CHECK(equivalent(f.maximizers.front(), zpw_simplex(2, 2)));
}

TEST_CASE("maximizer check for small k") {
  for (std::size_t k = 0; k <= 3; ++k) {
    CAPTURE(k);
    const auto r = verify_theorem_main_2d(k);
    CHECK(r.passed);
    CHECK(r.max_area == Rational(static_cast<unsigned long>(2 * (k + 1))));
    CHECK(r.expected_area == r.max_area);
    CHECK(r.unique);
    CHECK(r.equivalent_to_zpw);
    CHECK(r.cap == default_cap(k));
    if (k >= 2) CHECK(r.unfiltered_max_area <= r.expected_area);
  }
  const auto r1 = verify_theorem_main_2d(1);
  CHECK(r1.unfiltered_max_area == q(9, 2));
  CHECK(r1.unfiltered_maximizers == 1);
}

TEST_CASE("census agrees with an independent brute force") {
  CHECK(keys(enumerate_triangles(0, 4)) == oracle_census(0, 4));
  CHECK(keys(enumerate_triangles(1, 8)) == oracle_census(1, 8));
  CHECK(keys(enumerate_triangles(2, 8)) == oracle_census(2, 8));
}

TEST_CASE("census export") {
  const auto c = enumerate_triangles(1, default_cap(1));
  const std::string text = format_census(c);
  CHECK(text.rfind("# k=1 cap=8 count=5\n", 0) == 0);
  const auto back = parse_simplices(text);
  REQUIRE(back.size() == 5);
  for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i].simplex == c.representatives[i]);
}
