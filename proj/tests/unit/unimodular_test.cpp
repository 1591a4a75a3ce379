#include <doctest.h>

#include "latticebound/survey2d.hpp"
#include "test_support.hpp"

using namespace latticebound;
using lbtest::pt;
using lbtest::simplex;

TEST_CASE("affine unimodular maps") {
  CHECK_THROWS_AS(AffineUnimodular(IntMatrix{{2, 0}, {0, 1}}, pt({0, 0})), PreconditionError);
  CHECK_THROWS_AS(AffineUnimodular(IntMatrix{{1, 0}, {0, 1}}, pt({0})), DimensionError);
  const AffineUnimodular phi(IntMatrix{{1, 1}, {0, 1}}, pt({3, -1}));
  CHECK(phi(pt({1, 2})) == pt({6, 1}));
  CHECK_THROWS_AS(phi(pt({1})), DimensionError);
}

TEST_CASE("apply") {
  const auto s21 = zpw_simplex(2, 1);
  CHECK(apply(AffineUnimodular::identity(2), s21) == s21);
  const AffineUnimodular swap(IntMatrix{{0, 1}, {1, 0}}, pt({0, 0}));
  CHECK(apply(swap, s21) == simplex({{0, 0}, {0, 2}, {4, 0}}));
  const AffineUnimodular shear(IntMatrix{{1, 1}, {0, 1}}, pt({0, 0}));
  CHECK(apply(shear, simplex({{0, 0}, {1, 0}, {0, 1}})) == simplex({{0, 0}, {1, 0}, {1, 1}}));
  CHECK_THROWS_AS(apply(shear, zpw_simplex(3, 0)), DimensionError);
}

TEST_CASE("canonical forms") {
  CHECK(canonical_form(simplex({{0, 0}, {1, 0}, {0, 1}})) == canonical_form(simplex({{1, 0}, {0, 0}, {1, 1}})));
  CHECK(canonical_form(simplex({{0, 0}, {1, 0}, {0, 1}})).encoding() == "1,0;0,1");
  CHECK_FALSE(canonical_form(zpw_simplex(3, 1)) == canonical_form(exceptional_p31()));
  CHECK(canonical_form(zpw_simplex(2, 1)) == canonical_form(simplex({{0, 0}, {4, 0}, {0, 2}})));
  CHECK(canonical_form(zpw_simplex(3, 2)).encoding() == "1,3,3;0,6,6;0,0,18");

  SUBCASE("invariant under random maps and vertex reordering") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 30; ++trial) {
      const auto s = lbtest::random_simplex(1 + trial % 4, rng, 4);
      const auto form = canonical_form(s);
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto image = apply(random_unimodular(s.dim(), seed * 131 + trial, 1 + seed % 4), s);
        CHECK(canonical_form(image) == form);
      }
      auto vs = s.vertices();
      std::reverse(vs.begin(), vs.end());
      CHECK(canonical_form(LatticeSimplex(vs)) == form);
    }
  }
  SUBCASE("ordering") {
    const CanonicalForm a(IntMatrix{{1, 0}, {0, 2}});
    const CanonicalForm b(IntMatrix{{1, 1}, {0, 2}});
    CHECK(a < b);
    CHECK_FALSE(b < a);
    CHECK(CanonicalForm(IntMatrix{{5}}) < a);
  }
}

TEST_CASE("equivalence") {
  const auto s = zpw_simplex(3, 2);
  CHECK(equivalent(s, apply(random_unimodular(3, 99, 3), s)));
  CHECK_FALSE(equivalent(zpw_simplex(2, 1), simplex({{0, 0}, {3, 0}, {0, 3}})));
  CHECK_FALSE(equivalent(t_simplex(2), zpw_simplex(2, 0)));
  CHECK_THROWS_AS(equivalent(t_simplex(2), t_simplex(3)), DimensionError);
  // equal volume, different class
  CHECK_FALSE(equivalent(simplex({{0, 0}, {4, 0}, {0, 1}}), simplex({{0, 0}, {2, 0}, {0, 2}})));

  SUBCASE("an equivalence relation on the k=1 triangle census") {
    const auto census = enumerate_triangles(1, default_cap(1));
    std::vector<LatticeSimplex> family;
    for (std::size_t i = 0; i < census.representatives.size(); ++i) {
      family.push_back(census.representatives[i]);
      family.push_back(apply(random_unimodular(2, 7 + i, 3), census.representatives[i]));
    }
    for (std::size_t a = 0; a < family.size(); ++a) {
      CHECK(equivalent(family[a], family[a]));
      for (std::size_t b = 0; b < family.size(); ++b) {
        const bool ab = equivalent(family[a], family[b]);
        CHECK(ab == equivalent(family[b], family[a]));
        CHECK(ab == (a / 2 == b / 2));
        for (std::size_t c = 0; c < family.size(); ++c)
          if (ab && equivalent(family[b], family[c])) CHECK(equivalent(family[a], family[c]));
      }
    }
  }
}

TEST_CASE("random unimodular maps") {
  for (std::size_t d = 1; d <= 5; ++d)
    for (std::uint64_t seed = 0; seed < 50; ++seed)
      for (unsigned size : {0u, 1u, 3u}) {
        const auto a = random_unimodular(d, seed, size);
        const auto b = random_unimodular(d, seed, size);
        CHECK(a.matrix() == b.matrix());
        CHECK(a.translation() == b.translation());
        CHECK(abs(det(a.matrix())) == 1);
        const unsigned bound = std::max(1u, size);
        for (const auto& v : a.matrix().entries()) CHECK(abs(v) <= bound);
        for (const auto& v : a.translation()) CHECK(abs(v) <= size);
      }
  // different seeds give different maps somewhere
  bool differs = false;
  for (std::uint64_t seed = 1; seed < 10; ++seed)
    differs = differs || !(random_unimodular(3, seed, 3).matrix() == random_unimodular(3, 0, 3).matrix());
  CHECK(differs);
  CHECK_THROWS_AS(random_unimodular(0, 1, 1), DomainError);
}
