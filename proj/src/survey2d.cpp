#include "latticebound/survey2d.hpp"

#include <map>

#include "latticebound/constructions.hpp"
#include "latticebound/parallel.hpp"
#include "latticebound/simplex_io.hpp"

namespace latticebound {

Rational default_cap(std::size_t k) { return Rational(static_cast<unsigned long>(4 * (k + 1))); }

namespace {

long gcd_long(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void set_maximizers(TriangleCensus& c) {
  c.max_area = 0;
  c.maximizers.clear();
  for (const auto& t : c.representatives) {
    const Rational a = volume(t);
    if (a > c.max_area) {
      c.max_area = a;
      c.maximizers.clear();
    }
    if (a == c.max_area) c.maximizers.push_back(t);
  }
}

}  // namespace

TriangleCensus enumerate_triangles(std::size_t k, const Rational& cap) {
  if (cap < Rational(static_cast<unsigned long>(2 * (k + 1))))
    throw PreconditionError("search cap must be at least 2(k+1)");
  Integer twice_cap_z;
  mpz_fdiv_q(twice_cap_z.get_mpz_t(), Integer(2 * cap.get_num()).get_mpz_t(), cap.get_den_mpz_t());
  const long twice_cap = twice_cap_z.get_si();
  const long target = static_cast<long>(k);

  // One task per value of a; each collects its own canonical-form map.
  std::vector<std::map<CanonicalForm, LatticeSimplex>> found(static_cast<std::size_t>(twice_cap));
  parallel_for(found.size(), [&](std::size_t idx) {
    const long a = static_cast<long>(idx) + 1;
    for (long c = 1; a * c <= twice_cap; ++c) {
      for (long b = 0; b < c; ++b) {
        const long boundary = a + gcd_long(b, c) + gcd_long(a - b, c);
        const long interior = (a * c - boundary + 2) / 2;
        if (interior != target) continue;
        LatticeSimplex t({{0, 0}, {a, 0}, {b, c}});
        if (interior_points(t).size() != k)
          throw VerificationError("Pick's formula and direct enumeration disagree");
        found[idx].emplace(canonical_form(t), std::move(t));
      }
    }
  });

  std::map<CanonicalForm, LatticeSimplex> merged;
  for (auto& part : found)
    for (auto& [form, tri] : part) merged.emplace(form, tri);

  TriangleCensus census;
  census.k = k;
  census.search_cap = cap;
  for (auto& [form, tri] : merged) {
    census.forms.push_back(form);
    census.representatives.push_back(tri);
  }
  set_maximizers(census);
  return census;
}

TriangleCensus filter_one_relint_facet(const TriangleCensus& census) {
  TriangleCensus out;
  out.k = census.k;
  out.search_cap = census.search_cap;
  for (std::size_t i = 0; i < census.representatives.size(); ++i) {
    const auto& t = census.representatives[i];
    bool keep = false;
    for (const auto& f : facets(t)) {
      if (relint_points(f).size() == 1) {
        keep = true;
        break;
      }
    }
    if (keep) {
      out.representatives.push_back(t);
      out.forms.push_back(census.forms[i]);
    }
  }
  set_maximizers(out);
  return out;
}

MainTheorem2dReport verify_theorem_main_2d(std::size_t k) { return verify_theorem_main_2d(k, default_cap(k)); }

MainTheorem2dReport verify_theorem_main_2d(std::size_t k, const Rational& cap) {
  const TriangleCensus all = enumerate_triangles(k, cap);
  const TriangleCensus filtered = filter_one_relint_facet(all);
  MainTheorem2dReport r;
  r.k = k;
  r.cap = cap;
  r.census_size = all.representatives.size();
  r.filtered_size = filtered.representatives.size();
  r.unfiltered_max_area = all.max_area;
  r.unfiltered_maximizers = all.maximizers.size();
  r.max_area = filtered.max_area;
  r.expected_area = zpw_volume(2, k);
  r.unique = filtered.maximizers.size() == 1;
  r.equivalent_to_zpw = r.unique && equivalent(filtered.maximizers.front(), zpw_simplex(2, k));
  r.passed = r.max_area == r.expected_area && r.unique && r.equivalent_to_zpw;
  return r;
}

std::string format_census(const TriangleCensus& census) {
  std::string out = "# k=" + std::to_string(census.k) + " cap=" + to_string(census.search_cap) +
                    " count=" + std::to_string(census.representatives.size()) + "\n";
  for (std::size_t i = 0; i < census.representatives.size(); ++i) {
    if (i > 0) out += "\n";
    out += format_simplex(census.representatives[i]);
  }
  return out;
}

}  // namespace latticebound
