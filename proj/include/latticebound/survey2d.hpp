#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "latticebound/unimodular.hpp"

namespace latticebound {

/// Lattice triangles with exactly k interior lattice points and area <= cap,
/// one representative per unimodular class, sorted by canonical form.
struct TriangleCensus {
  std::size_t k = 0;
  Rational search_cap;
  std::vector<LatticeSimplex> representatives;
  std::vector<CanonicalForm> forms;  ///< parallel to representatives
  Rational max_area;
  std::vector<LatticeSimplex> maximizers;
};

/// Default search cap 4(k+1).
Rational default_cap(std::size_t k);

/// Scans normal-form triangles conv(o, (a,0), (b,c)) with a·c <= 2·cap and
/// 0 <= b < c; each triangle's interior count is taken from Pick's formula and
/// re-checked by direct enumeration (VerificationError on disagreement).
/// Throws PreconditionError when cap < 2(k+1).
TriangleCensus enumerate_triangles(std::size_t k, const Rational& cap);

/// Keeps the triangles having an edge with exactly one relative-interior
/// lattice point, and recomputes the maximum.
TriangleCensus filter_one_relint_facet(const TriangleCensus& census);

struct MainTheorem2dReport {
  std::size_t k = 0;
  Rational cap;
  std::size_t census_size = 0;
  std::size_t filtered_size = 0;
  Rational unfiltered_max_area;
  std::size_t unfiltered_maximizers = 0;
  Rational max_area;
  Rational expected_area;  ///< vol(S_{2,k}) = 2(k+1)
  bool unique = false;
  bool equivalent_to_zpw = false;
  bool passed = false;
};

/// Bounded exhaustive check that S_{2,k} is the unique area maximizer among
/// triangles with k interior points and a one-point edge.
MainTheorem2dReport verify_theorem_main_2d(std::size_t k);
MainTheorem2dReport verify_theorem_main_2d(std::size_t k, const Rational& cap);

/// Census export: "# k=<k> cap=<cap> count=<n>" followed by one record per
/// representative in the simplex text format.
std::string format_census(const TriangleCensus& census);

}  // namespace latticebound
