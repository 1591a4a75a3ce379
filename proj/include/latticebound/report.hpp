#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "latticebound/bounds.hpp"
#include "latticebound/simplex_io.hpp"
#include "latticebound/unimodular.hpp"

namespace latticebound {

inline constexpr int kSchemaVersion = 1;

struct FacetReport {
  std::size_t omitted_vertex = 0;
  std::size_t relint_count = 0;
  std::optional<FacetBoundResult> bound;  ///< present iff relint_count == 1
  std::optional<VdcResult> vdc;           ///< van der Corput on the proof-trace lattice and box
  std::optional<ProofTrace> trace;
  std::optional<EqualityCertificate> certificate;  ///< present iff the bound is tight and k >= 1
};

/// Everything the harness knows about one simplex.
struct BoundReport {
  std::optional<std::string> label;
  LatticeSimplex simplex;
  CanonicalForm canonical;
  Rational volume;
  std::size_t interior_count = 0;
  std::vector<FacetReport> facets;
  std::optional<Rational> best_facet_bound;
  std::optional<PikhurkoResult> pikhurko;  ///< present iff k >= 1
  std::optional<Rational> tau;             ///< present iff k == 1
  bool in_sk1 = false;                     ///< some facet has exactly one relint lattice point

  /// volume <= every reported bound and every van der Corput check holds
  bool sound() const;
};

BoundReport make_bound_report(const LatticeSimplex& s, std::optional<std::string> label = std::nullopt);

struct OutlookReport {
  std::size_t total = 0;
  std::size_t in_sk1 = 0;
  std::size_t nu_exceeds = 0;
  Rational threshold;  ///< vol(S_{d,k})
  std::size_t dim = 0;
  std::size_t k = 0;
  std::vector<BoundReport> details;  ///< sorted by canonical form
};

/// Every record must have dimension `dim` (DimensionError) and `k` interior
/// lattice points (DataIntegrityError); threshold is vol(S_{dim,k}). Counts
/// records with a one-point facet (in_sk1) and records with ν > threshold.
/// Records are analysed in parallel.
OutlookReport outlook_report(const std::vector<SimplexRecord>& census, std::size_t dim = 3, std::size_t k = 2);

nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const LatticePoint& p);
nlohmann::json to_json(const LatticeSimplex& s);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const OutlookReport& r);

}  // namespace latticebound
