#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "latticebound/lattice_geometry.hpp"

namespace latticebound {

/// Upper bound (k+1) / (d! β_1 ... β_d) from a facet whose relative interior
/// holds exactly one lattice point x, with β the barycentric coordinates of x
/// with respect to that facet.
struct FacetBoundResult {
  Face facet;
  LatticePoint relint_point;
  RatVector betas;
  Rational bound;
  bool tight = false;  ///< volume == bound
};

/// Throws ApplicabilityError unless `f` is a facet of `s` with exactly one
/// relative-interior lattice point. Throws VerificationError if the volume
/// exceeds the bound.
FacetBoundResult facet_bound(const LatticeSimplex& s, const Face& f);

/// Minimum of facet_bound over all qualifying facets; empty when none qualifies.
std::optional<FacetBoundResult> best_facet_bound(const LatticeSimplex& s);

struct PikhurkoEntry {
  RatVector sorted_betas;  ///< all d+1 coordinates, descending
  Rational bound;          ///< k / (d! β_1 ... β_d)
};

struct PikhurkoResult {
  std::map<LatticePoint, PikhurkoEntry> per_point;
  Rational nu;  ///< min bound over the interior points
};

/// Per-interior-point bound k / (d! β_1...β_d) with β sorted descending (the
/// smallest coordinate is dropped; ties do not change the product) and its
/// minimum ν. Throws ApplicabilityError when s is hollow.
PikhurkoResult pikhurko(const LatticeSimplex& s);

/// Product of the d+1 barycentric coordinates of the unique interior lattice
/// point. Throws ApplicabilityError unless there is exactly one.
Rational tau(const LatticeSimplex& s);

/// Λ = basis · Z^d.
class Lattice {
 public:
  /// Throws DimensionError for a non-square basis, DegeneracyError if singular.
  explicit Lattice(RatMatrix basis);

  const RatMatrix& basis() const noexcept { return basis_; }
  const Rational& det() const noexcept { return det_; }
  std::size_t dim() const noexcept { return basis_.rows(); }

  /// Points of Λ in the open box Π(-β_i, β_i), sorted by their integer
  /// coordinates with respect to the basis.
  std::vector<RatVector> points_in_open_box(const RatVector& betas) const;

 private:
  RatMatrix basis_;
  Rational det_;
};

struct VdcResult {
  Rational lhs;  ///< vol(B) = 2^d Π β_i
  Rational rhs;  ///< (|Λ ∩ int B| + 1) 2^{d-1} det Λ
  bool holds = false;
  bool tight = false;
  std::vector<RatVector> points;  ///< Λ ∩ int B
};

/// Van der Corput's inequality for the box B = Π[-β_i, β_i].
VdcResult vdc_check(const Lattice& lattice, const RatVector& betas);

/// The construction behind the facet bound: after translating the vertex
/// opposite the facet to o, φ maps the facet's vertices to e_1..e_d,
/// Λ = φ(Z^d), b = φ(x) = β and Y = Λ ∩ int Π[-β_i, β_i].
struct ProofTrace {
  Lattice lattice;
  RatVector box;
  std::vector<RatVector> y_set;
  std::size_t h_minus_count = 0;
  std::size_t h_zero_count = 0;
  std::size_t h_plus_count = 0;
  std::size_t interior_count = 0;  ///< k
};

/// Builds the trace and checks its invariants (o-symmetry, |Y| = 2|H⁻∩Y| + 1,
/// |Y| <= 2k+1, (H⁻∩Y)+b ⊆ Λ ∩ int Δ₀, (H∩Y)+b = {b}); a failed check throws
/// VerificationError. Applicability as for facet_bound.
ProofTrace proof_trace(const LatticeSimplex& s, const Face& f);

struct EqualityCertificate {
  RatVector line_direction;  ///< primitive integer direction, first nonzero entry positive
  std::optional<std::pair<std::size_t, std::size_t>> parallel_edge;
  bool collinear_ok = false;
  bool edge_ok = false;
};

/// Checks the equality-case structure on a tight facet bound: x and the
/// interior lattice points lie on one line g, and some edge of s is parallel
/// to g. Throws ApplicabilityError when the bound is not tight or s is hollow.
EqualityCertificate equality_certificate(const LatticeSimplex& s, const Face& f);

/// (d(2d+1)(s_{2d+1} - 1))^d · k
Rational general_pk_bound(std::size_t d, std::size_t k);

}  // namespace latticebound
