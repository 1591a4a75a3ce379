#pragma once

#include <cstddef>
#include <vector>

#include "latticebound/exact.hpp"
#include "latticebound/halfspace.hpp"

namespace latticebound {

using LatticePoint = IntVector;

/// d+1 affinely independent points of Z^d.
class LatticeSimplex {
 public:
  /// Throws DimensionError on a wrong vertex count or ragged coordinates and
  /// DegeneracyError on affinely dependent vertices.
  explicit LatticeSimplex(std::vector<LatticePoint> vertices);

  std::size_t dim() const noexcept { return vertices_.size() - 1; }
  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
  const LatticePoint& vertex(std::size_t i) const { return vertices_.at(i); }

  /// Columns are v_j - v_base for j != base, in increasing j.
  IntMatrix edge_matrix(std::size_t base = 0) const;

  friend bool operator==(const LatticeSimplex&, const LatticeSimplex&) = default;

 private:
  std::vector<LatticePoint> vertices_;
};

/// Sub-simplex spanned by a strictly increasing subset of the parent's vertices.
class Face {
 public:
  Face(LatticeSimplex parent, std::vector<std::size_t> vertex_indices);

  const LatticeSimplex& parent() const noexcept { return parent_; }
  const std::vector<std::size_t>& vertex_indices() const noexcept { return indices_; }
  std::size_t dim() const noexcept { return indices_.size() - 1; }
  std::vector<LatticePoint> vertices() const;

  /// For a facet (d vertices): the parent vertex it omits.
  std::size_t omitted_vertex() const;

 private:
  LatticeSimplex parent_;
  std::vector<std::size_t> indices_;
};

Rational volume(const LatticeSimplex& s);

/// Barycentric coordinates of x with respect to f, ordered like
/// f.vertex_indices(). Throws HullMembershipError when x is not in aff(f).
RatVector barycentric(const RatVector& x, const Face& f);
RatVector barycentric(const RatVector& x, const LatticeSimplex& s);

/// The d+1 facets; facet i omits vertex i.
std::vector<Face> facets(const LatticeSimplex& s);

/// Row i is the inequality of the facet omitting vertex i, scaled to a
/// primitive integer normal. x is in s iff all rows hold, and in int(s) iff
/// all rows hold strictly.
HalfspaceSystem hrep(const LatticeSimplex& s);

std::vector<LatticePoint> interior_points(const LatticeSimplex& s);

/// Lattice points of relint(f), sorted. Vertices (dimension 0) give an empty list.
std::vector<LatticePoint> relint_points(const Face& f);

struct Slice {
  HalfspaceSystem system;  ///< in R^{d-1}
  bool empty = false;
};

/// {y : (y, t) in s}, with rows that do not involve y dropped; `empty` flags
/// t outside the simplex's range of x_d. Throws DimensionError for d < 2.
Slice slice(const LatticeSimplex& s, const Rational& t);

/// True iff the differences of the points span a space of dimension <= 1.
bool collinear(const std::vector<RatVector>& points);

/// Strictly convex lattice polygon with counterclockwise vertices.
class LatticePolygon {
 public:
  /// Accepts either orientation and stores counterclockwise. Throws
  /// ValidityError unless the vertices form a strictly convex polygon.
  explicit LatticePolygon(std::vector<LatticePoint> vertices);

  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }

 private:
  std::vector<LatticePoint> vertices_;
};

struct PolygonCounts {
  Rational area;
  Integer boundary;
  Integer interior;
};

/// Shoelace area, gcd boundary count, Pick interior count.
PolygonCounts polygon_counts(const LatticePolygon& p);

RatVector to_rational_point(const LatticePoint& p);

}  // namespace latticebound
