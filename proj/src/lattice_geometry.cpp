#include "latticebound/lattice_geometry.hpp"

#include <algorithm>
#include <optional>

namespace latticebound {

LatticeSimplex::LatticeSimplex(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw DimensionError("a simplex needs at least one vertex");
  const std::size_t d = vertices_.size() - 1;
  if (d == 0) throw DimensionError("a lattice simplex needs dimension >= 1");
  for (const auto& v : vertices_) {
    if (v.size() != d) {
      throw DimensionError("expected " + std::to_string(d) + " coordinates per vertex, got " +
                           std::to_string(v.size()));
    }
  }
  if (det(edge_matrix()) == 0) throw DegeneracyError("vertices are affinely dependent");
}

IntMatrix LatticeSimplex::edge_matrix(std::size_t base) const {
  const std::size_t d = dim();
  IntMatrix e(d, d);
  std::size_t col = 0;
  for (std::size_t j = 0; j <= d; ++j) {
    if (j == base) continue;
    for (std::size_t r = 0; r < d; ++r) e(r, col) = vertices_[j][r] - vertices_[base][r];
    ++col;
  }
  return e;
}

Face::Face(LatticeSimplex parent, std::vector<std::size_t> vertex_indices)
    : parent_(std::move(parent)), indices_(std::move(vertex_indices)) {
  if (indices_.empty() || indices_.size() > parent_.dim() + 1) throw DimensionError("invalid face size");
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] > parent_.dim()) throw DimensionError("face vertex index out of range");
    if (i > 0 && indices_[i] <= indices_[i - 1]) throw DimensionError("face indices must be strictly increasing");
  }
}

std::vector<LatticePoint> Face::vertices() const {
  std::vector<LatticePoint> out;
  out.reserve(indices_.size());
  for (std::size_t i : indices_) out.push_back(parent_.vertex(i));
  return out;
}

std::size_t Face::omitted_vertex() const {
  if (indices_.size() != parent_.dim()) throw PreconditionError("not a facet");
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] != i) return i;
  }
  return indices_.size();
}

RatVector to_rational_point(const LatticePoint& p) { return to_rational(p); }

Rational volume(const LatticeSimplex& s) {
  Integer v = det(s.edge_matrix());
  if (v < 0) v = -v;
  return make_rational(v, factorial(static_cast<unsigned>(s.dim())));
}

namespace {

// Coordinates in which the projection of aff(vertices) is bijective: the
// m-subset of coordinates whose projected edge matrix has the smallest
// nonzero |det|, which makes the projected simplex as small as possible.
struct Chart {
  std::vector<std::size_t> coords;
  IntMatrix projected_edges;  // m x m
};

std::optional<Chart> find_chart(const std::vector<LatticePoint>& verts) {
  const std::size_t d = verts.front().size();
  const std::size_t m = verts.size() - 1;
  if (m > d) return std::nullopt;
  std::vector<bool> pick(d, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(m), true);
  std::optional<Chart> best;
  Integer best_det;
  // prev_permutation over a sorted-descending mask enumerates all m-subsets.
  do {
    Chart c;
    for (std::size_t i = 0; i < d; ++i)
      if (pick[i]) c.coords.push_back(i);
    c.projected_edges = IntMatrix(m, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t j = 1; j <= m; ++j) c.projected_edges(r, j - 1) = verts[j][c.coords[r]] - verts[0][c.coords[r]];
    Integer dt = det(c.projected_edges);
    if (dt < 0) dt = -dt;
    if (dt != 0 && (!best || dt < best_det)) {
      best_det = dt;
      best = std::move(c);
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

RatVector barycentric_in_chart(const RatVector& x, const std::vector<LatticePoint>& verts, const Chart& chart) {
  const std::size_t m = verts.size() - 1;
  const std::size_t d = x.size();
  RatVector rhs(m);
  for (std::size_t r = 0; r < m; ++r) rhs[r] = x[chart.coords[r]] - Rational(verts[0][chart.coords[r]]);
  const RatVector tail = solve(to_rational(chart.projected_edges), rhs);
  RatVector beta(m + 1);
  beta[0] = 1;
  for (std::size_t j = 0; j < m; ++j) {
    beta[j + 1] = tail[j];
    beta[0] -= tail[j];
  }
  for (std::size_t c = 0; c < d; ++c) {
    Rational acc = 0;
    for (std::size_t j = 0; j <= m; ++j) acc += beta[j] * verts[j][c];
    if (acc != x[c]) throw HullMembershipError("point is not in the affine hull of the face");
  }
  return beta;
}

}  // namespace

RatVector barycentric(const RatVector& x, const Face& f) {
  const auto verts = f.vertices();
  if (x.size() != f.parent().dim()) throw DimensionError("point dimension does not match face");
  const auto chart = find_chart(verts);
  if (!chart) throw DegeneracyError("face vertices are affinely dependent");
  return barycentric_in_chart(x, verts, *chart);
}

RatVector barycentric(const RatVector& x, const LatticeSimplex& s) {
  std::vector<std::size_t> all(s.dim() + 1);
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return barycentric(x, Face(s, std::move(all)));
}

std::vector<Face> facets(const LatticeSimplex& s) {
  std::vector<Face> out;
  for (std::size_t omit = 0; omit <= s.dim(); ++omit) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i <= s.dim(); ++i)
      if (i != omit) idx.push_back(i);
    out.emplace_back(s, std::move(idx));
  }
  return out;
}

HalfspaceSystem hrep(const LatticeSimplex& s) {
  const std::size_t d = s.dim();
  HalfspaceSystem sys{RatMatrix(d + 1, d), RatVector(d + 1)};
  for (std::size_t omit = 0; omit <= d; ++omit) {
    // Normal to the facet: signed maximal minors of its (d-1) x d edge matrix.
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i <= d; ++i)
      if (i != omit) others.push_back(i);
    const LatticePoint& ref = s.vertex(others[0]);
    IntVector normal(d);
    for (std::size_t c = 0; c < d; ++c) {
      IntMatrix minor(d - 1, d - 1);
      for (std::size_t e = 1; e < others.size(); ++e) {
        std::size_t cc = 0;
        for (std::size_t k = 0; k < d; ++k) {
          if (k == c) continue;
          minor(e - 1, cc++) = s.vertex(others[e])[k] - ref[k];
        }
      }
      normal[c] = det(minor);
      if (c % 2 == 1) normal[c] = -normal[c];
    }
    Integer g = 0;
    for (const auto& v : normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    for (auto& v : normal) v /= g;
    Integer rhs = 0, at_omitted = 0;
    for (std::size_t c = 0; c < d; ++c) {
      rhs += normal[c] * ref[c];
      at_omitted += normal[c] * s.vertex(omit)[c];
    }
    if (at_omitted > rhs) {
      for (auto& v : normal) v = -v;
      rhs = -rhs;
    }
    for (std::size_t c = 0; c < d; ++c) sys.a(omit, c) = normal[c];
    sys.b[omit] = rhs;
  }
  return sys;
}

std::vector<LatticePoint> interior_points(const LatticeSimplex& s) {
  return lattice_points(hrep(s), Boundary::Open);
}

std::vector<LatticePoint> relint_points(const Face& f) {
  if (f.dim() == 0) return {};
  if (f.dim() == f.parent().dim()) return interior_points(f.parent());

  const auto verts = f.vertices();
  const auto chart = find_chart(verts);
  if (!chart) throw DegeneracyError("face vertices are affinely dependent");
  const std::size_t m = f.dim();

  std::vector<LatticePoint> projected;
  for (const auto& v : verts) {
    LatticePoint p(m);
    for (std::size_t r = 0; r < m; ++r) p[r] = v[chart->coords[r]];
    projected.push_back(std::move(p));
  }
  const LatticeSimplex shadow(std::move(projected));

  // Every lattice point of relint(f) projects to an interior lattice point of
  // the shadow; lift those back and keep the integral ones.
  std::vector<LatticePoint> out;
  const RatMatrix edges = to_rational(chart->projected_edges);
  for (const auto& y : interior_points(shadow)) {
    RatVector rhs(m);
    for (std::size_t r = 0; r < m; ++r) rhs[r] = Rational(y[r] - verts[0][chart->coords[r]]);
    const RatVector tail = solve(edges, rhs);
    LatticePoint x(verts[0]);
    bool integral = true;
    for (std::size_t c = 0; c < x.size() && integral; ++c) {
      Rational acc(verts[0][c]);
      for (std::size_t j = 0; j < m; ++j) acc += tail[j] * (verts[j + 1][c] - verts[0][c]);
      if (!is_integral(acc)) integral = false;
      else x[c] = acc.get_num();
    }
    if (integral) out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Slice slice(const LatticeSimplex& s, const Rational& t) {
  const std::size_t d = s.dim();
  if (d < 2) throw DimensionError("slices need dimension >= 2");
  const HalfspaceSystem full = hrep(s);
  Integer lo = s.vertex(0)[d - 1], hi = lo;
  for (const auto& v : s.vertices()) {
    if (v[d - 1] < lo) lo = v[d - 1];
    if (v[d - 1] > hi) hi = v[d - 1];
  }
  const bool empty = t < Rational(lo) || t > Rational(hi);

  // a facet parallel to the slicing hyperplane becomes a constant row; when
  // the slice is nonempty that row holds trivially and is dropped
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r <= d; ++r) {
    for (std::size_t c = 0; c + 1 < d; ++c) {
      if (full.a(r, c) != 0) {
        keep.push_back(r);
        break;
      }
    }
  }
  Slice out{HalfspaceSystem{RatMatrix(keep.size(), d - 1), RatVector(keep.size())}, empty};
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const std::size_t r = keep[i];
    for (std::size_t c = 0; c + 1 < d; ++c) out.system.a(i, c) = full.a(r, c);
    out.system.b[i] = full.b[r] - full.a(r, d - 1) * t;
  }
  return out;
}

bool collinear(const std::vector<RatVector>& points) {
  if (points.empty()) throw PreconditionError("collinearity of an empty point set");
  if (points.size() <= 2) return true;
  const std::size_t d = points.front().size();
  RatMatrix diffs(points.size() - 1, d);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != d) throw DimensionError("points of different dimensions");
    for (std::size_t c = 0; c < d; ++c) diffs(i - 1, c) = points[i][c] - points[0][c];
  }
  return rank(diffs) <= 1;
}

namespace {

Integer cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

LatticePolygon::LatticePolygon(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw ValidityError("a polygon needs at least three vertices");
  for (const auto& v : vertices_)
    if (v.size() != 2) throw ValidityError("polygon vertices must be planar");
  Integer twice_area = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = vertices_[i];
    const auto& q = vertices_[(i + 1) % n];
    twice_area += p[0] * q[1] - p[1] * q[0];
  }
  if (twice_area == 0) throw ValidityError("degenerate polygon");
  if (twice_area < 0) std::reverse(vertices_.begin(), vertices_.end());
  // Strict convexity: every other vertex lies strictly left of every edge.
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % n];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      if (cross(a, b, vertices_[j]) <= 0) throw ValidityError("polygon is not strictly convex");
    }
  }
}

PolygonCounts polygon_counts(const LatticePolygon& p) {
  const auto& v = p.vertices();
  const std::size_t n = v.size();
  Integer twice_area = 0, boundary = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % n];
    twice_area += a[0] * b[1] - a[1] * b[0];
    Integer g;
    const Integer dx = b[0] - a[0], dy = b[1] - a[1];
    mpz_gcd(g.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
    boundary += g;
  }
  // Pick: A = I + B/2 - 1
  const Integer interior = (twice_area - boundary + 2) / 2;
  return {make_rational(twice_area, 2), boundary, interior};
}

}  // namespace latticebound
