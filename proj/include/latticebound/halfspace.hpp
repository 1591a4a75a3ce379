#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "latticebound/exact.hpp"

namespace latticebound {

/// {x : a·x <= b}, one row of `a` per inequality.
struct HalfspaceSystem {
  RatMatrix a;
  RatVector b;

  std::size_t dim() const noexcept { return a.cols(); }
  std::size_t size() const noexcept { return a.rows(); }

  bool contains(const RatVector& x) const;
  /// Every inequality strict.
  bool contains_strictly(const RatVector& x) const;
};

enum class Boundary { Closed, Open };

/// All integer points of a bounded polyhedron (Closed) or of its interior
/// (Open), sorted lexicographically.
///
/// The sweep fixes coordinates left to right. Before it starts, the system is
/// projected onto every coordinate prefix by Fourier-Motzkin elimination
/// (Chernikov's rule keeps the row count polynomial for simplices and boxes),
/// so each partial assignment gets the exact feasible interval of the next
/// coordinate. The outermost coordinate range is split across worker threads.
///
/// Throws UnboundedError if some coordinate has no upper or lower bound.
std::vector<IntVector> lattice_points(const HalfspaceSystem& sys, Boundary mode);

/// Exact [min, max] of coordinate `index` over the polyhedron. Throws
/// UnboundedError when unbounded and PreconditionError when empty.
std::pair<Rational, Rational> coordinate_bounds(const HalfspaceSystem& sys, std::size_t index);

/// False when the (closed) polyhedron is empty.
bool feasible(const HalfspaceSystem& sys);

}  // namespace latticebound
