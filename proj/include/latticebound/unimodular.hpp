#pragma once

#include <cstdint>
#include <string>

#include "latticebound/lattice_geometry.hpp"

namespace latticebound {

/// x ↦ u·x + t with u integral and |det u| = 1.
class AffineUnimodular {
 public:
  /// Throws DimensionError on shape mismatch and PreconditionError if |det u| != 1.
  AffineUnimodular(IntMatrix u, LatticePoint t);

  static AffineUnimodular identity(std::size_t d);

  const IntMatrix& matrix() const noexcept { return u_; }
  const LatticePoint& translation() const noexcept { return t_; }
  std::size_t dim() const noexcept { return u_.rows(); }

  LatticePoint operator()(const LatticePoint& x) const;

 private:
  IntMatrix u_;
  LatticePoint t_;
};

LatticeSimplex apply(const AffineUnimodular& phi, const LatticeSimplex& s);

/// Complete invariant of a full-dimensional lattice simplex under affine
/// unimodular maps: the lexicographically smallest Hermite normal form of an
/// edge matrix, over every choice of base vertex and edge order.
class CanonicalForm {
 public:
  explicit CanonicalForm(IntMatrix hnf) : hnf_(std::move(hnf)) {}

  const IntMatrix& matrix() const noexcept { return hnf_; }

  /// Row-major decimal entries; entries separated by ',' and rows by ';'.
  std::string encoding() const;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.hnf_ == b.hnf_; }
  /// Dimension first, then entries in row-major order compared numerically.
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b);

 private:
  IntMatrix hnf_;
};

CanonicalForm canonical_form(const LatticeSimplex& s);

/// Throws DimensionError when the dimensions differ.
bool equivalent(const LatticeSimplex& a, const LatticeSimplex& b);

/// Deterministic from `seed`: a product of random coordinate swaps, sign
/// flips and ±1 shears that never lets an entry of the matrix exceed
/// max(1, size) in magnitude, plus a translation with entries in [-size, size].
AffineUnimodular random_unimodular(std::size_t d, std::uint64_t seed, unsigned size);

}  // namespace latticebound
