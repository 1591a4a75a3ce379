#include "latticebound/constructions.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace latticebound {

namespace {

class SylvesterCache {
 public:
  Integer get(std::size_t i) {
    {
      std::shared_lock lock(mutex_);
      if (i <= values_.size()) return values_[i - 1];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() < i) {
      const Integer next = product_ + 1;
      Integer check = 1;
      for (const auto& v : values_) check *= v;
      if (check != next - 1) throw VerificationError("Sylvester product identity violated");
      product_ *= next;
      values_.push_back(next);
    }
    return values_[i - 1];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<Integer> values_;
  Integer product_ = 1;  // s_1 ... s_n for n = values_.size()
};

SylvesterCache& cache() {
  static SylvesterCache instance;
  return instance;
}

LatticePoint scaled_unit(std::size_t d, std::size_t axis, const Integer& scale) {
  LatticePoint p(d, 0);
  p[axis] = scale;
  return p;
}

}  // namespace

Integer sylvester(std::size_t i) {
  if (i < 1) throw DomainError("Sylvester index must be >= 1");
  return cache().get(i);
}

Rational zpw_volume(std::size_t d, std::size_t k) {
  const Integer s = sylvester(d) - 1;
  return make_rational(Integer(static_cast<unsigned long>(k + 1)) * s * s, factorial(static_cast<unsigned>(d)));
}

LatticeSimplex zpw_simplex(std::size_t d, std::size_t k) {
  if (d < 1) throw DomainError("dimension must be >= 1");
  std::vector<LatticePoint> verts{LatticePoint(d, 0)};
  for (std::size_t i = 1; i < d; ++i) verts.push_back(scaled_unit(d, i - 1, sylvester(i)));
  verts.push_back(scaled_unit(d, d - 1, Integer(static_cast<unsigned long>(k + 1)) * (sylvester(d) - 1)));
  LatticeSimplex s(std::move(verts));
  if (volume(s) != zpw_volume(d, k)) throw VerificationError("ZPW volume formula violated");
  return s;
}

LatticeSimplex t_simplex(std::size_t d) {
  if (d < 1) throw DomainError("dimension must be >= 1");
  std::vector<LatticePoint> verts{LatticePoint(d, 0)};
  for (std::size_t i = 1; i <= d; ++i) verts.push_back(scaled_unit(d, i - 1, sylvester(i)));
  LatticeSimplex s(std::move(verts));
  const auto inner = interior_points(s);
  if (inner.size() != 1 || inner.front() != LatticePoint(d, 1))
    throw VerificationError("T_d must have (1,...,1) as its only interior lattice point");
  return s;
}

LatticeSimplex exceptional_p31() {
  return LatticeSimplex({{0, 0, 0}, {2, 0, 0}, {0, 6, 0}, {0, 0, 6}});
}

LatticeSimplex lift(const LatticeSimplex& t, std::size_t k) {
  const std::size_t base_dim = t.dim();
  const auto inner = interior_points(t);
  const LatticePoint origin(base_dim, 0);
  if (inner.size() != 1 || inner.front() != origin) {
    throw PreconditionError("lift needs a simplex whose only interior lattice point is the origin");
  }
  std::vector<LatticePoint> verts;
  for (const auto& v : t.vertices()) {
    LatticePoint p = v;
    p.push_back(0);
    verts.push_back(std::move(p));
  }
  verts.push_back(scaled_unit(base_dim + 1, base_dim, Integer(static_cast<unsigned long>(k + 1))));
  LatticeSimplex s(std::move(verts));

  const auto interior = interior_points(s);
  if (interior.size() != k) throw VerificationError("lift does not have k interior lattice points");
  for (const auto& p : interior) {
    for (std::size_t c = 0; c < base_dim; ++c)
      if (p[c] != 0) throw VerificationError("lift interior point off the vertical axis");
  }
  const auto base_points = relint_points(facets(s).back());
  if (base_points.size() != 1) throw VerificationError("lift base facet does not have a unique relint point");
  return s;
}

Rational inscribed_cube_scale(std::size_t d) {
  if (d < 2) throw DomainError("inscribed cube scale needs d >= 2");
  const Integer s = sylvester(d);
  const Rational lambda = make_rational(s - 1, s - 2);
  Rational sum = 0;
  for (std::size_t i = 1; i < d; ++i) sum += lambda / Rational(sylvester(i));
  if (sum != 1) throw VerificationError("Egyptian-fraction identity violated");
  return lambda;
}

}  // namespace latticebound
