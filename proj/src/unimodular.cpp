#include "latticebound/unimodular.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

namespace latticebound {

AffineUnimodular::AffineUnimodular(IntMatrix u, LatticePoint t) : u_(std::move(u)), t_(std::move(t)) {
  if (!u_.square() || u_.rows() != t_.size()) throw DimensionError("unimodular map shape mismatch");
  const Integer d = det(u_);
  if (d != 1 && d != -1) throw PreconditionError("matrix is not unimodular");
}

AffineUnimodular AffineUnimodular::identity(std::size_t d) {
  return AffineUnimodular(IntMatrix::identity(d), LatticePoint(d, 0));
}

LatticePoint AffineUnimodular::operator()(const LatticePoint& x) const {
  if (x.size() != dim()) throw DimensionError("point dimension does not match the map");
  LatticePoint y = u_ * x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += t_[i];
  return y;
}

LatticeSimplex apply(const AffineUnimodular& phi, const LatticeSimplex& s) {
  if (phi.dim() != s.dim()) throw DimensionError("map and simplex dimensions differ");
  std::vector<LatticePoint> verts;
  verts.reserve(s.vertices().size());
  for (const auto& v : s.vertices()) verts.push_back(phi(v));
  return LatticeSimplex(std::move(verts));
}

std::string CanonicalForm::encoding() const {
  std::string out;
  for (std::size_t r = 0; r < hnf_.rows(); ++r) {
    if (r > 0) out += ';';
    for (std::size_t c = 0; c < hnf_.cols(); ++c) {
      if (c > 0) out += ',';
      out += hnf_(r, c).get_str();
    }
  }
  return out;
}

bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
  if (a.hnf_.rows() != b.hnf_.rows()) return a.hnf_.rows() < b.hnf_.rows();
  return a.hnf_.entries() < b.hnf_.entries();
}

CanonicalForm canonical_form(const LatticeSimplex& s) {
  const std::size_t d = s.dim();
  std::optional<IntMatrix> best;
  for (std::size_t base = 0; base <= d; ++base) {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i <= d; ++i)
      if (i != base) order.push_back(i);
    do {
      IntMatrix e(d, d);
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t r = 0; r < d; ++r) e(r, c) = s.vertex(order[c])[r] - s.vertex(base)[r];
      IntMatrix h = hnf(e).h;
      if (!best || h.entries() < best->entries()) best = std::move(h);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return CanonicalForm(std::move(*best));
}

bool equivalent(const LatticeSimplex& a, const LatticeSimplex& b) {
  if (a.dim() != b.dim()) throw DimensionError("simplices of different dimensions");
  if (volume(a) != volume(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

namespace {

Integer max_abs(const IntMatrix& m) {
  Integer best = 0;
  for (const auto& v : m.entries()) best = std::max(best, Integer(abs(v)));
  return best;
}

}  // namespace

AffineUnimodular random_unimodular(std::size_t d, std::uint64_t seed, unsigned size) {
  if (d < 1) throw DomainError("dimension must be >= 1");
  // mt19937_64's output sequence is fixed by the standard; the modulo mapping
  // keeps results identical across standard library implementations.
  std::mt19937_64 rng(seed);
  const Integer cap = std::max(1u, size);
  IntMatrix u = IntMatrix::identity(d);
  const std::size_t steps = 6 * d + 4;
  for (std::size_t step = 0; step < steps; ++step) {
    const auto op = rng() % 4;
    const std::size_t i = rng() % d;
    const std::size_t j = rng() % d;
    IntMatrix next = u;
    if (op == 0) {
      next.swap_rows(i, j);
    } else if (op == 1) {
      for (std::size_t c = 0; c < d; ++c) next(i, c) = -next(i, c);
    } else {
      if (i == j) continue;
      const int f = op == 2 ? 1 : -1;
      for (std::size_t c = 0; c < d; ++c) next(i, c) += f * next(j, c);
    }
    if (max_abs(next) <= cap) u = std::move(next);
  }
  LatticePoint t(d);
  const std::uint64_t width = 2 * static_cast<std::uint64_t>(size) + 1;
  for (std::size_t c = 0; c < d; ++c) {
    t[c] = static_cast<long>(rng() % width) - static_cast<long>(size);
  }
  return AffineUnimodular(std::move(u), std::move(t));
}

}  // namespace latticebound
