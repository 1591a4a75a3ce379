#include "latticebound/bounds.hpp"

#include <algorithm>

#include "latticebound/constructions.hpp"

namespace latticebound {

namespace {

Rational product(const RatVector& v, std::size_t count) {
  Rational p = 1;
  for (std::size_t i = 0; i < count; ++i) p *= v[i];
  return p;
}

Rational dfact(std::size_t d) { return Rational(factorial(static_cast<unsigned>(d))); }

void require_facet(const LatticeSimplex& s, const Face& f) {
  if (!(f.parent() == s)) throw ApplicabilityError("face does not belong to the simplex");
  if (f.vertex_indices().size() != s.dim()) throw ApplicabilityError("face is not a facet");
}

LatticePoint unique_relint_point(const Face& f) {
  auto pts = relint_points(f);
  if (pts.size() != 1) {
    throw ApplicabilityError("facet has " + std::to_string(pts.size()) +
                             " relative-interior lattice points, expected exactly 1");
  }
  return std::move(pts.front());
}

}  // namespace

FacetBoundResult facet_bound(const LatticeSimplex& s, const Face& f) {
  require_facet(s, f);
  LatticePoint x = unique_relint_point(f);
  RatVector betas = barycentric(to_rational(x), f);
  const std::size_t k = interior_points(s).size();
  const std::size_t d = s.dim();
  Rational bound = Rational(static_cast<unsigned long>(k + 1)) / (dfact(d) * product(betas, betas.size()));
  const Rational vol = volume(s);
  if (vol > bound) throw VerificationError("volume exceeds the facet bound");
  const bool tight = vol == bound;
  return {f, std::move(x), std::move(betas), std::move(bound), tight};
}

std::optional<FacetBoundResult> best_facet_bound(const LatticeSimplex& s) {
  std::optional<FacetBoundResult> best;
  for (const Face& f : facets(s)) {
    if (relint_points(f).size() != 1) continue;
    auto r = facet_bound(s, f);
    if (!best || r.bound < best->bound) best = std::move(r);
  }
  return best;
}

PikhurkoResult pikhurko(const LatticeSimplex& s) {
  const auto interior = interior_points(s);
  if (interior.empty()) throw ApplicabilityError("Pikhurko's bound needs at least one interior lattice point");
  const std::size_t d = s.dim();
  const Rational k(static_cast<unsigned long>(interior.size()));
  PikhurkoResult out;
  bool first = true;
  for (const auto& x : interior) {
    RatVector b = barycentric(to_rational(x), s);
    std::sort(b.begin(), b.end(), [](const Rational& l, const Rational& r) { return l > r; });
    Rational bound = k / (dfact(d) * product(b, d));
    if (first || bound < out.nu) out.nu = bound;
    first = false;
    out.per_point.emplace(x, PikhurkoEntry{std::move(b), std::move(bound)});
  }
  if (volume(s) > out.nu) throw VerificationError("volume exceeds Pikhurko's bound");
  return out;
}

Rational tau(const LatticeSimplex& s) {
  const auto interior = interior_points(s);
  if (interior.size() != 1) {
    throw ApplicabilityError("tau needs exactly one interior lattice point, found " +
                             std::to_string(interior.size()));
  }
  const RatVector b = barycentric(to_rational(interior.front()), s);
  return product(b, b.size());
}

Lattice::Lattice(RatMatrix basis) : basis_(std::move(basis)) {
  if (!basis_.square()) throw DimensionError("lattice basis must be square");
  det_ = latticebound::det(basis_);
  if (det_ == 0) throw DegeneracyError("lattice basis is singular");
  if (det_ < 0) det_ = -det_;
}

std::vector<RatVector> Lattice::points_in_open_box(const RatVector& betas) const {
  const std::size_t d = dim();
  if (betas.size() != d) throw DimensionError("box and lattice dimensions differ");
  HalfspaceSystem sys{RatMatrix(2 * d, d), RatVector(2 * d)};
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t c = 0; c < d; ++c) {
      sys.a(2 * i, c) = basis_(i, c);
      sys.a(2 * i + 1, c) = -basis_(i, c);
    }
    sys.b[2 * i] = betas[i];
    sys.b[2 * i + 1] = betas[i];
  }
  std::vector<RatVector> out;
  for (const auto& z : lattice_points(sys, Boundary::Open)) out.push_back(basis_ * to_rational(z));
  return out;
}

VdcResult vdc_check(const Lattice& lattice, const RatVector& betas) {
  const std::size_t d = lattice.dim();
  for (const auto& b : betas)
    if (b <= 0) throw PreconditionError("box half-widths must be positive");
  VdcResult r;
  r.points = lattice.points_in_open_box(betas);
  Integer two_d, two_d1;
  mpz_ui_pow_ui(two_d.get_mpz_t(), 2, d);
  mpz_ui_pow_ui(two_d1.get_mpz_t(), 2, d - 1);
  r.lhs = Rational(two_d) * product(betas, d);
  r.rhs = Rational(static_cast<unsigned long>(r.points.size() + 1)) * Rational(two_d1) * lattice.det();
  r.holds = r.lhs <= r.rhs;
  r.tight = r.lhs == r.rhs;
  return r;
}

ProofTrace proof_trace(const LatticeSimplex& s, const Face& f) {
  require_facet(s, f);
  const LatticePoint x = unique_relint_point(f);
  const RatVector betas = barycentric(to_rational(x), f);
  const std::size_t d = s.dim();
  const LatticePoint& apex = s.vertex(f.omitted_vertex());

  // φ^{-1} has the translated facet vertices as columns; φ(Z^d) is generated
  // by the columns of its inverse.
  RatMatrix to_simplex(d, d);
  for (std::size_t c = 0; c < d; ++c) {
    const LatticePoint& v = s.vertex(f.vertex_indices()[c]);
    for (std::size_t r = 0; r < d; ++r) to_simplex(r, c) = v[r] - apex[r];
  }
  RatMatrix phi(d, d);
  for (std::size_t c = 0; c < d; ++c) {
    RatVector e(d, 0);
    e[c] = 1;
    const RatVector col = solve(to_simplex, e);
    for (std::size_t r = 0; r < d; ++r) phi(r, c) = col[r];
  }

  RatVector shifted(d);
  for (std::size_t r = 0; r < d; ++r) shifted[r] = x[r] - apex[r];
  if (phi * shifted != betas) throw VerificationError("φ(x) differs from the barycentric coordinates");

  ProofTrace t{Lattice(phi), betas, {}, 0, 0, 0, interior_points(s).size()};
  t.y_set = t.lattice.points_in_open_box(betas);
  std::sort(t.y_set.begin(), t.y_set.end());

  const std::size_t k = t.interior_count;
  for (const auto& y : t.y_set) {
    RatVector neg(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) neg[i] = -y[i];
    if (!std::binary_search(t.y_set.begin(), t.y_set.end(), neg)) throw VerificationError("Y is not o-symmetric");

    Rational sum = 0;
    for (const auto& c : y) sum += c;
    RatVector p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = y[i] + betas[i];
    if (sum < 0) {
      ++t.h_minus_count;
      // (H⁻ ∩ Y) + b lies in Λ ∩ int Δ₀
      Rational psum = 0;
      for (const auto& c : p) {
        if (c <= 0) throw VerificationError("(H⁻∩Y)+b leaves the open simplex");
        psum += c;
      }
      if (psum >= 1) throw VerificationError("(H⁻∩Y)+b leaves the open simplex");
      for (const auto& c : to_simplex * p)
        if (!is_integral(c)) throw VerificationError("(H⁻∩Y)+b leaves the lattice");
    } else if (sum == 0) {
      ++t.h_zero_count;
      if (p != betas) throw VerificationError("(H∩Y)+b contains a point other than b");
    } else {
      ++t.h_plus_count;
    }
  }
  if (t.h_zero_count != 1) throw VerificationError("|H∩Y| != 1");
  if (t.y_set.size() != 2 * t.h_minus_count + t.h_zero_count) throw VerificationError("|Y| != 2|H⁻∩Y| + |H∩Y|");
  if (t.h_minus_count > k) throw VerificationError("|H⁻∩Y| > k");
  if (t.y_set.size() > 2 * k + 1) throw VerificationError("|Y| > 2k+1");
  return t;
}

EqualityCertificate equality_certificate(const LatticeSimplex& s, const Face& f) {
  const FacetBoundResult fb = facet_bound(s, f);
  if (!fb.tight) throw ApplicabilityError("facet bound is not attained");
  const auto interior = interior_points(s);
  if (interior.empty()) throw ApplicabilityError("equality certificate needs k >= 1");

  const std::size_t d = s.dim();
  IntVector dir(d);
  for (std::size_t c = 0; c < d; ++c) dir[c] = interior.front()[c] - fb.relint_point[c];
  Integer g = 0;
  for (const auto& v : dir) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  for (auto& v : dir) v /= g;
  const auto lead = std::find_if(dir.begin(), dir.end(), [](const Integer& v) { return v != 0; });
  if (lead != dir.end() && *lead < 0)
    for (auto& v : dir) v = -v;

  EqualityCertificate cert;
  cert.line_direction = to_rational(dir);

  std::vector<RatVector> pts{to_rational(fb.relint_point)};
  for (const auto& p : interior) pts.push_back(to_rational(p));
  cert.collinear_ok = collinear(pts);

  for (std::size_t i = 0; i <= d && !cert.parallel_edge; ++i) {
    for (std::size_t j = i + 1; j <= d; ++j) {
      RatMatrix m(2, d);
      for (std::size_t c = 0; c < d; ++c) {
        m(0, c) = cert.line_direction[c];
        m(1, c) = s.vertex(j)[c] - s.vertex(i)[c];
      }
      if (rank(m) == 1) {
        cert.parallel_edge = std::make_pair(i, j);
        break;
      }
    }
  }
  cert.edge_ok = cert.parallel_edge.has_value();
  return cert;
}

Rational general_pk_bound(std::size_t d, std::size_t k) {
  if (d < 1 || k < 1) throw DomainError("general bound needs d >= 1 and k >= 1");
  const Integer base = Integer(static_cast<unsigned long>(d * (2 * d + 1))) * (sylvester(2 * d + 1) - 1);
  Integer p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), d);
  return Rational(p * static_cast<unsigned long>(k));
}

}  // namespace latticebound
