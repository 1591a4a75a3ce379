#pragma once

#include <cstddef>

#include "latticebound/lattice_geometry.hpp"

namespace latticebound {

/// s_1 = 2, s_i = 1 + s_1 ... s_{i-1}. Memoized in a process-wide cache; every
/// extension re-checks s_1 ... s_{i-1} = s_i - 1. Throws DomainError for i < 1.
Integer sylvester(std::size_t i);

/// Zaks-Perles-Wills simplex conv(o, s_1 e_1, ..., s_{d-1} e_{d-1}, (k+1)(s_d - 1) e_d).
LatticeSimplex zpw_simplex(std::size_t d, std::size_t k);

/// (k+1)(s_d - 1)^2 / d!
Rational zpw_volume(std::size_t d, std::size_t k);

/// T_d = conv(o, s_1 e_1, ..., s_d e_d).
LatticeSimplex t_simplex(std::size_t d);

/// conv(o, 2e_1, 6e_2, 6e_3), the second volume maximizer with one interior
/// lattice point in dimension 3.
LatticeSimplex exceptional_p31();

/// conv(t x {0} ∪ {(k+1) e_d}) for a (d-1)-simplex t whose unique interior
/// lattice point is the origin. Throws PreconditionError otherwise. The result
/// has k interior lattice points, all on the e_d axis, and its base facet has
/// the origin as its only relative-interior lattice point.
LatticeSimplex lift(const LatticeSimplex& t, std::size_t k);

/// Edge length (s_d - 1)/(s_d - 2) of the largest cube [0, λ]^{d-1} inside T_{d-1}.
Rational inscribed_cube_scale(std::size_t d);

}  // namespace latticebound
