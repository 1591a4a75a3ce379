#pragma once

#include <array>
#include <cstdlib>
#include <numeric>
#include <set>
#include <vector>

#include "latticebound/survey2d.hpp"

namespace lbtest {

using namespace latticebound;

// Independent brute force: every triangle with vertices in [0,12]^2, counted
// with Pick in 64-bit integers and keyed by a hand-rolled 2x2 normal form.

using Key = std::array<long, 3>;  // (g, h12, h22) of [[g, h12], [0, h22]]

inline long ext_gcd(long a, long b, long& x, long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  long x1 = 0, y1 = 0;
  const long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline Key normal_form(long a, long c, long b, long d) {
  long x = 0, y = 0;
  const long g = ext_gcd(a, c, x, y);
  const long h22 = std::abs(a * d - b * c) / g;
  long h12 = (x * b + y * d) % h22;
  if (h12 < 0) h12 += h22;
  return {g, h12, h22};
}

inline Key oracle_key(const std::array<std::array<long, 2>, 3>& v) {
  Key best{};
  bool first = true;
  const int orders[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& o : orders) {
    const auto& p = v[o[0]];
    const auto& u = v[o[1]];
    const auto& w = v[o[2]];
    const Key k = normal_form(u[0] - p[0], u[1] - p[1], w[0] - p[0], w[1] - p[1]);
    if (first || k < best) best = k;
    first = false;
  }
  return best;
}

inline std::set<Key> oracle_census(long k, long cap) {
  std::vector<std::array<long, 2>> pts;
  for (long x = 0; x <= 12; ++x)
    for (long y = 0; y <= 12; ++y) pts.push_back({x, y});
  std::set<Key> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t l = j + 1; l < pts.size(); ++l) {
        const auto &a = pts[i], &b = pts[j], &c = pts[l];
        const long twice = std::abs((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]));
        if (twice == 0 || twice > 2 * cap) continue;
        const long boundary = std::gcd(b[0] - a[0], b[1] - a[1]) + std::gcd(c[0] - b[0], c[1] - b[1]) +
                              std::gcd(a[0] - c[0], a[1] - c[1]);
        if ((twice - boundary + 2) / 2 != k) continue;
        out.insert(oracle_key({a, b, c}));
      }
  return out;
}

inline std::set<Key> keys(const TriangleCensus& c) {
  std::set<Key> out;
  for (const auto& t : c.representatives) {
    std::array<std::array<long, 2>, 3> v{};
    for (std::size_t i = 0; i < 3; ++i) v[i] = {t.vertex(i)[0].get_si(), t.vertex(i)[1].get_si()};
    out.insert(oracle_key(v));
  }
  return out;
}


}  // namespace lbtest
