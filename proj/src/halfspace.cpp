#include "latticebound/halfspace.hpp"

#include <algorithm>
#include <map>

#include "latticebound/parallel.hpp"

namespace latticebound {

bool HalfspaceSystem::contains(const RatVector& x) const {
  if (x.size() != dim()) throw DimensionError("point dimension does not match halfspace system");
  for (std::size_t r = 0; r < size(); ++r) {
    Rational lhs = 0;
    for (std::size_t c = 0; c < dim(); ++c) lhs += a(r, c) * x[c];
    if (lhs > b[r]) return false;
  }
  return true;
}

bool HalfspaceSystem::contains_strictly(const RatVector& x) const {
  if (x.size() != dim()) throw DimensionError("point dimension does not match halfspace system");
  for (std::size_t r = 0; r < size(); ++r) {
    Rational lhs = 0;
    for (std::size_t c = 0; c < dim(); ++c) lhs += a(r, c) * x[c];
    if (lhs >= b[r]) return false;
  }
  return true;
}

namespace {

// Integer row a·x <= b with gcd(a, b) = 1. `ancestors` marks the input rows
// it was combined from (Chernikov's rule).
struct Row {
  IntVector a;
  Integer b;
  std::vector<bool> ancestors;
};

std::size_t popcount(const std::vector<bool>& bits) {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), true));
}

// Projections of one system onto every coordinate prefix.
class ProjectionChain {
 public:
  explicit ProjectionChain(const HalfspaceSystem& sys) : dim_(sys.dim()) {
    if (sys.b.size() != sys.size()) throw DimensionError("halfspace system has mismatched a and b");
    levels_.resize(dim_ + 1);

    std::vector<Row> rows;
    for (std::size_t r = 0; r < sys.size(); ++r) {
      Integer l = sys.b[r].get_den();
      for (std::size_t c = 0; c < dim_; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), sys.a(r, c).get_den_mpz_t());
      Row row;
      row.a.resize(dim_);
      for (std::size_t c = 0; c < dim_; ++c) row.a[c] = sys.a(r, c).get_num() * (l / sys.a(r, c).get_den());
      row.b = sys.b[r].get_num() * (l / sys.b[r].get_den());
      row.ancestors.assign(sys.size(), false);
      row.ancestors[r] = true;
      rows.push_back(std::move(row));
    }
    levels_[dim_] = normalize(std::move(rows));

    for (std::size_t j = dim_; j > 0; --j) {
      const std::size_t eliminated = dim_ - j + 1;
      const std::size_t last = j - 1;
      std::vector<Row> next;
      std::vector<const Row*> pos, neg;
      bool has_pos = false, has_neg = false;
      for (const Row& row : levels_[j]) {
        const int s = sgn(row.a[last]);
        if (s == 0) {
          Row copy = row;
          copy.a.pop_back();
          next.push_back(std::move(copy));
        } else if (s > 0) {
          pos.push_back(&row);
          has_pos = true;
        } else {
          neg.push_back(&row);
          has_neg = true;
        }
      }
      if (!has_pos || !has_neg) unbounded_ = true;
      for (const Row* p : pos) {
        for (const Row* q : neg) {
          std::vector<bool> anc(p->ancestors.size());
          for (std::size_t i = 0; i < anc.size(); ++i) anc[i] = p->ancestors[i] || q->ancestors[i];
          if (popcount(anc) > eliminated + 1) continue;
          const Integer fp = -q->a[last];
          const Integer fq = p->a[last];
          Row row;
          row.a.resize(last);
          for (std::size_t c = 0; c < last; ++c) row.a[c] = fp * p->a[c] + fq * q->a[c];
          row.b = fp * p->b + fq * q->b;
          row.ancestors = std::move(anc);
          next.push_back(std::move(row));
        }
      }
      levels_[last] = normalize(std::move(next));
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return empty_; }
  bool interior_empty() const noexcept { return interior_empty_; }
  bool unbounded() const noexcept { return unbounded_; }

  // Rows constraining x_0..x_{j}; index j+1 in levels_.
  const std::vector<Row>& rows_for(std::size_t coordinate) const { return levels_[coordinate + 1]; }

  // Integer range of coordinate `j` given a prefix assignment of x_0..x_{j-1}.
  // Returns false when the range is empty.
  bool range(std::size_t j, const IntVector& prefix, Boundary mode, Integer& lo, Integer& hi) const {
    bool have_lo = false, have_hi = false;
    Integer num, q;
    for (const Row& row : rows_for(j)) {
      const Integer& c = row.a[j];
      if (c == 0) continue;
      num = row.b;
      for (std::size_t i = 0; i < j; ++i) {
        if (row.a[i] != 0) num -= row.a[i] * prefix[i];
      }
      if (c > 0) {
        if (mode == Boundary::Closed) {
          mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), c.get_mpz_t());
        } else {
          mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), c.get_mpz_t());
          q -= 1;
        }
        if (!have_hi || q < hi) hi = q;
        have_hi = true;
      } else {
        if (mode == Boundary::Closed) {
          mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), c.get_mpz_t());
        } else {
          mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), c.get_mpz_t());
          q += 1;
        }
        if (!have_lo || q > lo) lo = q;
        have_lo = true;
      }
    }
    if (!have_lo || !have_hi) throw UnboundedError("coordinate " + std::to_string(j) + " is unbounded");
    return lo <= hi;
  }

  // Rational bounds of x_0 over the whole polyhedron.
  std::pair<Rational, Rational> first_coordinate_bounds() const {
    std::pair<Rational, Rational> out;
    bool have_lo = false, have_hi = false;
    for (const Row& row : rows_for(0)) {
      const Integer& c = row.a[0];
      if (c == 0) continue;
      const Rational v = make_rational(row.b, c);
      if (c > 0) {
        if (!have_hi || v < out.second) out.second = v;
        have_hi = true;
      } else {
        if (!have_lo || v > out.first) out.first = v;
        have_lo = true;
      }
    }
    if (!have_lo || !have_hi) throw UnboundedError("coordinate is unbounded");
    return out;
  }

 private:
  // Reduces rows to lowest terms, drops constant rows (recording
  // infeasibility) and keeps only the tightest row per direction.
  std::vector<Row> normalize(std::vector<Row> rows) {
    std::map<IntVector, std::pair<Rational, std::size_t>> best;
    std::vector<Row> kept;
    for (Row& row : rows) {
      Integer g = 0;
      for (const Integer& v : row.a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 0) {
        if (row.b < 0) empty_ = true;
        if (row.b <= 0) interior_empty_ = true;
        continue;
      }
      IntVector dir(row.a.size());
      for (std::size_t c = 0; c < dir.size(); ++c) dir[c] = row.a[c] / g;
      const Rational bound = make_rational(row.b, g);
      auto it = best.find(dir);
      if (it != best.end()) {
        Row& current = kept[it->second.second];
        const bool tighter = bound < it->second.first;
        const bool same_but_leaner =
            bound == it->second.first && popcount(row.ancestors) < popcount(current.ancestors);
        if (!tighter && !same_but_leaner) continue;
        it->second.first = bound;
        current.a.assign(dir.size(), 0);
        for (std::size_t c = 0; c < dir.size(); ++c) current.a[c] = dir[c] * bound.get_den();
        current.b = bound.get_num();
        current.ancestors = std::move(row.ancestors);
        continue;
      }
      Row canon;
      canon.a.resize(dir.size());
      for (std::size_t c = 0; c < dir.size(); ++c) canon.a[c] = dir[c] * bound.get_den();
      canon.b = bound.get_num();
      canon.ancestors = std::move(row.ancestors);
      best.emplace(std::move(dir), std::make_pair(bound, kept.size()));
      kept.push_back(std::move(canon));
    }
    return kept;
  }

  static int sgn(const Integer& v) { return mpz_sgn(v.get_mpz_t()); }

  std::size_t dim_;
  std::vector<std::vector<Row>> levels_;
  bool empty_ = false;
  bool interior_empty_ = false;
  bool unbounded_ = false;
};

void sweep(const ProjectionChain& chain, Boundary mode, std::size_t j, IntVector& prefix,
           std::vector<IntVector>& out) {
  Integer lo, hi;
  if (!chain.range(j, prefix, mode, lo, hi)) return;
  const bool leaf = j + 1 == chain.dim();
  for (Integer v = lo; v <= hi; ++v) {
    prefix.push_back(v);
    if (leaf) {
      out.push_back(prefix);
    } else {
      sweep(chain, mode, j + 1, prefix, out);
    }
    prefix.pop_back();
  }
}

}  // namespace

std::vector<IntVector> lattice_points(const HalfspaceSystem& sys, Boundary mode) {
  const ProjectionChain chain(sys);
  if (chain.empty()) return {};
  if (mode == Boundary::Open && chain.interior_empty()) return {};
  if (chain.unbounded()) throw UnboundedError("halfspace system is unbounded");
  if (chain.dim() == 0) return {IntVector{}};

  Integer lo, hi;
  IntVector prefix;
  if (!chain.range(0, prefix, mode, lo, hi)) return {};

  // Split the outermost coordinate into contiguous chunks; concatenating the
  // chunk results in order keeps the output lexicographically sorted.
  const Integer span = hi - lo + 1;
  const std::size_t wanted = worker_count() * 4;
  const std::size_t chunks = span < Integer(static_cast<unsigned long>(wanted)) ? span.get_ui() : wanted;
  const Integer step = (span + chunks - 1) / chunks;
  std::vector<std::vector<IntVector>> parts(chunks);
  parallel_for(chunks, [&](std::size_t i) {
    const Integer first = lo + step * static_cast<unsigned long>(i);
    Integer last = first + step - 1;
    if (last > hi) last = hi;
    IntVector local;
    for (Integer v = first; v <= last; ++v) {
      local.assign(1, v);
      if (chain.dim() == 1) {
        parts[i].push_back(local);
      } else {
        sweep(chain, mode, 1, local, parts[i]);
      }
    }
  });
  std::vector<IntVector> out;
  for (auto& part : parts) {
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::pair<Rational, Rational> coordinate_bounds(const HalfspaceSystem& sys, std::size_t index) {
  if (index >= sys.dim()) throw DimensionError("coordinate index out of range");
  HalfspaceSystem permuted{RatMatrix(sys.size(), sys.dim()), sys.b};
  for (std::size_t r = 0; r < sys.size(); ++r) {
    permuted.a(r, 0) = sys.a(r, index);
    std::size_t c2 = 1;
    for (std::size_t c = 0; c < sys.dim(); ++c) {
      if (c != index) permuted.a(r, c2++) = sys.a(r, c);
    }
  }
  const ProjectionChain chain(permuted);
  if (chain.empty()) throw PreconditionError("empty polyhedron has no coordinate bounds");
  return chain.first_coordinate_bounds();
}

bool feasible(const HalfspaceSystem& sys) { return !ProjectionChain(sys).empty(); }

}  // namespace latticebound
