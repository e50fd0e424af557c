#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace hopfreg {

/// A subspace of k^n held as a canonical reduced-row-echelon basis, so two
/// equal subspaces have identical representations.
template <ExactField F>
class Subspace {
 public:
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  Subspace() = default;
  static Subspace zero(F field, Index ambient) { return Subspace(field, ambient, {}); }
  static Subspace full(F field, Index ambient) {
    std::vector<Vec> rows;
    for (Index i = 0; i < ambient; ++i) rows.push_back(vec_unit(field, ambient, i));
    return Subspace(field, ambient, rows);
  }

  static Subspace span(F field, Index ambient, const std::vector<Vec>& vectors) {
    return Subspace(field, ambient, vectors);
  }

  const F& field() const { return f_; }
  Index ambient() const { return ambient_; }
  Index dim() const { return rows_.size(); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && rows_ == o.rows_;
  }

  bool is_zero() const { return rows_.empty(); }

  /// Residual of v after eliminating all pivot coordinates; zero iff v lies
  /// in the subspace.  The residual vanishes on every pivot column.
  Vec reduce(const Vec& v) const {
    if (v.size() != ambient_) throw UsageError("subspace ambient dimension mismatch");
    Vec r = v;
    for (Index i = 0; i < rows_.size(); ++i) {
      Elem factor = r[pivots_[i]];  // pivot entries are 1
      if (f_.is_zero(factor)) continue;
      for (Index j = 0; j < ambient_; ++j) r[j] = f_.sub(r[j], f_.mul(factor, rows_[i][j]));
    }
    return r;
  }

  bool contains(const Vec& v) const { return vec_is_zero(f_, reduce(v)); }

  bool contains(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw UsageError("subspace ambient dimension mismatch");
    for (const auto& v : o.rows_)
      if (!contains(v)) return false;
    return true;
  }

  /// Coordinates of v in the canonical basis, when v is a member.
  std::optional<Vec> coordinates(const Vec& v) const {
    Vec coords(rows_.size(), f_.zero());
    Vec r = v;
    for (Index i = 0; i < rows_.size(); ++i) {
      Elem c = r[pivots_[i]];
      if (f_.is_zero(c)) continue;
      coords[i] = c;
      for (Index j = 0; j < ambient_; ++j) r[j] = f_.sub(r[j], f_.mul(c, rows_[i][j]));
    }
    if (!vec_is_zero(f_, r)) return std::nullopt;
    return coords;
  }

  Vec from_coordinates(const Vec& coords) const {
    if (coords.size() != rows_.size()) throw UsageError("subspace coordinate dimension mismatch");
    Vec v = vec_zero(f_, ambient_);
    for (Index i = 0; i < rows_.size(); ++i) {
      if (f_.is_zero(coords[i])) continue;
      for (Index j = 0; j < ambient_; ++j) v[j] = f_.add(v[j], f_.mul(coords[i], rows_[i][j]));
    }
    return v;
  }

  Subspace sum(const Subspace& o) const {
    check_compatible(o);
    std::vector<Vec> rows = rows_;
    rows.insert(rows.end(), o.rows_.begin(), o.rows_.end());
    return Subspace(f_, ambient_, rows);
  }

  /// Intersection: pairs (x, y) with x^T U = y^T V give common vectors.
  Subspace intersect(const Subspace& o) const {
    check_compatible(o);
    Index d1 = dim(), d2 = o.dim();
    if (d1 == 0 || d2 == 0) return zero(f_, ambient_);
    Matrix<F> m(f_, ambient_, d1 + d2);
    for (Index c = 0; c < d1; ++c)
      for (Index r = 0; r < ambient_; ++r) m.at(r, c) = rows_[c][r];
    for (Index c = 0; c < d2; ++c)
      for (Index r = 0; r < ambient_; ++r) m.at(r, d1 + c) = f_.neg(o.rows_[c][r]);
    std::vector<Vec> vecs;
    for (const auto& k : m.kernel_basis()) {
      Vec coeffs(k.begin(), k.begin() + d1);
      vecs.push_back(from_coordinates(coeffs));
    }
    return Subspace(f_, ambient_, vecs);
  }

  std::string key() const {
    std::string s = std::to_string(dim()) + ":";
    for (const auto& r : rows_) s += vec_to_string(f_, r);
    return s;
  }

  std::string to_string() const {
    if (rows_.empty()) return "{0}";
    std::string s = "span{";
    for (Index i = 0; i < rows_.size(); ++i) {
      s += vec_to_string(f_, rows_[i]);
      if (i + 1 < rows_.size()) s += ", ";
    }
    return s + "}";
  }

  /// (dim, lexicographic basis) ordering for deterministic reports.
  static bool deterministic_less(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (Index i = 0; i < a.dim(); ++i)
      if (int c = vec_cmp<F>(a.rows_[i], b.rows_[i]); c != 0) return c < 0;
    return false;
  }

 private:
  Subspace(F field, Index ambient, const std::vector<Vec>& vectors)
      : f_(field), ambient_(ambient) {
    for (const auto& v : vectors)
      if (v.size() != ambient) throw UsageError("subspace ambient dimension mismatch");
    if (!vectors.empty()) {
      auto e = Matrix<F>::from_rows(f_, vectors, ambient).rref();
      for (Index r = 0; r < e.rank; ++r) rows_.push_back(e.reduced.row(r));
      pivots_ = e.pivots;
    }
  }

  void check_compatible(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw UsageError("subspace ambient dimension mismatch");
  }

  F f_{};
  Index ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<Index> pivots_;
};

/// Full solution of Mx = b: one particular solution plus the kernel.
template <ExactField F>
struct LinearSolution {
  std::vector<typename F::Elem> particular;
  Subspace<F> nullspace;
};

template <ExactField F>
std::optional<LinearSolution<F>> solve(const Matrix<F>& m, const std::vector<typename F::Elem>& b) {
  auto x = m.solve_particular(b);
  if (!x) return std::nullopt;
  return LinearSolution<F>{*x, Subspace<F>::span(m.field(), m.cols(), m.kernel_basis())};
}

/// Coordinates for the quotient of k^n by a subspace.  The canonical section
/// places quotient coordinates at the non-pivot positions, which makes
/// project(section(q)) == q and section(project(v)) == v (mod the subspace).
template <ExactField F>
class QuotientSpace {
 public:
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  QuotientSpace() = default;
  QuotientSpace(F field, Subspace<F> sub) : f_(field), sub_(std::move(sub)) {
    std::vector<bool> is_pivot(sub_.ambient(), false);
    for (Index c : sub_.pivots()) is_pivot[c] = true;
    for (Index c = 0; c < sub_.ambient(); ++c)
      if (!is_pivot[c]) free_.push_back(c);
  }

  Index dim() const { return free_.size(); }
  Index ambient() const { return sub_.ambient(); }
  const Subspace<F>& relations() const { return sub_; }

  Vec project(const Vec& v) const {
    Vec r = sub_.reduce(v);
    Vec q(free_.size());
    for (Index i = 0; i < free_.size(); ++i) q[i] = r[free_[i]];
    return q;
  }

  Vec section(const Vec& q) const {
    if (q.size() != free_.size()) throw UsageError("quotient coordinate dimension mismatch");
    Vec v = vec_zero(f_, sub_.ambient());
    for (Index i = 0; i < free_.size(); ++i) v[free_[i]] = q[i];
    return v;
  }

 private:
  F f_{};
  Subspace<F> sub_;
  std::vector<Index> free_;
};

/// Number of vectors in GF(p)^dim if it does not exceed cap.
inline std::optional<std::uint64_t> prime_power_within(std::int64_t p, Index dim, std::uint64_t cap) {
  std::uint64_t n = 1;
  for (Index i = 0; i < dim; ++i) {
    if (n > cap / static_cast<std::uint64_t>(p)) return std::nullopt;
    n *= static_cast<std::uint64_t>(p);
  }
  if (n > cap) return std::nullopt;
  return n;
}

/// Visits every vector of GF(p)^dim.  Guarded by callers via prime_power_within.
template <class Fn>
void for_each_vector(const PrimeField& f, Index dim, Fn&& fn) {
  std::vector<std::int64_t> v(dim, 0);
  while (true) {
    fn(const_cast<const std::vector<std::int64_t>&>(v));
    Index i = 0;
    while (i < dim) {
      if (++v[i] < f.p) break;
      v[i] = 0;
      ++i;
    }
    if (i == dim) return;
  }
}

/// Visits every vector of a subspace over GF(p) (via coefficient tuples).
template <class Fn>
void for_each_member(const PrimeField& f, const Subspace<PrimeField>& s, Fn&& fn) {
  for_each_vector(f, s.dim(), [&](const std::vector<std::int64_t>& coeffs) {
    fn(s.from_coordinates(coeffs));
  });
}

}  // namespace hopfreg
