#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace hopfreg {

/// Dense matrix over an exact field.  Row-major, value semantics.
template <ExactField F>
class Matrix {
 public:
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  Matrix() = default;
  Matrix(F field, Index rows, Index cols)
      : f_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

  static Matrix identity(F field, Index n) {
    Matrix m(field, n, n);
    for (Index i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(F field, const std::vector<Vec>& rows, Index cols) {
    Matrix m(field, rows.size(), cols);
    for (Index r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw UsageError("row length mismatch");
      for (Index c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
  }

  const F& field() const { return f_; }
  Index rows() const { return rows_; }
  Index cols() const { return cols_; }

  Elem& at(Index r, Index c) { return a_[r * cols_ + c]; }
  const Elem& at(Index r, Index c) const { return a_[r * cols_ + c]; }

  Vec row(Index r) const { return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_); }
  Vec col(Index c) const {
    Vec v(rows_);
    for (Index r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
  }
  void set_row(Index r, const Vec& v) {
    for (Index c = 0; c < cols_; ++c) at(r, c) = v[c];
  }
  void set_col(Index c, const Vec& v) {
    for (Index r = 0; r < rows_; ++r) at(r, c) = v[r];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  Matrix transpose() const {
    Matrix t(f_, cols_, rows_);
    for (Index r = 0; r < rows_; ++r)
      for (Index c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw UsageError("matrix product dimension mismatch");
    Matrix out(f_, rows_, o.cols_);
    for (Index r = 0; r < rows_; ++r)
      for (Index k = 0; k < cols_; ++k) {
        const Elem& x = at(r, k);
        if (f_.is_zero(x)) continue;
        for (Index c = 0; c < o.cols_; ++c) {
          if (f_.is_zero(o.at(k, c))) continue;
          out.at(r, c) = f_.add(out.at(r, c), f_.mul(x, o.at(k, c)));
        }
      }
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix sum dimension mismatch");
    Matrix out = *this;
    for (Index i = 0; i < a_.size(); ++i) out.a_[i] = f_.add(out.a_[i], o.a_[i]);
    return out;
  }

  Matrix operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix difference dimension mismatch");
    Matrix out = *this;
    for (Index i = 0; i < a_.size(); ++i) out.a_[i] = f_.sub(out.a_[i], o.a_[i]);
    return out;
  }

  Matrix scaled(const Elem& s) const {
    Matrix out = *this;
    for (auto& x : out.a_) x = f_.mul(x, s);
    return out;
  }

  Vec apply(const Vec& v) const {
    if (v.size() != cols_) throw UsageError("matrix-vector dimension mismatch");
    Vec out(rows_, f_.zero());
    for (Index r = 0; r < rows_; ++r) {
      Elem acc = f_.zero();
      for (Index c = 0; c < cols_; ++c) {
        if (f_.is_zero(v[c])) continue;
        acc = f_.add(acc, f_.mul(at(r, c), v[c]));
      }
      out[r] = acc;
    }
    return out;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!f_.is_zero(x)) return false;
    return true;
  }

  Elem trace() const {
    if (rows_ != cols_) throw UsageError("trace of a non-square matrix");
    Elem t = f_.zero();
    for (Index i = 0; i < rows_; ++i) t = f_.add(t, at(i, i));
    return t;
  }

  struct Echelon {
    Matrix reduced;                // reduced row echelon form, zero rows kept
    std::vector<Index> pivots;     // pivot column per nonzero row
    Index rank = 0;
  };

  /// Gauss-Jordan to reduced row echelon form.
  Echelon rref() const {
    Matrix m = *this;
    std::vector<Index> pivots;
    Index r = 0;
    for (Index c = 0; c < cols_ && r < rows_; ++c) {
      Index pr = r;
      while (pr < rows_ && f_.is_zero(m.at(pr, c))) ++pr;
      if (pr == rows_) continue;
      if (pr != r)
        for (Index j = 0; j < cols_; ++j) std::swap(m.at(pr, j), m.at(r, j));
      Elem piv_inv = f_.inv(m.at(r, c));
      for (Index j = c; j < cols_; ++j) m.at(r, j) = f_.mul(m.at(r, j), piv_inv);
      for (Index i = 0; i < rows_; ++i) {
        if (i == r || f_.is_zero(m.at(i, c))) continue;
        Elem factor = m.at(i, c);
        for (Index j = c; j < cols_; ++j)
          m.at(i, j) = f_.sub(m.at(i, j), f_.mul(factor, m.at(r, j)));
      }
      pivots.push_back(c);
      ++r;
    }
    return Echelon{std::move(m), std::move(pivots), r};
  }

  Index rank() const { return rref().rank; }

  bool invertible() const { return rows_ == cols_ && rank() == rows_; }

  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) throw UsageError("inverse of a non-square matrix");
    Matrix aug(f_, rows_, 2 * cols_);
    for (Index r = 0; r < rows_; ++r) {
      for (Index c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
      aug.at(r, cols_ + r) = f_.one();
    }
    auto e = aug.rref();
    for (Index i = 0; i < rows_; ++i)
      if (i >= e.pivots.size() || e.pivots[i] != i) return std::nullopt;
    Matrix inv(f_, rows_, cols_);
    for (Index r = 0; r < rows_; ++r)
      for (Index c = 0; c < cols_; ++c) inv.at(r, c) = e.reduced.at(r, cols_ + c);
    return inv;
  }

  /// Basis of the right kernel {x : Mx = 0}, one vector per free column,
  /// in the canonical free-variable parametrisation.
  std::vector<Vec> kernel_basis() const {
    auto e = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (Index c : e.pivots) is_pivot[c] = true;
    std::vector<Vec> out;
    for (Index c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      Vec v(cols_, f_.zero());
      v[c] = f_.one();
      for (Index r = 0; r < e.pivots.size(); ++r)
        v[e.pivots[r]] = f_.neg(e.reduced.at(r, c));
      out.push_back(std::move(v));
    }
    return out;
  }

  /// One solution of Mx = b (free variables zero), or nullopt if inconsistent.
  std::optional<Vec> solve_particular(const Vec& b) const {
    if (b.size() != rows_) throw UsageError("solve: right-hand side dimension mismatch");
    Matrix aug(f_, rows_, cols_ + 1);
    for (Index r = 0; r < rows_; ++r) {
      for (Index c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
      aug.at(r, cols_) = b[r];
    }
    auto e = aug.rref();
    for (Index r = 0; r < e.pivots.size(); ++r)
      if (e.pivots[r] == cols_) return std::nullopt;  // row [0 ... 0 | 1]
    Vec x(cols_, f_.zero());
    for (Index r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced.at(r, cols_);
    return x;
  }

  std::string to_string() const {
    std::string s;
    for (Index r = 0; r < rows_; ++r) {
      s += r == 0 ? "[" : " ";
      for (Index c = 0; c < cols_; ++c) {
        s += f_.to_string(at(r, c));
        if (c + 1 < cols_) s += " ";
      }
      s += r + 1 < rows_ ? "\n" : "]";
    }
    return s;
  }

 private:
  F f_{};
  Index rows_ = 0, cols_ = 0;
  std::vector<Elem> a_;
};

// Small vector helpers shared across the library.

template <ExactField F>
std::vector<typename F::Elem> vec_zero(const F& f, Index n) {
  return std::vector<typename F::Elem>(n, f.zero());
}

template <ExactField F>
std::vector<typename F::Elem> vec_unit(const F& f, Index n, Index i) {
  auto v = vec_zero(f, n);
  v[i] = f.one();
  return v;
}

template <ExactField F>
bool vec_is_zero(const F& f, const std::vector<typename F::Elem>& v) {
  for (const auto& x : v)
    if (!f.is_zero(x)) return false;
  return true;
}

template <ExactField F>
std::vector<typename F::Elem> vec_add(const F& f, const std::vector<typename F::Elem>& a,
                                      const std::vector<typename F::Elem>& b) {
  if (a.size() != b.size()) throw UsageError("vector sum dimension mismatch");
  auto out = a;
  for (Index i = 0; i < b.size(); ++i) out[i] = f.add(out[i], b[i]);
  return out;
}

template <ExactField F>
std::vector<typename F::Elem> vec_sub(const F& f, const std::vector<typename F::Elem>& a,
                                      const std::vector<typename F::Elem>& b) {
  if (a.size() != b.size()) throw UsageError("vector difference dimension mismatch");
  auto out = a;
  for (Index i = 0; i < b.size(); ++i) out[i] = f.sub(out[i], b[i]);
  return out;
}

template <ExactField F>
std::vector<typename F::Elem> vec_scale(const F& f, const typename F::Elem& s,
                                        const std::vector<typename F::Elem>& a) {
  auto out = a;
  for (auto& x : out) x = f.mul(s, x);
  return out;
}

template <ExactField F>
std::string vec_to_string(const F& f, const std::vector<typename F::Elem>& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) {
    s += f.to_string(v[i]);
    if (i + 1 < v.size()) s += ",";
  }
  return s + ")";
}

/// Deterministic lexicographic comparison via the field's total order.
template <ExactField F>
int vec_cmp(const std::vector<typename F::Elem>& a, const std::vector<typename F::Elem>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (Index i = 0; i < a.size(); ++i)
    if (int c = F::cmp(a[i], b[i]); c != 0) return c;
  return 0;
}

}  // namespace hopfreg
