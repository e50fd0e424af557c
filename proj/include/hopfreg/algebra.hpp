#pragma once

#include <memory>
#include <string>
#include <vector>

#include "subspace.hpp"

namespace hopfreg {

/// Finite-dimensional associative unital algebra given by structure constants
/// on a chosen basis: e_i * e_j = sum_k sc(i,j,k) e_k.  Construction verifies
/// associativity on all basis triples and the two-sided unit law; immutable
/// afterwards and cheap to copy (shared data).
template <ExactField F>
class Algebra {
 public:
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  Algebra() = default;

  static Algebra create(F field, Index dim, std::vector<Elem> mult, Vec unit,
                        std::vector<std::string> labels = {}, std::string name = "algebra") {
    if (dim == 0) throw ValidationError(name + ": dimension must be positive");
    if (mult.size() != dim * dim * dim) throw ValidationError(name + ": structure constant tensor has wrong size");
    if (unit.size() != dim) throw ValidationError(name + ": unit vector has wrong size");
    if (labels.empty())
      for (Index i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
    if (labels.size() != dim) throw ValidationError(name + ": label list has wrong size");
    auto d = std::make_shared<Data>(Data{field, dim, std::move(mult), std::move(unit), std::move(labels), std::move(name)});
    Algebra a;
    a.d_ = std::move(d);
    a.validate();
    return a;
  }

  const F& field() const { return d_->field; }
  Index dim() const { return d_->dim; }
  const Vec& unit() const { return d_->unit; }
  const std::string& label(Index i) const { return d_->labels[i]; }
  const std::vector<std::string>& labels() const { return d_->labels; }
  const std::string& name() const { return d_->name; }
  bool commutative() const {
    Index n = d_->dim;
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        for (Index k = 0; k < n; ++k)
          if (!(sc(i, j, k) == sc(j, i, k))) return false;
    return true;
  }

  const Elem& sc(Index i, Index j, Index k) const { return d_->mult[(i * d_->dim + j) * d_->dim + k]; }

  /// Identity of the underlying data; used for parent checks.
  bool same(const Algebra& o) const { return d_ == o.d_; }
  bool valid() const { return d_ != nullptr; }

  Vec basis_vec(Index i) const { return vec_unit(d_->field, d_->dim, i); }

  Vec mul(const Vec& x, const Vec& y) const {
    const F& f = d_->field;
    Index n = d_->dim;
    if (x.size() != n || y.size() != n) throw UsageError("element dimension mismatch");
    Vec out = vec_zero(f, n);
    for (Index i = 0; i < n; ++i) {
      if (f.is_zero(x[i])) continue;
      for (Index j = 0; j < n; ++j) {
        if (f.is_zero(y[j])) continue;
        Elem coef = f.mul(x[i], y[j]);
        for (Index k = 0; k < n; ++k) {
          const Elem& c = sc(i, j, k);
          if (f.is_zero(c)) continue;
          out[k] = f.add(out[k], f.mul(coef, c));
        }
      }
    }
    return out;
  }

  /// Matrix of left multiplication by x.
  Matrix<F> left_mult(const Vec& x) const {
    const F& f = d_->field;
    Index n = d_->dim;
    Matrix<F> m(f, n, n);
    for (Index i = 0; i < n; ++i) {
      if (f.is_zero(x[i])) continue;
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k) {
          const Elem& c = sc(i, j, k);
          if (f.is_zero(c)) continue;
          m.at(k, j) = f.add(m.at(k, j), f.mul(x[i], c));
        }
    }
    return m;
  }

  /// Matrix of right multiplication by y.
  Matrix<F> right_mult(const Vec& y) const {
    const F& f = d_->field;
    Index n = d_->dim;
    Matrix<F> m(f, n, n);
    for (Index j = 0; j < n; ++j) {
      if (f.is_zero(y[j])) continue;
      for (Index i = 0; i < n; ++i)
        for (Index k = 0; k < n; ++k) {
          const Elem& c = sc(i, j, k);
          if (f.is_zero(c)) continue;
          m.at(k, i) = f.add(m.at(k, i), f.mul(y[j], c));
        }
    }
    return m;
  }

  Vec pow(const Vec& x, std::uint64_t e) const {
    Vec acc = d_->unit;
    Vec base = x;
    while (e > 0) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  bool is_idempotent(const Vec& e) const { return mul(e, e) == e; }

  std::string render(const Vec& v) const {
    const F& f = d_->field;
    std::string s;
    for (Index i = 0; i < d_->dim; ++i) {
      if (f.is_zero(v[i])) continue;
      if (!s.empty()) s += " + ";
      std::string c = f.to_string(v[i]);
      if (c == "1")
        s += d_->labels[i];
      else
        s += c + "*" + d_->labels[i];
    }
    return s.empty() ? "0" : s;
  }

 private:
  struct Data {
    F field;
    Index dim;
    std::vector<Elem> mult;
    Vec unit;
    std::vector<std::string> labels;
    std::string name;
  };

  void validate() const {
    const F& f = d_->field;
    Index n = d_->dim;
    // unit laws
    for (Index i = 0; i < n; ++i) {
      Vec e = basis_vec(i);
      if (mul(d_->unit, e) != e || mul(e, d_->unit) != e)
        throw ValidationError(d_->name + ": unit law fails at basis element " + d_->labels[i]);
    }
    // associativity on basis triples
    std::vector<Vec> products(n * n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) products[i * n + j] = mul(basis_vec(i), basis_vec(j));
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k) {
          Vec lhs = mul(products[i * n + j], basis_vec(k));
          Vec rhs = mul(basis_vec(i), products[j * n + k]);
          if (lhs != rhs)
            throw ValidationError(d_->name + ": associativity fails at triple (" + d_->labels[i] + "," +
                                  d_->labels[j] + "," + d_->labels[k] + ")");
        }
  }

  std::shared_ptr<const Data> d_;
};

/// Element of an algebra: parent handle plus coordinates.
template <ExactField F>
class AlgebraElement {
 public:
  using Vec = typename Algebra<F>::Vec;

  AlgebraElement() = default;
  AlgebraElement(Algebra<F> parent, Vec coords) : parent_(std::move(parent)), coords_(std::move(coords)) {
    if (coords_.size() != parent_.dim()) throw UsageError("element coordinate dimension mismatch");
  }

  const Algebra<F>& parent() const { return parent_; }
  const Vec& coords() const { return coords_; }

  AlgebraElement operator*(const AlgebraElement& o) const {
    check_parent(o);
    return AlgebraElement(parent_, parent_.mul(coords_, o.coords_));
  }
  AlgebraElement operator+(const AlgebraElement& o) const {
    check_parent(o);
    return AlgebraElement(parent_, vec_add(parent_.field(), coords_, o.coords_));
  }
  AlgebraElement operator-(const AlgebraElement& o) const {
    check_parent(o);
    return AlgebraElement(parent_, vec_sub(parent_.field(), coords_, o.coords_));
  }
  bool operator==(const AlgebraElement& o) const {
    return parent_.same(o.parent_) && coords_ == o.coords_;
  }

  std::string to_string() const { return parent_.render(coords_); }

 private:
  void check_parent(const AlgebraElement& o) const {
    if (!parent_.same(o.parent_)) throw UsageError("elements have different parent algebras");
  }
  Algebra<F> parent_;
  Vec coords_;
};

// ---- derived algebras -------------------------------------------------

template <ExactField F>
Algebra<F> opposite(const Algebra<F>& a) {
  Index n = a.dim();
  std::vector<typename F::Elem> mult(n * n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) mult[(i * n + j) * n + k] = a.sc(j, i, k);
  return Algebra<F>::create(a.field(), n, std::move(mult), a.unit(), a.labels(), a.name() + "^op");
}

/// Tensor product algebra; basis e_i (x) f_a at index i*dim(b)+a.
template <ExactField F>
Algebra<F> tensor_product(const Algebra<F>& a, const Algebra<F>& b) {
  if (!(a.field() == b.field())) throw UsageError("tensor product over different fields");
  const F& f = a.field();
  Index na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<typename F::Elem> mult(n * n * n, f.zero());
  for (Index i = 0; i < na; ++i)
    for (Index p = 0; p < nb; ++p)
      for (Index j = 0; j < na; ++j)
        for (Index q = 0; q < nb; ++q)
          for (Index k = 0; k < na; ++k) {
            if (f.is_zero(a.sc(i, j, k))) continue;
            for (Index r = 0; r < nb; ++r) {
              if (f.is_zero(b.sc(p, q, r))) continue;
              Index x = i * nb + p, y = j * nb + q, z = k * nb + r;
              mult[(x * n + y) * n + z] = f.add(mult[(x * n + y) * n + z], f.mul(a.sc(i, j, k), b.sc(p, q, r)));
            }
          }
  typename Algebra<F>::Vec unit = vec_zero(f, n);
  for (Index i = 0; i < na; ++i)
    for (Index p = 0; p < nb; ++p) unit[i * nb + p] = f.mul(a.unit()[i], b.unit()[p]);
  std::vector<std::string> labels;
  for (Index i = 0; i < na; ++i)
    for (Index p = 0; p < nb; ++p) labels.push_back(a.label(i) + "(x)" + b.label(p));
  return Algebra<F>::create(f, n, std::move(mult), std::move(unit), std::move(labels),
                            a.name() + "(x)" + b.name());
}

/// A^e = A (x) A^op, the enveloping algebra.
template <ExactField F>
Algebra<F> enveloping(const Algebra<F>& a) {
  return tensor_product(a, opposite(a));
}

/// Solution space of e_i z = z e_i for all basis elements.
template <ExactField F>
Subspace<F> center(const Algebra<F>& a) {
  const F& f = a.field();
  Index n = a.dim();
  Matrix<F> sys(f, n * n, n);
  for (Index i = 0; i < n; ++i) {
    Matrix<F> diff = a.left_mult(a.basis_vec(i)) - a.right_mult(a.basis_vec(i));
    for (Index r = 0; r < n; ++r)
      for (Index c = 0; c < n; ++c) sys.at(i * n + r, c) = diff.at(r, c);
  }
  return Subspace<F>::span(f, n, sys.kernel_basis());
}

enum class IdealSide { left, right, two_sided };

/// Smallest subspace containing the generators and closed under the requested
/// basis multiplications; stabilises within dim steps.
template <ExactField F>
Subspace<F> ideal_generated(const Algebra<F>& a, const std::vector<typename Algebra<F>::Vec>& gens,
                            IdealSide side = IdealSide::two_sided) {
  auto s = Subspace<F>::span(a.field(), a.dim(), gens);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<typename Algebra<F>::Vec> next;
    for (const auto& v : s.basis())
      for (Index i = 0; i < a.dim(); ++i) {
        if (side != IdealSide::right) {
          auto w = a.mul(a.basis_vec(i), v);
          if (!s.contains(w)) next.push_back(w);
        }
        if (side != IdealSide::left) {
          auto w = a.mul(v, a.basis_vec(i));
          if (!s.contains(w)) next.push_back(w);
        }
      }
    if (!next.empty()) {
      for (const auto& v : s.basis()) next.push_back(v);
      s = Subspace<F>::span(a.field(), a.dim(), next);
      grew = true;
    }
  }
  return s;
}

/// Unital subalgebra generated by the given vectors (always contains 1).
template <ExactField F>
Subspace<F> subalgebra_closure(const Algebra<F>& a, const std::vector<typename Algebra<F>::Vec>& gens) {
  std::vector<typename Algebra<F>::Vec> vecs = gens;
  vecs.push_back(a.unit());
  auto s = Subspace<F>::span(a.field(), a.dim(), vecs);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<typename Algebra<F>::Vec> next;
    for (const auto& v : s.basis())
      for (const auto& w : s.basis()) {
        auto u = a.mul(v, w);
        if (!s.contains(u)) next.push_back(u);
      }
    if (!next.empty()) {
      for (const auto& v : s.basis()) next.push_back(v);
      s = Subspace<F>::span(a.field(), a.dim(), next);
      grew = true;
    }
  }
  return s;
}

/// The subalgebra on a multiplicatively closed unital subspace, as an Algebra
/// in the subspace's canonical basis.
template <ExactField F>
Algebra<F> subalgebra_on(const Algebra<F>& a, const Subspace<F>& w, const std::string& name) {
  const F& f = a.field();
  Index m = w.dim();
  if (m == 0) throw UsageError(name + ": subalgebra must contain the unit");
  std::vector<typename F::Elem> mult(m * m * m, f.zero());
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) {
      auto prod = a.mul(w.basis()[i], w.basis()[j]);
      auto coords = w.coordinates(prod);
      if (!coords) throw UsageError(name + ": subspace is not multiplicatively closed");
      for (Index k = 0; k < m; ++k) mult[(i * m + j) * m + k] = (*coords)[k];
    }
  auto unit_coords = w.coordinates(a.unit());
  if (!unit_coords) throw UsageError(name + ": subspace does not contain the unit");
  return Algebra<F>::create(f, m, std::move(mult), *unit_coords, {}, name);
}

/// Quotient algebra A / I for a two-sided ideal I, in section coordinates.
template <ExactField F>
Algebra<F> quotient_algebra(const Algebra<F>& a, const Subspace<F>& ideal, const std::string& name) {
  const F& f = a.field();
  QuotientSpace<F> q(f, ideal);
  Index m = q.dim();
  if (m == 0) throw UsageError(name + ": quotient by the whole algebra");
  std::vector<typename F::Elem> mult(m * m * m, f.zero());
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) {
      auto prod = q.project(a.mul(q.section(vec_unit(f, m, i)), q.section(vec_unit(f, m, j))));
      for (Index k = 0; k < m; ++k) mult[(i * m + j) * m + k] = prod[k];
    }
  return Algebra<F>::create(f, m, std::move(mult), q.project(a.unit()), {}, name);
}

/// Product of subspaces: span of pairwise products of basis vectors.
template <ExactField F>
Subspace<F> subspace_product(const Algebra<F>& a, const Subspace<F>& u, const Subspace<F>& v) {
  std::vector<typename Algebra<F>::Vec> prods;
  for (const auto& x : u.basis())
    for (const auto& y : v.basis()) prods.push_back(a.mul(x, y));
  return Subspace<F>::span(a.field(), a.dim(), prods);
}

/// True if some power of the subspace (as a multiplicatively generated chain)
/// vanishes; the chain strictly descends, so dim steps suffice.
template <ExactField F>
bool subspace_is_nilpotent(const Algebra<F>& a, const Subspace<F>& s) {
  Subspace<F> power = s;
  for (Index step = 0; step <= a.dim(); ++step) {
    if (power.is_zero()) return true;
    Subspace<F> next = subspace_product(a, power, s);
    if (next == power) return false;
    power = next;
  }
  return power.is_zero();
}

}  // namespace hopfreg
