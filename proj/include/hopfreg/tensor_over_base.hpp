#pragma once

#include <utility>
#include <vector>

#include "action.hpp"

namespace hopfreg {

/// Coordinates for B (x)_A B: the quotient of B (x)_k B by the balancing
/// relations b emb(a) (x) b' - b (x) emb(a) b'.  A canonical section is fixed
/// by the echelon form of the relation space, so every class has a preferred
/// representative whose legs can be read off.  Tensor index convention:
/// e_u (x) e_v at u*dim(B) + v.
template <ExactField F>
class BalancedTensorSpace {
 public:
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  explicit BalancedTensorSpace(RepresentedExtension<F> ext) : ext_(std::move(ext)) {
    const F& f = ext_.field();
    const Algebra<F>& b = ext_.ext();
    Index nb = b.dim(), na = ext_.base().dim();
    std::vector<Vec> relations;
    for (Index u = 0; u < nb; ++u)
      for (Index i = 0; i < na; ++i)
        for (Index v = 0; v < nb; ++v) {
          auto left = b.mul(b.basis_vec(u), ext_.embed(ext_.base().basis_vec(i)));
          auto right = b.mul(ext_.embed(ext_.base().basis_vec(i)), b.basis_vec(v));
          Vec rel = vec_zero(f, nb * nb);
          for (Index x = 0; x < nb; ++x) {
            if (!f.is_zero(left[x])) rel[x * nb + v] = f.add(rel[x * nb + v], left[x]);
            if (!f.is_zero(right[x])) rel[u * nb + x] = f.sub(rel[u * nb + x], right[x]);
          }
          relations.push_back(std::move(rel));
        }
    quotient_ = QuotientSpace<F>(f, Subspace<F>::span(f, nb * nb, relations));
  }

  const RepresentedExtension<F>& ext() const { return ext_; }
  const F& field() const { return ext_.field(); }
  Index dim() const { return quotient_.dim(); }

  Vec project(const Vec& full) const { return quotient_.project(full); }
  Vec section(const Vec& coords) const { return quotient_.section(coords); }

  /// Class of x (x) y for x, y in B.
  Vec simple_tensor(const Vec& x, const Vec& y) const {
    const F& f = field();
    Index nb = ext_.ext().dim();
    Vec full = vec_zero(f, nb * nb);
    for (Index u = 0; u < nb; ++u) {
      if (f.is_zero(x[u])) continue;
      for (Index v = 0; v < nb; ++v) {
        if (f.is_zero(y[v])) continue;
        full[u * nb + v] = f.add(full[u * nb + v], f.mul(x[u], y[v]));
      }
    }
    return project(full);
  }

  /// b . c: left multiplication on the first leg (well defined on classes).
  Vec left_mult(const Vec& b, const Vec& coords) const {
    const F& f = field();
    const Algebra<F>& algb = ext_.ext();
    Index nb = algb.dim();
    Vec full = section(coords);
    Vec out = vec_zero(f, nb * nb);
    Matrix<F> lb = algb.left_mult(b);
    for (Index u = 0; u < nb; ++u)
      for (Index v = 0; v < nb; ++v) {
        const Elem& c = full[u * nb + v];
        if (f.is_zero(c)) continue;
        for (Index x = 0; x < nb; ++x) {
          if (f.is_zero(lb.at(x, u))) continue;
          out[x * nb + v] = f.add(out[x * nb + v], f.mul(c, lb.at(x, u)));
        }
      }
    return project(out);
  }

  /// c . b: right multiplication on the second leg.
  Vec right_mult(const Vec& coords, const Vec& b) const {
    const F& f = field();
    const Algebra<F>& algb = ext_.ext();
    Index nb = algb.dim();
    Vec full = section(coords);
    Vec out = vec_zero(f, nb * nb);
    Matrix<F> rb = algb.right_mult(b);
    for (Index u = 0; u < nb; ++u)
      for (Index v = 0; v < nb; ++v) {
        const Elem& c = full[u * nb + v];
        if (f.is_zero(c)) continue;
        for (Index y = 0; y < nb; ++y) {
          if (f.is_zero(rb.at(y, v))) continue;
          out[u * nb + y] = f.add(out[u * nb + y], f.mul(c, rb.at(y, v)));
        }
      }
    return project(out);
  }

  /// Multiplication map mu: B (x)_A B -> B (well defined on classes).
  Vec mu(const Vec& coords) const {
    const F& f = field();
    const Algebra<F>& algb = ext_.ext();
    Index nb = algb.dim();
    Vec full = section(coords);
    Vec out = vec_zero(f, nb);
    for (Index u = 0; u < nb; ++u)
      for (Index v = 0; v < nb; ++v) {
        const Elem& c = full[u * nb + v];
        if (f.is_zero(c)) continue;
        out = vec_add(f, out, vec_scale(f, c, algb.mul(algb.basis_vec(u), algb.basis_vec(v))));
      }
    return out;
  }

  /// Legs (c_i, c^i) of the canonical representative.
  std::vector<std::pair<Vec, Vec>> legs(const Vec& coords) const {
    const F& f = field();
    Index nb = ext_.ext().dim();
    Vec full = section(coords);
    std::vector<std::pair<Vec, Vec>> out;
    for (Index u = 0; u < nb; ++u)
      for (Index v = 0; v < nb; ++v) {
        const Elem& c = full[u * nb + v];
        if (f.is_zero(c)) continue;
        out.push_back({vec_scale(f, c, ext_.ext().basis_vec(u)), ext_.ext().basis_vec(v)});
      }
    return out;
  }

 private:
  RepresentedExtension<F> ext_;
  QuotientSpace<F> quotient_;
};

}  // namespace hopfreg
