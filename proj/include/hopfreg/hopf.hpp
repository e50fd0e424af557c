#pragma once

#include <memory>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace hopfreg {

/// Result of auditing the Hopf axioms; empty failure list means all pass.
struct HopfAxiomReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  std::string to_string() const {
    if (ok()) return "all Hopf axioms hold";
    std::string s;
    for (const auto& f : failures) s += f + "\n";
    return s;
  }
};

/// Finite-dimensional Hopf algebra: an Algebra together with comultiplication,
/// counit and antipode as linear maps on the basis.  Tensor coordinates use
/// the fixed convention e_i (x) e_j  <->  index i*dim + j.
template <ExactField F>
class HopfAlgebra {
 public:
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  HopfAlgebra() = default;

  /// comult: per basis element, a dim^2 coordinate vector of Delta(e_i);
  /// counit: dim values; antipode: per basis element, coordinates of S(e_i).
  static HopfAlgebra create(Algebra<F> alg, std::vector<Vec> comult, Vec counit,
                            std::vector<Vec> antipode) {
    HopfAlgebra h;
    Index n = alg.dim();
    if (comult.size() != n || counit.size() != n || antipode.size() != n)
      throw ValidationError(alg.name() + ": Hopf structure maps have wrong dimensions");
    for (const auto& v : comult)
      if (v.size() != n * n) throw ValidationError(alg.name() + ": comultiplication row has wrong size");
    Matrix<F> s(alg.field(), n, n);
    for (Index i = 0; i < n; ++i) {
      if (antipode[i].size() != n) throw ValidationError(alg.name() + ": antipode row has wrong size");
      s.set_col(i, antipode[i]);
    }
    h.d_ = std::make_shared<Data>(Data{std::move(alg), std::move(comult), std::move(counit), std::move(s)});
    auto report = h.check_axioms();
    if (!report.ok()) throw ValidationError(h.algebra().name() + ": " + report.failures.front());
    return h;
  }

  const Algebra<F>& algebra() const { return d_->alg; }
  const F& field() const { return d_->alg.field(); }
  Index dim() const { return d_->alg.dim(); }
  bool same(const HopfAlgebra& o) const { return d_ == o.d_; }
  bool valid() const { return d_ != nullptr; }

  /// Delta(x) in tensor coordinates (dim^2).
  Vec comult(const Vec& x) const {
    const F& f = field();
    Index n = dim();
    Vec out = vec_zero(f, n * n);
    for (Index i = 0; i < n; ++i) {
      if (f.is_zero(x[i])) continue;
      for (Index t = 0; t < n * n; ++t) {
        const Elem& c = d_->comult[i][t];
        if (f.is_zero(c)) continue;
        out[t] = f.add(out[t], f.mul(x[i], c));
      }
    }
    return out;
  }

  /// (Delta (x) id) Delta(x), i.e. Sweedler legs h1 (x) h2 (x) h3 (dim^3).
  Vec comult3(const Vec& x) const {
    const F& f = field();
    Index n = dim();
    Vec two = comult(x);
    Vec out = vec_zero(f, n * n * n);
    for (Index m = 0; m < n; ++m)
      for (Index c = 0; c < n; ++c) {
        const Elem& coef = two[m * n + c];
        if (f.is_zero(coef)) continue;
        for (Index t = 0; t < n * n; ++t) {
          const Elem& d = d_->comult[m][t];
          if (f.is_zero(d)) continue;
          out[t * n + c] = f.add(out[t * n + c], f.mul(coef, d));
        }
      }
    return out;
  }

  Elem counit(const Vec& x) const {
    const F& f = field();
    Elem acc = f.zero();
    for (Index i = 0; i < dim(); ++i) acc = f.add(acc, f.mul(d_->counit[i], x[i]));
    return acc;
  }
  const Vec& counit_vector() const { return d_->counit; }

  Vec antipode(const Vec& x) const { return d_->antipode.apply(x); }
  const Matrix<F>& antipode_matrix() const { return d_->antipode; }
  bool antipode_bijective() const { return d_->antipode.invertible(); }

  bool cocommutative() const {
    Index n = dim();
    for (Index i = 0; i < n; ++i)
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
          if (!(d_->comult[i][a * n + b] == d_->comult[i][b * n + a])) return false;
    return true;
  }

  /// Verifies every Hopf axiom on the basis and reports all failures.
  HopfAxiomReport check_axioms() const {
    HopfAxiomReport rep;
    const F& f = field();
    const Algebra<F>& alg = d_->alg;
    Index n = dim();
    auto tensor_mul = [&](const Vec& x, const Vec& y) {
      // product in H (x) H of dim^2 vectors
      Vec out = vec_zero(f, n * n);
      for (Index a = 0; a < n * n; ++a) {
        if (f.is_zero(x[a])) continue;
        for (Index b = 0; b < n * n; ++b) {
          if (f.is_zero(y[b])) continue;
          Elem coef = f.mul(x[a], y[b]);
          Index i = a / n, j = a % n, k = b / n, l = b % n;
          for (Index u = 0; u < n; ++u) {
            const Elem& c1 = alg.sc(i, k, u);
            if (f.is_zero(c1)) continue;
            for (Index v = 0; v < n; ++v) {
              const Elem& c2 = alg.sc(j, l, v);
              if (f.is_zero(c2)) continue;
              out[u * n + v] = f.add(out[u * n + v], f.mul(coef, f.mul(c1, c2)));
            }
          }
        }
      }
      return out;
    };

    // Delta is an algebra map
    {
      Vec lhs = comult(alg.unit());
      Vec unit2 = vec_zero(f, n * n);
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) unit2[i * n + j] = f.mul(alg.unit()[i], alg.unit()[j]);
      if (lhs != unit2) rep.failures.push_back("comultiplication does not send 1 to 1(x)1");
    }
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        Vec lhs = comult(alg.mul(alg.basis_vec(i), alg.basis_vec(j)));
        Vec rhs = tensor_mul(d_->comult[i], d_->comult[j]);
        if (lhs != rhs) {
          rep.failures.push_back("comultiplication is not an algebra map at (" + alg.label(i) + "," +
                                 alg.label(j) + ")");
        }
      }

    // coassociativity
    for (Index i = 0; i < n; ++i) {
      Vec left = comult3(alg.basis_vec(i));  // (Delta (x) id) Delta
      Vec right = vec_zero(f, n * n * n);    // (id (x) Delta) Delta
      for (Index a = 0; a < n; ++a)
        for (Index m = 0; m < n; ++m) {
          const Elem& coef = d_->comult[i][a * n + m];
          if (f.is_zero(coef)) continue;
          for (Index t = 0; t < n * n; ++t) {
            const Elem& d = d_->comult[m][t];
            if (f.is_zero(d)) continue;
            right[a * n * n + t] = f.add(right[a * n * n + t], f.mul(coef, d));
          }
        }
      if (left != right) rep.failures.push_back("coassociativity fails at " + alg.label(i));
    }

    // counit laws
    for (Index i = 0; i < n; ++i) {
      Vec left = vec_zero(f, n), right = vec_zero(f, n);
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
          const Elem& c = d_->comult[i][a * n + b];
          if (f.is_zero(c)) continue;
          left[b] = f.add(left[b], f.mul(c, d_->counit[a]));
          right[a] = f.add(right[a], f.mul(c, d_->counit[b]));
        }
      if (left != alg.basis_vec(i)) rep.failures.push_back("counit law (eps (x) id) fails at " + alg.label(i));
      if (right != alg.basis_vec(i)) rep.failures.push_back("counit law (id (x) eps) fails at " + alg.label(i));
    }
    {
      if (!(counit(alg.unit()) == f.one())) rep.failures.push_back("counit does not send 1 to 1");
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
          Elem lhs = counit(alg.mul(alg.basis_vec(i), alg.basis_vec(j)));
          Elem rhs = f.mul(d_->counit[i], d_->counit[j]);
          if (!(lhs == rhs))
            rep.failures.push_back("counit is not an algebra map at (" + alg.label(i) + "," + alg.label(j) + ")");
        }
    }

    // antipode law: sum S(h1) h2 = eps(h) 1 = sum h1 S(h2)
    for (Index i = 0; i < n; ++i) {
      Vec left = vec_zero(f, n), right = vec_zero(f, n);
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
          const Elem& c = d_->comult[i][a * n + b];
          if (f.is_zero(c)) continue;
          left = vec_add(f, left, vec_scale(f, c, alg.mul(antipode(alg.basis_vec(a)), alg.basis_vec(b))));
          right = vec_add(f, right, vec_scale(f, c, alg.mul(alg.basis_vec(a), antipode(alg.basis_vec(b)))));
        }
      Vec target = vec_scale(f, d_->counit[i], alg.unit());
      if (left != target) rep.failures.push_back("antipode law S(h1)h2 = eps(h)1 fails at " + alg.label(i));
      if (right != target) rep.failures.push_back("antipode law h1 S(h2) = eps(h)1 fails at " + alg.label(i));
    }
    return rep;
  }

  const std::vector<Vec>& comult_rows() const { return d_->comult; }

 private:
  struct Data {
    Algebra<F> alg;
    std::vector<Vec> comult;
    Vec counit;
    Matrix<F> antipode;
  };
  std::shared_ptr<const Data> d_;
};

enum class IntegralSide { left, right };

/// Space of left/right integrals: t with h t = eps(h) t (resp. t h = eps(h) t).
template <ExactField F>
Subspace<F> find_integrals(const HopfAlgebra<F>& h, IntegralSide side) {
  const F& f = h.field();
  const Algebra<F>& alg = h.algebra();
  Index n = h.dim();
  Matrix<F> sys(f, n * n, n);
  for (Index u = 0; u < n; ++u) {
    Matrix<F> op = side == IntegralSide::right ? alg.right_mult(alg.basis_vec(u)) : alg.left_mult(alg.basis_vec(u));
    Matrix<F> diff = op - Matrix<F>::identity(f, n).scaled(h.counit_vector()[u]);
    for (Index r = 0; r < n; ++r)
      for (Index c = 0; c < n; ++c) sys.at(u * n + r, c) = diff.at(r, c);
  }
  return Subspace<F>::span(f, n, sys.kernel_basis());
}

/// Kernel of the counit as a subspace.
template <ExactField F>
Subspace<F> counit_kernel(const HopfAlgebra<F>& h) {
  Matrix<F> row(h.field(), 1, h.dim());
  row.set_row(0, h.counit_vector());
  return Subspace<F>::span(h.field(), h.dim(), row.kernel_basis());
}

/// The left ideal sum_b H (b - eps(b)) for a generating set.
template <ExactField F>
Subspace<F> counit_kernel_ideal(const HopfAlgebra<F>& h, const std::vector<typename Algebra<F>::Vec>& gens) {
  const F& f = h.field();
  const Algebra<F>& alg = h.algebra();
  std::vector<typename Algebra<F>::Vec> vecs;
  for (const auto& g : gens) {
    auto shifted = vec_sub(f, g, vec_scale(f, h.counit(g), alg.unit()));
    for (Index u = 0; u < h.dim(); ++u) vecs.push_back(alg.mul(alg.basis_vec(u), shifted));
  }
  return Subspace<F>::span(f, h.dim(), vecs);
}

/// Expresses h (with eps(h) = 0) as sum_i c_i (b_i - eps(b_i)); also asserts
/// the subspace identity Ker eps = sum_b H(b - eps(b)).
template <ExactField F>
std::vector<typename Algebra<F>::Vec> counit_kernel_decomposition(
    const HopfAlgebra<F>& h, const std::vector<typename Algebra<F>::Vec>& gens,
    const typename Algebra<F>::Vec& target) {
  const F& f = h.field();
  const Algebra<F>& alg = h.algebra();
  Index n = h.dim();
  if (!f.is_zero(h.counit(target)))
    throw PreconditionError("counit_kernel_decomposition: element is not in the counit kernel");
  if (!(subalgebra_closure(alg, gens) == Subspace<F>::full(f, n)))
    throw PreconditionError("counit_kernel_decomposition: generators do not generate the algebra");
  if (!(counit_kernel_ideal(h, gens) == counit_kernel(h)))
    throw TheoremViolation(alg.name() + ": Ker(eps) != sum of H(b - eps(b)) for the given generators");
  // unknowns: one H-coefficient per generator; c_i (b_i - eps(b_i)) is right
  // multiplication applied to c_i
  Index m = gens.size();
  Matrix<F> sys(f, n, m * n);
  for (Index gi = 0; gi < m; ++gi) {
    auto shifted = vec_sub(f, gens[gi], vec_scale(f, h.counit(gens[gi]), alg.unit()));
    auto rm = alg.right_mult(shifted);
    for (Index r = 0; r < n; ++r)
      for (Index c = 0; c < n; ++c) sys.at(r, gi * n + c) = rm.at(r, c);
  }
  auto sol = sys.solve_particular(target);
  if (!sol) throw TheoremViolation(alg.name() + ": counit kernel element not reachable from generators");
  std::vector<typename Algebra<F>::Vec> out;
  for (Index gi = 0; gi < m; ++gi)
    out.push_back(typename Algebra<F>::Vec(sol->begin() + gi * n, sol->begin() + (gi + 1) * n));
  return out;
}

/// Dual Hopf algebra on the dual basis: convolution product, comultiplication
/// dual to multiplication, transposed antipode.
template <ExactField F>
HopfAlgebra<F> dual_hopf(const HopfAlgebra<F>& h) {
  const F& f = h.field();
  const Algebra<F>& alg = h.algebra();
  Index n = h.dim();
  std::vector<typename F::Elem> mult(n * n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index k = 0; k < n; ++k) mult[(a * n + b) * n + k] = h.comult_rows()[k][a * n + b];
  std::vector<std::string> labels;
  for (Index i = 0; i < n; ++i) labels.push_back(alg.label(i) + "^");
  auto dual_alg = Algebra<F>::create(f, n, std::move(mult), h.counit_vector(), std::move(labels),
                                     alg.name() + "^*");
  std::vector<typename Algebra<F>::Vec> comult(n, vec_zero(f, n * n));
  for (Index k = 0; k < n; ++k)
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) comult[k][a * n + b] = alg.sc(a, b, k);
  typename Algebra<F>::Vec counit(n);
  for (Index k = 0; k < n; ++k) counit[k] = alg.unit()[k];
  std::vector<typename Algebra<F>::Vec> antipode;
  for (Index k = 0; k < n; ++k) antipode.push_back(h.antipode_matrix().row(k));
  return HopfAlgebra<F>::create(std::move(dual_alg), std::move(comult), std::move(counit), std::move(antipode));
}

}  // namespace hopfreg
