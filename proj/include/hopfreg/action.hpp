#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "hopf.hpp"

namespace hopfreg {

/// Left module-algebra action of a Hopf algebra H on an algebra A, stored as
/// one dimA x dimA matrix per H-basis element.  Construction verifies the
/// module axioms and the module-algebra axioms on the basis.
template <ExactField F>
class ModuleAction {
 public:
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  ModuleAction() = default;

  static ModuleAction create(HopfAlgebra<F> hopf, Algebra<F> alg, std::vector<Matrix<F>> act,
                             std::string name = "action") {
    if (!(hopf.field() == alg.field())) throw ValidationError(name + ": field mismatch between H and A");
    if (act.size() != hopf.dim()) throw ValidationError(name + ": one action matrix per H basis element required");
    for (const auto& m : act)
      if (m.rows() != alg.dim() || m.cols() != alg.dim())
        throw ValidationError(name + ": action matrix has wrong dimensions");
    ModuleAction a;
    a.d_ = std::make_shared<Data>(Data{std::move(hopf), std::move(alg), std::move(act), std::move(name)});
    a.validate();
    return a;
  }

  const HopfAlgebra<F>& hopf() const { return d_->hopf; }
  const Algebra<F>& algebra() const { return d_->alg; }
  const F& field() const { return d_->alg.field(); }
  const std::string& name() const { return d_->name; }
  const Matrix<F>& act_basis(Index u) const { return d_->act[u]; }
  bool same(const ModuleAction& o) const { return d_ == o.d_; }

  /// Action of an arbitrary h on an arbitrary a.
  Vec act(const Vec& h, const Vec& a) const {
    const F& f = field();
    Vec out = vec_zero(f, d_->alg.dim());
    for (Index u = 0; u < d_->hopf.dim(); ++u) {
      if (f.is_zero(h[u])) continue;
      out = vec_add(f, out, vec_scale(f, h[u], d_->act[u].apply(a)));
    }
    return out;
  }

 private:
  struct Data {
    HopfAlgebra<F> hopf;
    Algebra<F> alg;
    std::vector<Matrix<F>> act;
    std::string name;
  };

  void validate() const {
    const F& f = field();
    const Algebra<F>& alg = d_->alg;
    const HopfAlgebra<F>& h = d_->hopf;
    Index nh = h.dim(), na = alg.dim();
    // 1 . a = a
    Matrix<F> unit_action(f, na, na);
    for (Index u = 0; u < nh; ++u) {
      if (f.is_zero(h.algebra().unit()[u])) continue;
      unit_action = unit_action + d_->act[u].scaled(h.algebra().unit()[u]);
    }
    if (!(unit_action == Matrix<F>::identity(f, na)))
      throw ValidationError(d_->name + ": 1 does not act as the identity");
    // (hk) . a = h . (k . a)
    for (Index u = 0; u < nh; ++u)
      for (Index v = 0; v < nh; ++v) {
        Matrix<F> rhs = d_->act[u] * d_->act[v];
        Matrix<F> lhs(f, na, na);
        for (Index k = 0; k < nh; ++k) {
          const Elem& c = h.algebra().sc(u, v, k);
          if (f.is_zero(c)) continue;
          lhs = lhs + d_->act[k].scaled(c);
        }
        if (!(lhs == rhs))
          throw ValidationError(d_->name + ": module axiom fails at (" + h.algebra().label(u) + "," +
                                h.algebra().label(v) + ")");
      }
    // h . (ab) = sum (h1 . a)(h2 . b)
    for (Index u = 0; u < nh; ++u) {
      const auto& delta = h.comult_rows()[u];
      for (Index i = 0; i < na; ++i)
        for (Index j = 0; j < na; ++j) {
          Vec lhs = d_->act[u].apply(alg.mul(alg.basis_vec(i), alg.basis_vec(j)));
          Vec rhs = vec_zero(f, na);
          for (Index a = 0; a < nh; ++a)
            for (Index b = 0; b < nh; ++b) {
              const Elem& c = delta[a * nh + b];
              if (f.is_zero(c)) continue;
              rhs = vec_add(f, rhs,
                            vec_scale(f, c, alg.mul(d_->act[a].apply(alg.basis_vec(i)),
                                                    d_->act[b].apply(alg.basis_vec(j)))));
            }
          if (lhs != rhs)
            throw ValidationError(d_->name + ": module-algebra axiom fails at (" + h.algebra().label(u) +
                                  "; " + alg.label(i) + "," + alg.label(j) + ")");
        }
      // h . 1 = eps(h) 1
      Vec lhs = d_->act[u].apply(alg.unit());
      if (lhs != vec_scale(f, h.counit_vector()[u], alg.unit()))
        throw ValidationError(d_->name + ": h.1 = eps(h)1 fails at " + h.algebra().label(u));
    }
  }

  std::shared_ptr<const Data> d_;
};

/// Algebra extension A in B carrying a module structure on A: B acts on A
/// through matrices, the embedding restricts the action to left
/// multiplications, and alpha(b) = b . 1 is onto.
template <ExactField F>
class RepresentedExtension {
 public:
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  RepresentedExtension() = default;

  static RepresentedExtension create(Algebra<F> base, Algebra<F> ext, Matrix<F> embed,
                                     std::vector<Matrix<F>> module, std::string name) {
    RepresentedExtension r;
    r.d_ = std::make_shared<Data>(Data{std::move(base), std::move(ext), std::move(embed), std::move(module), std::move(name)});
    r.validate();
    return r;
  }

  const Algebra<F>& base() const { return d_->base; }
  const Algebra<F>& ext() const { return d_->ext; }
  const Matrix<F>& embed_matrix() const { return d_->embed; }
  const F& field() const { return d_->base.field(); }
  const std::string& name() const { return d_->name; }
  bool same(const RepresentedExtension& o) const { return d_ == o.d_; }

  Vec embed(const Vec& a) const { return d_->embed.apply(a); }

  const Matrix<F>& module_basis(Index u) const { return d_->module[u]; }

  /// b . a for arbitrary coordinates.
  Vec act(const Vec& b, const Vec& a) const {
    const F& f = field();
    Vec out = vec_zero(f, d_->base.dim());
    for (Index u = 0; u < d_->ext.dim(); ++u) {
      if (f.is_zero(b[u])) continue;
      out = vec_add(f, out, vec_scale(f, b[u], d_->module[u].apply(a)));
    }
    return out;
  }

  /// Matrix of a |-> b . a.
  Matrix<F> act_matrix(const Vec& b) const {
    const F& f = field();
    Matrix<F> m(f, d_->base.dim(), d_->base.dim());
    for (Index u = 0; u < d_->ext.dim(); ++u) {
      if (f.is_zero(b[u])) continue;
      m = m + d_->module[u].scaled(b[u]);
    }
    return m;
  }

  /// alpha(b) = b . 1 as a matrix B -> A.
  Matrix<F> alpha_matrix() const {
    const F& f = field();
    Matrix<F> m(f, d_->base.dim(), d_->ext.dim());
    for (Index u = 0; u < d_->ext.dim(); ++u) m.set_col(u, d_->module[u].apply(d_->base.unit()));
    return m;
  }

 private:
  struct Data {
    Algebra<F> base;
    Algebra<F> ext;
    Matrix<F> embed;  // dimB x dimA, column i = embed(e_i)
    std::vector<Matrix<F>> module;
    std::string name;
  };

  void validate() const {
    const F& f = field();
    const Algebra<F>& a = d_->base;
    const Algebra<F>& b = d_->ext;
    Index na = a.dim(), nb = b.dim();
    if (d_->embed.rows() != nb || d_->embed.cols() != na)
      throw ValidationError(d_->name + ": embedding matrix has wrong dimensions");
    if (d_->module.size() != nb) throw ValidationError(d_->name + ": one module matrix per B basis element required");
    if (d_->embed.rank() != na) throw ValidationError(d_->name + ": embedding is not injective");
    // embedding is a unital algebra map
    if (embed(a.unit()) != b.unit()) throw ValidationError(d_->name + ": embedding does not preserve the unit");
    for (Index i = 0; i < na; ++i)
      for (Index j = 0; j < na; ++j) {
        Vec lhs = embed(a.mul(a.basis_vec(i), a.basis_vec(j)));
        Vec rhs = b.mul(embed(a.basis_vec(i)), embed(a.basis_vec(j)));
        if (lhs != rhs)
          throw ValidationError(d_->name + ": embedding is not an algebra map at (" + a.label(i) + "," + a.label(j) + ")");
      }
    // the module structure restricts to left multiplication on A
    for (Index i = 0; i < na; ++i)
      if (!(act_matrix(embed(a.basis_vec(i))) == a.left_mult(a.basis_vec(i))))
        throw ValidationError(d_->name + ": embedded " + a.label(i) + " does not act by left multiplication");
    // the action realises B -> End(A): (b b') . a = b . (b' . a)
    for (Index u = 0; u < nb; ++u)
      for (Index v = 0; v < nb; ++v) {
        Matrix<F> lhs(f, na, na);
        for (Index k = 0; k < nb; ++k) {
          const Elem& c = b.sc(u, v, k);
          if (f.is_zero(c)) continue;
          lhs = lhs + d_->module[k].scaled(c);
        }
        if (!(lhs == d_->module[u] * d_->module[v]))
          throw ValidationError(d_->name + ": module structure fails at (" + b.label(u) + "," + b.label(v) + ")");
      }
    // alpha is onto and splits the embedding
    if (alpha_matrix().rank() != na) throw ValidationError(d_->name + ": alpha(b) = b.1 is not surjective");
    if (!((alpha_matrix() * d_->embed) == Matrix<F>::identity(f, na)))
      throw ValidationError(d_->name + ": alpha does not restrict to the identity on A");
  }

  std::shared_ptr<const Data> d_;
};

/// B = A viewed as an extension of itself (action by left multiplication).
template <ExactField F>
RepresentedExtension<F> self_extension(const Algebra<F>& a) {
  std::vector<Matrix<F>> module;
  for (Index i = 0; i < a.dim(); ++i) module.push_back(a.left_mult(a.basis_vec(i)));
  return RepresentedExtension<F>::create(a, a, Matrix<F>::identity(a.field(), a.dim()), std::move(module),
                                         a.name() + " in itself");
}

/// The smash product A # H: algebra on A (x) H with
/// (a#h)(b#g) = sum a (h1.b) # h2 g, acting on A by (a#h).b = a(h.b).
template <ExactField F>
RepresentedExtension<F> smash_product(const ModuleAction<F>& action) {
  const F& f = action.field();
  const Algebra<F>& a = action.algebra();
  const HopfAlgebra<F>& h = action.hopf();
  Index na = a.dim(), nh = h.dim(), nb = na * nh;
  std::vector<typename F::Elem> mult(nb * nb * nb, f.zero());
  for (Index i = 0; i < na; ++i)
    for (Index u = 0; u < nh; ++u) {
      const auto& delta = h.comult_rows()[u];
      for (Index j = 0; j < na; ++j)
        for (Index v = 0; v < nh; ++v) {
          Index x = i * nh + u, y = j * nh + v;
          for (Index p = 0; p < nh; ++p)
            for (Index q = 0; q < nh; ++q) {
              const auto& c = delta[p * nh + q];
              if (f.is_zero(c)) continue;
              auto left = a.mul(a.basis_vec(i), action.act_basis(p).apply(a.basis_vec(j)));
              auto right = h.algebra().mul(h.algebra().basis_vec(q), h.algebra().basis_vec(v));
              for (Index k = 0; k < na; ++k) {
                if (f.is_zero(left[k])) continue;
                for (Index w = 0; w < nh; ++w) {
                  if (f.is_zero(right[w])) continue;
                  Index z = k * nh + w;
                  mult[(x * nb + y) * nb + z] =
                      f.add(mult[(x * nb + y) * nb + z], f.mul(c, f.mul(left[k], right[w])));
                }
              }
            }
        }
    }
  typename Algebra<F>::Vec unit = vec_zero(f, nb);
  for (Index i = 0; i < na; ++i)
    for (Index u = 0; u < nh; ++u) unit[i * nh + u] = f.mul(a.unit()[i], h.algebra().unit()[u]);
  std::vector<std::string> labels;
  for (Index i = 0; i < na; ++i)
    for (Index u = 0; u < nh; ++u) labels.push_back(a.label(i) + "#" + h.algebra().label(u));
  auto smash = Algebra<F>::create(f, nb, std::move(mult), std::move(unit), std::move(labels),
                                  a.name() + "#" + h.algebra().name());
  Matrix<F> embed(f, nb, na);
  for (Index i = 0; i < na; ++i) {
    typename Algebra<F>::Vec col = vec_zero(f, nb);
    for (Index u = 0; u < nh; ++u) col[i * nh + u] = h.algebra().unit()[u];
    embed.set_col(i, col);
  }
  std::vector<Matrix<F>> module;
  for (Index i = 0; i < na; ++i) {
    Matrix<F> li = a.left_mult(a.basis_vec(i));
    for (Index u = 0; u < nh; ++u) module.push_back(li * action.act_basis(u));
  }
  return RepresentedExtension<F>::create(a, std::move(smash), std::move(embed), std::move(module),
                                         a.name() + "#" + h.algebra().name());
}

/// The enveloping Hopf algebroid A^e |><| H on A (x) A (x) H with
/// [(a(x)b)|><|h][(a'(x)b')|><|h'] = sum a(h1.a') (x) (h3.b')b |><| h2 h',
/// acting on A by ((a(x)b)|><|h).x = a (h.x) b.
template <ExactField F>
RepresentedExtension<F> enveloping_hopf_algebroid(const ModuleAction<F>& action) {
  const F& f = action.field();
  const Algebra<F>& a = action.algebra();
  const HopfAlgebra<F>& h = action.hopf();
  Index na = a.dim(), nh = h.dim(), nb = na * na * nh;
  auto idx = [&](Index i, Index j, Index u) { return (i * na + j) * nh + u; };
  // Sweedler legs h1 (x) h2 (x) h3 per basis element
  std::vector<typename Algebra<F>::Vec> delta3;
  for (Index u = 0; u < nh; ++u) delta3.push_back(h.comult3(h.algebra().basis_vec(u)));
  std::vector<typename F::Elem> mult(nb * nb * nb, f.zero());
  for (Index i = 0; i < na; ++i)
    for (Index j = 0; j < na; ++j)
      for (Index u = 0; u < nh; ++u) {
        Index x = idx(i, j, u);
        for (Index k = 0; k < na; ++k)
          for (Index l = 0; l < na; ++l)
            for (Index v = 0; v < nh; ++v) {
              Index y = idx(k, l, v);
              for (Index p = 0; p < nh; ++p)
                for (Index q = 0; q < nh; ++q)
                  for (Index r = 0; r < nh; ++r) {
                    const auto& c = delta3[u][(p * nh + q) * nh + r];
                    if (f.is_zero(c)) continue;
                    auto left = a.mul(a.basis_vec(i), action.act_basis(p).apply(a.basis_vec(k)));
                    auto right = a.mul(action.act_basis(r).apply(a.basis_vec(l)), a.basis_vec(j));
                    auto mid = h.algebra().mul(h.algebra().basis_vec(q), h.algebra().basis_vec(v));
                    for (Index k2 = 0; k2 < na; ++k2) {
                      if (f.is_zero(left[k2])) continue;
                      for (Index l2 = 0; l2 < na; ++l2) {
                        if (f.is_zero(right[l2])) continue;
                        auto coef = f.mul(c, f.mul(left[k2], right[l2]));
                        for (Index w = 0; w < nh; ++w) {
                          if (f.is_zero(mid[w])) continue;
                          Index z = idx(k2, l2, w);
                          mult[(x * nb + y) * nb + z] = f.add(mult[(x * nb + y) * nb + z], f.mul(coef, mid[w]));
                        }
                      }
                    }
                  }
            }
      }
  typename Algebra<F>::Vec unit = vec_zero(f, nb);
  for (Index i = 0; i < na; ++i)
    for (Index j = 0; j < na; ++j)
      for (Index u = 0; u < nh; ++u)
        unit[idx(i, j, u)] = f.mul(f.mul(a.unit()[i], a.unit()[j]), h.algebra().unit()[u]);
  std::vector<std::string> labels;
  for (Index i = 0; i < na; ++i)
    for (Index j = 0; j < na; ++j)
      for (Index u = 0; u < nh; ++u)
        labels.push_back("(" + a.label(i) + "(x)" + a.label(j) + ")|" + h.algebra().label(u));
  auto algebroid = Algebra<F>::create(f, nb, std::move(mult), std::move(unit), std::move(labels),
                                      a.name() + "^e|><|" + h.algebra().name());
  Matrix<F> embed(f, nb, na);
  for (Index i = 0; i < na; ++i) {
    typename Algebra<F>::Vec col = vec_zero(f, nb);
    for (Index j = 0; j < na; ++j)
      for (Index u = 0; u < nh; ++u) col[idx(i, j, u)] = f.mul(a.unit()[j], h.algebra().unit()[u]);
    embed.set_col(i, col);
  }
  std::vector<Matrix<F>> module;
  for (Index i = 0; i < na; ++i) {
    Matrix<F> li = a.left_mult(a.basis_vec(i));
    for (Index j = 0; j < na; ++j) {
      Matrix<F> rj = a.right_mult(a.basis_vec(j));
      for (Index u = 0; u < nh; ++u) module.push_back(li * rj * action.act_basis(u));
    }
  }
  return RepresentedExtension<F>::create(a, std::move(algebroid), std::move(embed), std::move(module),
                                         a.name() + "^e|><|" + h.algebra().name());
}

/// Invariants A^B = {a : b.a = (b.1)a for all b}; checked to be a unital
/// subalgebra.
template <ExactField F>
Subspace<F> invariants(const RepresentedExtension<F>& ext) {
  const F& f = ext.field();
  const Algebra<F>& a = ext.base();
  Index na = a.dim(), nb = ext.ext().dim();
  Matrix<F> sys(f, nb * na, na);
  for (Index u = 0; u < nb; ++u) {
    auto alpha_u = ext.module_basis(u).apply(a.unit());
    Matrix<F> diff = ext.module_basis(u) - a.left_mult(alpha_u);
    for (Index r = 0; r < na; ++r)
      for (Index c = 0; c < na; ++c) sys.at(u * na + r, c) = diff.at(r, c);
  }
  auto inv = Subspace<F>::span(f, na, sys.kernel_basis());
  if (!inv.contains(a.unit())) throw TheoremViolation(ext.name() + ": invariants do not contain 1");
  for (const auto& x : inv.basis())
    for (const auto& y : inv.basis())
      if (!inv.contains(a.mul(x, y)))
        throw TheoremViolation(ext.name() + ": invariants are not multiplicatively closed");
  return inv;
}

/// The invariants as an algebra in their canonical basis.
template <ExactField F>
Algebra<F> invariants_algebra(const RepresentedExtension<F>& ext) {
  return subalgebra_on(ext.base(), invariants(ext), ext.name() + " invariants");
}

/// A finite-dimensional left B-module given by one action matrix per B-basis
/// element.  The compatible A-action is derived through the embedding.
template <ExactField F>
struct BModule {
  Index dim = 0;
  std::vector<Matrix<F>> act;

  static BModule ambient(const RepresentedExtension<F>& ext) {
    BModule m;
    m.dim = ext.base().dim();
    for (Index u = 0; u < ext.ext().dim(); ++u) m.act.push_back(ext.module_basis(u));
    return m;
  }

  static BModule regular(const RepresentedExtension<F>& ext) {
    BModule m;
    m.dim = ext.ext().dim();
    for (Index u = 0; u < ext.ext().dim(); ++u) m.act.push_back(ext.ext().left_mult(ext.ext().basis_vec(u)));
    return m;
  }

  /// Module on a B-stable subspace of A, in the subspace basis.
  static BModule on_subspace(const RepresentedExtension<F>& ext, const Subspace<F>& w) {
    const F& f = ext.field();
    BModule m;
    m.dim = w.dim();
    for (Index u = 0; u < ext.ext().dim(); ++u) {
      Matrix<F> mat(f, w.dim(), w.dim());
      for (Index j = 0; j < w.dim(); ++j) {
        auto img = ext.module_basis(u).apply(w.basis()[j]);
        auto coords = w.coordinates(img);
        if (!coords) throw PreconditionError(ext.name() + ": subspace is not B-stable");
        mat.set_col(j, *coords);
      }
      m.act.push_back(std::move(mat));
    }
    return m;
  }

  /// Quotient module A / I for a B-stable I, in section coordinates.
  static BModule quotient(const RepresentedExtension<F>& ext, const Subspace<F>& ideal) {
    const F& f = ext.field();
    QuotientSpace<F> q(f, ideal);
    BModule m;
    m.dim = q.dim();
    for (Index u = 0; u < ext.ext().dim(); ++u) {
      Matrix<F> mat(f, q.dim(), q.dim());
      for (Index j = 0; j < q.dim(); ++j)
        mat.set_col(j, q.project(ext.module_basis(u).apply(q.section(vec_unit(f, q.dim(), j)))));
      m.act.push_back(std::move(mat));
    }
    return m;
  }

  /// Derived action of an A-basis element through the embedding.
  Matrix<F> a_action(const RepresentedExtension<F>& ext, Index i) const {
    const F& f = ext.field();
    Matrix<F> out(f, dim, dim);
    auto emb = ext.embed_matrix().col(i);
    for (Index u = 0; u < emb.size(); ++u) {
      if (f.is_zero(emb[u])) continue;
      out = out + act[u].scaled(emb[u]);
    }
    return out;
  }

  Matrix<F> a_action_of(const RepresentedExtension<F>& ext, const typename Algebra<F>::Vec& a) const {
    const F& f = ext.field();
    Matrix<F> out(f, dim, dim);
    for (Index i = 0; i < a.size(); ++i) {
      if (f.is_zero(a[i])) continue;
      out = out + a_action(ext, i).scaled(a[i]);
    }
    return out;
  }

  Matrix<F> b_action_of(const RepresentedExtension<F>& ext, const typename Algebra<F>::Vec& b) const {
    const F& f = ext.field();
    Matrix<F> out(f, dim, dim);
    for (Index u = 0; u < b.size(); ++u) {
      if (f.is_zero(b[u])) continue;
      out = out + act[u].scaled(b[u]);
    }
    return out;
  }
};

/// M^B = {m : b.(a m) = (b.a) m for all b, a}, in module coordinates.
template <ExactField F>
Subspace<F> module_invariants(const RepresentedExtension<F>& ext, const BModule<F>& m) {
  const F& f = ext.field();
  Index na = ext.base().dim(), nb = ext.ext().dim();
  std::vector<Matrix<F>> a_act;
  for (Index i = 0; i < na; ++i) a_act.push_back(m.a_action(ext, i));
  std::vector<std::vector<typename F::Elem>> rows;
  for (Index u = 0; u < nb; ++u)
    for (Index i = 0; i < na; ++i) {
      // b.(a m) - (b.a) m
      Matrix<F> lhs = m.act[u] * a_act[i];
      auto ba = ext.module_basis(u).apply(ext.base().basis_vec(i));
      Matrix<F> rhs = m.a_action_of(ext, ba);
      Matrix<F> diff = lhs - rhs;
      for (Index r = 0; r < m.dim; ++r) rows.push_back(diff.row(r));
    }
  Matrix<F> sys = Matrix<F>::from_rows(f, rows, m.dim);
  return Subspace<F>::span(f, m.dim, sys.kernel_basis());
}

/// Basis of Hom_B(M, N) as matrices; solves phi act_M(b) = act_N(b) phi.
template <ExactField F>
std::vector<Matrix<F>> hom_b(const RepresentedExtension<F>& ext, const BModule<F>& m, const BModule<F>& n) {
  const F& f = ext.field();
  Index nb = ext.ext().dim();
  Index unknowns = n.dim * m.dim;  // phi(r, c) at index r*m.dim + c
  std::vector<std::vector<typename F::Elem>> rows;
  for (Index u = 0; u < nb; ++u)
    for (Index r = 0; r < n.dim; ++r)
      for (Index c = 0; c < m.dim; ++c) {
        std::vector<typename F::Elem> row = vec_zero(f, unknowns);
        // (phi act_M[u])(r, c) = sum_k phi(r, k) act_M[u](k, c)
        for (Index k = 0; k < m.dim; ++k)
          row[r * m.dim + k] = f.add(row[r * m.dim + k], m.act[u].at(k, c));
        // (act_N[u] phi)(r, c) = sum_k act_N[u](r, k) phi(k, c)
        for (Index k = 0; k < n.dim; ++k)
          row[k * m.dim + c] = f.sub(row[k * m.dim + c], n.act[u].at(r, k));
        rows.push_back(std::move(row));
      }
  Matrix<F> sys = Matrix<F>::from_rows(f, rows, unknowns);
  std::vector<Matrix<F>> out;
  for (const auto& k : sys.kernel_basis()) {
    Matrix<F> phi(f, n.dim, m.dim);
    for (Index r = 0; r < n.dim; ++r)
      for (Index c = 0; c < m.dim; ++c) phi.at(r, c) = k[r * m.dim + c];
    out.push_back(std::move(phi));
  }
  return out;
}

/// Basis of Hom_A(M, N) for the derived A-actions.
template <ExactField F>
std::vector<Matrix<F>> hom_a(const RepresentedExtension<F>& ext, const BModule<F>& m, const BModule<F>& n) {
  const F& f = ext.field();
  Index unknowns = n.dim * m.dim;
  std::vector<std::vector<typename F::Elem>> rows;
  for (Index i = 0; i < ext.base().dim(); ++i) {
    auto am = m.a_action(ext, i);
    auto an = n.a_action(ext, i);
    for (Index r = 0; r < n.dim; ++r)
      for (Index c = 0; c < m.dim; ++c) {
        std::vector<typename F::Elem> row = vec_zero(f, unknowns);
        for (Index k = 0; k < m.dim; ++k) row[r * m.dim + k] = f.add(row[r * m.dim + k], am.at(k, c));
        for (Index k = 0; k < n.dim; ++k) row[k * m.dim + c] = f.sub(row[k * m.dim + c], an.at(r, k));
        rows.push_back(std::move(row));
      }
  }
  Matrix<F> sys = Matrix<F>::from_rows(f, rows, unknowns);
  std::vector<Matrix<F>> out;
  for (const auto& k : sys.kernel_basis()) {
    Matrix<F> phi(f, n.dim, m.dim);
    for (Index r = 0; r < n.dim; ++r)
      for (Index c = 0; c < m.dim; ++c) phi.at(r, c) = k[r * m.dim + c];
    out.push_back(std::move(phi));
  }
  return out;
}

/// Closure of a single element under the B-action: the cyclic B-stable ideal.
template <ExactField F>
Subspace<F> cyclic_stable_ideal(const RepresentedExtension<F>& ext, const typename Algebra<F>::Vec& a) {
  auto s = Subspace<F>::span(ext.field(), ext.base().dim(), {a});
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<typename Algebra<F>::Vec> add;
    for (const auto& v : s.basis())
      for (Index u = 0; u < ext.ext().dim(); ++u) {
        auto w = ext.module_basis(u).apply(v);
        if (!s.contains(w)) add.push_back(w);
      }
    if (!add.empty()) {
      for (const auto& v : s.basis()) add.push_back(v);
      s = Subspace<F>::span(ext.field(), ext.base().dim(), add);
      grew = true;
    }
  }
  return s;
}

/// Action induced on A / I for an H-stable two-sided ideal I.
template <ExactField F>
ModuleAction<F> quotient_action(const ModuleAction<F>& act, const Subspace<F>& ideal) {
  const F& f = act.field();
  QuotientSpace<F> q(f, ideal);
  auto quot_alg = quotient_algebra(act.algebra(), ideal, act.algebra().name() + "/I");
  std::vector<Matrix<F>> mats;
  for (Index u = 0; u < act.hopf().dim(); ++u) {
    Matrix<F> m(f, q.dim(), q.dim());
    for (Index j = 0; j < q.dim(); ++j)
      m.set_col(j, q.project(act.act_basis(u).apply(q.section(vec_unit(f, q.dim(), j)))));
    mats.push_back(std::move(m));
  }
  return ModuleAction<F>::create(act.hopf(), std::move(quot_alg), std::move(mats),
                                 act.name() + " mod ideal");
}

/// The canonical hit action of H^* on H: f -> h = sum h1 <f, h2>.
template <ExactField F>
ModuleAction<F> hit_action(const HopfAlgebra<F>& h) {
  const F& f = h.field();
  Index n = h.dim();
  auto dual = dual_hopf(h);
  std::vector<Matrix<F>> act;
  for (Index u = 0; u < n; ++u) {
    Matrix<F> m(f, n, n);
    for (Index j = 0; j < n; ++j)
      for (Index a = 0; a < n; ++a) m.at(a, j) = h.comult_rows()[j][a * n + u];
    act.push_back(std::move(m));
  }
  return ModuleAction<F>::create(std::move(dual), h.algebra(), std::move(act),
                                 h.algebra().name() + "^* hits " + h.algebra().name());
}

inline std::uint64_t saturating_pow(std::int64_t p, Index dim) {
  std::uint64_t n = 1;
  for (Index i = 0; i < dim; ++i) {
    if (n > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(p)) return ~std::uint64_t{0};
    n *= static_cast<std::uint64_t>(p);
  }
  return n;
}

constexpr std::uint64_t kDefaultEnumerationCap = 1 << 16;

/// Distinct cyclic B-stable ideals B.a over all a in A (prime fields only).
template <ExactField F>
std::vector<Subspace<F>> cyclic_stable_ideals(const RepresentedExtension<F>& ext, std::uint64_t cap) {
  if constexpr (!F::enumerable) {
    throw PreconditionError(ext.name() + ": stable ideal enumeration requires a prime field");
  } else {
    const PrimeField& f = ext.field();
    Index na = ext.base().dim();
    if (!prime_power_within(f.p, na, cap))
      throw ResourceError(ext.name() + ": stable ideal enumeration needs cap >= p^dim(A)",
                          saturating_pow(f.p, na));
    std::set<std::string> seen;
    std::vector<Subspace<F>> out;
    for_each_vector(f, na, [&](const std::vector<std::int64_t>& a) {
      // scalar multiples generate the same ideal; keep projective representatives
      for (Index i = 0; i < na; ++i) {
        if (a[i] == 0) continue;
        if (a[i] != 1) return;
        break;
      }
      auto s = cyclic_stable_ideal(ext, a);
      if (seen.insert(s.key()).second) out.push_back(std::move(s));
    });
    std::sort(out.begin(), out.end(), Subspace<F>::deterministic_less);
    return out;
  }
}

/// All B-stable ideals: sums of cyclic ones, closed to a lattice.
template <ExactField F>
std::vector<Subspace<F>> stable_ideals(const RepresentedExtension<F>& ext, std::uint64_t cap) {
  auto lattice = cyclic_stable_ideals(ext, cap);
  std::set<std::string> seen;
  for (const auto& s : lattice) seen.insert(s.key());
  for (Index i = 0; i < lattice.size(); ++i) {
    if (lattice.size() > 65536)
      throw ResourceError(ext.name() + ": stable ideal lattice exceeds 65536 members", lattice.size());
    for (Index j = 0; j < i; ++j) {
      auto s = lattice[i].sum(lattice[j]);
      if (seen.insert(s.key()).second) lattice.push_back(std::move(s));
    }
  }
  std::sort(lattice.begin(), lattice.end(), Subspace<F>::deterministic_less);
  return lattice;
}

}  // namespace hopfreg
