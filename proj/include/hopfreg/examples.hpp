#pragma once

#include <array>
#include <string>
#include <vector>

#include "action.hpp"

namespace hopfreg {

// Builders for the bundled example library: group algebras k[G] for small G,
// Sweedler's four-dimensional Hopf algebra, duals, k x k and M_n(k) module
// algebras, and the standard actions on them.

enum class GroupName { c2, c3, c2xc2, s3 };

inline std::string group_label(GroupName g) {
  switch (g) {
    case GroupName::c2: return "C2";
    case GroupName::c3: return "C3";
    case GroupName::c2xc2: return "C2xC2";
    case GroupName::s3: return "S3";
  }
  return "?";
}

namespace detail {

struct SmallGroup {
  std::vector<std::vector<int>> perms;  // elements as permutations
  std::vector<std::string> labels;
  std::vector<std::vector<Index>> table;  // table[i][j] = index of perms[i] o perms[j]
  std::vector<Index> inverse;
  std::vector<int> parity;  // sign of each permutation (0 even, 1 odd)

  Index size() const { return perms.size(); }
};

inline std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (Index i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

inline SmallGroup make_group(GroupName g) {
  SmallGroup out;
  switch (g) {
    case GroupName::c2:
      out.perms = {{0, 1}, {1, 0}};
      out.labels = {"1", "g"};
      break;
    case GroupName::c3:
      out.perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
      out.labels = {"1", "g", "g2"};
      break;
    case GroupName::c2xc2:
      out.perms = {{0, 1, 2, 3}, {1, 0, 2, 3}, {0, 1, 3, 2}, {1, 0, 3, 2}};
      out.labels = {"1", "a", "b", "ab"};
      break;
    case GroupName::s3:
      out.perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
      out.labels = {"1", "(12)", "(13)", "(23)", "(123)", "(132)"};
      break;
  }
  Index n = out.size();
  out.table.assign(n, std::vector<Index>(n, 0));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      auto c = compose(out.perms[i], out.perms[j]);
      for (Index k = 0; k < n; ++k)
        if (out.perms[k] == c) out.table[i][j] = k;
    }
  out.inverse.assign(n, 0);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (out.table[i][j] == 0) out.inverse[i] = j;
  out.parity.assign(n, 0);
  for (Index i = 0; i < n; ++i) {
    int inversions = 0;
    const auto& p = out.perms[i];
    for (Index a = 0; a < p.size(); ++a)
      for (Index b = a + 1; b < p.size(); ++b)
        if (p[a] > p[b]) ++inversions;
    out.parity[i] = inversions % 2;
  }
  return out;
}

}  // namespace detail

/// Group algebra k[G] with its standard Hopf structure: group-like basis,
/// counit 1, antipode by inversion.
template <ExactField F>
HopfAlgebra<F> group_algebra(const F& f, GroupName g) {
  auto grp = detail::make_group(g);
  Index n = grp.size();
  std::vector<typename F::Elem> mult(n * n * n, f.zero());
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) mult[(i * n + j) * n + grp.table[i][j]] = f.one();
  auto alg = Algebra<F>::create(f, n, std::move(mult), vec_unit(f, n, 0), grp.labels,
                                "k[" + group_label(g) + "]");
  std::vector<typename Algebra<F>::Vec> comult(n, vec_zero(f, n * n));
  for (Index i = 0; i < n; ++i) comult[i][i * n + i] = f.one();
  typename Algebra<F>::Vec counit(n, f.one());
  std::vector<typename Algebra<F>::Vec> antipode(n, vec_zero(f, n));
  for (Index i = 0; i < n; ++i) antipode[i][grp.inverse[i]] = f.one();
  return HopfAlgebra<F>::create(std::move(alg), std::move(comult), std::move(counit), std::move(antipode));
}

/// The one-dimensional Hopf algebra k.
template <ExactField F>
HopfAlgebra<F> trivial_hopf(const F& f) {
  auto alg = Algebra<F>::create(f, 1, {f.one()}, {f.one()}, {"1"}, "k");
  return HopfAlgebra<F>::create(std::move(alg), {{f.one()}}, {f.one()}, {{f.one()}});
}

/// Sweedler's four-dimensional Hopf algebra on 1, g, x, gx with g^2 = 1,
/// x^2 = 0, xg = -gx; requires characteristic != 2.
template <ExactField F>
HopfAlgebra<F> sweedler_h4(const F& f) {
  if (f.characteristic() == 2) throw UsageError("Sweedler H4 degenerates in characteristic 2");
  Index n = 4;  // basis order: 1, g, x, gx
  std::vector<typename F::Elem> mult(n * n * n, f.zero());
  auto set = [&](Index i, Index j, Index k, typename F::Elem v) { mult[(i * n + j) * n + k] = v; };
  const auto one = f.one(), minus = f.neg(f.one());
  for (Index i = 0; i < n; ++i) {
    set(0, i, i, one);
    if (i != 0) set(i, 0, i, one);
  }
  set(1, 1, 0, one);                    // g g = 1
  set(1, 2, 3, one);                    // g x = gx
  set(1, 3, 2, one);                    // g gx = x
  set(2, 1, 3, minus);                  // x g = -gx
  set(3, 1, 2, minus);                  // gx g = -x
  // x x = x gx = gx x = gx gx = 0
  auto alg = Algebra<F>::create(f, n, std::move(mult), vec_unit(f, n, 0), {"1", "g", "x", "gx"}, "H4");
  std::vector<typename Algebra<F>::Vec> comult(n, vec_zero(f, n * n));
  comult[0][0 * n + 0] = one;                            // 1 (x) 1
  comult[1][1 * n + 1] = one;                            // g (x) g
  comult[2][2 * n + 0] = one; comult[2][1 * n + 2] = one;  // x(x)1 + g(x)x
  comult[3][3 * n + 1] = one; comult[3][0 * n + 3] = one;  // gx(x)g + 1(x)gx
  typename Algebra<F>::Vec counit = {one, one, f.zero(), f.zero()};
  std::vector<typename Algebra<F>::Vec> antipode(n, vec_zero(f, n));
  antipode[0][0] = one;      // S(1) = 1
  antipode[1][1] = one;      // S(g) = g
  antipode[2][3] = minus;    // S(x) = -gx
  antipode[3][2] = one;      // S(gx) = x
  return HopfAlgebra<F>::create(std::move(alg), std::move(comult), std::move(counit), std::move(antipode));
}

/// k x k with componentwise operations.
template <ExactField F>
Algebra<F> product_field_algebra(const F& f) {
  Index n = 2;
  std::vector<typename F::Elem> mult(n * n * n, f.zero());
  mult[(0 * n + 0) * n + 0] = f.one();
  mult[(1 * n + 1) * n + 1] = f.one();
  return Algebra<F>::create(f, n, std::move(mult), {f.one(), f.one()}, {"e1", "e2"}, "kxk");
}

/// Full matrix algebra M_n(k) on the E_ij basis.
template <ExactField F>
Algebra<F> matrix_algebra(const F& f, Index n) {
  Index d = n * n;
  std::vector<typename F::Elem> mult(d * d * d, f.zero());
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        for (Index e = 0; e < n; ++e) {
          if (b != c) continue;
          Index x = a * n + b, y = c * n + e, z = a * n + e;
          mult[(x * d + y) * d + z] = f.one();
        }
  typename Algebra<F>::Vec unit = vec_zero(f, d);
  for (Index a = 0; a < n; ++a) unit[a * n + a] = f.one();
  std::vector<std::string> labels;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) labels.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
  return Algebra<F>::create(f, d, std::move(mult), std::move(unit), std::move(labels),
                            "M" + std::to_string(n) + "(k)");
}

/// Upper triangular n x n matrices; handy as a non-semisimple testbed.
template <ExactField F>
Algebra<F> upper_triangular_algebra(const F& f, Index n) {
  std::vector<std::pair<Index, Index>> basis;
  for (Index a = 0; a < n; ++a)
    for (Index b = a; b < n; ++b) basis.push_back({a, b});
  Index d = basis.size();
  auto find = [&](Index a, Index b) {
    for (Index i = 0; i < d; ++i)
      if (basis[i] == std::pair<Index, Index>{a, b}) return i;
    return d;
  };
  std::vector<typename F::Elem> mult(d * d * d, f.zero());
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      auto [a, b] = basis[i];
      auto [c, e] = basis[j];
      if (b != c) continue;
      mult[(i * d + j) * d + find(a, e)] = f.one();
    }
  typename Algebra<F>::Vec unit = vec_zero(f, d);
  for (Index a = 0; a < n; ++a) unit[find(a, a)] = f.one();
  std::vector<std::string> labels;
  for (auto [a, b] : basis) labels.push_back("T" + std::to_string(a + 1) + std::to_string(b + 1));
  return Algebra<F>::create(f, d, std::move(mult), std::move(unit), std::move(labels),
                            "T" + std::to_string(n) + "(k)");
}

/// The trivial action h.a = eps(h) a of any Hopf algebra on any algebra.
template <ExactField F>
ModuleAction<F> trivial_action(const HopfAlgebra<F>& h, const Algebra<F>& a) {
  std::vector<Matrix<F>> act;
  for (Index u = 0; u < h.dim(); ++u)
    act.push_back(Matrix<F>::identity(a.field(), a.dim()).scaled(h.counit_vector()[u]));
  return ModuleAction<F>::create(h, a, std::move(act), h.algebra().name() + " trivially on " + a.name());
}

/// Action of a group algebra through per-element automorphism matrices.
template <ExactField F>
ModuleAction<F> group_action(const HopfAlgebra<F>& h, const Algebra<F>& a, std::vector<Matrix<F>> per_element,
                             const std::string& name) {
  return ModuleAction<F>::create(h, a, std::move(per_element), name);
}

/// k[C2] swaps the two factors of k x k.
template <ExactField F>
ModuleAction<F> swap_action(const F& f) {
  auto h = group_algebra(f, GroupName::c2);
  auto a = product_field_algebra(f);
  Matrix<F> swap(f, 2, 2);
  swap.at(0, 1) = f.one();
  swap.at(1, 0) = f.one();
  return group_action(h, a, {Matrix<F>::identity(f, 2), swap}, "k[C2] swaps kxk");
}

/// k[S3] acts on k x k through the sign character: odd permutations swap.
template <ExactField F>
ModuleAction<F> sign_swap_action(const F& f) {
  auto h = group_algebra(f, GroupName::s3);
  auto a = product_field_algebra(f);
  auto grp = detail::make_group(GroupName::s3);
  Matrix<F> swap(f, 2, 2);
  swap.at(0, 1) = f.one();
  swap.at(1, 0) = f.one();
  std::vector<Matrix<F>> act;
  for (Index i = 0; i < grp.size(); ++i)
    act.push_back(grp.parity[i] ? swap : Matrix<F>::identity(f, 2));
  return group_action(h, a, std::move(act), "k[S3] sign-swaps kxk");
}

/// k[C2] acts on M_2(k) by conjugation with diag(1, -1); characteristic != 2.
template <ExactField F>
ModuleAction<F> matrix_conjugation_action(const F& f) {
  if (f.characteristic() == 2) throw UsageError("conjugation by diag(1,-1) is trivial in characteristic 2");
  auto h = group_algebra(f, GroupName::c2);
  auto a = matrix_algebra(f, 2);
  // basis E11, E12, E21, E22: conjugation negates the off-diagonal entries
  Matrix<F> conj(f, 4, 4);
  conj.at(0, 0) = f.one();
  conj.at(1, 1) = f.neg(f.one());
  conj.at(2, 2) = f.neg(f.one());
  conj.at(3, 3) = f.one();
  return group_action(h, a, {Matrix<F>::identity(f, 4), conj}, "k[C2] conjugates M2(k)");
}

}  // namespace hopfreg
