#pragma once

#include <optional>
#include <vector>

#include "algebra.hpp"
#include "poly.hpp"

namespace hopfreg {

namespace detail {

/// Trace-form radical: kernel of (x, y) -> Tr(L_x L_y).  Equals the Jacobson
/// radical in characteristic 0 and in characteristic p > dim(A); in small
/// characteristic it still always CONTAINS the radical.
template <ExactField F>
Subspace<F> radical_trace_form(const Algebra<F>& a) {
  const F& f = a.field();
  Index n = a.dim();
  std::vector<Matrix<F>> left;
  for (Index i = 0; i < n; ++i) left.push_back(a.left_mult(a.basis_vec(i)));
  Matrix<F> gram(f, n, n);
  for (Index r = 0; r < n; ++r)
    for (Index s = 0; s < n; ++s) gram.at(r, s) = (left[r] * left[s]).trace();
  return Subspace<F>::span(f, n, gram.kernel_basis());
}

inline bool is_ideal(const Algebra<PrimeField>& a, const Subspace<PrimeField>& s) {
  for (const auto& v : s.basis())
    for (Index i = 0; i < a.dim(); ++i)
      if (!s.contains(a.mul(a.basis_vec(i), v)) || !s.contains(a.mul(v, a.basis_vec(i)))) return false;
  return true;
}

/// Descending chain through the characteristic-polynomial coefficients c_q of
/// left multiplications at q = 1, p, p^2, ...: the radical consists of x with
/// nilpotent L_{xu} for every u, so all its members survive each cut
///   I <- {x in I : c_q(L_{x u}) = 0 for all u}.
/// On each ideal of the chain the function c_q is additive (all lower
/// coefficients vanish there), which makes the cut linear.  The result is a
/// candidate only; the caller certifies it and closes any gap exactly.
inline Subspace<PrimeField> radical_coefficient_chain(const Algebra<PrimeField>& a) {
  const PrimeField& f = a.field();
  Index n = a.dim();
  std::int64_t p = f.p;
  Subspace<PrimeField> ideal = Subspace<PrimeField>::full(f, n);
  for (std::uint64_t q = 1; q <= n && !ideal.is_zero(); q *= static_cast<std::uint64_t>(p)) {
    Index m = ideal.dim();
    Matrix<PrimeField> sys(f, n, m);
    for (Index u = 0; u < n; ++u)
      for (Index r = 0; r < m; ++r)
        sys.at(u, r) =
            char_poly_coefficient(a.left_mult(a.mul(ideal.basis()[r], a.basis_vec(u))), static_cast<Index>(q));
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& xi : sys.kernel_basis()) next.push_back(ideal.from_coordinates(xi));
    ideal = Subspace<PrimeField>::span(f, n, next);
  }
  return ideal;
}

inline std::uint64_t saturating_pow_radical(std::int64_t p, Index dim) {
  std::uint64_t v = 1;
  for (Index i = 0; i < dim; ++i) {
    if (v > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(p)) return ~std::uint64_t{0};
    v *= static_cast<std::uint64_t>(p);
  }
  return v;
}

/// Exhaustive radical of a small algebra over GF(p): x is in the radical iff
/// 1 - yx is invertible for every y.
inline Subspace<PrimeField> radical_by_enumeration(const Algebra<PrimeField>& a, std::uint64_t cap) {
  const PrimeField& f = a.field();
  Index n = a.dim();
  auto count = prime_power_within(f.p, n, cap);
  if (!count)
    throw ResourceError(a.name() + ": radical enumeration for GF(" + std::to_string(f.p) +
                            ")^" + std::to_string(n) + " exceeds the cap",
                        saturating_pow_radical(f.p, n));
  auto encode = [&](const std::vector<std::int64_t>& v) {
    std::uint64_t code = 0;
    for (Index i = n; i-- > 0;) code = code * static_cast<std::uint64_t>(f.p) + static_cast<std::uint64_t>(v[i]);
    return code;
  };
  std::vector<bool> invertible(*count, false);
  for_each_vector(f, n, [&](const std::vector<std::int64_t>& v) {
    invertible[encode(v)] = a.left_mult(v).invertible();
  });
  std::vector<std::vector<std::int64_t>> members;
  for_each_vector(f, n, [&](const std::vector<std::int64_t>& x) {
    bool in_radical = true;
    for_each_vector(f, n, [&](const std::vector<std::int64_t>& y) {
      if (!in_radical) return;
      if (!invertible[encode(vec_sub(f, a.unit(), a.mul(y, x)))]) in_radical = false;
    });
    if (in_radical) members.push_back(x);
  });
  return Subspace<PrimeField>::span(f, n, members);
}

/// Decides semisimplicity by solving for a separability idempotent
/// e in A (x) A^op with a.e = e.a and mu(e) = 1.  Over a perfect base field
/// (GF(p) and QQ are) this is equivalent to vanishing radical, and it is a
/// plain linear feasibility problem.
template <ExactField F>
bool semisimple_by_separability(const Algebra<F>& a) {
  const F& f = a.field();
  Index n = a.dim();
  Index unknowns = n * n;  // e = sum e[x][y] (e_x (x) e_y)
  std::vector<std::vector<typename F::Elem>> rows;
  std::vector<typename F::Elem> rhs;
  for (Index u = 0; u < n; ++u) {
    Matrix<F> lu = a.left_mult(a.basis_vec(u));
    Matrix<F> ru = a.right_mult(a.basis_vec(u));
    // (e_u . e - e . e_u) = 0: rows indexed by target pair (r, s)
    for (Index r = 0; r < n; ++r)
      for (Index s = 0; s < n; ++s) {
        std::vector<typename F::Elem> row = vec_zero(f, unknowns);
        for (Index x = 0; x < n; ++x) row[x * n + s] = f.add(row[x * n + s], lu.at(r, x));
        for (Index y = 0; y < n; ++y) row[r * n + y] = f.sub(row[r * n + y], ru.at(s, y));
        rows.push_back(std::move(row));
        rhs.push_back(f.zero());
      }
  }
  // mu(e) = 1
  for (Index k = 0; k < n; ++k) {
    std::vector<typename F::Elem> row = vec_zero(f, unknowns);
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) row[x * n + y] = a.sc(x, y, k);
    rows.push_back(std::move(row));
    rhs.push_back(a.unit()[k]);
  }
  Matrix<F> sys = Matrix<F>::from_rows(f, rows, unknowns);
  return sys.solve_particular(rhs).has_value();
}

constexpr std::uint64_t kRadicalEnumerationCap = 4096;

/// Radical in small characteristic.  The coefficient chain produces a
/// nilpotent-ideal candidate R (reset to zero if its guarantees fail); then
/// the quotient A/R is certified semisimple, either by a nondegenerate trace
/// form or by exhaustive enumeration, whose outcome lifts back exactly.
inline Subspace<PrimeField> radical_small_char(const Algebra<PrimeField>& a) {
  const PrimeField& f = a.field();
  Index n = a.dim();
  auto candidate = radical_coefficient_chain(a);
  if (!candidate.is_zero() && (!is_ideal(a, candidate) || !subspace_is_nilpotent(a, candidate)))
    candidate = Subspace<PrimeField>::zero(f, n);  // keep only the sound part
  // gap certificates on the quotient: nondegenerate trace form, then the
  // separability idempotent (complete over the perfect base field)
  auto quotient = candidate.is_zero() ? a : quotient_algebra(a, candidate, a.name() + "/~");
  if (radical_trace_form(quotient).is_zero()) return candidate;
  if (semisimple_by_separability(quotient)) return candidate;
  auto upstairs = radical_by_enumeration(quotient, kRadicalEnumerationCap);
  if (upstairs.is_zero()) return candidate;
  // lift the quotient radical through the section
  QuotientSpace<PrimeField> q(f, candidate);
  std::vector<std::vector<std::int64_t>> vecs = candidate.basis();
  for (const auto& v : upstairs.basis()) vecs.push_back(q.section(v));
  return Subspace<PrimeField>::span(f, n, vecs);
}

}  // namespace detail

/// The Jacobson radical as a subspace.  A finite-dimensional algebra is von
/// Neumann regular exactly when this is zero.
template <ExactField F>
Subspace<F> jacobson_radical(const Algebra<F>& a) {
  const F& f = a.field();
  Subspace<F> rad;
  std::int64_t ch = f.characteristic();
  if (ch == 0 || ch > static_cast<std::int64_t>(a.dim())) {
    rad = detail::radical_trace_form(a);
  } else if constexpr (std::is_same_v<F, PrimeField>) {
    rad = detail::radical_small_char(a);
  } else {
    throw UsageError("small characteristic radical requires a prime field");
  }
  for (const auto& v : rad.basis())
    for (Index i = 0; i < a.dim(); ++i) {
      if (!rad.contains(a.mul(a.basis_vec(i), v)) || !rad.contains(a.mul(v, a.basis_vec(i))))
        throw TheoremViolation(a.name() + ": computed radical is not an ideal");
    }
  if (!subspace_is_nilpotent(a, rad))
    throw TheoremViolation(a.name() + ": computed radical is not nilpotent");
  return rad;
}

template <ExactField F>
bool is_regular(const Algebra<F>& a) {
  return jacobson_radical(a).is_zero();
}

/// Solves a = a x a for x (a linear system for fixed a); the witness makes a
/// von Neumann regular element.
template <ExactField F>
std::optional<typename Algebra<F>::Vec> regularity_witness(const Algebra<F>& a,
                                                           const typename Algebra<F>::Vec& v) {
  Matrix<F> sandwich = a.left_mult(v) * a.right_mult(v);
  return sandwich.solve_particular(v);
}

}  // namespace hopfreg
