#pragma once

#include <algorithm>
#include <vector>

#include "radical.hpp"

namespace hopfreg {

/// e + f - ef for commuting idempotents; generates Ae + Af.
template <ExactField F>
typename Algebra<F>::Vec idempotent_join(const Algebra<F>& a, const typename Algebra<F>::Vec& e,
                                         const typename Algebra<F>::Vec& f) {
  if (!a.is_idempotent(e) || !a.is_idempotent(f))
    throw PreconditionError("idempotent_join: inputs must be idempotent");
  if (a.mul(e, f) != a.mul(f, e)) throw PreconditionError("idempotent_join: idempotents must commute");
  return vec_sub(a.field(), vec_add(a.field(), e, f), a.mul(e, f));
}

namespace detail {

/// Matrix of y -> z*y restricted to a z-invariant subspace, in its basis.
template <ExactField F>
Matrix<F> restricted_left_mult(const Algebra<F>& a, const Subspace<F>& w,
                               const typename Algebra<F>::Vec& z) {
  const F& f = a.field();
  Index m = w.dim();
  Matrix<F> out(f, m, m);
  for (Index j = 0; j < m; ++j) {
    auto img = a.mul(z, w.basis()[j]);
    auto coords = w.coordinates(img);
    if (!coords) throw UsageError("subspace not invariant under multiplication");
    out.set_col(j, *coords);
  }
  return out;
}

inline std::vector<std::vector<std::int64_t>> split_blocks_prime(const Algebra<PrimeField>& a) {
  const PrimeField& f = a.field();
  Index n = a.dim();
  std::int64_t p = f.p;
  if (p > (1 << 20)) throw ResourceError("idempotent eigenvalue scan needs p <= 2^20", static_cast<std::uint64_t>(p));
  // Fixed algebra of the Frobenius x -> x^p: a split product of prime fields
  // whose primitive idempotents are exactly those of the whole algebra.
  Matrix<PrimeField> frob(f, n, n);
  for (Index i = 0; i < n; ++i) frob.set_col(i, a.pow(a.basis_vec(i), static_cast<std::uint64_t>(p)));
  auto fixed = Subspace<PrimeField>::span(f, n, (frob - Matrix<PrimeField>::identity(f, n)).kernel_basis());
  std::vector<Subspace<PrimeField>> blocks{fixed};
  for (Index zi = 0; zi < fixed.dim(); ++zi) {
    const auto& z = fixed.basis()[zi];
    std::vector<Subspace<PrimeField>> next;
    for (const auto& blk : blocks) {
      if (blk.dim() <= 1) {
        next.push_back(blk);
        continue;
      }
      auto op = restricted_left_mult(a, blk, z);
      for (std::int64_t c = 0; c < p; ++c) {
        auto shifted = op - Matrix<PrimeField>::identity(f, blk.dim()).scaled(c);
        std::vector<std::vector<std::int64_t>> eig;
        for (const auto& k : shifted.kernel_basis()) eig.push_back(blk.from_coordinates(k));
        auto sub = Subspace<PrimeField>::span(f, n, eig);
        if (!sub.is_zero()) next.push_back(sub);
      }
    }
    blocks = std::move(next);
  }
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& blk : blocks) out.push_back(blk.basis()[0]);
  return out;
}

/// Evaluate a polynomial at an algebra element (relative to a block unit).
template <ExactField F>
typename Algebra<F>::Vec eval_at_element(const Algebra<F>& a, const Poly<F>& p,
                                         const typename Algebra<F>::Vec& z,
                                         const typename Algebra<F>::Vec& unit) {
  auto acc = vec_zero(a.field(), a.dim());
  for (Index i = p.c.size(); i-- > 0;) {
    acc = a.mul(acc, z);
    acc = vec_add(a.field(), acc, vec_scale(a.field(), p.c[i], unit));
  }
  return acc;
}

inline std::vector<std::vector<RationalField::Elem>> split_blocks_rational(const Algebra<RationalField>& a) {
  using Vec = std::vector<RationalField::Elem>;
  const RationalField& f = a.field();
  Index n = a.dim();
  // (subspace, unit idempotent) pairs; split until no tool applies.
  std::vector<std::pair<Subspace<RationalField>, Vec>> work{{Subspace<RationalField>::full(f, n), a.unit()}};
  std::vector<Vec> done;
  while (!work.empty()) {
    auto item = work.back();
    const Subspace<RationalField> blk = item.first;
    const Vec unit = item.second;
    work.pop_back();
    if (blk.dim() == 1) {
      done.push_back(unit);
      continue;
    }
    bool split = false;
    bool certified_field = false;
    for (Index zi = 0; zi < blk.dim() && !split; ++zi) {
      const auto& z = blk.basis()[zi];
      auto m = minimal_polynomial(restricted_left_mult(a, blk, z));
      if (!(squarefree_part(m) == m))
        throw PreconditionError("central_idempotents: non-semisimple block (minimal polynomial not squarefree)");
      auto roots = rational_roots(m);
      std::vector<Poly<RationalField>> factors;
      auto rest = m;
      for (const auto& r : roots) {
        Poly<RationalField> lin{f, {f.neg(r), f.one()}};
        factors.push_back(lin);
        rest = rest.divmod(lin).first;
      }
      if (rest.degree() >= 1) factors.push_back(rest);
      if (factors.size() >= 2) {
        // CRT idempotents for the coprime factorisation m = f_1 ... f_k
        for (const auto& fac : factors) {
          auto cof = m.divmod(fac).first;
          // invert cof modulo fac by extended Euclid
          Poly<RationalField> r0 = fac, r1 = cof.divmod(fac).second;
          Poly<RationalField> s0 = Poly<RationalField>::zero(f), s1 = Poly<RationalField>::constant(f, f.one());
          while (!r1.is_zero() && r1.degree() > 0) {
            auto [q, r2] = r0.divmod(r1);
            auto s2 = s0 - q * s1;
            r0 = r1; r1 = r2; s0 = s1; s1 = s2;
          }
          if (r1.is_zero()) throw TheoremViolation("central_idempotents: factors not coprime");
          auto inv = s1.scaled(f.inv(r1.c[0]));
          auto idem_poly = (cof * inv).divmod(m).second;
          auto e = eval_at_element(a, idem_poly, z, unit);
          auto image = Subspace<RationalField>::span(f, n, [&] {
            std::vector<Vec> vs;
            for (const auto& b : blk.basis()) vs.push_back(a.mul(b, e));
            return vs;
          }());
          work.push_back({image, e});
        }
        split = true;
      } else if (rest.degree() == static_cast<int>(blk.dim()) && rest.degree() <= 3 && roots.empty()) {
        // degree 2 or 3 with no rational root is irreducible, so the block
        // is a field and its unit is primitive
        certified_field = true;
      }
    }
    if (split) continue;
    if (certified_field || blk.dim() == 1) {
      done.push_back(unit);
      continue;
    }
    throw NotSplitOverRationals("central_idempotents: block of dimension " + std::to_string(blk.dim()) +
                                " not split over QQ (needs irrational factorisation)");
  }
  return done;
}

}  // namespace detail

/// Complete list of primitive orthogonal central idempotents of a commutative
/// semisimple algebra, summing to 1; deterministic order.
template <ExactField F>
std::vector<typename Algebra<F>::Vec> central_idempotents(const Algebra<F>& a) {
  const F& f = a.field();
  if (!a.commutative()) throw PreconditionError("central_idempotents: algebra is not commutative");
  if (!jacobson_radical(a).is_zero())
    throw PreconditionError("central_idempotents: algebra is not semisimple");
  std::vector<typename Algebra<F>::Vec> raw;
  if constexpr (std::is_same_v<F, PrimeField>) {
    for (auto& v : detail::split_blocks_prime(a)) {
      // normalise the spanning vector of a 1-dim block to its idempotent
      auto sq = a.mul(v, v);
      typename F::Elem lambda = f.zero();
      for (Index i = 0; i < a.dim(); ++i)
        if (!f.is_zero(v[i])) {
          lambda = f.div(sq[i], v[i]);
          break;
        }
      if (f.is_zero(lambda)) throw TheoremViolation("central_idempotents: nilpotent block vector");
      raw.push_back(vec_scale(f, f.inv(lambda), v));
    }
  } else {
    raw = detail::split_blocks_rational(a);
  }
  // verify: idempotent, orthogonal, summing to the unit
  auto sum = vec_zero(f, a.dim());
  for (const auto& e : raw) {
    if (!a.is_idempotent(e)) throw TheoremViolation("central_idempotents: non-idempotent output");
    sum = vec_add(f, sum, e);
  }
  for (Index i = 0; i < raw.size(); ++i)
    for (Index j = i + 1; j < raw.size(); ++j)
      if (!vec_is_zero(f, a.mul(raw[i], raw[j])))
        throw TheoremViolation("central_idempotents: outputs not orthogonal");
  if (sum != a.unit()) throw TheoremViolation("central_idempotents: outputs do not sum to 1");
  std::sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) { return vec_cmp<F>(x, y) < 0; });
  return raw;
}

}  // namespace hopfreg
