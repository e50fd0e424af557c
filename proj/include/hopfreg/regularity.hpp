#pragma once

#include <optional>
#include <string>
#include <vector>

#include "action.hpp"
#include "idempotents.hpp"
#include "radical.hpp"

namespace hopfreg {

struct VerdictEntry {
  std::string label;
  bool value = false;
  std::string witness;  // supporting element/subspace or counterexample, rendered
};

/// Outcome of a decision procedure; for theorem cross-validations, `agree`
/// records whether all internal routes coincided (a disagreement is a bug,
/// never acceptable output).
struct RegularityReport {
  std::string procedure;
  std::string subject;
  bool applicable = true;
  std::string note;
  std::vector<VerdictEntry> entries;
  bool agree = true;
  bool verdict = false;
};

namespace detail {

template <ExactField F>
void check_enumerable(const std::string& who, const F& f, Index dim, std::uint64_t cap) {
  if constexpr (!F::enumerable) {
    throw PreconditionError(who + ": exhaustive check requires a prime field");
  } else {
    if (!prime_power_within(f.p, dim, cap))
      throw ResourceError(who + ": enumeration needs cap >= p^" + std::to_string(dim),
                          saturating_pow(f.p, dim));
  }
}

/// Cyclic stable ideals together with one generator each.
template <ExactField F>
std::vector<std::pair<typename Algebra<F>::Vec, Subspace<F>>> cyclic_ideals_with_generators(
    const RepresentedExtension<F>& ext, std::uint64_t cap) {
  if constexpr (!F::enumerable) {
    throw PreconditionError(ext.name() + ": stable ideal enumeration requires a prime field");
  } else {
    const PrimeField& f = ext.field();
    Index na = ext.base().dim();
    check_enumerable(ext.name(), f, na, cap);
    std::set<std::string> seen;
    std::vector<std::pair<typename Algebra<F>::Vec, Subspace<F>>> out;
    for_each_vector(f, na, [&](const std::vector<std::int64_t>& a) {
      for (Index i = 0; i < na; ++i) {
        if (a[i] == 0) continue;
        if (a[i] != 1) return;
        break;
      }
      auto s = cyclic_stable_ideal(ext, a);
      if (seen.insert(s.key()).second) out.push_back({a, std::move(s)});
    });
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return Subspace<F>::deterministic_less(x.second, y.second); });
    return out;
  }
}

/// A e as a subspace (left multiples of e).
template <ExactField F>
Subspace<F> left_multiples(const Algebra<F>& a, const typename Algebra<F>::Vec& e) {
  std::vector<typename Algebra<F>::Vec> vecs;
  for (Index i = 0; i < a.dim(); ++i) vecs.push_back(a.mul(a.basis_vec(i), e));
  return Subspace<F>::span(a.field(), a.dim(), vecs);
}

/// span{A . (I cap A^B)}, the ideal generated by the invariant part.
template <ExactField F>
Subspace<F> generated_by_invariant_part(const RepresentedExtension<F>& ext, const Subspace<F>& ideal,
                                        const Subspace<F>& inv) {
  auto core = ideal.intersect(inv);
  std::vector<typename Algebra<F>::Vec> vecs;
  for (const auto& w : core.basis())
    for (Index i = 0; i < ext.base().dim(); ++i) vecs.push_back(ext.base().mul(ext.base().basis_vec(i), w));
  return Subspace<F>::span(ext.field(), ext.base().dim(), vecs);
}

}  // namespace detail

/// Finds e in I cap A^B with v e = v for every v in I: the invariant
/// idempotent that generates a B-stable direct summand, when one exists.
template <ExactField F>
std::optional<typename Algebra<F>::Vec> summand_idempotent(const RepresentedExtension<F>& ext,
                                                           const Subspace<F>& ideal) {
  const F& f = ext.field();
  const Algebra<F>& a = ext.base();
  for (const auto& v : ideal.basis())
    for (Index u = 0; u < ext.ext().dim(); ++u)
      if (!ideal.contains(ext.module_basis(u).apply(v)))
        throw PreconditionError(ext.name() + ": subspace is not B-stable");
  auto inv = invariants(ext);
  auto core = ideal.intersect(inv);
  if (ideal.is_zero()) return vec_zero(f, a.dim());
  Index m = core.dim();
  Index rows_n = ideal.dim() * a.dim();
  Matrix<F> sys(f, rows_n, m);
  std::vector<typename F::Elem> rhs;
  rhs.reserve(rows_n);
  for (Index r = 0; r < ideal.dim(); ++r) {
    for (Index j = 0; j < m; ++j) {
      auto prod = a.mul(ideal.basis()[r], core.basis()[j]);
      for (Index k = 0; k < a.dim(); ++k) sys.at(r * a.dim() + k, j) = prod[k];
    }
    for (Index k = 0; k < a.dim(); ++k) rhs.push_back(ideal.basis()[r][k]);
  }
  auto sol = sys.solve_particular(rhs);
  if (!sol) return std::nullopt;
  auto e = core.from_coordinates(*sol);
  // consequences of the defining property, confirmed before returning
  if (!a.is_idempotent(e)) throw TheoremViolation(ext.name() + ": summand element is not idempotent");
  if (!(detail::left_multiples(a, e) == ideal))
    throw TheoremViolation(ext.name() + ": summand idempotent does not generate the ideal");
  auto complement = detail::left_multiples(a, vec_sub(f, a.unit(), e));
  if (!ideal.intersect(complement).is_zero() || ideal.sum(complement).dim() != a.dim())
    throw TheoremViolation(ext.name() + ": A e and A(1-e) do not decompose A");
  Matrix<F> re = a.right_mult(e);
  for (Index u = 0; u < ext.ext().dim(); ++u)
    if (!(re * ext.module_basis(u) == ext.module_basis(u) * re))
      throw TheoremViolation(ext.name() + ": projection onto the summand is not B-linear");
  return e;
}

namespace detail {

/// Shared engine for the H-regularity and H-biregularity decisions: every
/// member of the stable-ideal lattice must be generated by an invariant
/// idempotent.  Where two such idempotents commute, the join identity
/// Ae + Af = A(e + f - ef) is certified as well.
template <ExactField F>
RegularityReport idempotent_generation_report(const RepresentedExtension<F>& ext, std::uint64_t cap,
                                              const std::string& procedure) {
  RegularityReport rep;
  rep.procedure = procedure;
  rep.subject = ext.name();
  auto cyclic = cyclic_ideals_with_generators(ext, cap);
  auto lattice = stable_ideals(ext, cap);
  const Algebra<F>& a = ext.base();
  std::vector<typename Algebra<F>::Vec> idempotents;
  bool all = true;
  std::string counterexample;
  for (const auto& ideal : lattice) {
    auto e = summand_idempotent(ext, ideal);
    if (e) {
      idempotents.push_back(*e);
      continue;
    }
    all = false;
    counterexample = "no invariant idempotent generates " + ideal.to_string();
    for (const auto& [gen, cyc] : cyclic)
      if (cyc == ideal) {
        counterexample += " = B." + a.render(gen);
        break;
      }
    break;
  }
  if (all) {
    for (Index i = 0; i < idempotents.size(); ++i)
      for (Index j = i + 1; j < idempotents.size(); ++j) {
        const auto& e = idempotents[i];
        const auto& fi = idempotents[j];
        if (a.mul(e, fi) != a.mul(fi, e)) continue;
        auto join = idempotent_join(a, e, fi);
        if (!(left_multiples(a, e).sum(left_multiples(a, fi)) == left_multiples(a, join)))
          throw TheoremViolation(ext.name() + ": Ae + Af != A(e join f)");
      }
  }
  rep.verdict = all;
  rep.entries.push_back({"every stable ideal is an invariant-idempotent summand", all,
                         all ? std::to_string(lattice.size()) + " ideals certified" : counterexample});
  return rep;
}

}  // namespace detail

/// Every finitely generated H-stable left ideal of A is a direct summand
/// generated by an H-invariant idempotent (decided on the full lattice).
template <ExactField F>
RegularityReport is_H_regular(const ModuleAction<F>& act, std::uint64_t cap = kDefaultEnumerationCap) {
  return detail::idempotent_generation_report(smash_product(act), cap, "h-regular");
}

/// Two-sided analogue through the enveloping Hopf algebroid; the certifying
/// idempotents are automatically central H-invariants.
template <ExactField F>
RegularityReport is_H_biregular(const ModuleAction<F>& act, std::uint64_t cap = kDefaultEnumerationCap) {
  return detail::idempotent_generation_report(enveloping_hopf_algebroid(act), cap, "h-biregular");
}

namespace detail {

/// B-simplicity of a stable subspace W (or all of A): every nonzero cyclic
/// sub-ideal of W equals W.
template <ExactField F>
bool simple_within(const RepresentedExtension<F>& ext, const Subspace<F>& w, std::uint64_t cap) {
  if constexpr (!F::enumerable) {
    throw PreconditionError(ext.name() + ": simplicity check requires a prime field");
  } else {
    const PrimeField& f = ext.field();
    check_enumerable(ext.name(), f, w.dim(), cap);
    bool simple = true;
    for_each_member(f, w, [&](const std::vector<std::int64_t>& a) {
      if (!simple || vec_is_zero(f, a)) return;
      if (!(cyclic_stable_ideal(ext, a) == w)) simple = false;
    });
    return simple;
  }
}

}  // namespace detail

/// A is B-simple (only stable ideals 0 and A), optionally restricted to the
/// block A e for a central invariant idempotent e.
template <ExactField F>
bool is_H_simple(const ModuleAction<F>& act, std::uint64_t cap = kDefaultEnumerationCap,
                 const std::optional<typename Algebra<F>::Vec>& restrict_to = std::nullopt) {
  auto ext = enveloping_hopf_algebroid(act);
  Subspace<F> w = restrict_to ? detail::left_multiples(ext.base(), *restrict_to)
                              : Subspace<F>::full(ext.field(), ext.base().dim());
  return detail::simple_within(ext, w, cap);
}

/// Cross-validates the biregularity characterisation: (a) idempotent
/// generation, (b) regular invariants plus maximal stable ideals of the form
/// A M^B, (c) regular invariants plus B-simple localisations at the primitive
/// idempotents.  The three answers must coincide.
template <ExactField F>
RegularityReport check_biregularity_theorem(const ModuleAction<F>& act,
                                            std::uint64_t cap = kDefaultEnumerationCap) {
  auto ext = enveloping_hopf_algebroid(act);
  RegularityReport rep;
  rep.procedure = "biregularity-theorem";
  rep.subject = act.name();

  auto route_a = detail::idempotent_generation_report(ext, cap, "h-biregular");
  bool a_val = route_a.verdict;

  auto inv = invariants(ext);
  auto inv_alg = invariants_algebra(ext);
  bool inv_regular = is_regular(inv_alg);

  auto lattice = stable_ideals(ext, cap);
  auto full = Subspace<F>::full(ext.field(), ext.base().dim());
  // co-atoms of the lattice
  std::vector<Subspace<F>> maximal;
  for (const auto& m : lattice) {
    if (m == full) continue;
    bool is_max = true;
    for (const auto& other : lattice) {
      if (other == full || other == m) continue;
      if (other.contains(m) && other.dim() > m.dim()) is_max = false;
    }
    if (is_max) maximal.push_back(m);
  }
  bool b_val = inv_regular;
  std::string b_witness = inv_regular ? "invariants regular" : "invariants have nonzero radical";
  if (inv_regular) {
    for (const auto& m : maximal)
      if (!(detail::generated_by_invariant_part(ext, m, inv) == m)) {
        b_val = false;
        b_witness = "maximal stable ideal " + m.to_string() + " != A M^B";
        break;
      }
  }

  bool c_val = inv_regular;
  std::string c_witness = b_witness;
  if (inv_regular) {
    auto prims = central_idempotents(inv_alg);
    for (const auto& e_local : prims) {
      auto e = inv.from_coordinates(e_local);
      if (!detail::simple_within(ext, detail::left_multiples(ext.base(), e), cap)) {
        c_val = false;
        c_witness = "localisation at " + ext.base().render(e) + " is not B-simple";
        break;
      }
    }
    if (c_val) c_witness = std::to_string(prims.size()) + " simple localisations";
  }

  rep.entries.push_back({"(a) every stable ideal has a central invariant idempotent generator", a_val,
                         route_a.entries.front().witness});
  rep.entries.push_back({"(b) invariants regular and maximal ideals of the form A M^B", b_val, b_witness});
  rep.entries.push_back({"(c) invariants regular and all localisations B-simple", c_val, c_witness});
  rep.agree = (a_val == b_val && b_val == c_val);
  rep.verdict = a_val;
  return rep;
}

/// Cross-validates the relative-regularity characterisation on the smash
/// product: (i) every stable ideal has a stable complement, (ii) invariants
/// regular and every stable ideal is generated by its invariant part,
/// (iii) idempotent generation.
template <ExactField F>
RegularityReport check_regularity_proposition(const ModuleAction<F>& act,
                                              std::uint64_t cap = kDefaultEnumerationCap) {
  auto ext = smash_product(act);
  RegularityReport rep;
  rep.procedure = "regularity-proposition";
  rep.subject = act.name();

  auto lattice = stable_ideals(ext, cap);
  auto full = Subspace<F>::full(ext.field(), ext.base().dim());

  bool i_val = true;
  std::string i_witness = "every stable ideal has a stable complement";
  for (const auto& ideal : lattice) {
    bool has_complement = false;
    for (const auto& c : lattice)
      if (ideal.intersect(c).is_zero() && ideal.sum(c) == full) {
        has_complement = true;
        break;
      }
    if (!has_complement) {
      i_val = false;
      i_witness = "no stable complement for " + ideal.to_string();
      break;
    }
  }

  auto inv = invariants(ext);
  bool ii_val = is_regular(invariants_algebra(ext));
  std::string ii_witness = ii_val ? "invariants regular" : "invariants have nonzero radical";
  if (ii_val) {
    for (const auto& ideal : lattice)
      if (!(detail::generated_by_invariant_part(ext, ideal, inv) == ideal)) {
        ii_val = false;
        ii_witness = "stable ideal " + ideal.to_string() + " != A I^B (not a self-generator)";
        break;
      }
  }

  auto route_iii = detail::idempotent_generation_report(ext, cap, "h-regular");

  rep.entries.push_back({"(i) every stable ideal is a direct summand", i_val, i_witness});
  rep.entries.push_back({"(ii) invariants regular and A a self-generator", ii_val, ii_witness});
  rep.entries.push_back({"(iii) every stable ideal has an invariant idempotent generator",
                         route_iii.verdict, route_iii.entries.front().witness});
  rep.agree = (i_val == ii_val && ii_val == route_iii.verdict);
  rep.verdict = i_val;
  return rep;
}

struct SemiProjectivity {
  bool value = false;
  bool exact = true;  // false when only a spanning set was sampled (QQ)
};

/// (A x)^B = A^B x for every invariant x; exhaustive over prime fields,
/// basis-sampled (and flagged) over the rationals.
template <ExactField F>
SemiProjectivity is_semi_projective(const RepresentedExtension<F>& ext,
                                    std::uint64_t cap = kDefaultEnumerationCap) {
  const F& f = ext.field();
  const Algebra<F>& a = ext.base();
  auto inv = invariants(ext);
  auto check_one = [&](const typename Algebra<F>::Vec& x) {
    auto ax = detail::left_multiples(a, x);
    auto lhs = ax.intersect(inv);
    std::vector<typename Algebra<F>::Vec> rhs_vecs;
    for (const auto& w : inv.basis()) rhs_vecs.push_back(a.mul(w, x));
    auto rhs = Subspace<F>::span(f, a.dim(), rhs_vecs);
    return lhs == rhs;
  };
  if constexpr (F::enumerable) {
    detail::check_enumerable(ext.name(), f, inv.dim(), cap);
    bool ok = true;
    for_each_member(f, inv, [&](const std::vector<std::int64_t>& x) {
      if (ok && !check_one(x)) ok = false;
    });
    return {ok, true};
  } else {
    bool ok = true;
    for (const auto& x : inv.basis())
      if (!check_one(x)) ok = false;
    if (!check_one(a.unit())) ok = false;
    return {ok, false};
  }
}

/// Cross-validates the fix-ring characterisation: A^B is regular iff A is
/// semi-projective and each cyclic ideal from an invariant element is an
/// invariant-idempotent summand.
template <ExactField F>
RegularityReport check_fixring_proposition(const RepresentedExtension<F>& ext,
                                           std::uint64_t cap = kDefaultEnumerationCap) {
  RegularityReport rep;
  rep.procedure = "fixring-proposition";
  rep.subject = ext.name();
  bool lhs = is_regular(invariants_algebra(ext));

  auto sp = is_semi_projective(ext, cap);
  bool rhs = sp.value;
  std::string rhs_witness = sp.value ? "semi-projective" : "semi-projectivity fails";
  if (rhs) {
    if constexpr (F::enumerable) {
      const PrimeField& f = ext.field();
      auto inv = invariants(ext);
      detail::check_enumerable(ext.name(), f, inv.dim(), cap);
      std::set<std::string> seen;
      bool all = true;
      std::string counterexample;
      for_each_member(f, inv, [&](const std::vector<std::int64_t>& x) {
        if (!all) return;
        auto ideal = cyclic_stable_ideal(ext, x);
        if (!seen.insert(ideal.key()).second) return;
        if (!summand_idempotent(ext, ideal)) {
          all = false;
          counterexample = "B." + ext.base().render(x) + " is not an invariant-idempotent summand";
        }
      });
      rhs = all;
      if (!all) rhs_witness = counterexample;
    } else {
      // structural route only: over QQ the universal quantifier is sampled
      auto inv = invariants(ext);
      for (const auto& x : inv.basis()) {
        auto ideal = cyclic_stable_ideal(ext, x);
        if (!summand_idempotent(ext, ideal)) {
          rhs = false;
          rhs_witness = "B." + ext.base().render(x) + " is not an invariant-idempotent summand";
          break;
        }
      }
    }
  }
  rep.entries.push_back({"invariants regular", lhs, ""});
  rep.entries.push_back({"semi-projective with invariant-idempotent summands", rhs, rhs_witness});
  rep.agree = (lhs == rhs);
  rep.verdict = lhs;
  if constexpr (!F::enumerable) rep.note = "rhs sampled on a spanning set (heuristic over QQ)";
  return rep;
}

/// A^B is large in A: every nonzero stable ideal meets the invariants.
template <ExactField F>
bool is_invariants_large(const RepresentedExtension<F>& ext, std::uint64_t cap = kDefaultEnumerationCap) {
  auto inv = invariants(ext);
  auto cyclic = detail::cyclic_ideals_with_generators(ext, cap);
  for (const auto& [gen, ideal] : cyclic) {
    if (ideal.is_zero()) continue;
    if (ideal.intersect(inv).is_zero()) return false;
  }
  return true;
}

/// Verifies the consequences of biregularity on the enumerated lattice:
/// semiprimeness, the ideal bijection with the invariants, idempotent ideals,
/// intersections of maximal ideals, primes maximal, and biregular quotients.
template <ExactField F>
RegularityReport stable_ideal_properties(const ModuleAction<F>& act,
                                         std::uint64_t cap = kDefaultEnumerationCap) {
  RegularityReport rep;
  rep.procedure = "stable-ideal-properties";
  rep.subject = act.name();
  auto big = is_H_biregular(act, cap);
  if (!big.verdict) {
    rep.applicable = false;
    rep.note = "not H-biregular; properties do not apply";
    rep.verdict = false;
    return rep;
  }
  auto ext = enveloping_hopf_algebroid(act);
  const Algebra<F>& a = ext.base();
  auto inv = invariants(ext);
  auto inv_alg = invariants_algebra(ext);
  auto lattice = stable_ideals(ext, cap);
  auto full = Subspace<F>::full(ext.field(), a.dim());

  bool semiprime = is_regular(inv_alg);
  for (const auto& ideal : lattice)
    if (!ideal.is_zero() && subspace_is_nilpotent(a, ideal)) semiprime = false;
  rep.entries.push_back({"invariants regular and no nonzero nilpotent stable ideal", semiprime, ""});

  // bijection ideals(A^B) <-> stable ideals via J -> JA and I -> I^B
  bool bijection = true;
  {
    auto prims = central_idempotents(inv_alg);
    std::set<std::string> images;
    Index subsets = Index{1} << prims.size();
    for (Index mask = 0; mask < subsets; ++mask) {
      auto e = vec_zero(ext.field(), a.dim());
      for (Index t = 0; t < prims.size(); ++t)
        if (mask & (Index{1} << t)) e = vec_add(ext.field(), e, inv.from_coordinates(prims[t]));
      auto image = detail::left_multiples(a, e);
      images.insert(image.key());
      // inverse direction: (JA)^B recovers the ideal of the invariants
      auto back = image.intersect(inv);
      std::vector<typename Algebra<F>::Vec> je;
      for (const auto& w : inv.basis()) je.push_back(a.mul(w, e));
      if (!(back == Subspace<F>::span(ext.field(), a.dim(), je))) bijection = false;
    }
    if (images.size() != lattice.size()) bijection = false;
    for (const auto& ideal : lattice)
      if (!(detail::generated_by_invariant_part(ext, ideal, inv) == ideal)) bijection = false;
  }
  rep.entries.push_back({"I -> IA is a bijection from ideals of the invariants", bijection, ""});

  bool idempotent_ideals = true;
  for (const auto& ideal : lattice)
    if (!(subspace_product(a, ideal, ideal) == ideal)) idempotent_ideals = false;
  rep.entries.push_back({"every stable ideal is idempotent", idempotent_ideals, ""});

  std::vector<Subspace<F>> maximal;
  for (const auto& m : lattice) {
    if (m == full) continue;
    bool is_max = true;
    for (const auto& other : lattice)
      if (!(other == full) && !(other == m) && other.contains(m)) is_max = false;
    if (is_max) maximal.push_back(m);
  }
  bool intersections = true;
  for (const auto& ideal : lattice) {
    if (ideal == full) continue;
    auto meet = full;
    for (const auto& m : maximal)
      if (m.contains(ideal)) meet = meet.intersect(m);
    if (!(meet == ideal)) intersections = false;
  }
  rep.entries.push_back({"every proper stable ideal is an intersection of maximal ones", intersections, ""});

  bool primes_maximal = true;
  for (const auto& ideal : lattice) {
    if (ideal == full) continue;
    bool prime = true;
    for (const auto& j : lattice)
      for (const auto& k : lattice)
        if (ideal.contains(subspace_product(a, j, k)) && !ideal.contains(j) && !ideal.contains(k))
          prime = false;
    bool is_max = false;
    for (const auto& m : maximal) is_max |= (m == ideal);
    if (prime && !is_max) primes_maximal = false;
  }
  rep.entries.push_back({"every prime stable ideal is maximal", primes_maximal, ""});

  bool quotients_biregular = true;
  for (const auto& m : maximal) {
    auto quot = quotient_action(act, m);
    if (!is_H_biregular(quot, cap).verdict) quotients_biregular = false;
  }
  rep.entries.push_back({"quotients by maximal stable ideals stay biregular", quotients_biregular, ""});

  rep.verdict = semiprime && bijection && idempotent_ideals && intersections && primes_maximal &&
                quotients_biregular;
  rep.agree = rep.verdict;
  return rep;
}

}  // namespace hopfreg
