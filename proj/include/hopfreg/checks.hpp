#pragma once

#include <chrono>
#include <random>
#include <string>
#include <vector>

#include "document.hpp"
#include "separability.hpp"

namespace hopfreg {

enum class CheckStatus { ok, disagreement, inapplicable, resource_error };

inline std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::ok: return "ok";
    case CheckStatus::disagreement: return "disagreement";
    case CheckStatus::inapplicable: return "inapplicable";
    case CheckStatus::resource_error: return "resource-error";
  }
  return "?";
}

struct CheckOutcome {
  std::string check;
  std::string target;
  CheckStatus status = CheckStatus::ok;
  std::vector<VerdictEntry> verdicts;
  std::string note;
  double ms = 0.0;
};

struct CheckOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  std::uint64_t seed = 20240801;
  int samples = 100;
};

struct SuiteReport {
  std::string document_name;
  std::string field;
  std::vector<CheckOutcome> outcomes;

  int exit_code() const {
    bool disagree = false, resource = false;
    for (const auto& o : outcomes) {
      disagree |= (o.status == CheckStatus::disagreement);
      resource |= (o.status == CheckStatus::resource_error);
    }
    if (disagree) return 1;
    if (resource) return 3;
    return 0;
  }

  Json to_json(bool timings) const {
    Json root;
    root["format"] = "hopfreg-report";
    root["document"] = document_name;
    root["field"] = field;
    Json results = Json::array();
    for (const auto& o : outcomes) {
      Json r;
      r["check"] = o.check;
      r["target"] = o.target;
      r["status"] = status_name(o.status);
      if (!o.note.empty()) r["note"] = o.note;
      Json verdicts = Json::array();
      for (const auto& v : o.verdicts) {
        Json e;
        e["label"] = v.label;
        e["value"] = v.value;
        if (!v.witness.empty()) e["witness"] = v.witness;
        verdicts.push_back(e);
      }
      r["verdicts"] = verdicts;
      if (timings) r["timing_ms"] = o.ms;
      results.push_back(r);
    }
    root["results"] = results;
    Json summary;
    summary["checks"] = outcomes.size();
    int disagreements = 0, resources = 0;
    for (const auto& o : outcomes) {
      disagreements += o.status == CheckStatus::disagreement;
      resources += o.status == CheckStatus::resource_error;
    }
    summary["disagreements"] = disagreements;
    summary["resource_errors"] = resources;
    summary["exit_code"] = exit_code();
    root["summary"] = summary;
    return root;
  }

  std::string to_text(bool timings) const {
    std::string s = "document " + document_name + " over " + field + "\n";
    for (const auto& o : outcomes) {
      s += "[" + status_name(o.status) + "] " + o.check + " " + o.target;
      if (timings) s += " (" + std::to_string(o.ms) + " ms)";
      s += "\n";
      if (!o.note.empty()) s += "    note: " + o.note + "\n";
      for (const auto& v : o.verdicts) {
        s += "    " + v.label + ": " + (v.value ? "true" : "false");
        if (!v.witness.empty()) s += "  [" + v.witness + "]";
        s += "\n";
      }
    }
    int code = exit_code();
    s += "summary: " + std::to_string(outcomes.size()) + " checks, exit " + std::to_string(code) + "\n";
    return s;
  }
};

namespace detail {

template <ExactField F>
typename F::Elem random_scalar(const F& f, std::mt19937_64& rng) {
  if constexpr (std::is_same_v<F, PrimeField>) {
    std::uniform_int_distribution<std::int64_t> d(0, f.p - 1);
    return d(rng);
  } else {
    std::uniform_int_distribution<std::int64_t> num(-9, 9), den(1, 9);
    return f.div(f.from_int(num(rng)), f.from_int(den(rng)));
  }
}

template <ExactField F>
CheckOutcome check_integrals(const TypedDocument<F>& doc, const CheckRequest& req) {
  const HopfAlgebra<F>* h = doc.find_hopf(req.target);
  if (!h) throw UsageError("integrals: unknown hopf algebra '" + req.target + "'");
  CheckOutcome out{req.check, req.target};
  auto right = find_integrals(*h, IntegralSide::right);
  auto left = find_integrals(*h, IntegralSide::left);
  out.verdicts.push_back({"right integral space has dimension 1", right.dim() == 1, right.to_string()});
  out.verdicts.push_back({"left integral space has dimension 1", left.dim() == 1, left.to_string()});
  out.verdicts.push_back({"antipode bijective", h->antipode_bijective(), ""});
  if (h->antipode_bijective()) {
    auto inv = h->antipode_matrix().inverse();
    bool conv = true;
    for (const auto& t : left.basis()) conv &= right.contains(inv->apply(t));
    out.verdicts.push_back({"S^{-1} turns left integrals into right ones", conv, ""});
    if (!conv) out.status = CheckStatus::disagreement;
  } else {
    out.note = "antipode singular: left-to-right conversion skipped";
  }
  return out;
}

template <ExactField F>
CheckOutcome check_counit_kernel(const TypedDocument<F>& doc, const CheckRequest& req,
                                 const CheckOptions& opt) {
  const HopfAlgebra<F>* h = doc.find_hopf(req.target);
  if (!h) throw UsageError("counit-kernel: unknown hopf algebra '" + req.target + "'");
  const F& f = doc.field;
  const Algebra<F>& alg = h->algebra();
  std::vector<typename Algebra<F>::Vec> gens;
  if (req.generators.empty()) {
    for (Index i = 0; i < alg.dim(); ++i) gens.push_back(alg.basis_vec(i));
  } else {
    for (const auto& label : req.generators) {
      bool found = false;
      for (Index i = 0; i < alg.dim(); ++i)
        if (alg.label(i) == label) {
          gens.push_back(alg.basis_vec(i));
          found = true;
        }
      if (!found) throw UsageError("counit-kernel: unknown generator label '" + label + "'");
    }
  }
  CheckOutcome out{req.check, req.target};
  auto ker = counit_kernel(*h);
  bool equal = counit_kernel_ideal(*h, gens) == ker;
  out.verdicts.push_back({"Ker(eps) = sum of H(b - eps(b))", equal, "kernel dimension " + std::to_string(ker.dim())});
  std::mt19937_64 rng(opt.seed);
  bool reconstructed = true;
  for (int trial = 0; trial < opt.samples && equal; ++trial) {
    typename Algebra<F>::Vec coeffs;
    for (Index i = 0; i < ker.dim(); ++i) coeffs.push_back(random_scalar(f, rng));
    auto target = ker.from_coordinates(coeffs);
    auto decomp = counit_kernel_decomposition(*h, gens, target);
    auto recon = vec_zero(f, alg.dim());
    for (Index i = 0; i < gens.size(); ++i) {
      auto shifted = vec_sub(f, gens[i], vec_scale(f, h->counit(gens[i]), alg.unit()));
      recon = vec_add(f, recon, alg.mul(decomp[i], shifted));
    }
    if (recon != target) reconstructed = false;
  }
  out.verdicts.push_back(
      {"sampled kernel elements decompose exactly", reconstructed, std::to_string(opt.samples) + " samples"});
  if (!equal || !reconstructed) out.status = CheckStatus::disagreement;
  return out;
}

template <ExactField F>
CheckOutcome check_duality(const TypedDocument<F>& doc, const CheckRequest& req) {
  const HopfAlgebra<F>* h = doc.find_hopf(req.target);
  if (!h) throw UsageError("duality: unknown hopf algebra '" + req.target + "'");
  CheckOutcome out{req.check, req.target};
  auto ext = smash_product(hit_action(*h));
  bool dim_ok = ext.ext().dim() == h->dim() * h->dim();
  bool rad_ok = jacobson_radical(ext.ext()).is_zero();
  bool centre_ok = center(ext.ext()).dim() == 1;
  out.verdicts.push_back({"dim H#H* = (dim H)^2", dim_ok, std::to_string(ext.ext().dim())});
  out.verdicts.push_back({"H#H* has zero radical", rad_ok, ""});
  out.verdicts.push_back({"H#H* has one-dimensional centre", centre_ok, ""});
  if (!(dim_ok && rad_ok && centre_ok)) out.status = CheckStatus::disagreement;
  return out;
}

template <ExactField F>
const ModuleAction<F>& action_target(const TypedDocument<F>& doc, const CheckRequest& req) {
  const ModuleAction<F>* act = doc.find_action(req.target);
  if (!act) throw UsageError(req.check + ": unknown action '" + req.target + "'");
  return *act;
}

inline void absorb_report(CheckOutcome& out, const RegularityReport& rep) {
  if (!rep.applicable) {
    out.status = CheckStatus::inapplicable;
    out.note = rep.note;
    return;
  }
  for (const auto& e : rep.entries) out.verdicts.push_back(e);
  if (!rep.agree) out.status = CheckStatus::disagreement;
}

template <ExactField F>
CheckOutcome check_semi_projective(const TypedDocument<F>& doc, const CheckRequest& req,
                                   const CheckOptions& opt) {
  const auto& act = action_target(doc, req);
  CheckOutcome out{req.check, req.target};
  auto smash = is_semi_projective(smash_product(act), opt.cap);
  auto env = is_semi_projective(enveloping_hopf_algebroid(act), opt.cap);
  out.verdicts.push_back({"A#H: (Ax)^B = A^B x for all invariant x", smash.value, ""});
  out.verdicts.push_back({"A^e|><|H: (Ax)^B = A^B x for all invariant x", env.value, ""});
  if (!smash.exact) out.note = "checked on a spanning set only (heuristic over QQ)";
  return out;
}

template <ExactField F>
CheckOutcome check_trace_one_central(const TypedDocument<F>& doc, const CheckRequest& req) {
  const auto& act = action_target(doc, req);
  CheckOutcome out{req.check, req.target};
  auto right = find_integrals(act.hopf(), IntegralSide::right);
  auto t = right.basis()[0];
  auto z = find_trace_one_central(act, t);
  out.verdicts.push_back({"right integral", true, act.hopf().algebra().render(t)});
  out.verdicts.push_back(
      {"central z with S(t).z = 1", z.has_value(), z ? act.algebra().render(*z) : "absent"});
  return out;
}

template <ExactField F>
CheckOutcome check_casimir_certification(const TypedDocument<F>& doc, const CheckRequest& req,
                                         const CheckOptions& opt) {
  const auto& act = action_target(doc, req);
  CheckOutcome out{req.check, req.target};
  auto right = find_integrals(act.hopf(), IntegralSide::right);
  auto t = right.basis()[0];
  auto z = find_trace_one_central(act, t);
  if (!z) {
    out.status = CheckStatus::inapplicable;
    out.note = "no central z with S(t).z = 1";
    return out;
  }
  auto cert = casimir_from_integral(act, t, *z);
  const auto& ext = cert.space.ext();
  out.verdicts.push_back({"c is Casimir and unitary on A", true,
                          "t = " + act.hopf().algebra().render(t) + ", z = " + act.algebra().render(*z)});
  bool ideals_ok = true, quotients_ok = true;
  if constexpr (F::enumerable) {
    for (const auto& ideal : stable_ideals(ext, opt.cap)) {
      if (!ideal.is_zero())
        ideals_ok &= acts_unitarily(cert.space, cert.coords, BModule<F>::on_subspace(ext, ideal));
      if (ideal.dim() < ext.base().dim())
        quotients_ok &= acts_unitarily(cert.space, cert.coords, BModule<F>::quotient(ext, ideal));
    }
    out.verdicts.push_back({"c acts unitarily on every stable ideal", ideals_ok, ""});
    out.verdicts.push_back({"c acts unitarily on every quotient", quotients_ok, ""});
  } else {
    out.note = "stable-ideal sweep skipped over QQ";
  }
  // split_hom is a projection of Hom_A(A, A) onto Hom_B(A, A)
  auto amb = BModule<F>::ambient(ext);
  auto a_basis = hom_a(ext, amb, amb);
  auto b_basis = hom_b(ext, amb, amb);
  bool projector_ok = true;
  Index na = ext.base().dim();
  Matrix<F> p(doc.field, a_basis.size(), a_basis.size());
  for (Index s = 0; s < a_basis.size(); ++s) {
    auto img = split_hom(cert.space, cert.coords, amb, amb, a_basis[s]);
    Matrix<F> sys(doc.field, na * na, a_basis.size());
    typename Algebra<F>::Vec rhs;
    for (Index r = 0; r < a_basis.size(); ++r)
      for (Index x = 0; x < na; ++x)
        for (Index y = 0; y < na; ++y) sys.at(x * na + y, r) = a_basis[r].at(x, y);
    for (Index x = 0; x < na; ++x)
      for (Index y = 0; y < na; ++y) rhs.push_back(img.at(x, y));
    auto sol = sys.solve_particular(rhs);
    if (!sol) {
      projector_ok = false;
      break;
    }
    p.set_col(s, *sol);
  }
  if (projector_ok) projector_ok = (p * p == p) && (p.rank() == b_basis.size());
  out.verdicts.push_back(
      {"split of Hom_A onto Hom_B is idempotent with rank dim Hom_B", projector_ok,
       "dim Hom_A = " + std::to_string(a_basis.size()) + ", dim Hom_B = " + std::to_string(b_basis.size())});
  // both mu routes agree
  bool mu_ok = cert.space.mu(cert.coords) == mu_by_leg_formula(act, t, *z);
  bool invariant_z = true;
  for (Index u = 0; u < act.hopf().dim(); ++u)
    if (act.act_basis(u).apply(*z) != vec_scale(doc.field, act.hopf().counit_vector()[u], *z))
      invariant_z = false;
  if (invariant_z || act.hopf().cocommutative())
    mu_ok = mu_ok && (cert.space.mu(cert.coords) == ext.ext().unit());
  out.verdicts.push_back({"mu(c) agrees along both computation routes", mu_ok, ""});
  if (!(ideals_ok && quotients_ok && projector_ok && mu_ok)) out.status = CheckStatus::disagreement;
  return out;
}

template <ExactField F>
CheckOutcome check_separable_extension(const TypedDocument<F>& doc, const CheckRequest& req) {
  const auto& act = action_target(doc, req);
  CheckOutcome out{req.check, req.target};
  auto ext = smash_product(act);
  BalancedTensorSpace<F> space(ext);
  auto witness = is_separable_extension(space);
  out.verdicts.push_back({"separability element exists", witness.has_value(),
                          witness ? "mu(c) = 1 with " + std::to_string(space.dim()) + " tensor coordinates"
                                  : "feasibility system inconsistent"});
  if (witness) {
    bool casimir_ok = is_casimir(space, *witness) && space.mu(*witness) == ext.ext().unit();
    out.verdicts.push_back({"witness is Casimir with mu(c) = 1", casimir_ok, ""});
    if (!casimir_ok) out.status = CheckStatus::disagreement;
    if (is_regular(act.algebra())) {
      bool transfer = is_regular(ext.ext());
      out.verdicts.push_back({"A regular and separable: A#H regular", transfer, ""});
      if (!transfer) out.status = CheckStatus::disagreement;
    }
  }
  return out;
}

template <ExactField F>
CheckOutcome check_relative_semisimple_req(const TypedDocument<F>& doc, const CheckRequest& req,
                                           const CheckOptions& opt) {
  const auto& act = action_target(doc, req);
  CheckOutcome out{req.check, req.target};
  bool value = check_relative_semisimple(smash_product(act), opt.cap);
  out.verdicts.push_back({"A-split cyclic stable ideals are B-split", value, ""});
  return out;
}

template <ExactField F>
SuiteReport run_checks_typed(const TypedDocument<F>& doc, const std::vector<CheckRequest>& requests,
                             const CheckOptions& opt) {
  SuiteReport report;
  report.document_name = doc.name.empty() ? "(unnamed)" : doc.name;
  report.field = doc.field.characteristic() == 0
                     ? "QQ"
                     : "GF(" + std::to_string(doc.field.characteristic()) + ")";
  for (const auto& req : requests) {
    auto start = std::chrono::steady_clock::now();
    CheckOutcome out{req.check, req.target};
    try {
      if (req.check == "integrals") {
        out = check_integrals(doc, req);
      } else if (req.check == "counit-kernel") {
        out = check_counit_kernel(doc, req, opt);
      } else if (req.check == "duality") {
        out = check_duality(doc, req);
      } else if (req.check == "h-regular") {
        absorb_report(out, is_H_regular(action_target(doc, req), opt.cap));
      } else if (req.check == "h-biregular") {
        absorb_report(out, is_H_biregular(action_target(doc, req), opt.cap));
      } else if (req.check == "h-simple") {
        bool v = is_H_simple(action_target(doc, req), opt.cap);
        out.verdicts.push_back({"only stable ideals are 0 and A", v, ""});
      } else if (req.check == "biregularity-theorem") {
        absorb_report(out, check_biregularity_theorem(action_target(doc, req), opt.cap));
      } else if (req.check == "regularity-proposition") {
        absorb_report(out, check_regularity_proposition(action_target(doc, req), opt.cap));
      } else if (req.check == "fixring-proposition") {
        const auto& act = action_target(doc, req);
        auto smash_rep = check_fixring_proposition(smash_product(act), opt.cap);
        auto env_rep = check_fixring_proposition(enveloping_hopf_algebroid(act), opt.cap);
        for (auto rep : {&smash_rep, &env_rep}) {
          std::string prefix = rep == &smash_rep ? "A#H: " : "A^e|><|H: ";
          for (const auto& e : rep->entries) out.verdicts.push_back({prefix + e.label, e.value, e.witness});
          if (!rep->agree) out.status = CheckStatus::disagreement;
        }
        if (!smash_rep.note.empty()) out.note = smash_rep.note;
      } else if (req.check == "semi-projective") {
        out = check_semi_projective(doc, req, opt);
      } else if (req.check == "invariants-large") {
        bool v = is_invariants_large(smash_product(action_target(doc, req)), opt.cap);
        out.verdicts.push_back({"every nonzero stable ideal meets the invariants", v, ""});
      } else if (req.check == "stable-ideal-properties") {
        absorb_report(out, stable_ideal_properties(action_target(doc, req), opt.cap));
      } else if (req.check == "trace-one-central") {
        out = check_trace_one_central(doc, req);
      } else if (req.check == "casimir-certification") {
        out = check_casimir_certification(doc, req, opt);
      } else if (req.check == "separable-extension") {
        out = check_separable_extension(doc, req);
      } else if (req.check == "relative-semisimple") {
        out = check_relative_semisimple_req(doc, req, opt);
      } else if (req.check == "trace-one-regularity") {
        absorb_report(out, check_trace_one_regularity(action_target(doc, req), opt.cap));
      } else {
        throw UsageError("unknown check '" + req.check + "'");
      }
    } catch (const ResourceError& e) {
      out.status = CheckStatus::resource_error;
      out.note = std::string(e.what()) + " (required cap " + std::to_string(e.required_cap) + ")";
    } catch (const TheoremViolation& e) {
      out.status = CheckStatus::disagreement;
      out.note = e.what();
    }
    auto end = std::chrono::steady_clock::now();
    out.ms = std::chrono::duration<double, std::milli>(end - start).count();
    report.outcomes.push_back(std::move(out));
  }
  return report;
}

}  // namespace detail

inline const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> ids = {
      "integrals",        "counit-kernel",          "duality",
      "h-regular",        "h-biregular",            "h-simple",
      "biregularity-theorem", "regularity-proposition", "fixring-proposition",
      "semi-projective",  "invariants-large",       "stable-ideal-properties",
      "trace-one-central", "casimir-certification", "separable-extension",
      "relative-semisimple", "trace-one-regularity"};
  return ids;
}

/// Runs the given requests (or the document's own check list when empty).
inline SuiteReport run_checks(const Document& doc, std::vector<CheckRequest> requests,
                              const CheckOptions& opt = {}) {
  if (requests.empty()) requests = doc.checks();
  for (const auto& r : requests) {
    bool known = false;
    for (const auto& id : known_checks()) known |= (id == r.check);
    if (!known) throw UsageError("unknown check '" + r.check + "'");
  }
  return doc.visit([&](const auto& typed) { return detail::run_checks_typed(typed, requests, opt); });
}

}  // namespace hopfreg
