#pragma once

#include <map>
#include <string>
#include <vector>

#include "document.hpp"
#include "examples.hpp"

namespace hopfreg {

// The bundled example library: ready-made documents for the standard group
// algebras, Sweedler's H4, duals, and the module-algebra actions the
// regularity and separability checks are exercised on.

namespace detail {

template <ExactField F>
struct DocBuilder {
  TypedDocument<F> doc;

  explicit DocBuilder(F field, std::string name) {
    doc.field = field;
    doc.name = std::move(name);
  }

  void add_algebra(const std::string& name, Algebra<F> a) { doc.algebras.push_back({name, std::move(a)}); }

  void add_hopf(const std::string& name, HopfAlgebra<F> h, const std::string& algebra_name) {
    add_algebra(algebra_name, h.algebra());
    doc.hopf_algebras.push_back({name, std::move(h)});
    doc.hopf_algebra_refs.push_back(algebra_name);
  }

  void add_action(const std::string& name, ModuleAction<F> act, const std::string& hopf_name,
                  const std::string& algebra_name) {
    doc.actions.push_back({name, std::move(act)});
    doc.action_refs.push_back({hopf_name, algebra_name});
  }

  void add_check(const std::string& check, const std::string& target,
                 std::vector<std::string> generators = {}) {
    doc.checks.push_back({check, target, std::move(generators)});
  }

  /// The full battery for a module-algebra action over a prime field.
  void add_prime_action_checks(const std::string& target) {
    for (const char* id :
         {"h-regular", "h-biregular", "h-simple", "biregularity-theorem", "regularity-proposition",
          "fixring-proposition", "semi-projective", "invariants-large", "stable-ideal-properties",
          "trace-one-central", "casimir-certification", "separable-extension", "relative-semisimple",
          "trace-one-regularity"})
      add_check(id, target);
  }

  /// The non-enumerative subset that runs over the rationals.
  void add_rational_action_checks(const std::string& target) {
    for (const char* id : {"semi-projective", "fixring-proposition", "trace-one-central",
                           "casimir-certification", "separable-extension"})
      add_check(id, target);
  }

  Document finish() { return Document::wrap(std::move(doc)); }
};

inline std::vector<std::string> group_generators(GroupName g) {
  switch (g) {
    case GroupName::c2: return {"g"};
    case GroupName::c3: return {"g"};
    case GroupName::c2xc2: return {"a", "b"};
    case GroupName::s3: return {"(12)", "(123)"};
  }
  return {};
}

inline std::string field_tag(const FieldSpec& s) {
  return s.kind == FieldSpec::Kind::prime ? "gf" + std::to_string(s.p) : "q";
}

inline std::string group_key(GroupName g) {
  switch (g) {
    case GroupName::c2: return "kc2";
    case GroupName::c3: return "kc3";
    case GroupName::c2xc2: return "kc2xc2";
    case GroupName::s3: return "ks3";
  }
  return "?";
}

template <ExactField F>
Document build_hopf_library(const F& f, const std::string& name) {
  DocBuilder<F> b(f, name);
  std::vector<std::pair<std::string, HopfAlgebra<F>>> hopfs;
  for (GroupName g : {GroupName::c2, GroupName::c3, GroupName::c2xc2, GroupName::s3})
    hopfs.push_back({group_key(g), group_algebra(f, g)});
  if (f.characteristic() == 3) hopfs.push_back({"h4", sweedler_h4(f)});
  for (const auto& [key, h] : hopfs) {
    b.add_hopf(key, h, key);
    b.add_hopf(key + "_dual", dual_hopf(h), key + "_dual");
  }
  b.add_algebra("kxk", product_field_algebra(f));
  b.add_algebra("m2", matrix_algebra(f, 2));
  for (GroupName g : {GroupName::c2, GroupName::c3, GroupName::c2xc2, GroupName::s3}) {
    b.add_check("integrals", group_key(g));
    b.add_check("counit-kernel", group_key(g), group_generators(g));
    b.add_check("integrals", group_key(g) + "_dual");
    b.add_check("counit-kernel", group_key(g) + "_dual");
  }
  if (f.characteristic() == 3) {
    b.add_check("integrals", "h4");
    b.add_check("counit-kernel", "h4", {"g", "x"});
    b.add_check("integrals", "h4_dual");
    b.add_check("counit-kernel", "h4_dual");
  }
  return b.finish();
}

template <ExactField F>
Document build_swap(const F& f, const std::string& name) {
  DocBuilder<F> b(f, name);
  auto act = swap_action(f);
  b.add_hopf("kc2", act.hopf(), "kc2");
  b.add_algebra("kxk", act.algebra());
  b.add_action("swap", act, "kc2", "kxk");
  if (f.characteristic() == 0)
    b.add_rational_action_checks("swap");
  else
    b.add_prime_action_checks("swap");
  return b.finish();
}

template <ExactField F>
Document build_trivial_on_group(const F& f, GroupName g, const std::string& name) {
  DocBuilder<F> b(f, name);
  auto h = trivial_hopf(f);
  auto a = group_algebra(f, g).algebra();
  b.add_hopf("k", h, "k");
  b.add_algebra(group_key(g), a);
  b.add_action("trivial", trivial_action(h, a), "k", group_key(g));
  if (f.characteristic() == 0)
    b.add_rational_action_checks("trivial");
  else
    b.add_prime_action_checks("trivial");
  return b.finish();
}

template <ExactField F>
Document build_trivial_hopf_on_kxk(const F& f, const std::string& name) {
  DocBuilder<F> b(f, name);
  auto h = trivial_hopf(f);
  auto a = product_field_algebra(f);
  b.add_hopf("k", h, "k");
  b.add_algebra("kxk", a);
  b.add_action("trivial", trivial_action(h, a), "k", "kxk");
  b.add_prime_action_checks("trivial");
  return b.finish();
}

template <ExactField F>
Document build_group_trivial_on_kxk(const F& f, GroupName g, const std::string& name) {
  DocBuilder<F> b(f, name);
  auto h = group_algebra(f, g);
  auto a = product_field_algebra(f);
  b.add_hopf(group_key(g), h, group_key(g));
  b.add_algebra("kxk", a);
  b.add_action("trivial", trivial_action(h, a), group_key(g), "kxk");
  if (f.characteristic() == 0)
    b.add_rational_action_checks("trivial");
  else
    b.add_prime_action_checks("trivial");
  return b.finish();
}

template <ExactField F>
Document build_sign_swap(const F& f, const std::string& name) {
  DocBuilder<F> b(f, name);
  auto act = sign_swap_action(f);
  b.add_hopf("ks3", act.hopf(), "ks3");
  b.add_algebra("kxk", act.algebra());
  b.add_action("sign_swap", act, "ks3", "kxk");
  b.add_prime_action_checks("sign_swap");
  return b.finish();
}

template <ExactField F>
Document build_m2_conj(const F& f, const std::string& name) {
  DocBuilder<F> b(f, name);
  auto act = matrix_conjugation_action(f);
  b.add_hopf("kc2", act.hopf(), "kc2");
  b.add_algebra("m2", act.algebra());
  b.add_action("conj", act, "kc2", "m2");
  if (f.characteristic() == 0)
    b.add_rational_action_checks("conj");
  else
    b.add_prime_action_checks("conj");
  return b.finish();
}

template <ExactField F>
Document build_h4_trivial(const F& f, const std::string& name) {
  DocBuilder<F> b(f, name);
  auto h = sweedler_h4(f);
  auto a = product_field_algebra(f);
  b.add_hopf("h4", h, "h4");
  b.add_algebra("kxk", a);
  b.add_action("trivial", trivial_action(h, a), "h4", "kxk");
  b.add_prime_action_checks("trivial");
  return b.finish();
}

template <ExactField F>
Document build_duality(const F& f, const HopfAlgebra<F>& h, const std::string& hopf_key,
                       const std::string& name) {
  DocBuilder<F> b(f, name);
  b.add_hopf(hopf_key, h, hopf_key);
  b.add_hopf(hopf_key + "_dual", dual_hopf(h), hopf_key + "_dual");
  b.add_action("hit", hit_action(h), hopf_key + "_dual", hopf_key);
  b.add_check("duality", hopf_key);
  if (f.characteristic() == 0)
    b.add_rational_action_checks("hit");
  else
    b.add_prime_action_checks("hit");
  return b.finish();
}

}  // namespace detail

inline const std::vector<std::string>& bundled_document_names() {
  static const std::vector<std::string> names = {
      "hopf_library_gf2", "hopf_library_gf3", "hopf_library_q",
      "c2_swap_gf2",      "c2_swap_gf3",      "c2_swap_q",
      "c2_trivial_gf2",   "kc2_trivial_kxk_gf2", "trivial_kxk_gf2",
      "s3_sign_swap_gf3", "m2_conj_c2_gf3",   "m2_conj_c2_q",
      "h4_trivial_gf3",   "kc2_hit_gf2",
      "duality_c2_gf3",   "duality_c3_gf3",   "duality_h4_gf3",
  };
  return names;
}

inline Document build_bundled_document(const std::string& name) {
  PrimeField f2(2), f3(3);
  RationalField q;
  if (name == "hopf_library_gf2") return detail::build_hopf_library(f2, name);
  if (name == "hopf_library_gf3") return detail::build_hopf_library(f3, name);
  if (name == "hopf_library_q") return detail::build_hopf_library(q, name);
  if (name == "c2_swap_gf2") return detail::build_swap(f2, name);
  if (name == "c2_swap_gf3") return detail::build_swap(f3, name);
  if (name == "c2_swap_q") return detail::build_swap(q, name);
  if (name == "c2_trivial_gf2") return detail::build_trivial_on_group(f2, GroupName::c2, name);
  if (name == "kc2_trivial_kxk_gf2") return detail::build_group_trivial_on_kxk(f2, GroupName::c2, name);
  if (name == "trivial_kxk_gf2") return detail::build_trivial_hopf_on_kxk(f2, name);
  if (name == "s3_sign_swap_gf3") return detail::build_sign_swap(f3, name);
  if (name == "m2_conj_c2_gf3") return detail::build_m2_conj(f3, name);
  if (name == "m2_conj_c2_q") return detail::build_m2_conj(q, name);
  if (name == "h4_trivial_gf3") return detail::build_h4_trivial(f3, name);
  if (name == "kc2_hit_gf2") {
    auto h = group_algebra(f2, GroupName::c2);
    return detail::build_duality(f2, h, "kc2", name);
  }
  if (name == "duality_c2_gf3") return detail::build_duality(f3, group_algebra(f3, GroupName::c2), "kc2", name);
  if (name == "duality_c3_gf3") return detail::build_duality(f3, group_algebra(f3, GroupName::c3), "kc3", name);
  if (name == "duality_h4_gf3") return detail::build_duality(f3, sweedler_h4(f3), "h4", name);
  throw UsageError("unknown bundled example '" + name + "'");
}

/// Parametric generators for the CLI: builds a document from a family name
/// and parameters (group, field/p, hopf).
inline Document generate_document(const std::string& kind, const std::map<std::string, std::string>& params) {
  auto field_of = [&]() -> FieldSpec {
    auto it = params.find("field");
    if (it == params.end() || it->second == "rational" || it->second == "q") return FieldSpec::rational();
    std::string v = it->second;
    if (v.rfind("prime:", 0) == 0) v = v.substr(6);
    return FieldSpec::prime(std::stoll(v));
  };
  auto group_of = [&]() {
    auto it = params.find("group");
    std::string g = it == params.end() ? "c2" : it->second;
    if (g == "c2") return GroupName::c2;
    if (g == "c3") return GroupName::c3;
    if (g == "c2xc2") return GroupName::c2xc2;
    if (g == "s3") return GroupName::s3;
    throw UsageError("unknown group '" + g + "' (use c2, c3, c2xc2, s3)");
  };
  for (const auto& name : bundled_document_names())
    if (kind == name) return build_bundled_document(name);
  if (kind == "group_algebra") {
    auto g = group_of();
    return dispatch_field(field_of(), [&](auto f) -> Document {
      detail::DocBuilder<decltype(f)> b(f, detail::group_key(g) + "_" + detail::field_tag(f.spec()));
      b.add_hopf(detail::group_key(g), group_algebra(f, g), detail::group_key(g));
      b.add_check("integrals", detail::group_key(g));
      b.add_check("counit-kernel", detail::group_key(g), detail::group_generators(g));
      return b.finish();
    });
  }
  if (kind == "sweedler_h4") {
    return dispatch_field(field_of(), [&](auto f) -> Document {
      detail::DocBuilder<decltype(f)> b(f, "h4_" + detail::field_tag(f.spec()));
      b.add_hopf("h4", sweedler_h4(f), "h4");
      b.add_check("integrals", "h4");
      b.add_check("counit-kernel", "h4", {"g", "x"});
      return b.finish();
    });
  }
  if (kind == "duality") {
    auto it = params.find("hopf");
    std::string h = it == params.end() ? "c2" : it->second;
    return dispatch_field(field_of(), [&](auto f) -> Document {
      if (h == "h4") return detail::build_duality(f, sweedler_h4(f), "h4", "duality_h4_" + detail::field_tag(f.spec()));
      GroupName g = h == "c2" ? GroupName::c2 : h == "c3" ? GroupName::c3 : h == "c2xc2" ? GroupName::c2xc2 : GroupName::s3;
      return detail::build_duality(f, group_algebra(f, g), detail::group_key(g),
                                   "duality_" + h + "_" + detail::field_tag(f.spec()));
    });
  }
  if (kind == "swap") {
    return dispatch_field(field_of(), [&](auto f) -> Document {
      return detail::build_swap(f, "c2_swap_" + detail::field_tag(f.spec()));
    });
  }
  if (kind == "trivial_group") {
    auto g = group_of();
    return dispatch_field(field_of(), [&](auto f) -> Document {
      return detail::build_trivial_on_group(f, g, detail::group_key(g) + "_trivial_" + detail::field_tag(f.spec()));
    });
  }
  throw UsageError("unknown example family '" + kind + "'");
}

}  // namespace hopfreg
