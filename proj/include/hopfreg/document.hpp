#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "action.hpp"

namespace hopfreg {

using Json = nlohmann::ordered_json;

struct CheckRequest {
  std::string check;
  std::string target;
  std::vector<std::string> generators;  // optional, for counit-kernel targets
};

/// A fully validated document over a fixed field: named algebras, Hopf
/// algebras, actions, and the checks to run.  Loading re-runs every
/// constructor audit; a document that parses but breaks an axiom is rejected
/// with the violated identity.
template <ExactField F>
struct TypedDocument {
  F field{};
  std::string name;
  std::vector<std::pair<std::string, Algebra<F>>> algebras;
  std::vector<std::pair<std::string, HopfAlgebra<F>>> hopf_algebras;
  std::vector<std::string> hopf_algebra_refs;  // underlying algebra names
  std::vector<std::pair<std::string, ModuleAction<F>>> actions;
  std::vector<std::pair<std::string, std::string>> action_refs;  // (hopf, algebra) names
  std::vector<CheckRequest> checks;

  const Algebra<F>* find_algebra(const std::string& n) const {
    for (const auto& [name_, a] : algebras)
      if (name_ == n) return &a;
    return nullptr;
  }
  const HopfAlgebra<F>* find_hopf(const std::string& n) const {
    for (const auto& [name_, h] : hopf_algebras)
      if (name_ == n) return &h;
    return nullptr;
  }
  const ModuleAction<F>* find_action(const std::string& n) const {
    for (const auto& [name_, a] : actions)
      if (name_ == n) return &a;
    return nullptr;
  }
};

namespace detail {

template <ExactField F>
typename F::Elem parse_scalar(const F& f, const Json& j, const std::string& where) {
  if (!j.is_string()) throw ValidationError(where + ": scalars must be strings");
  return f.parse(j.get<std::string>());
}

template <ExactField F>
std::vector<typename F::Elem> parse_vector(const F& f, const Json& j, Index n, const std::string& where) {
  if (!j.is_array() || j.size() != n)
    throw ValidationError(where + ": expected an array of " + std::to_string(n) + " scalars");
  std::vector<typename F::Elem> out;
  for (const auto& e : j) out.push_back(parse_scalar(f, e, where));
  return out;
}

template <ExactField F>
Json dump_vector(const F& f, const std::vector<typename F::Elem>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(f.to_string(x));
  return j;
}

inline const Json& expect(const Json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(where + ": missing key '" + key + "'");
  return *it;
}

inline std::string expect_string(const Json& j, const std::string& key, const std::string& where) {
  const auto& v = expect(j, key, where);
  if (!v.is_string()) throw ValidationError(where + ": '" + key + "' must be a string");
  return v.get<std::string>();
}

template <ExactField F>
TypedDocument<F> load_typed(const F& field, const Json& root) {
  TypedDocument<F> doc;
  doc.field = field;
  doc.name = root.contains("name") ? expect_string(root, "name", "document") : "";

  for (const auto& entry : root.value("algebras", Json::array())) {
    std::string name = expect_string(entry, "name", "algebra");
    std::string where = "algebra '" + name + "'";
    if (doc.find_algebra(name)) throw ValidationError(where + ": duplicate name");
    const auto& mult_j = expect(entry, "mult", where);
    if (!mult_j.is_array() || mult_j.empty()) throw ValidationError(where + ": 'mult' must be a nonempty array");
    Index n = mult_j.size();
    std::vector<typename F::Elem> mult;
    mult.reserve(n * n * n);
    for (Index i = 0; i < n; ++i) {
      if (!mult_j[i].is_array() || mult_j[i].size() != n)
        throw ValidationError(where + ": 'mult' must be a dim x dim x dim tensor");
      for (Index j = 0; j < n; ++j) {
        auto row = parse_vector(field, mult_j[i][j], n, where + " mult[" + std::to_string(i) + "][" +
                                                          std::to_string(j) + "]");
        mult.insert(mult.end(), row.begin(), row.end());
      }
    }
    auto unit = parse_vector(field, expect(entry, "unit", where), n, where + " unit");
    std::vector<std::string> labels;
    if (entry.contains("labels")) {
      for (const auto& l : entry["labels"]) labels.push_back(l.get<std::string>());
    }
    doc.algebras.push_back({name, Algebra<F>::create(field, n, std::move(mult), std::move(unit),
                                                     std::move(labels), name)});
  }

  for (const auto& entry : root.value("hopf_algebras", Json::array())) {
    std::string name = expect_string(entry, "name", "hopf algebra");
    std::string where = "hopf algebra '" + name + "'";
    if (doc.find_hopf(name)) throw ValidationError(where + ": duplicate name");
    std::string alg_name = expect_string(entry, "algebra", where);
    const Algebra<F>* alg = doc.find_algebra(alg_name);
    if (!alg) throw ValidationError(where + ": unknown algebra '" + alg_name + "'");
    Index n = alg->dim();
    const auto& comult_j = expect(entry, "comult", where);
    if (!comult_j.is_array() || comult_j.size() != n)
      throw ValidationError(where + ": 'comult' needs one row per basis element");
    std::vector<std::vector<typename F::Elem>> comult;
    for (Index i = 0; i < n; ++i)
      comult.push_back(parse_vector(field, comult_j[i], n * n, where + " comult[" + std::to_string(i) + "]"));
    auto counit = parse_vector(field, expect(entry, "counit", where), n, where + " counit");
    const auto& anti_j = expect(entry, "antipode", where);
    if (!anti_j.is_array() || anti_j.size() != n)
      throw ValidationError(where + ": 'antipode' needs one row per basis element");
    std::vector<std::vector<typename F::Elem>> antipode;
    for (Index i = 0; i < n; ++i)
      antipode.push_back(parse_vector(field, anti_j[i], n, where + " antipode[" + std::to_string(i) + "]"));
    doc.hopf_algebras.push_back(
        {name, HopfAlgebra<F>::create(*alg, std::move(comult), std::move(counit), std::move(antipode))});
    doc.hopf_algebra_refs.push_back(alg_name);
  }

  for (const auto& entry : root.value("actions", Json::array())) {
    std::string name = expect_string(entry, "name", "action");
    std::string where = "action '" + name + "'";
    if (doc.find_action(name)) throw ValidationError(where + ": duplicate name");
    std::string hopf_name = expect_string(entry, "hopf", where);
    std::string alg_name = expect_string(entry, "algebra", where);
    const HopfAlgebra<F>* hopf = doc.find_hopf(hopf_name);
    const Algebra<F>* alg = doc.find_algebra(alg_name);
    if (!hopf) throw ValidationError(where + ": unknown hopf algebra '" + hopf_name + "'");
    if (!alg) throw ValidationError(where + ": unknown algebra '" + alg_name + "'");
    const auto& act_j = expect(entry, "act", where);
    if (!act_j.is_array() || act_j.size() != hopf->dim())
      throw ValidationError(where + ": 'act' needs one block per Hopf basis element");
    std::vector<Matrix<F>> act;
    for (Index u = 0; u < hopf->dim(); ++u) {
      if (!act_j[u].is_array() || act_j[u].size() != alg->dim())
        throw ValidationError(where + ": 'act' blocks must be dim(A) x dim(A)");
      Matrix<F> m(field, alg->dim(), alg->dim());
      for (Index i = 0; i < alg->dim(); ++i) {
        auto col = parse_vector(field, act_j[u][i], alg->dim(),
                                where + " act[" + std::to_string(u) + "][" + std::to_string(i) + "]");
        m.set_col(i, col);  // act[u][i] = coordinates of e_u . e_i
      }
      act.push_back(std::move(m));
    }
    doc.actions.push_back({name, ModuleAction<F>::create(*hopf, *alg, std::move(act), name)});
    doc.action_refs.push_back({hopf_name, alg_name});
  }

  for (const auto& entry : root.value("checks", Json::array())) {
    CheckRequest req;
    req.check = expect_string(entry, "check", "check request");
    req.target = expect_string(entry, "target", "check request");
    if (entry.contains("generators"))
      for (const auto& g : entry["generators"]) req.generators.push_back(g.get<std::string>());
    doc.checks.push_back(std::move(req));
  }
  return doc;
}

template <ExactField F>
Json save_typed(const TypedDocument<F>& doc) {
  const F& f = doc.field;
  Json root;
  root["format"] = "hopfreg-document";
  root["version"] = 1;
  if (!doc.name.empty()) root["name"] = doc.name;
  root["field"] = f.characteristic() == 0 ? Json{{"kind", "rational"}}
                                          : Json{{"kind", "prime"}, {"p", f.characteristic()}};
  root["algebras"] = Json::array();
  for (const auto& [name, a] : doc.algebras) {
    Json entry;
    entry["name"] = name;
    entry["labels"] = a.labels();
    entry["unit"] = dump_vector(f, a.unit());
    Json mult = Json::array();
    for (Index i = 0; i < a.dim(); ++i) {
      Json row_i = Json::array();
      for (Index j = 0; j < a.dim(); ++j) {
        Json row_j = Json::array();
        for (Index k = 0; k < a.dim(); ++k) row_j.push_back(f.to_string(a.sc(i, j, k)));
        row_i.push_back(row_j);
      }
      mult.push_back(row_i);
    }
    entry["mult"] = mult;
    root["algebras"].push_back(entry);
  }
  root["hopf_algebras"] = Json::array();
  for (Index t = 0; t < doc.hopf_algebras.size(); ++t) {
    const auto& [name, h] = doc.hopf_algebras[t];
    Json entry;
    entry["name"] = name;
    entry["algebra"] = doc.hopf_algebra_refs[t];
    Json comult = Json::array();
    for (Index i = 0; i < h.dim(); ++i) comult.push_back(dump_vector(f, h.comult_rows()[i]));
    entry["comult"] = comult;
    entry["counit"] = dump_vector(f, h.counit_vector());
    Json anti = Json::array();
    for (Index i = 0; i < h.dim(); ++i) anti.push_back(dump_vector(f, h.antipode_matrix().col(i)));
    entry["antipode"] = anti;
    root["hopf_algebras"].push_back(entry);
  }
  root["actions"] = Json::array();
  for (Index t = 0; t < doc.actions.size(); ++t) {
    const auto& [name, act] = doc.actions[t];
    Json entry;
    entry["name"] = name;
    entry["hopf"] = doc.action_refs[t].first;
    entry["algebra"] = doc.action_refs[t].second;
    Json blocks = Json::array();
    for (Index u = 0; u < act.hopf().dim(); ++u) {
      Json block = Json::array();
      for (Index i = 0; i < act.algebra().dim(); ++i)
        block.push_back(dump_vector(f, act.act_basis(u).col(i)));
      blocks.push_back(block);
    }
    entry["act"] = blocks;
    root["actions"].push_back(entry);
  }
  root["checks"] = Json::array();
  for (const auto& req : doc.checks) {
    Json entry;
    entry["check"] = req.check;
    entry["target"] = req.target;
    if (!req.generators.empty()) entry["generators"] = req.generators;
    root["checks"].push_back(entry);
  }
  return root;
}

}  // namespace detail

/// Field-dispatched document: the concrete contents live in a TypedDocument
/// over either GF(p) or QQ.
class Document {
 public:
  using Variant = std::variant<TypedDocument<PrimeField>, TypedDocument<RationalField>>;

  static Document from_json(const Json& root) {
    if (!root.is_object()) throw ValidationError("document root must be an object");
    if (root.value("format", "") != "hopfreg-document")
      throw ValidationError("not a hopfreg document (missing format tag)");
    const auto& field_j = detail::expect(root, "field", "document");
    std::string kind = detail::expect_string(field_j, "kind", "field");
    Document doc;
    if (kind == "prime") {
      if (!field_j.contains("p") || !field_j["p"].is_number_integer())
        throw ValidationError("prime field needs an integer 'p'");
      doc.spec_ = FieldSpec::prime(field_j["p"].get<std::int64_t>());
      doc.typed_ = detail::load_typed(PrimeField(doc.spec_.p), root);
    } else if (kind == "rational") {
      doc.spec_ = FieldSpec::rational();
      doc.typed_ = detail::load_typed(RationalField{}, root);
    } else {
      throw ValidationError("unknown field kind '" + kind + "'");
    }
    return doc;
  }

  template <ExactField F>
  static Document wrap(TypedDocument<F> typed) {
    Document doc;
    doc.spec_ = typed.field.spec();
    doc.typed_ = std::move(typed);
    return doc;
  }

  static Document parse(const std::string& text) {
    Json root;
    try {
      root = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ValidationError(std::string("parse error: ") + e.what());
    }
    return from_json(root);
  }

  static Document load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open document '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
  }

  const FieldSpec& field_spec() const { return spec_; }

  Json to_json() const {
    return std::visit([](const auto& t) { return detail::save_typed(t); }, typed_);
  }

  /// Canonical byte representation: two-space indent, trailing newline.
  std::string save_text() const { return to_json().dump(2) + "\n"; }

  void save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write document '" + path + "'");
    out << save_text();
  }

  template <class Fn>
  decltype(auto) visit(Fn&& fn) const {
    return std::visit(std::forward<Fn>(fn), typed_);
  }

  const std::string& name() const {
    return std::visit([](const auto& t) -> const std::string& { return t.name; }, typed_);
  }

  std::vector<CheckRequest> checks() const {
    return std::visit([](const auto& t) { return t.checks; }, typed_);
  }

 private:
  FieldSpec spec_;
  Variant typed_;
};

}  // namespace hopfreg
