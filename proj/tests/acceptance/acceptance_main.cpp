// Acceptance suite: one criterion per function, one verdict line each.
// Run from the repository root; --cli <path> points at the hopfreg binary
// and --data <dir> at the bundled documents (defaults fit the usual build).

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hopfreg/bundled.hpp"
#include "hopfreg/checks.hpp"

using namespace hopfreg;
namespace fs = std::filesystem;

namespace {

std::string g_cli = "build/hopfreg";
std::string g_data = "data/examples";

struct Result {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CommandOutput {
  int exit_code = -1;
  std::string stdout_text;
};

CommandOutput run_command(const std::string& cmd) {
  CommandOutput out;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return out;
  char buffer[4096];
  while (size_t n = fread(buffer, 1, sizeof(buffer), pipe)) out.stdout_text.append(buffer, n);
  int status = pclose(pipe);
  out.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::vector<Document> load_bundled() {
  std::vector<Document> docs;
  for (const auto& name : bundled_document_names()) docs.push_back(Document::load(g_data + "/" + name + ".json"));
  return docs;
}

// ---- criterion 1: constructor soundness -------------------------------

Result criterion_constructors() {
  Result r;
  auto start = std::chrono::steady_clock::now();
  std::size_t loaded = 0;
  try {
    for (const auto& name : bundled_document_names()) {
      Document::load(g_data + "/" + name + ".json");
      ++loaded;
    }
  } catch (const std::exception& e) {
    r.require(false, std::string("validation failed: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.require(loaded == bundled_document_names().size(), "not all documents loaded");
  r.require(secs < 5.0, "took " + std::to_string(secs) + " s (budget 5 s)");
  r.detail = std::to_string(loaded) + " documents validated in " + std::to_string(secs) + " s";
  return r;
}

// ---- criterion 2: Maschke cross-check ----------------------------------

Result criterion_maschke() {
  Result r;
  PrimeField f2(2), f3(3);
  RationalField q;
  struct Case {
    GroupName g;
    std::size_t order;
  };
  const Case cases[] = {{GroupName::c2, 2}, {GroupName::c3, 3}, {GroupName::c2xc2, 4}, {GroupName::s3, 6}};
  for (const auto& c : cases) {
    bool expected2 = (c.order % 2) != 0;
    bool expected3 = (c.order % 3) != 0;
    r.require(is_regular(group_algebra(f2, c.g).algebra()) == expected2,
              "GF(2)[" + group_label(c.g) + "] regularity mismatch");
    r.require(is_regular(group_algebra(f3, c.g).algebra()) == expected3,
              "GF(3)[" + group_label(c.g) + "] regularity mismatch");
    r.require(is_regular(group_algebra(q, c.g).algebra()), "QQ[" + group_label(c.g) + "] must be regular");
  }
  auto rad = jacobson_radical(group_algebra(f2, GroupName::c2).algebra());
  r.require(rad.dim() == 1 && rad.basis()[0] == std::vector<std::int64_t>{1, 1},
            "radical of GF(2)[C2] is not span{1+g}");
  if (r.pass) r.detail = "12 group algebras match the char | |G| pattern exactly";
  return r;
}

// ---- criterion 3: theorem agreement ------------------------------------

Result criterion_theorem_agreement() {
  Result r;
  auto start = std::chrono::steady_clock::now();
  std::size_t actions = 0, skipped = 0;
  for (const auto& doc : load_bundled()) {
    if (doc.field_spec().kind != FieldSpec::Kind::prime) continue;
    doc.visit([&](const auto& typed) {
      using F = std::decay_t<decltype(typed.field)>;
      if constexpr (std::is_same_v<F, PrimeField>) {
        for (const auto& [name, act] : typed.actions) {
          try {
            auto big = check_biregularity_theorem(act, kDefaultEnumerationCap);
            auto reg = check_regularity_proposition(act, kDefaultEnumerationCap);
            auto fix_smash = check_fixring_proposition(smash_product(act), kDefaultEnumerationCap);
            auto fix_env = check_fixring_proposition(enveloping_hopf_algebroid(act), kDefaultEnumerationCap);
            r.require(big.agree, typed.name + "/" + name + ": biregularity routes disagree");
            r.require(reg.agree, typed.name + "/" + name + ": regularity routes disagree");
            r.require(fix_smash.agree, typed.name + "/" + name + ": fixring routes disagree (smash)");
            r.require(fix_env.agree, typed.name + "/" + name + ": fixring routes disagree (algebroid)");
            ++actions;
          } catch (const ResourceError&) {
            ++skipped;  // outside the 2^16 cap: excluded by the criterion
          }
        }
      }
    });
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.require(actions > 0, "no prime-field actions were checked");
  r.require(secs < 60.0, "took " + std::to_string(secs) + " s (budget 60 s)");
  if (r.pass)
    r.detail = std::to_string(actions) + " actions, all three cross-validations agree, " +
               std::to_string(secs) + " s" + (skipped ? " (" + std::to_string(skipped) + " beyond cap)" : "");
  return r;
}

// ---- criterion 4: casimir certification --------------------------------

Result criterion_casimir() {
  Result r;
  std::size_t certified = 0;
  for (const auto& doc : load_bundled()) {
    doc.visit([&](const auto& typed) {
      using F = std::decay_t<decltype(typed.field)>;
      for (const auto& [name, act] : typed.actions) {
        std::string who = typed.name + "/" + name;
        auto integral_space = find_integrals(act.hopf(), IntegralSide::right);
        auto t = integral_space.basis()[0];
        auto z = find_trace_one_central(act, t);
        if (!z) continue;
        auto cert = casimir_from_integral(act, t, *z);  // asserts Casimir + unitary on A
        const auto& ext = cert.space.ext();
        r.require(is_casimir(cert.space, cert.coords), who + ": not Casimir");
        r.require(acts_unitarily(cert.space, cert.coords, BModule<F>::ambient(ext)),
                  who + ": not unitary on A");
        if constexpr (F::enumerable) {
          for (const auto& ideal : stable_ideals(ext, kDefaultEnumerationCap)) {
            if (!ideal.is_zero())
              r.require(acts_unitarily(cert.space, cert.coords, BModule<F>::on_subspace(ext, ideal)),
                        who + ": not unitary on a stable ideal");
            if (ideal.dim() < ext.base().dim())
              r.require(acts_unitarily(cert.space, cert.coords, BModule<F>::quotient(ext, ideal)),
                        who + ": not unitary on a quotient");
          }
        }
        // the split is an idempotent operator on Hom_A with image Hom_B
        auto amb = BModule<F>::ambient(ext);
        auto a_basis = hom_a(ext, amb, amb);
        auto b_basis = hom_b(ext, amb, amb);
        Index na = ext.base().dim();
        const auto& f = typed.field;
        Matrix<F> p(f, a_basis.size(), a_basis.size());
        bool coords_ok = true;
        for (Index s = 0; s < a_basis.size(); ++s) {
          auto img = split_hom(cert.space, cert.coords, amb, amb, a_basis[s]);
          Matrix<F> sys(f, na * na, a_basis.size());
          std::vector<typename F::Elem> rhs;
          for (Index col = 0; col < a_basis.size(); ++col)
            for (Index x = 0; x < na; ++x)
              for (Index y = 0; y < na; ++y) sys.at(x * na + y, col) = a_basis[col].at(x, y);
          for (Index x = 0; x < na; ++x)
            for (Index y = 0; y < na; ++y) rhs.push_back(img.at(x, y));
          auto sol = sys.solve_particular(rhs);
          if (!sol) {
            coords_ok = false;
            break;
          }
          p.set_col(s, *sol);
        }
        r.require(coords_ok, who + ": split image left Hom_A");
        if (coords_ok) {
          r.require(p * p == p, who + ": split is not idempotent");
          r.require(p.rank() == b_basis.size(), who + ": split image dimension != dim Hom_B");
        }
        ++certified;
      }
    });
  }
  r.require(certified >= 6, "too few (t, z) pairs found: " + std::to_string(certified));
  if (r.pass) r.detail = std::to_string(certified) + " Casimir certificates, all exact checks pass";
  return r;
}

// ---- criterion 5: separability -> regularity transfer -------------------

Result criterion_separability_transfer() {
  Result r;
  std::size_t witnesses = 0;
  bool obstruction_seen = false;
  for (const auto& doc : load_bundled()) {
    doc.visit([&](const auto& typed) {
      for (const auto& [name, act] : typed.actions) {
        std::string who = typed.name + "/" + name;
        auto ext = smash_product(act);
        BalancedTensorSpace space(ext);
        auto witness = is_separable_extension(space);
        if (witness && is_regular(act.algebra())) {
          r.require(is_regular(ext.ext()), who + ": separable with regular A but A#H not regular");
          ++witnesses;
        }
        if (typed.name == "kc2_trivial_kxk_gf2") {
          r.require(!witness.has_value(), who + ": Maschke obstruction missed (witness found)");
          obstruction_seen = true;
        }
      }
    });
  }
  r.require(witnesses >= 4, "too few separability witnesses: " + std::to_string(witnesses));
  r.require(obstruction_seen, "the GF(2)[C2] trivial-action example was not exercised");
  if (r.pass)
    r.detail = std::to_string(witnesses) + " transfers verified; obstruction case returns absent";
  return r;
}

// ---- criterion 6: duality ----------------------------------------------

Result criterion_duality() {
  Result r;
  PrimeField f3(3);
  struct Case {
    std::string label;
    HopfAlgebra<PrimeField> hopf;
  };
  std::vector<Case> cases;
  cases.push_back({"GF(3)[C2]", group_algebra(f3, GroupName::c2)});
  cases.push_back({"GF(3)[C3]", group_algebra(f3, GroupName::c3)});
  cases.push_back({"H4 over GF(3)", sweedler_h4(f3)});
  for (const auto& c : cases) {
    auto ext = smash_product(hit_action(c.hopf));
    r.require(ext.ext().dim() == c.hopf.dim() * c.hopf.dim(), c.label + ": dimension mismatch");
    r.require(jacobson_radical(ext.ext()).is_zero(), c.label + ": H#H* has a radical");
    r.require(center(ext.ext()).dim() == 1, c.label + ": centre is not one-dimensional");
  }
  if (r.pass) r.detail = "H#H* carries the full matrix-algebra signature for all three";
  return r;
}

// ---- criterion 7: counit kernel lemma ----------------------------------

Result criterion_counit_kernel() {
  Result r;
  std::size_t hopfs = 0;
  for (const auto& doc : load_bundled()) {
    doc.visit([&](const auto& typed) {
      using F = std::decay_t<decltype(typed.field)>;
      const auto& f = typed.field;
      for (const auto& req : typed.checks) {
        if (req.check != "counit-kernel") continue;
        const auto* h = typed.find_hopf(req.target);
        if (!h) continue;
        const auto& alg = h->algebra();
        std::vector<typename Algebra<F>::Vec> gens;
        if (req.generators.empty()) {
          for (Index i = 0; i < alg.dim(); ++i) gens.push_back(alg.basis_vec(i));
        } else {
          for (const auto& label : req.generators)
            for (Index i = 0; i < alg.dim(); ++i)
              if (alg.label(i) == label) gens.push_back(alg.basis_vec(i));
        }
        std::string who = typed.name + "/" + req.target;
        auto ker = counit_kernel(*h);
        r.require(counit_kernel_ideal(*h, gens) == ker, who + ": Ker(eps) != sum H(b - eps(b))");
        std::mt19937_64 rng(987654321);
        for (int trial = 0; trial < 100; ++trial) {
          typename Algebra<F>::Vec coeffs;
          for (Index i = 0; i < ker.dim(); ++i) {
            if constexpr (F::enumerable) {
              std::uniform_int_distribution<std::int64_t> d(0, f.p - 1);
              coeffs.push_back(d(rng));
            } else {
              std::uniform_int_distribution<std::int64_t> num(-9, 9), den(1, 9);
              coeffs.push_back(f.div(f.from_int(num(rng)), f.from_int(den(rng))));
            }
          }
          auto target = ker.from_coordinates(coeffs);
          auto decomp = counit_kernel_decomposition(*h, gens, target);
          auto recon = vec_zero(f, alg.dim());
          for (Index i = 0; i < gens.size(); ++i) {
            auto shifted = vec_sub(f, gens[i], vec_scale(f, h->counit(gens[i]), alg.unit()));
            recon = vec_add(f, recon, alg.mul(decomp[i], shifted));
          }
          if (recon != target) {
            r.require(false, who + ": sampled decomposition failed");
            break;
          }
        }
        ++hopfs;
      }
    });
  }
  r.require(hopfs >= 10, "too few Hopf algebras exercised: " + std::to_string(hopfs));
  if (r.pass) r.detail = std::to_string(hopfs) + " Hopf algebras, 100 exact samples each";
  return r;
}

// ---- criterion 8: oracle equivalence ------------------------------------

Result criterion_oracle() {
  Result r;
  std::size_t algebras = 0, skipped = 0;
  auto check_algebra = [&](const Algebra<PrimeField>& a, const std::string& who) {
    if (!prime_power_within(a.field().p, a.dim(), 1000000)) {
      ++skipped;
      return;
    }
    bool witness_regular = true;
    for_each_vector(a.field(), a.dim(), [&](const std::vector<std::int64_t>& v) {
      if (witness_regular && !regularity_witness(a, v)) witness_regular = false;
    });
    r.require(is_regular(a) == witness_regular, who + ": radical and witness routes disagree");
    ++algebras;
  };
  for (const auto& doc : load_bundled()) {
    if (doc.field_spec().kind != FieldSpec::Kind::prime) continue;
    doc.visit([&](const auto& typed) {
      using F = std::decay_t<decltype(typed.field)>;
      if constexpr (std::is_same_v<F, PrimeField>) {
        for (const auto& [name, a] : typed.algebras) check_algebra(a, typed.name + "/" + name);
        for (const auto& [name, act] : typed.actions) {
          check_algebra(smash_product(act).ext(), typed.name + "/" + name + "#");
          check_algebra(enveloping_hopf_algebroid(act).ext(), typed.name + "/" + name + "|><|");
        }
      }
    });
  }
  r.require(algebras >= 30, "too few algebras checked: " + std::to_string(algebras));
  if (r.pass)
    r.detail = std::to_string(algebras) + " algebras agree (" + std::to_string(skipped) +
               " beyond the 10^6 element bound)";
  return r;
}

// ---- criterion 9: CLI round-trip and determinism -------------------------

Result criterion_cli() {
  Result r;
  if (!fs::exists(g_cli)) {
    r.require(false, "CLI binary not found at " + g_cli);
    return r;
  }
  // regeneration is byte-identical to the committed documents
  fs::path tmp = fs::temp_directory_path() / "hopfreg_accept";
  fs::remove_all(tmp);
  auto gen = run_command(g_cli + " generate --all --out " + tmp.string());
  r.require(gen.exit_code == 0, "generate --all failed");
  for (const auto& name : bundled_document_names()) {
    auto committed = slurp(g_data + "/" + name + ".json");
    auto regenerated = slurp((tmp / (name + ".json")).string());
    if (committed != regenerated) {
      r.require(false, name + ".json differs from regeneration");
      break;
    }
  }
  // load/save round trip through the CLI
  auto norm1 = run_command(g_cli + " normalize " + g_data + "/c2_swap_gf3.json");
  r.require(norm1.exit_code == 0, "normalize failed");
  r.require(norm1.stdout_text == slurp(g_data + "/c2_swap_gf3.json"), "normalize is not the identity");
  // two full suite runs without timings are byte-identical
  auto s1 = run_command(g_cli + " suite --no-timings --examples-dir " + g_data);
  auto s2 = run_command(g_cli + " suite --no-timings --examples-dir " + g_data);
  r.require(s1.exit_code == 0, "suite exited " + std::to_string(s1.exit_code));
  r.require(!s1.stdout_text.empty() && s1.stdout_text == s2.stdout_text, "suite output not byte-stable");
  auto j1 = run_command(g_cli + " suite --no-timings --report structured --examples-dir " + g_data);
  auto j2 = run_command(g_cli + " suite --no-timings --report structured --examples-dir " + g_data);
  r.require(j1.stdout_text == j2.stdout_text, "structured suite output not byte-stable");
  fs::remove_all(tmp);
  if (r.pass) r.detail = "regeneration, normalize, and two suite runs are byte-identical";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "--cli") g_cli = argv[i + 1];
    if (flag == "--data") g_data = argv[i + 1];
  }
  struct Criterion {
    const char* title;
    std::function<Result()> fn;
  };
  const std::vector<Criterion> criteria = {
      {"constructor soundness on the bundled library", criterion_constructors},
      {"Maschke cross-check for group algebras", criterion_maschke},
      {"theorem agreement across all decision routes", criterion_theorem_agreement},
      {"Casimir certification from integrals", criterion_casimir},
      {"separability implies regularity transfer", criterion_separability_transfer},
      {"H#H* matrix-algebra signature", criterion_duality},
      {"counit kernel lemma at finite scale", criterion_counit_kernel},
      {"radical criterion agrees with witness enumeration", criterion_oracle},
      {"CLI round-trip and deterministic reports", criterion_cli},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].fn();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    failures += r.pass ? 0 : 1;
    std::printf("criterion %zu: %s - %s%s%s\n", i + 1, r.pass ? "PASS" : "FAIL", criteria[i].title,
                r.detail.empty() ? "" : " | ", r.detail.c_str());
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
