// Command line front end: document validation, check running, batch suites,
// and generation of the bundled example library.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "hopfreg/bundled.hpp"
#include "hopfreg/checks.hpp"

namespace fs = std::filesystem;
using namespace hopfreg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitValidation = 2;
constexpr int kExitResource = 3;
constexpr int kExitUsage = 4;

struct ReportFlags {
  std::string format = "text";  // text | structured
  bool timings = true;
  std::string out_path;
};

void emit(const std::string& text, const ReportFlags& flags) {
  if (flags.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(flags.out_path);
  if (!out) throw UsageError("cannot write report to '" + flags.out_path + "'");
  out << text;
}

std::string render(const SuiteReport& report, const ReportFlags& flags) {
  if (flags.format == "structured") return report.to_json(flags.timings).dump(2) + "\n";
  return report.to_text(flags.timings);
}

Document resolve_document(const std::string& target, const std::string& examples_dir) {
  if (fs::exists(target)) return Document::load(target);
  fs::path candidate = fs::path(examples_dir) / (target + ".json");
  if (fs::exists(candidate)) return Document::load(candidate.string());
  throw UsageError("no document file '" + target + "' and no bundled '" + candidate.string() + "'");
}

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << " (required cap " << e.required_cap << ")\n";
    return kExitResource;
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem disagreement: " << e.what() << "\n";
    return kExitDisagreement;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hopfreg: regularity and separability checks for Hopf module algebras"};
  app.require_subcommand(1);

  std::string examples_dir = "data/examples";

  auto* validate = app.add_subcommand("validate", "load a document and run all constructor audits");
  std::string validate_path;
  validate->add_option("document", validate_path, "document file")->required();

  auto* normalize = app.add_subcommand("normalize", "re-emit a document in canonical form");
  std::string normalize_path, normalize_out;
  normalize->add_option("document", normalize_path, "document file")->required();
  normalize->add_option("-o,--out", normalize_out, "output path (default: stdout)");

  auto* check = app.add_subcommand("check", "run checks from a document (or a selection)");
  std::string check_target;
  std::vector<std::string> select;
  std::string select_target;
  std::uint64_t cap = kDefaultEnumerationCap;
  ReportFlags check_flags;
  bool no_timings = false;
  check->add_option("document", check_target, "document file or bundled example name")->required();
  check->add_option("--select", select, "run only these check ids (with --target)");
  check->add_option("--target", select_target, "target name for --select");
  check->add_option("--cap", cap, "enumeration cap (default 65536)");
  check->add_option("--report", check_flags.format, "report format: text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  check->add_flag("--no-timings", no_timings, "suppress timing output (byte-stable reports)");
  check->add_option("--out", check_flags.out_path, "write the report to a file");
  check->add_option("--examples-dir", examples_dir, "directory with bundled documents");

  auto* suite = app.add_subcommand("suite", "run every document in the examples directory");
  ReportFlags suite_flags;
  bool suite_no_timings = false;
  std::uint64_t suite_cap = kDefaultEnumerationCap;
  suite->add_option("--examples-dir", examples_dir, "directory with bundled documents");
  suite->add_option("--cap", suite_cap, "enumeration cap (default 65536)");
  suite->add_option("--report", suite_flags.format, "report format: text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  suite->add_flag("--no-timings", suite_no_timings, "suppress timing output (byte-stable reports)");
  suite->add_option("--out", suite_flags.out_path, "write the report to a file");

  auto* generate = app.add_subcommand("generate", "write a bundled or parametric example document");
  std::string gen_name, gen_out, gen_group = "c2", gen_field = "prime:3", gen_hopf = "c2";
  bool gen_list = false, gen_all = false;
  generate->add_option("name", gen_name,
                       "bundled name or family (group_algebra, sweedler_h4, duality, swap, trivial_group)");
  generate->add_option("-o,--out", gen_out, "output path (default: <name>.json; with --all: directory)");
  generate->add_option("--group", gen_group, "group for parametric families (c2, c3, c2xc2, s3)");
  generate->add_option("--field", gen_field, "field for parametric families (prime:<p> or rational)");
  generate->add_option("--hopf", gen_hopf, "hopf algebra for the duality family (c2, c3, h4)");
  generate->add_flag("--list", gen_list, "list bundled document names");
  generate->add_flag("--all", gen_all, "write every bundled document into the output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  if (*validate) {
    return run_guarded([&] {
      auto doc = Document::load(validate_path);
      std::cout << "document '" << doc.name() << "' over " << doc.field_spec().name()
                << " validates: all constructor audits passed\n";
      return kExitOk;
    });
  }

  if (*normalize) {
    return run_guarded([&] {
      auto doc = Document::load(normalize_path);
      if (normalize_out.empty())
        std::cout << doc.save_text();
      else
        doc.save(normalize_out);
      return kExitOk;
    });
  }

  if (*check) {
    check_flags.timings = !no_timings;
    return run_guarded([&] {
      auto doc = resolve_document(check_target, examples_dir);
      std::vector<CheckRequest> requests;
      if (!select.empty()) {
        if (select_target.empty()) throw UsageError("--select needs --target");
        for (const auto& id : select) requests.push_back({id, select_target, {}});
      }
      CheckOptions opt;
      opt.cap = cap;
      auto report = run_checks(doc, requests, opt);
      emit(render(report, check_flags), check_flags);
      return report.exit_code();
    });
  }

  if (*suite) {
    suite_flags.timings = !suite_no_timings;
    return run_guarded([&] {
      std::vector<fs::path> files;
      if (!fs::is_directory(examples_dir))
        throw UsageError("examples directory '" + examples_dir + "' does not exist");
      for (const auto& entry : fs::directory_iterator(examples_dir))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      CheckOptions opt;
      opt.cap = suite_cap;
      std::string text;
      Json all = Json::array();
      int exit_code = kExitOk;
      for (const auto& file : files) {
        auto doc = Document::load(file.string());
        auto report = run_checks(doc, {}, opt);
        if (suite_flags.format == "structured")
          all.push_back(report.to_json(suite_flags.timings));
        else
          text += report.to_text(suite_flags.timings) + "\n";
        int code = report.exit_code();
        if (code == kExitDisagreement || (code == kExitResource && exit_code != kExitDisagreement))
          exit_code = code;
      }
      if (suite_flags.format == "structured") {
        Json root;
        root["format"] = "hopfreg-suite-report";
        root["documents"] = files.size();
        root["reports"] = all;
        text = root.dump(2) + "\n";
      }
      emit(text, suite_flags);
      return exit_code;
    });
  }

  if (*generate) {
    return run_guarded([&] {
      if (gen_list) {
        for (const auto& n : bundled_document_names()) std::cout << n << "\n";
        return kExitOk;
      }
      if (gen_all) {
        if (gen_out.empty()) throw UsageError("--all needs --out <directory>");
        fs::create_directories(gen_out);
        for (const auto& n : bundled_document_names()) {
          auto doc = build_bundled_document(n);
          doc.save((fs::path(gen_out) / (n + ".json")).string());
        }
        std::cout << "wrote " << bundled_document_names().size() << " documents to " << gen_out << "\n";
        return kExitOk;
      }
      if (gen_name.empty()) throw UsageError("generate needs a name (or --list / --all)");
      std::map<std::string, std::string> params{
          {"group", gen_group}, {"field", gen_field}, {"hopf", gen_hopf}};
      auto doc = generate_document(gen_name, params);
      std::string out = gen_out.empty() ? gen_name + ".json" : gen_out;
      doc.save(out);
      std::cout << "wrote " << out << "\n";
      return kExitOk;
    });
  }

  return kExitUsage;
}
