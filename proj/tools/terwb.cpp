#include "terwb/classes.hpp"
#include "terwb/pipeline.hpp"
#include "terwb/scheme_io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

namespace {

using namespace terwb;

enum Exit { ok = 0, usage = 1, invalid_scheme = 2, io_error = 3, counterexample = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_violations(const SchemeError& e) {
  std::cerr << "invalid scheme\n";
  for (const auto& v : e.violations()) std::cerr << "  " << v.message << "\n";
}

/// "catalog:NAME" or a path to a scheme file.
std::pair<Scheme, std::string> load_source(const std::string& source) {
  const std::string prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) {
    auto name = source.substr(prefix.size());
    const auto* entry = find_catalog(name);
    if (!entry) throw UsageError("unknown catalog entry '" + name + "' (see 'terwb catalog --list')");
    return {entry->scheme, entry->name};
  }
  return {read_scheme_file(source), std::filesystem::path(source).stem().string()};
}

int cmd_validate(const std::string& path) {
  auto s = read_scheme_file(path);
  auto cls = classify(s);
  std::cout << "valid scheme: n = " << s.n() << ", d = " << s.d() << ", " << to_string(cls.kind) << "\n";
  auto ids = check_valency_identities(s);
  if (!ids.passed) {
    std::cout << "valency identity failed: " << ids.failure << "\n";
    return counterexample;
  }
  return ok;
}

int cmd_analyze(const std::string& source, const AnalysisOptions& opt, bool json) {
  auto [scheme, id] = load_source(source);
  auto report = analyze(scheme, id, opt);
  if (json) std::cout << report.to_json().dump(2) << "\n";
  else std::cout << report.to_text();
  return report.counterexample() ? counterexample : ok;
}

void write_atomically(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << text;
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

int cmd_batch(const std::vector<std::string>& fields, const std::string& json_dir, bool timings) {
  if (fields.empty()) throw UsageError("batch needs at least one field");
  std::vector<FieldSpec> specs;
  for (const auto& f : fields) specs.push_back(FieldSpec::parse(f));
  if (!json_dir.empty()) std::filesystem::create_directories(json_dir);

  std::size_t width = 6;
  for (const auto& e : catalog()) width = std::max(width, e.name.size());
  std::cout << std::string(width, ' ');
  for (const auto& f : specs) std::cout << "  " << f.name() << std::string(f.name().size() < 4 ? 4 - f.name().size() : 0, ' ');
  std::cout << "\n";
  bool all = true;
  for (const auto& e : catalog()) {
    std::cout << e.name << std::string(width - e.name.size(), ' ');
    for (const auto& f : specs) {
      std::string cell;
      try {
        AnalysisOptions opt;
        opt.field = f;
        opt.all_basepoints = true;
        opt.timings = timings;
        auto report = analyze(e.scheme, e.name, opt);
        cell = report.counterexample() ? "FAIL" : "pass";
        if (!json_dir.empty()) {
          auto file = std::filesystem::path(json_dir) / (e.name + "_" + f.name() + ".json");
          write_atomically(file, report.to_json().dump(2) + "\n");
        }
      } catch (const std::exception& ex) {
        cell = "ERROR";
        std::cerr << e.name << " over " << f.name() << ": " << ex.what() << "\n";
      }
      if (cell != "pass") all = false;
      std::cout << "  " << cell << std::string(f.name().size() > 4 ? f.name().size() - 4 : 0, ' ');
    }
    std::cout << "\n";
  }
  std::cout << (all ? "all runs passed" : "some runs failed") << "\n";
  return all ? ok : counterexample;
}

int cmd_catalog(bool list_only) {
  for (const auto& e : catalog()) {
    if (list_only) {
      std::cout << e.name << "\n";
      continue;
    }
    std::cout << e.name << ": n = " << e.scheme.n() << ", d = " << e.scheme.d() << ", " << to_string(e.kind) << ". "
              << e.description << "\n";
  }
  return ok;
}

int cmd_search(std::size_t max_n, const std::string& out_dir) {
  auto summary = search_quasi_thin(max_n);
  std::cout << "groups examined: " << summary.groups_examined << "\n";
  std::cout << "quasi-thin non-thin Schurian schemes (up to intersection data): " << summary.hits.size() << "\n";
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  std::size_t k = 0;
  for (const auto& h : summary.hits) {
    std::cout << "n = " << h.n << ", |G| = " << h.group_order << ", d = " << h.scheme.d() << ", |R| = " << h.r_size
              << ", |S| = " << h.s_size << ", r = " << h.r << "\n";
    if (!out_dir.empty()) {
      auto name = "search-" + std::to_string(h.n) + "-" + std::to_string(k++) + ".scheme";
      std::string comment = "orbital scheme of a group of order " + std::to_string(h.group_order);
      write_atomically(std::filesystem::path(out_dir) / name, render_scheme(h.scheme, comment));
    }
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Terwilliger algebras of quasi-thin association schemes"};
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check that a scheme file satisfies the scheme axioms");
  validate->add_option("file", validate_path, "scheme file")->required();

  std::string source, field = "p=2";
  std::size_t basepoint = 0;
  bool all_basepoints = false, json = false, timings = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run the full analysis on a scheme file or catalog:NAME");
  analyze_cmd->add_option("source", source, "scheme file or catalog:NAME")->required();
  analyze_cmd->add_option("--field", field, "p=<prime> or q")->capture_default_str();
  analyze_cmd->add_option("--basepoint", basepoint, "base point x")->capture_default_str();
  analyze_cmd->add_flag("--all-basepoints", all_basepoints, "compare dim T(x) over all base points");
  analyze_cmd->add_flag("--json", json, "emit the JSON report");
  analyze_cmd->add_flag("--timings", timings, "record stage timings (nondeterministic)");

  std::vector<std::string> fields{"p=2", "p=3", "q"};
  std::string json_dir;
  auto* batch = app.add_subcommand("batch", "Analyze every catalog entry over several fields");
  auto* fields_opt = batch->add_option("--fields", fields, "fields to run")->delimiter(',')->capture_default_str();
  batch->add_option("--json-dir", json_dir, "directory for one JSON report per run");
  batch->add_flag("--timings", timings, "record stage timings (nondeterministic)");

  bool list_only = false;
  auto* catalog_cmd = app.add_subcommand("catalog", "Describe the built-in schemes");
  catalog_cmd->add_flag("--list", list_only, "names only");

  std::size_t max_n = 8;
  std::string out_dir;
  auto* search = app.add_subcommand("search", "Search small transitive groups for quasi-thin orbital schemes");
  search->add_option("--max-n", max_n, "largest number of points")->capture_default_str()->check(CLI::Range(2, 10));
  search->add_option("--out-dir", out_dir, "write each find as a scheme file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*validate) return cmd_validate(validate_path);
    if (*analyze_cmd) {
      AnalysisOptions opt;
      opt.field = FieldSpec::parse(field);
      opt.basepoint = basepoint;
      opt.all_basepoints = all_basepoints;
      opt.timings = timings;
      return cmd_analyze(source, opt, json);
    }
    if (*batch) {
      std::erase(fields, std::string());
      if (fields_opt->count() > 0 && fields.empty()) throw UsageError("batch needs at least one field");
      return cmd_batch(fields, json_dir, timings);
    }
    if (*catalog_cmd) return cmd_catalog(list_only);
    if (*search) return cmd_search(max_n, out_dir);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const SchemeError& e) {
    print_violations(e);
    return invalid_scheme;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return invalid_scheme;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return io_error;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return io_error;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
