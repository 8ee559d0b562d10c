#pragma once

#include "terwb/field.hpp"
#include "terwb/report.hpp"
#include "terwb/scheme.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace terwb {

struct AnalysisOptions {
  FieldSpec field = FieldSpec::prime(2);
  Vertex basepoint = 0;
  bool all_basepoints = false;
  bool timings = false;  // wall-clock stage timings make the output nondeterministic
  std::size_t cutoff = 10;
};

struct Section {
  std::string name;
  Report report;
};

/// Everything one run of the pipeline establishes; unset optionals are stages
/// that do not apply (for example the basic algebra of a non-quasi-thin scheme).
struct AnalysisReport {
  std::string scheme_id;
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<std::size_t> valencies;
  std::string classification;
  std::string field;
  Vertex basepoint = 0;
  std::size_t dim_t = 0;
  std::optional<std::string> notice;

  std::optional<std::size_t> r_size, s_size, r;
  std::vector<std::size_t> class_sizes;
  std::optional<std::size_t> formula_dim;
  std::optional<bool> basis_verified, mult_table_verified, cellular_verified, heredity_verified;
  std::vector<std::size_t> cell_chain;
  std::optional<std::size_t> radical_dim, nilpotency_index;
  std::optional<std::string> semisimple_verdict;
  std::optional<std::size_t> simple_count;
  std::optional<std::size_t> basic_dim, basic_radical_index;
  std::optional<bool> psi_verified;
  std::vector<std::vector<std::size_t>> cartan;
  std::optional<std::size_t> gldim;
  std::optional<std::string> domdim;  // a number, "infinite" or ">cutoff"
  std::vector<std::size_t> basepoint_dims;
  std::vector<std::pair<std::string, double>> timings;

  std::vector<Section> sections;

  /// True when some verification failed.
  bool counterexample() const;
  std::optional<std::pair<std::string, Check>> first_failure() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// Runs closure, class data, structured basis, multiplication table, cellular
/// and heredity checks, and (quasi-thin only) the radical, basic algebra and
/// homological invariants over the requested field.
AnalysisReport analyze(const Scheme& s, const std::string& scheme_id, const AnalysisOptions& options);

}  // namespace terwb
