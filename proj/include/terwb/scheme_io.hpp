#pragma once

#include "terwb/scheme.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace terwb {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raw relation table with the 1-based source position of every entry.
struct ParsedTable {
  std::vector<std::vector<long long>> rows;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> positions;  // (line, column)
};

/// '#' lines are comments; every other nonblank line is one row of integers.
/// Throws ParseError on non-integer tokens or ragged rows.
ParsedTable parse_table(std::string_view text);

/// parse_table then validate_scheme. Validation failures throw SchemeError whose
/// messages carry the source position of the first witness pair.
Scheme parse_scheme_file(std::string_view text);

/// Throws IoError if the file cannot be read.
Scheme read_scheme_file(const std::filesystem::path& path);

std::string render_scheme(const Scheme& s, std::string_view comment = {});

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cayley table on {0..m-1}; element 0 must be the identity.
struct GroupTable {
  std::size_t m = 0;
  std::vector<std::vector<std::size_t>> mult;
};

/// Throws GroupError with a witness if the table is not a group with identity 0.
void validate_group(const GroupTable& g);

GroupTable cyclic_group(std::size_t m);
GroupTable klein_group();
GroupTable symmetric_group_s3();

/// (x,y) in R_g iff x^{-1} y = g.
Scheme thin_from_group(const GroupTable& g);

using Permutation = std::vector<std::size_t>;

/// Orbitals of the permutation group generated by gens, with R_0 the diagonal
/// and the remaining relations numbered by first occurrence in row-major order.
/// Throws std::invalid_argument for malformed permutations or an intransitive group.
Scheme schurian_from_permgroup(std::size_t n, const std::vector<Permutation>& gens);

/// R_j = {(x,y) : y - x = +-j mod n}. Throws std::invalid_argument if n < 3.
Scheme cycle_scheme(std::size_t n);

/// Generators of the imprimitive wreath product Z_2 wr Z_m on 2m points
/// (point 2a+b is block a, position b). Its orbital scheme has r = m - 1.
std::vector<Permutation> wreath_generators(std::size_t m);

struct CatalogEntry {
  std::string name;
  std::string description;
  Scheme scheme;
  SchemeKind kind;
};

const std::vector<CatalogEntry>& catalog();
/// nullptr if no entry has this name.
const CatalogEntry* find_catalog(std::string_view name);

struct SearchHit {
  std::size_t n;
  std::vector<Permutation> generators;
  Scheme scheme;
  std::size_t group_order;
  std::size_t r_size;  // |R|
  std::size_t s_size;  // |S|, the bad pairs
  std::size_t r;       // number of classes
};

struct SearchSummary {
  std::size_t groups_examined = 0;
  std::vector<SearchHit> hits;  // one per distinct intersection-data signature
};

/// Exhaustive search over transitive groups on n points generated by a pair
/// (g1, g2) with g1 a cycle-type representative and g2 arbitrary, keeping the
/// quasi-thin non-thin orbital schemes. n ranges over [2, max_n].
SearchSummary search_quasi_thin(std::size_t max_n);

}  // namespace terwb
