#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace terwb {

using Vertex = std::size_t;
using Relation = std::size_t;

/// p[i][j][l] = p_{ij}^l, the number of z with (x,z) in R_i and (z,y) in R_j for (x,y) in R_l.
class IntersectionTensor {
 public:
  IntersectionTensor() = default;
  explicit IntersectionTensor(std::size_t d) : d_(d), data_((d + 1) * (d + 1) * (d + 1), 0) {}

  std::size_t d() const noexcept { return d_; }
  std::size_t operator()(Relation i, Relation j, Relation l) const { return data_[index(i, j, l)]; }
  std::size_t& at(Relation i, Relation j, Relation l) { return data_[index(i, j, l)]; }

  bool operator==(const IntersectionTensor&) const = default;

 private:
  std::size_t index(Relation i, Relation j, Relation l) const { return (i * (d_ + 1) + j) * (d_ + 1) + l; }
  std::size_t d_ = 0;
  std::vector<std::size_t> data_;
};

/// The vertex-free combinatorial data of a scheme: enough for complex products,
/// valency identities and the bad-pair/class combinatorics.
struct IntersectionData {
  std::size_t d = 0;
  std::vector<std::size_t> valency;
  std::vector<Relation> involution;
  IntersectionTensor p;

  /// {l : p_{ij}^l > 0 for some i in u, j in v}, sorted.
  std::vector<Relation> complex_product(const std::vector<Relation>& u, const std::vector<Relation>& v) const;
  std::size_t product_size(Relation i, Relation j) const { return complex_product({i}, {j}).size(); }
};

enum class Axiom { shape, range, nonempty, s1, s2, s3, valency };
std::string to_string(Axiom a);

struct Violation {
  Axiom axiom;
  std::string message;
  std::vector<std::size_t> witness;  // a vertex pair/triple or a relation index
};

struct SchemeValidation;

class SchemeError : public std::runtime_error {
 public:
  explicit SchemeError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// An association scheme on X = {0..n-1}: relation table plus derived intersection data.
/// Only constructible through validation, so every Scheme satisfies (S1)-(S3).
class Scheme {
 public:
  std::size_t n() const noexcept { return n_; }
  std::size_t d() const noexcept { return data_.d; }
  Relation relation(Vertex x, Vertex y) const { return table_[x * n_ + y]; }
  const std::vector<Relation>& table() const noexcept { return table_; }

  const IntersectionData& data() const noexcept { return data_; }
  std::size_t valency(Relation i) const { return data_.valency[i]; }
  Relation converse(Relation i) const { return data_.involution[i]; }
  std::size_t p(Relation i, Relation j, Relation l) const { return data_.p(i, j, l); }

  /// xR_i in increasing vertex order.
  std::vector<Vertex> neighbourhood(Vertex x, Relation i) const;

  bool operator==(const Scheme& other) const { return n_ == other.n_ && table_ == other.table_; }

 private:
  friend SchemeValidation validate_scheme(const std::vector<std::vector<long long>>& table);
  Scheme() = default;
  std::size_t n_ = 0;
  std::vector<Relation> table_;
  IntersectionData data_;
};

struct SchemeValidation {
  std::optional<Scheme> scheme;
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks shape, index range, nonempty parts and (S1)-(S3); every violation is
/// reported with a witness (capped at a handful per axiom).
SchemeValidation validate_scheme(const std::vector<std::vector<long long>>& table);

/// validate_scheme, throwing SchemeError on any violation.
Scheme make_scheme(const std::vector<std::vector<long long>>& table);

struct IntersectionResult {
  std::optional<IntersectionTensor> tensor;
  std::vector<Violation> inconsistencies;
};

/// Counts p_{ij}^l from one representative pair per relation and verifies the
/// counts over every pair of that relation. Table is flat n x n with entries in [d].
IntersectionResult intersection_numbers(std::size_t n, std::size_t d, const std::vector<Relation>& table);

struct Valencies {
  std::vector<std::size_t> k;
  std::vector<Relation> involution;
};

/// k_i = p_{i i'}^0, cross-checked against |xR_i| for every base point x.
/// Throws SchemeError if the two disagree anywhere.
Valencies valencies(const Scheme& s);

enum class SchemeKind { thin, quasi_thin, neither };
std::string to_string(SchemeKind k);

struct Classification {
  SchemeKind kind;
  std::map<std::size_t, std::vector<Relation>> by_valency;  // j -> A_j
};

Classification classify(const IntersectionData& data);
inline Classification classify(const Scheme& s) { return classify(s.data()); }
inline bool is_quasi_thin(const Scheme& s) { return classify(s).kind != SchemeKind::neither; }

struct IdentityReport {
  bool passed = true;
  std::size_t checks = 0;
  std::string failure;  // first failing identity, with indices
};

/// The four standard valency/intersection-number identities for all index
/// triples, plus |R_i R_j| <= gcd(k_i, k_j).
IdentityReport check_valency_identities(const IntersectionData& data);
inline IdentityReport check_valency_identities(const Scheme& s) { return check_valency_identities(s.data()); }

}  // namespace terwb
