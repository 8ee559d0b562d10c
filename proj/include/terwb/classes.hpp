#pragma once

#include "terwb/scheme.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace terwb {

class NotQuasiThinError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ClassDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using RelationPair = std::pair<Relation, Relation>;

/// Bad pairs: (i, l) in A_2 x A_2 reachable by a chain of one or more edges
/// i -> l (some j with p_{ij}^l = 1, k_i = k_l = 2) with |R_{i'} R_l| = 1.
/// Throws NotQuasiThinError if some valency exceeds 2.
std::set<RelationPair> bad_pairs(const IntersectionData& data);

struct ClassData {
  std::vector<Relation> a1;
  std::vector<Relation> a2;
  std::set<RelationPair> r_set;  // pairs in A_2 x A_2 with |R_{i'} R_j| = 2
  std::set<RelationPair> s_set;  // bad pairs
  std::set<RelationPair> u_set;
  std::vector<std::vector<Relation>> classes;  // C_1..C_r, each sorted, ordered by smallest member
  std::vector<std::size_t> class_of;           // relation -> class index in 1..r, 0 for A_1

  std::size_t r() const noexcept { return classes.size(); }
  /// C_0 = [d], C_l for l >= 1.
  std::vector<Relation> members(std::size_t l) const;
  /// D_0 = A_1, D_l = C_l.
  std::vector<Relation> d_set(std::size_t l) const { return l == 0 ? a1 : classes.at(l - 1); }
};

/// Computes R, S and the classes of ~ on A_2. Throws ClassDataError with a
/// witness if ~ fails to be reflexive, symmetric or transitive.
ClassData class_data(const IntersectionData& data);
inline ClassData class_data(const Scheme& s) { return class_data(s.data()); }

}  // namespace terwb
