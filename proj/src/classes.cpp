#include "terwb/classes.hpp"

#include <deque>
#include <numeric>

namespace terwb {

namespace {

void require_quasi_thin(const IntersectionData& data) {
  for (Relation i = 0; i <= data.d; ++i)
    if (data.valency[i] > 2)
      throw NotQuasiThinError("relation " + std::to_string(i) + " has valency " + std::to_string(data.valency[i]) +
                              " > 2; the scheme is not quasi-thin");
}

std::string pair_str(Relation i, Relation j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

std::set<RelationPair> bad_pairs(const IntersectionData& data) {
  require_quasi_thin(data);
  const std::size_t d = data.d;
  std::vector<std::vector<Relation>> edges(d + 1);
  for (Relation i = 0; i <= d; ++i) {
    if (data.valency[i] != 2) continue;
    for (Relation l = 0; l <= d; ++l) {
      if (data.valency[l] != 2) continue;
      for (Relation j = 0; j <= d; ++j)
        if (data.p(i, j, l) == 1) {
          edges[i].push_back(l);
          break;
        }
    }
  }

  std::set<RelationPair> out;
  for (Relation i = 0; i <= d; ++i) {
    if (data.valency[i] != 2) continue;
    std::vector<bool> seen(d + 1, false);
    std::deque<Relation> queue;
    for (auto l : edges[i])
      if (!seen[l]) {
        seen[l] = true;
        queue.push_back(l);
      }
    while (!queue.empty()) {
      Relation l = queue.front();
      queue.pop_front();
      for (auto m : edges[l])
        if (!seen[m]) {
          seen[m] = true;
          queue.push_back(m);
        }
    }
    for (Relation l = 0; l <= d; ++l)
      if (seen[l] && data.product_size(data.involution[i], l) == 1) out.emplace(i, l);
  }
  return out;
}

std::vector<Relation> ClassData::members(std::size_t l) const {
  if (l > 0) return classes.at(l - 1);
  std::vector<Relation> all(class_of.size());
  std::iota(all.begin(), all.end(), Relation{0});
  return all;
}

ClassData class_data(const IntersectionData& data) {
  require_quasi_thin(data);
  ClassData c;
  const std::size_t d = data.d;
  for (Relation i = 0; i <= d; ++i) (data.valency[i] == 1 ? c.a1 : c.a2).push_back(i);
  for (auto i : c.a2)
    for (auto j : c.a2)
      if (data.product_size(data.involution[i], j) == 2) c.r_set.emplace(i, j);
  c.s_set = bad_pairs(data);
  c.u_set = c.r_set;
  c.u_set.insert(c.s_set.begin(), c.s_set.end());

  auto related = [&c](Relation i, Relation j) { return c.u_set.count({i, j}) > 0; };
  for (auto i : c.a2)
    if (!related(i, i)) throw ClassDataError("~ is not reflexive: " + std::to_string(i) + " !~ itself");
  for (auto i : c.a2)
    for (auto j : c.a2)
      if (related(i, j) && !related(j, i))
        throw ClassDataError("~ is not symmetric: " + pair_str(i, j) + " in U but " + pair_str(j, i) + " is not");
  for (auto i : c.a2)
    for (auto j : c.a2)
      if (related(i, j))
        for (auto l : c.a2)
          if (related(j, l) && !related(i, l))
            throw ClassDataError("~ is not transitive: " + pair_str(i, j) + " and " + pair_str(j, l) +
                                 " in U but " + pair_str(i, l) + " is not");

  c.class_of.assign(d + 1, 0);
  for (auto i : c.a2) {
    if (c.class_of[i] != 0) continue;
    c.classes.emplace_back();
    for (auto j : c.a2)
      if (related(i, j)) {
        c.classes.back().push_back(j);
        c.class_of[j] = c.classes.size();
      }
  }
  return c;
}

}  // namespace terwb
