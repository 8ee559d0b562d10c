#include "terwb/scheme.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace terwb {

namespace {

constexpr std::size_t kWitnessCap = 8;

std::string pair_str(std::size_t x, std::size_t y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::shape: return "shape";
    case Axiom::range: return "range";
    case Axiom::nonempty: return "nonempty";
    case Axiom::s1: return "S1";
    case Axiom::s2: return "S2";
    case Axiom::s3: return "S3";
    case Axiom::valency: return "valency";
  }
  return "?";
}

std::string to_string(SchemeKind k) {
  switch (k) {
    case SchemeKind::thin: return "thin";
    case SchemeKind::quasi_thin: return "quasi-thin";
    case SchemeKind::neither: return "neither";
  }
  return "?";
}

SchemeError::SchemeError(std::vector<Violation> violations)
    : std::runtime_error([&] {
        std::string msg = "invalid scheme:";
        for (const auto& v : violations) msg += " [" + to_string(v.axiom) + "] " + v.message + ";";
        return msg;
      }()),
      violations_(std::move(violations)) {}

std::vector<Relation> IntersectionData::complex_product(const std::vector<Relation>& u,
                                                        const std::vector<Relation>& v) const {
  std::vector<Relation> out;
  for (Relation l = 0; l <= d; ++l) {
    bool hit = false;
    for (auto i : u) {
      for (auto j : v)
        if (p(i, j, l) > 0) {
          hit = true;
          break;
        }
      if (hit) break;
    }
    if (hit) out.push_back(l);
  }
  return out;
}

std::vector<Vertex> Scheme::neighbourhood(Vertex x, Relation i) const {
  std::vector<Vertex> out;
  for (Vertex y = 0; y < n_; ++y)
    if (relation(x, y) == i) out.push_back(y);
  return out;
}

IntersectionResult intersection_numbers(std::size_t n, std::size_t d, const std::vector<Relation>& table) {
  const std::size_t width = (d + 1) * (d + 1);
  IntersectionResult result;
  IntersectionTensor tensor(d);

  // Reference counts from the first pair of each relation.
  std::vector<std::optional<std::pair<Vertex, Vertex>>> rep(d + 1);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      if (!rep[table[x * n + y]]) rep[table[x * n + y]] = std::make_pair(x, y);
  std::vector<std::size_t> nnz(d + 1, 0);
  for (Relation l = 0; l <= d; ++l) {
    if (!rep[l]) continue;
    auto [x, y] = *rep[l];
    for (Vertex z = 0; z < n; ++z) {
      auto& c = tensor.at(table[x * n + z], table[z * n + y], l);
      if (c++ == 0) ++nnz[l];
    }
  }

  std::vector<std::size_t> scratch(width, 0);
  std::vector<std::size_t> touched;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      const Relation l = table[x * n + y];
      touched.clear();
      for (Vertex z = 0; z < n; ++z) {
        std::size_t key = table[x * n + z] * (d + 1) + table[z * n + y];
        if (scratch[key]++ == 0) touched.push_back(key);
      }
      bool same = touched.size() == nnz[l];
      for (auto key : touched) {
        if (same && scratch[key] != tensor(key / (d + 1), key % (d + 1), l)) same = false;
        scratch[key] = 0;
      }
      if (!same && result.inconsistencies.size() < kWitnessCap) {
        auto [rx, ry] = *rep[l];
        result.inconsistencies.push_back(
            {Axiom::s3,
             "pairs " + pair_str(rx, ry) + " and " + pair_str(x, y) + " of R_" + std::to_string(l) +
                 " have different intersection counts",
             {rx, ry, x, y}});
      }
    }
  }
  if (result.inconsistencies.empty()) result.tensor = std::move(tensor);
  return result;
}

SchemeValidation validate_scheme(const std::vector<std::vector<long long>>& rows) {
  SchemeValidation out;
  auto report = [&out](Axiom a, std::string msg, std::vector<std::size_t> witness) {
    std::size_t same = std::count_if(out.violations.begin(), out.violations.end(),
                                     [a](const Violation& v) { return v.axiom == a; });
    if (same < kWitnessCap) out.violations.push_back({a, std::move(msg), std::move(witness)});
  };

  const std::size_t n = rows.size();
  if (n == 0) {
    report(Axiom::shape, "empty table (the vertex set must be nonempty)", {});
    return out;
  }
  for (std::size_t r = 0; r < n; ++r)
    if (rows[r].size() != n)
      report(Axiom::shape, "row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                               " entries, expected " + std::to_string(n), {r});
  if (!out.ok()) return out;

  long long max_entry = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (rows[x][y] < 0) report(Axiom::range, "negative relation index at " + pair_str(x, y), {x, y});
      max_entry = std::max(max_entry, rows[x][y]);
    }
  if (!out.ok()) return out;
  const std::size_t d = static_cast<std::size_t>(max_entry);
  if (d + 1 > n * n) {
    report(Axiom::range, "relation index " + std::to_string(d) + " exceeds the number of pairs", {});
    return out;
  }

  std::vector<Relation> table(n * n);
  std::vector<std::size_t> occurrences(d + 1, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      table[x * n + y] = static_cast<Relation>(rows[x][y]);
      ++occurrences[table[x * n + y]];
    }
  for (Relation i = 0; i <= d; ++i)
    if (occurrences[i] == 0) report(Axiom::nonempty, "relation R_" + std::to_string(i) + " is empty", {i});

  // (S1): R_0 is exactly the diagonal.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      bool zero = table[x * n + y] == 0;
      if (x == y && !zero)
        report(Axiom::s1, "diagonal pair " + pair_str(x, y) + " is not in R_0", {x, y});
      else if (x != y && zero)
        report(Axiom::s1, "off-diagonal pair " + pair_str(x, y) + " is in R_0", {x, y});
    }

  // (S2): transposition maps each relation onto a relation.
  std::vector<std::optional<Relation>> converse(d + 1);
  std::vector<std::pair<std::size_t, std::size_t>> first_pair(d + 1);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Relation i = table[x * n + y], t = table[y * n + x];
      if (!converse[i]) {
        converse[i] = t;
        first_pair[i] = {x, y};
      } else if (*converse[i] != t) {
        auto [fx, fy] = first_pair[i];
        report(Axiom::s2,
               "pairs " + pair_str(fx, fy) + " and " + pair_str(x, y) + " lie in R_" + std::to_string(i) +
                   " but their transposes lie in different relations",
               {fx, fy, x, y});
      }
    }
  if (!out.ok()) return out;

  auto inter = intersection_numbers(n, d, table);
  for (auto& v : inter.inconsistencies) report(v.axiom, v.message, v.witness);
  if (!out.ok()) return out;

  Scheme s;
  s.n_ = n;
  s.table_ = std::move(table);
  s.data_.d = d;
  s.data_.p = std::move(*inter.tensor);
  s.data_.involution.resize(d + 1);
  s.data_.valency.resize(d + 1);
  for (Relation i = 0; i <= d; ++i) {
    s.data_.involution[i] = *converse[i];
    s.data_.valency[i] = s.data_.p(i, *converse[i], 0);
  }
  out.scheme = std::move(s);
  return out;
}

Scheme make_scheme(const std::vector<std::vector<long long>>& table) {
  auto v = validate_scheme(table);
  if (!v.ok()) throw SchemeError(std::move(v.violations));
  return std::move(*v.scheme);
}

Valencies valencies(const Scheme& s) {
  Valencies out{s.data().valency, s.data().involution};
  std::vector<Violation> bad;
  for (Vertex x = 0; x < s.n(); ++x) {
    std::vector<std::size_t> count(s.d() + 1, 0);
    for (Vertex y = 0; y < s.n(); ++y) ++count[s.relation(x, y)];
    for (Relation i = 0; i <= s.d(); ++i)
      if (count[i] != out.k[i] && bad.size() < kWitnessCap)
        bad.push_back({Axiom::valency,
                       "|" + std::to_string(x) + "R_" + std::to_string(i) + "| = " + std::to_string(count[i]) +
                           " but p_{i i'}^0 = " + std::to_string(out.k[i]),
                       {x, i}});
  }
  if (!bad.empty()) throw SchemeError(std::move(bad));
  return out;
}

Classification classify(const IntersectionData& data) {
  Classification c;
  std::size_t top = 0;
  for (Relation i = 0; i <= data.d; ++i) {
    c.by_valency[data.valency[i]].push_back(i);
    top = std::max(top, data.valency[i]);
  }
  c.kind = top <= 1 ? SchemeKind::thin : top == 2 ? SchemeKind::quasi_thin : SchemeKind::neither;
  return c;
}

IdentityReport check_valency_identities(const IntersectionData& data) {
  IdentityReport rep;
  const auto& k = data.valency;
  const auto& inv = data.involution;
  const auto& p = data.p;
  const std::size_t d = data.d;
  auto fail = [&rep](std::string what) {
    if (rep.passed) {
      rep.passed = false;
      rep.failure = std::move(what);
    }
  };
  auto idx = [](Relation i, Relation j, Relation l) {
    return "(i,j,l)=(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l) + ")";
  };

  for (Relation i = 0; i <= d; ++i) {
    ++rep.checks;
    if (k[i] != k[inv[i]]) fail("k_i != k_i' at i=" + std::to_string(i));
    for (Relation j = 0; j <= d; ++j) {
      // sum_l p^j_{il} = k_i
      std::size_t row = 0;
      for (Relation l = 0; l <= d; ++l) row += p(i, l, j);
      ++rep.checks;
      if (row != k[i]) fail("sum_l p^j_{il} != k_i at (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");

      // k_i k_j = sum_l p^l_{ij} k_l
      std::size_t weighted = 0;
      for (Relation l = 0; l <= d; ++l) weighted += p(i, j, l) * k[l];
      ++rep.checks;
      if (weighted != k[i] * k[j])
        fail("k_i k_j != sum_l p^l_{ij} k_l at (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");

      // |R_i R_j| <= gcd(k_i, k_j)
      ++rep.checks;
      if (data.product_size(i, j) > std::gcd(k[i], k[j]))
        fail("|R_i R_j| > gcd(k_i,k_j) at (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");

      for (Relation l = 0; l <= d; ++l) {
        ++rep.checks;
        if (p(j, i, l) != p(inv[i], inv[j], inv[l])) fail("p^l_{ji} != p^{l'}_{i'j'} at " + idx(i, j, l));
        std::size_t a = k[l] * p(i, j, l), b = k[i] * p(l, inv[j], i), c = k[j] * p(inv[i], l, j);
        ++rep.checks;
        if (a != b || b != c) fail("k_l p^l_{ij} = k_i p^i_{l j'} = k_j p^j_{i' l} fails at " + idx(i, j, l));
      }
    }
  }
  return rep;
}

}  // namespace terwb
