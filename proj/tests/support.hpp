#pragma once

// Shared generators and brute-force oracles for the test suites. The oracles
// work on plain integers modulo p straight from relation tables and matrices,
// sharing no code with the library's linear algebra or intersection data.

#include "terwb/scheme.hpp"
#include "terwb/scheme_io.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace support {

using IntMatrix = std::vector<std::vector<long long>>;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline std::size_t uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng());
}

inline std::vector<std::size_t> random_permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng());
  return p;
}

/// Rank modulo a prime by plain Gaussian elimination on long long entries.
inline std::size_t rank_mod(IntMatrix rows, long long p) {
  auto mod = [p](long long v) { return ((v % p) + p) % p; };
  auto inv = [&](long long a) {
    long long r = 1, b = mod(a), e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t sel = rank;
    while (sel < rows.size() && mod(rows[sel][c]) == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    long long iv = inv(rows[rank][c]);
    for (auto& v : rows[rank]) v = mod(v * iv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || mod(rows[r][c]) == 0) continue;
      long long f = mod(rows[r][c]);
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = mod(rows[r][k] - f * rows[rank][k]);
    }
    ++rank;
  }
  return rank;
}

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b, long long p) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<long long>(b[0].size(), 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
  return c;
}

inline std::vector<long long> flatten(const IntMatrix& m) {
  std::vector<long long> v;
  for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
  return v;
}

/// Dimension of the unital algebra generated by gens, by saturating the span
/// under all pairwise products until the rank stops growing.
inline std::size_t closure_dim_mod(const std::vector<IntMatrix>& gens, std::size_t n, long long p) {
  IntMatrix id(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  std::vector<IntMatrix> span{id};
  for (const auto& g : gens) span.push_back(g);
  auto rank_of = [&](const std::vector<IntMatrix>& ms) {
    IntMatrix rows;
    for (const auto& m : ms) rows.push_back(flatten(m));
    return rank_mod(rows, p);
  };
  // Keep an independent subset so the pairwise sweep stays small.
  auto prune = [&](const std::vector<IntMatrix>& ms) {
    std::vector<IntMatrix> kept;
    for (const auto& m : ms) {
      kept.push_back(m);
      if (rank_of(kept) < kept.size()) kept.pop_back();
    }
    return kept;
  };
  span = prune(span);
  while (true) {
    auto next = span;
    for (const auto& a : span)
      for (const auto& b : span) next.push_back(mat_mul(a, b, p));
    next = prune(next);
    if (next.size() == span.size()) return span.size();
    span = std::move(next);
  }
}

inline IntMatrix relation_matrix(const terwb::Scheme& s) {
  IntMatrix t(s.n(), std::vector<long long>(s.n()));
  for (std::size_t x = 0; x < s.n(); ++x)
    for (std::size_t y = 0; y < s.n(); ++y) t[x][y] = static_cast<long long>(s.relation(x, y));
  return t;
}

/// Adjacency and dual idempotent generators of T(x) taken from the raw table.
inline std::vector<IntMatrix> terwilliger_generators(const IntMatrix& table, std::size_t d, std::size_t x) {
  const std::size_t n = table.size();
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i <= d; ++i) {
    IntMatrix a(n, std::vector<long long>(n, 0)), e(n, std::vector<long long>(n, 0));
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) a[y][z] = table[y][z] == static_cast<long long>(i);
      e[y][y] = table[x][y] == static_cast<long long>(i);
    }
    gens.push_back(a);
    gens.push_back(e);
  }
  return gens;
}

/// |R_i R_j| by brute force over vertex triples.
inline std::size_t complex_product_size(const IntMatrix& table, long long i, long long j) {
  const std::size_t n = table.size();
  std::set<long long> out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (table[x][y] == i)
        for (std::size_t z = 0; z < n; ++z)
          if (table[y][z] == j) out.insert(table[x][z]);
  return out.size();
}

/// p_ij^l counted at the first pair of R_l.
inline long long intersection_number(const IntMatrix& table, long long i, long long j, long long l) {
  const std::size_t n = table.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (table[x][y] == l) {
        long long c = 0;
        for (std::size_t z = 0; z < n; ++z) c += table[x][z] == i && table[z][y] == j;
        return c;
      }
  return 0;
}

/// |R| + |S| + (d+1)^2 from the definitions, evaluated on the raw table.
inline std::size_t combinatorial_dim(const IntMatrix& table, std::size_t d) {
  const std::size_t n = table.size();
  std::vector<long long> k(d + 1, 0), conv(d + 1, 0);
  for (std::size_t y = 0; y < n; ++y) ++k[table[0][y]];
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) conv[table[x][y]] = table[y][x];
  std::vector<long long> a2;
  for (std::size_t i = 0; i <= d; ++i)
    if (k[i] == 2) a2.push_back(static_cast<long long>(i));
  std::size_t r_size = 0;
  for (auto i : a2)
    for (auto j : a2) r_size += complex_product_size(table, conv[i], j) == 2;
  // Edges i -> l with some p_ij^l = 1, then reachability.
  std::set<std::pair<long long, long long>> edge;
  for (auto i : a2)
    for (auto l : a2)
      for (std::size_t j = 0; j <= d; ++j)
        if (intersection_number(table, i, static_cast<long long>(j), l) == 1) edge.insert({i, l});
  std::size_t s_size = 0;
  for (auto i : a2) {
    std::set<long long> seen;
    std::vector<long long> todo{i};
    while (!todo.empty()) {
      auto u = todo.back();
      todo.pop_back();
      for (auto l : a2)
        if (edge.count({u, l}) && seen.insert(l).second) todo.push_back(l);
    }
    for (auto l : seen) s_size += complex_product_size(table, conv[i], l) == 1;
  }
  return r_size + s_size + (d + 1) * (d + 1);
}

/// The same scheme with points and non-diagonal relation labels permuted.
inline terwb::Scheme relabel(const terwb::Scheme& s) {
  auto sigma = random_permutation(s.n());
  auto tau = random_permutation(s.d());
  std::vector<std::vector<long long>> t(s.n(), std::vector<long long>(s.n()));
  for (std::size_t x = 0; x < s.n(); ++x)
    for (std::size_t y = 0; y < s.n(); ++y) {
      auto rel = s.relation(x, y);
      t[sigma[x]][sigma[y]] = rel == 0 ? 0 : static_cast<long long>(tau[rel - 1] + 1);
    }
  return terwb::make_scheme(t);
}

/// Orbital scheme of a random transitive group on 3..max_n points.
inline terwb::Scheme random_schurian(std::size_t max_n) {
  std::size_t n = uniform(3, max_n);
  std::vector<terwb::Permutation> gens;
  for (std::size_t k = uniform(1, 2); k > 0; --k) gens.push_back(random_permutation(n));
  // A random n-cycle makes the group transitive.
  auto order = random_permutation(n);
  terwb::Permutation cyc(n);
  for (std::size_t k = 0; k < n; ++k) cyc[order[k]] = order[(k + 1) % n];
  gens.push_back(cyc);
  return terwb::schurian_from_permgroup(n, gens);
}

/// Orbital scheme of <x -> x+1, x -> u x> on Z_n for a random u with u^2 = 1,
/// on randomly relabelled points; point stabilizers have order at most 2.
inline terwb::Scheme random_metacyclic(std::size_t max_n) {
  std::size_t n = uniform(3, max_n);
  std::vector<std::size_t> units;
  for (std::size_t u = 1; u < n; ++u)
    if (u * u % n == 1) units.push_back(u);
  std::size_t u = units[uniform(0, units.size() - 1)];
  auto sigma = random_permutation(n);
  terwb::Permutation shift(n), mult(n);
  for (std::size_t x = 0; x < n; ++x) {
    shift[sigma[x]] = sigma[(x + 1) % n];
    mult[sigma[x]] = sigma[x * u % n];
  }
  return terwb::schurian_from_permgroup(n, {shift, mult});
}

/// A random quasi-thin scheme: a relabelled catalog entry or a metacyclic orbital scheme.
inline terwb::Scheme random_quasi_thin(std::size_t max_n = 8) {
  if (uniform(0, 1) == 0) {
    const auto& cat = terwb::catalog();
    return relabel(cat[uniform(0, cat.size() - 1)].scheme);
  }
  return random_metacyclic(max_n);
}

}  // namespace support
