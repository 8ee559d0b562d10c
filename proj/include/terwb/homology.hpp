#pragma once

#include "terwb/terwilliger.hpp"

#include <cmath>
#include <functional>

namespace terwb {

// ---------------------------------------------------------------------------
// Idempotents, projectives and the basic algebra of T

struct IdempotentSet {
  std::vector<std::size_t> indices;  // structured-basis indices of b^l_ii, i in D_l
  std::vector<std::size_t> block;    // l for each idempotent
  Report report;
};

/// E = {b^l_ii : l in [r], i in D_l}, checked orthogonal, idempotent, summing to I.
template <class F>
IdempotentSet primitive_idempotents(const StructuredBasis<F>& b, const ClassData& c, std::size_t n, const F& field) {
  IdempotentSet e;
  for (std::size_t l = 0; l <= c.r(); ++l)
    for (auto i : c.d_set(l)) {
      e.indices.push_back(b.at(l, i, i));
      e.block.push_back(l);
    }
  Matrix<F> sum(field, n, n);
  std::string bad;
  for (auto p : e.indices) {
    sum = sum + b.elements[p];
    for (auto q : e.indices) {
      auto prod = b.elements[p] * b.elements[q];
      if (prod != (p == q ? b.elements[p] : Matrix<F>(field, n, n)) && bad.empty())
        bad = b.labels[p].str() + " * " + b.labels[q].str();
    }
  }
  e.report.add("pairwise orthogonal idempotents", bad.empty(), bad);
  e.report.add("sum = I", sum == Matrix<F>::identity(field, n));
  return e;
}

struct ProjectiveClassification {
  std::vector<std::size_t> representatives;     // basis index of b_l = b^l_{l0,l0}
  std::vector<std::vector<std::size_t>> homdims;  // dim b_m T b_n
  std::size_t classes = 0;
  Report report;
};

/// Enumerates all combinations of the given vectors over GF(p); returns false
/// (without calling fn) if there would be more than limit of them.
template <class F>
bool for_each_combination(const F& field, const std::vector<Vec<F>>& basis, std::size_t length, std::size_t limit,
                          const std::function<void(const Vec<F>&)>& fn) {
  const std::uint32_t p = field.characteristic();
  if (p == 0) return false;
  double count = std::pow(static_cast<double>(p), static_cast<double>(basis.size()));
  if (count > static_cast<double>(limit)) return false;
  std::vector<std::uint32_t> digits(basis.size(), 0);
  while (true) {
    Vec<F> v(length, field.zero());
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (digits[k])
        for (std::size_t e = 0; e < length; ++e)
          v[e] = field.add(v[e], field.mul(field.from_int(digits[k]), basis[k][e]));
    fn(v);
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return true;
}

/// Characteristic p > 0. Verifies P^l_i = T b^l_ii has the expected spanning set,
/// the maps b^w_ui -> b^w_uj are module isomorphisms within a block, no
/// homomorphism between different representatives is bijective, and each
/// End(P_l) has no idempotents besides 0 and 1.
template <class F>
ProjectiveClassification projective_classification(const Algebra<F>& t, const StructuredBasis<F>& b,
                                                   const ClassData& c) {
  const F& f = t.field();
  ProjectiveClassification out;
  auto left_ideal = [&t](std::size_t e) {
    Subspace<F> s(t.field(), t.dim());
    for (std::size_t a = 0; a < t.dim(); ++a) s.insert(t.multiply(t.unit(a), t.unit(e)));
    return s;
  };
  auto corner = [&t](std::size_t e1, std::size_t e2) {
    Subspace<F> s(t.field(), t.dim());
    for (std::size_t a = 0; a < t.dim(); ++a) s.insert(t.multiply(t.multiply(t.unit(e1), t.unit(a)), t.unit(e2)));
    return s;
  };

  std::string bad_span, bad_iso;
  for (std::size_t l = 0; l <= c.r(); ++l) {
    auto dl = c.d_set(l);
    for (auto i : dl) {
      std::vector<std::size_t> expect;
      for (std::size_t w : {std::size_t{0}, l}) {
        if (w == l && l == 0 && !expect.empty()) continue;
        for (auto u : c.members(w)) expect.push_back(b.at(w, u, i));
      }
      if (!(left_ideal(b.at(l, i, i)) == t.coordinate_span(expect)) && bad_span.empty())
        bad_span = "T " + BasisLabel{l, i, i}.str();
      for (auto j : dl) {
        // f: b^w_ui -> b^w_uj, checked to commute with left multiplication.
        std::map<std::size_t, std::size_t> map;
        for (std::size_t w : {std::size_t{0}, l})
          for (auto u : c.members(w)) map[b.at(w, u, i)] = b.at(w, u, j);
        auto apply = [&](const Vec<F>& v) -> std::optional<Vec<F>> {
          Vec<F> out_v(t.dim(), f.zero());
          for (std::size_t k = 0; k < t.dim(); ++k) {
            if (f.is_zero(v[k])) continue;
            auto it = map.find(k);
            if (it == map.end()) return std::nullopt;
            out_v[it->second] = v[k];
          }
          return out_v;
        };
        for (std::size_t a = 0; a < t.dim() && bad_iso.empty(); ++a)
          for (auto [src, dst] : map) {
            if (apply(t.multiply(t.unit(a), t.unit(src))) != std::optional(t.multiply(t.unit(a), t.unit(dst)))) {
              bad_iso = "P" + BasisLabel{l, i, i}.str() + " -> P" + BasisLabel{l, j, j}.str() + " fails at " + t.label(a);
              break;
            }
          }
      }
    }
    out.representatives.push_back(b.at(l, dl.front(), dl.front()));
  }
  out.report.add("P^l_i spanned by b^w_ui, w in {0,l}", bad_span.empty(), bad_span);
  out.report.add("P^l_i isomorphic to P^l_j within each block", bad_iso.empty(), bad_iso);

  const auto& reps = out.representatives;
  out.classes = reps.size();
  out.homdims.assign(reps.size(), std::vector<std::size_t>(reps.size(), 0));
  std::string bad_hom, bad_cross, bad_local;
  bool exhaustive = true;
  for (std::size_t m = 0; m < reps.size(); ++m)
    for (std::size_t nn = 0; nn < reps.size(); ++nn) {
      auto hom = corner(reps[m], reps[nn]);
      out.homdims[m][nn] = hom.dim();
      std::size_t expect = (m == nn && m != 0) ? 2 : 1;
      if (hom.dim() != expect && bad_hom.empty())
        bad_hom = "dim Hom(P_" + std::to_string(m) + ", P_" + std::to_string(nn) + ") = " + std::to_string(hom.dim());
      auto pm = left_ideal(reps[m]);
      auto pn = left_ideal(reps[nn]);
      if (m != nn) {
        bool ok = for_each_combination<F>(f, hom.basis(), t.dim(), 1u << 20, [&](const Vec<F>& h) {
          if (pm.dim() != pn.dim()) return;
          Matrix<F> img(f, pm.dim(), t.dim());
          for (std::size_t k = 0; k < pm.dim(); ++k) {
            auto v = t.multiply(pm.basis()[k], h);
            for (std::size_t e = 0; e < t.dim(); ++e) img(k, e) = v[e];
          }
          if (rref(img).rank == pm.dim() && bad_cross.empty())
            bad_cross = "P_" + std::to_string(m) + " ~ P_" + std::to_string(nn) + " via " + t.format(h);
        });
        exhaustive = exhaustive && ok;
      } else {
        std::size_t idempotents = 0;
        bool ok = for_each_combination<F>(f, hom.basis(), t.dim(), 1u << 20, [&](const Vec<F>& h) {
          if (t.multiply(h, h) == h) ++idempotents;
        });
        exhaustive = exhaustive && ok;
        if (ok && idempotents != 2 && bad_local.empty())
          bad_local = "End(P_" + std::to_string(m) + ") has " + std::to_string(idempotents) + " idempotents";
      }
    }
  out.report.add("Hom(P_m,P_n) = R b^0 + delta_mn R b^m", bad_hom.empty(), bad_hom);
  out.report.add("hom spaces enumerated exhaustively", exhaustive, "hom space too large to enumerate");
  out.report.add("P_m not isomorphic to P_n for m != n", bad_cross.empty(), bad_cross);
  out.report.add("End(P_l) local", bad_local.empty(), bad_local);
  return out;
}

/// Algebra on the given matrices (assumed independent and closed under product).
template <class F>
std::pair<Algebra<F>, Report> algebra_from_matrices(const F& field, std::vector<std::string> labels,
                                                    const std::vector<Matrix<F>>& mats) {
  Report rep;
  const std::size_t m = mats.size();
  const std::size_t n2 = mats.empty() ? 0 : mats.front().rows() * mats.front().cols();
  std::vector<Vec<F>> flat;
  for (const auto& x : mats) flat.push_back(x.flat());
  BasisCoordinates<F> coords(field, flat, n2);
  rep.add("basis matrices independent", coords.independent());
  std::vector<typename Algebra<F>::Sparse> table(m * m);
  std::string bad;
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      auto c = coords.coordinates((mats[p] * mats[q]).flat());
      if (!c) {
        if (bad.empty()) bad = labels[p] + " * " + labels[q];
        continue;
      }
      table[p * m + q] = to_sparse(field, *c);
    }
  rep.add("span closed under product", bad.empty(), bad + " leaves the span");
  return {Algebra<F>(field, std::move(labels), std::move(table)), rep};
}

template <class F>
struct BasicAlgebra {
  Algebra<F> algebra;
  std::vector<Matrix<F>> matrices;  // ambient image of each basis element
  Report report;
};

/// Characteristic 2: Gamma = bTb with b = sum of b_l = b^l_{l0,l0}, l0 = min D_l,
/// on the basis e_0..e_r, a_m = b^0_{0_0,m_0}, b_n = b^0_{n_0,0_0}, g_uv = b^0_{u_0,v_0}
/// (the ordering of the Lambda basis).
template <class F>
BasicAlgebra<F> basic_algebra_char2(const Algebra<F>& t, const StructuredBasis<F>& b, const ClassData& c) {
  const std::size_t r = c.r();
  std::vector<Relation> rep;
  for (std::size_t l = 0; l <= r; ++l) rep.push_back(c.d_set(l).front());
  std::vector<std::string> labels;
  std::vector<std::size_t> idx;
  for (std::size_t l = 0; l <= r; ++l) {
    labels.push_back("e" + std::to_string(l));
    idx.push_back(b.at(l, rep[l], rep[l]));
  }
  for (std::size_t m = 1; m <= r; ++m) {
    labels.push_back("a" + std::to_string(m));
    idx.push_back(b.at(0, rep[0], rep[m]));
  }
  for (std::size_t m = 1; m <= r; ++m) {
    labels.push_back("b" + std::to_string(m));
    idx.push_back(b.at(0, rep[m], rep[0]));
  }
  for (std::size_t u = 1; u <= r; ++u)
    for (std::size_t v = 1; v <= r; ++v) {
      labels.push_back("g" + std::to_string(u) + std::to_string(v));
      idx.push_back(b.at(0, rep[u], rep[v]));
    }
  std::vector<Matrix<F>> mats;
  for (auto k : idx) mats.push_back(b.elements[k]);
  auto [alg, report] = algebra_from_matrices(t.field(), labels, mats);
  for (std::size_t l = 0; l <= r; ++l) alg.idempotents.push_back(l);
  for (std::size_t k = r + 1; k < alg.dim(); ++k) alg.radical.push_back(k);

  // The listed elements must span every corner b_u T b_v.
  Subspace<F> listed(t.field(), t.dim());
  for (auto k : idx) listed.insert(t.unit(k));
  Subspace<F> corners(t.field(), t.dim());
  for (std::size_t u = 0; u <= r; ++u)
    for (std::size_t v = 0; v <= r; ++v)
      for (std::size_t a = 0; a < t.dim(); ++a)
        corners.insert(t.multiply(t.multiply(t.unit(idx[u]), t.unit(a)), t.unit(idx[v])));
  report.add("basis spans the sum of corners b_u T b_v", corners == listed,
             "corner dimension " + std::to_string(corners.dim()) + " vs " + std::to_string(listed.dim()));
  report.add("dim Gamma = r^2 + 3r + 1", alg.dim() == r * r + 3 * r + 1);
  report.merge(check_basic_presentation(alg));
  return {std::move(alg), std::move(mats), std::move(report)};
}

/// Characteristic != 2 (T semisimple): primitive idempotents f_0 = b^0_00 and
/// f_l = b^l_{uu} - b^0_{uu}/2 (u = min C_l); Gamma = fTf must be spanned by them.
template <class F>
BasicAlgebra<F> basic_algebra_semisimple(const Algebra<F>& t, const StructuredBasis<F>& b, const ClassData& c) {
  const F& f = t.field();
  if (f.characteristic() == 2) throw std::invalid_argument("basic_algebra_semisimple needs characteristic != 2");
  const std::size_t r = c.r();
  auto half = f.inv(f.from_int(2));
  std::vector<std::string> labels;
  std::vector<Matrix<F>> mats;
  std::vector<Vec<F>> coords;
  labels.push_back("e0");
  mats.push_back(b.elements[b.at(0, 0, 0)]);
  coords.push_back(t.unit(b.at(0, 0, 0)));
  for (std::size_t l = 1; l <= r; ++l) {
    auto u = c.classes[l - 1].front();
    labels.push_back("e" + std::to_string(l));
    mats.push_back(b.elements[b.at(l, u, u)] - b.elements[b.at(0, u, u)].scaled(half));
    auto v = t.unit(b.at(l, u, u));
    v[b.at(0, u, u)] = f.neg(half);
    coords.push_back(v);
  }
  auto [alg, report] = algebra_from_matrices(f, labels, mats);
  for (std::size_t l = 0; l <= r; ++l) alg.idempotents.push_back(l);

  auto e = t.zero();
  for (const auto& v : coords)
    for (std::size_t k = 0; k < t.dim(); ++k) e[k] = f.add(e[k], v[k]);
  Subspace<F> corner(f, t.dim());
  for (std::size_t a = 0; a < t.dim(); ++a) corner.insert(t.multiply(t.multiply(e, t.unit(a)), e));
  report.add("fTf spanned by the idempotents", corner == Subspace<F>::span(f, coords, t.dim()),
             "dim fTf = " + std::to_string(corner.dim()));
  report.merge(check_basic_presentation(alg));
  return {std::move(alg), std::move(mats), std::move(report)};
}

// ---------------------------------------------------------------------------
// Quiver algebras

/// Dual extension of the star with r arrows into the centre: basis e_0..e_r,
/// a_1..a_r (a_v : v -> 0), b_1..b_r (b_u : 0 -> u), g_uv = b_u a_v; products
/// read right to left as paths, with a_v b_v = 0.
template <class F>
Algebra<F> lambda_algebra(std::size_t r, const F& field) {
  const std::size_t dim = r * r + 3 * r + 1;
  auto e = [](std::size_t i) { return i; };
  auto a = [r](std::size_t v) { return r + v; };
  auto b = [r](std::size_t u) { return 2 * r + u; };
  auto g = [r](std::size_t u, std::size_t v) { return 3 * r + (u - 1) * r + v; };
  std::vector<std::string> labels(dim);
  for (std::size_t i = 0; i <= r; ++i) labels[e(i)] = "e" + std::to_string(i);
  for (std::size_t v = 1; v <= r; ++v) {
    labels[a(v)] = "a" + std::to_string(v);
    labels[b(v)] = "b" + std::to_string(v);
    for (std::size_t u = 1; u <= r; ++u) labels[g(u, v)] = "g" + std::to_string(u) + std::to_string(v);
  }
  // source/target of each basis path (target on the left).
  std::vector<std::size_t> src(dim), tgt(dim);
  for (std::size_t i = 0; i <= r; ++i) src[e(i)] = tgt[e(i)] = i;
  for (std::size_t v = 1; v <= r; ++v) {
    src[a(v)] = v, tgt[a(v)] = 0;
    src[b(v)] = 0, tgt[b(v)] = v;
    for (std::size_t u = 1; u <= r; ++u) src[g(u, v)] = v, tgt[g(u, v)] = u;
  }
  std::vector<typename Algebra<F>::Sparse> table(dim * dim);
  auto set = [&](std::size_t x, std::size_t y, std::size_t z) { table[x * dim + y] = {{z, field.one()}}; };
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = 0; y < dim; ++y) {
      if (src[x] != tgt[y]) continue;
      if (x <= r) set(x, y, y);
      else if (y <= r) set(x, y, x);
      else if (x >= 2 * r + 1 && x <= 3 * r && y >= r + 1 && y <= 2 * r) set(x, y, g(x - 2 * r, y - r));
      // a_v b_v = 0 and every other product of radical elements vanishes.
    }
  Algebra<F> out(field, std::move(labels), std::move(table));
  for (std::size_t i = 0; i <= r; ++i) out.idempotents.push_back(i);
  for (std::size_t k = r + 1; k < dim; ++k) out.radical.push_back(k);
  return out;
}

/// Path algebra of the star with r arrows a_v : v -> 0 (hereditary).
template <class F>
Algebra<F> star_algebra(std::size_t r, const F& field) {
  const std::size_t dim = 2 * r + 1;
  std::vector<std::string> labels(dim);
  std::vector<std::size_t> src(dim), tgt(dim);
  for (std::size_t i = 0; i <= r; ++i) labels[i] = "e" + std::to_string(i), src[i] = tgt[i] = i;
  for (std::size_t v = 1; v <= r; ++v) labels[r + v] = "a" + std::to_string(v), src[r + v] = v, tgt[r + v] = 0;
  std::vector<typename Algebra<F>::Sparse> table(dim * dim);
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = 0; y < dim; ++y) {
      if (src[x] != tgt[y]) continue;
      if (x <= r) table[x * dim + y] = {{y, field.one()}};
      else if (y <= r) table[x * dim + y] = {{x, field.one()}};
    }
  Algebra<F> out(field, std::move(labels), std::move(table));
  for (std::size_t i = 0; i <= r; ++i) out.idempotents.push_back(i);
  for (std::size_t k = r + 1; k < dim; ++k) out.radical.push_back(k);
  return out;
}

/// Direct product of n copies of the field.
template <class F>
Algebra<F> split_semisimple_algebra(std::size_t n, const F& field) {
  std::vector<std::string> labels;
  std::vector<typename Algebra<F>::Sparse> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("e" + std::to_string(i));
    table[i * n + i] = {{i, field.one()}};
  }
  Algebra<F> out(field, std::move(labels), std::move(table));
  for (std::size_t i = 0; i < n; ++i) out.idempotents.push_back(i);
  return out;
}

/// psi sends Lambda basis element k to Gamma basis element psi[k]; checks it is a
/// bijection and psi(xy) = psi(x) psi(y) on all basis pairs.
template <class F>
Report verify_iso_psi(const Algebra<F>& gamma, const Algebra<F>& lambda, const std::vector<std::size_t>& psi) {
  Report rep;
  const F& f = lambda.field();
  std::vector<std::size_t> sorted = psi;
  std::sort(sorted.begin(), sorted.end());
  bool bij = gamma.dim() == lambda.dim() && psi.size() == lambda.dim();
  for (std::size_t k = 0; bij && k < sorted.size(); ++k) bij = sorted[k] == k;
  rep.add("psi is a bijection of bases", bij,
          "dim Gamma = " + std::to_string(gamma.dim()) + ", dim Lambda = " + std::to_string(lambda.dim()));
  if (!bij) return rep;
  std::size_t failures = 0;
  std::string first;
  for (std::size_t x = 0; x < lambda.dim(); ++x)
    for (std::size_t y = 0; y < lambda.dim(); ++y) {
      Vec<F> image(gamma.dim(), f.zero());
      for (const auto& [k, c] : lambda.product(x, y)) image[psi[k]] = c;
      auto prod = gamma.sparse_to_dense(gamma.product(psi[x], psi[y]));
      if (image != prod) {
        ++failures;
        if (first.empty()) first = "psi(" + lambda.label(x) + " " + lambda.label(y) + ") != psi(x) psi(y)";
      }
    }
  rep.add("psi(xy) = psi(x) psi(y) on all basis pairs", failures == 0,
          std::to_string(failures) + " failures, first: " + first);
  return rep;
}

/// Nilpotency index of the span of the radical basis (1 when it is zero).
template <class F>
std::optional<std::size_t> radical_index(const Algebra<F>& a) {
  return nilpotency_index(a.coordinate_span(a.radical), a.product_fn());
}

// ---------------------------------------------------------------------------
// Modules and resolutions over a basic presentation

/// Left module: action[x] is the matrix of basis element x.
template <class F>
struct Module {
  std::size_t dim = 0;
  std::vector<Matrix<F>> action;
};

template <class F>
Module<F> simple_module(const Algebra<F>& a, std::size_t i) {
  Module<F> m{1, {}};
  for (std::size_t x = 0; x < a.dim(); ++x) {
    Matrix<F> act(a.field(), 1, 1);
    if (x == a.idempotents.at(i)) act(0, 0) = a.field().one();
    m.action.push_back(std::move(act));
  }
  return m;
}

/// The left ideal A e_i with its basis (as vectors of A).
template <class F>
Subspace<F> projective_space(const Algebra<F>& a, std::size_t i) {
  Subspace<F> s(a.field(), a.dim());
  auto e = a.unit(a.idempotents.at(i));
  for (std::size_t x = 0; x < a.dim(); ++x) s.insert(a.multiply(a.unit(x), e));
  return s;
}

/// Submodule of A^k (k copies of A, vectors of length k * dim A) spanned by vectors, as a module.
template <class F>
Module<F> submodule_of_free(const Algebra<F>& a, std::size_t copies, const std::vector<Vec<F>>& vectors) {
  const F& f = a.field();
  const std::size_t m = a.dim();
  BasisCoordinates<F> coords(f, vectors, copies * m);
  Module<F> out{vectors.size(), {}};
  for (std::size_t x = 0; x < m; ++x) {
    Matrix<F> act(f, vectors.size(), vectors.size());
    for (std::size_t col = 0; col < vectors.size(); ++col) {
      Vec<F> img(copies * m, f.zero());
      for (std::size_t c = 0; c < copies; ++c) {
        Vec<F> part(vectors[col].begin() + c * m, vectors[col].begin() + (c + 1) * m);
        auto prod = a.multiply(a.unit(x), part);
        std::copy(prod.begin(), prod.end(), img.begin() + c * m);
      }
      auto coef = coords.coordinates(img);
      if (!coef) throw std::logic_error("submodule_of_free: span is not a submodule");
      for (std::size_t row = 0; row < vectors.size(); ++row) act(row, col) = (*coef)[row];
    }
    out.action.push_back(std::move(act));
  }
  return out;
}

template <class F>
Module<F> projective_module(const Algebra<F>& a, std::size_t i) {
  return submodule_of_free(a, 1, projective_space(a, i).basis());
}

/// rad M = span of rad(A) M.
template <class F>
Subspace<F> module_radical(const Algebra<F>& a, const Module<F>& m) {
  Subspace<F> s(a.field(), m.dim);
  for (auto x : a.radical)
    for (std::size_t c = 0; c < m.dim; ++c) {
      Vec<F> col(m.dim);
      for (std::size_t r = 0; r < m.dim; ++r) col[r] = m.action[x](r, c);
      s.insert(std::move(col));
    }
  return s;
}

/// soc M = {v : rad(A) v = 0}.
template <class F>
std::vector<Vec<F>> module_socle(const Algebra<F>& a, const Module<F>& m) {
  Matrix<F> sys(a.field(), a.radical.size() * m.dim, m.dim);
  for (std::size_t k = 0; k < a.radical.size(); ++k)
    for (std::size_t r = 0; r < m.dim; ++r)
      for (std::size_t c = 0; c < m.dim; ++c) sys(k * m.dim + r, c) = m.action[a.radical[k]](r, c);
  return nullspace(sys);
}

struct ResolutionStep {
  std::vector<std::size_t> cover;  // multiplicity of each P_i in the cover
  std::size_t module_dim = 0;
  std::size_t cover_dim = 0;
  std::size_t map_rank = 0;
  std::size_t kernel_dim = 0;
  bool minimal = true;  // kernel inside rad of the cover
};

struct Resolution {
  std::vector<ResolutionStep> steps;
  std::optional<std::size_t> length;  // projective dimension; nullopt past the cutoff
  bool exact() const {
    for (const auto& s : steps)
      if (s.map_rank != s.module_dim || s.kernel_dim + s.map_rank != s.cover_dim) return false;
    return true;
  }
  bool minimal() const {
    return std::all_of(steps.begin(), steps.end(), [](const ResolutionStep& s) { return s.minimal; });
  }
};

/// Minimal projective resolution by iterated syzygies.
template <class F>
Resolution projective_resolution(const Algebra<F>& a, Module<F> m, std::size_t cutoff = 10) {
  const F& f = a.field();
  const std::size_t dimA = a.dim();
  const std::size_t ne = a.idempotents.size();
  std::vector<Subspace<F>> pspace;
  for (std::size_t i = 0; i < ne; ++i) pspace.push_back(projective_space(a, i));

  Resolution res;
  for (std::size_t step = 0; step <= cutoff; ++step) {
    ResolutionStep st;
    st.module_dim = m.dim;
    st.cover.assign(ne, 0);
    if (m.dim == 0) {
      res.length = step == 0 ? 0 : step - 1;
      return res;
    }
    // Top generators: e_i-components independent modulo rad M.
    auto top = module_radical(a, m);
    std::vector<std::pair<std::size_t, Vec<F>>> gens;
    for (std::size_t i = 0; i < ne; ++i) {
      const auto& act = m.action[a.idempotents[i]];
      for (std::size_t c = 0; c < m.dim; ++c) {
        Vec<F> v(m.dim);
        for (std::size_t r = 0; r < m.dim; ++r) v[r] = act(r, c);
        if (top.insert(v)) {
          gens.emplace_back(i, v);
          ++st.cover[i];
        }
      }
    }
    // Cover map: block k is A e_{i_k} -> M, w -> w . g_k.
    std::vector<std::size_t> offsets;
    std::size_t total = 0;
    for (const auto& [i, g] : gens) {
      offsets.push_back(total);
      total += pspace[i].dim();
    }
    st.cover_dim = total;
    Matrix<F> pi(f, m.dim, total);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const auto& [i, g] = gens[k];
      for (std::size_t col = 0; col < pspace[i].dim(); ++col) {
        const auto& w = pspace[i].basis()[col];
        Vec<F> img(m.dim, f.zero());
        for (std::size_t x = 0; x < dimA; ++x) {
          if (f.is_zero(w[x])) continue;
          for (std::size_t r = 0; r < m.dim; ++r)
            for (std::size_t c = 0; c < m.dim; ++c)
              if (!f.is_zero(m.action[x](r, c)) && !f.is_zero(g[c]))
                img[r] = f.add(img[r], f.mul(w[x], f.mul(m.action[x](r, c), g[c])));
        }
        for (std::size_t r = 0; r < m.dim; ++r) pi(r, offsets[k] + col) = img[r];
      }
    }
    st.map_rank = rref(pi).rank;
    auto kernel = nullspace(pi);
    st.kernel_dim = kernel.size();

    // Kernel as vectors of A^k, with the cover's radical for the minimality check.
    std::vector<Vec<F>> kvecs;
    for (const auto& kv : kernel) {
      Vec<F> v(gens.size() * dimA, f.zero());
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const auto& basis = pspace[gens[k].first].basis();
        for (std::size_t col = 0; col < basis.size(); ++col) {
          if (f.is_zero(kv[offsets[k] + col])) continue;
          for (std::size_t x = 0; x < dimA; ++x)
            v[k * dimA + x] = f.add(v[k * dimA + x], f.mul(kv[offsets[k] + col], basis[col][x]));
        }
      }
      kvecs.push_back(std::move(v));
    }
    Subspace<F> radp(f, gens.size() * dimA);
    for (std::size_t k = 0; k < gens.size(); ++k)
      for (const auto& w : pspace[gens[k].first].basis())
        for (auto x : a.radical) {
          auto prod = a.multiply(a.unit(x), w);
          Vec<F> v(gens.size() * dimA, f.zero());
          std::copy(prod.begin(), prod.end(), v.begin() + k * dimA);
          radp.insert(std::move(v));
        }
    st.minimal = std::all_of(kvecs.begin(), kvecs.end(), [&radp](const Vec<F>& v) { return radp.contains(v); });
    res.steps.push_back(st);
    m = submodule_of_free(a, gens.size(), kvecs);
  }
  return res;
}

struct GlobalDimension {
  std::optional<std::size_t> value;  // nullopt past the cutoff
  std::vector<Resolution> simples;   // resolution of S_i
};

template <class F>
GlobalDimension global_dimension(const Algebra<F>& a, std::size_t cutoff = 10) {
  GlobalDimension out{std::size_t{0}, {}};
  for (std::size_t i = 0; i < a.idempotents.size(); ++i) {
    out.simples.push_back(projective_resolution(a, simple_module(a, i), cutoff));
    const auto& len = out.simples.back().length;
    if (!len) out.value.reset();
    else if (out.value) out.value = std::max(*out.value, *len);
  }
  return out;
}

struct DominantDimension {
  bool infinite = false;
  std::optional<std::size_t> value;  // set when finite; both unset past the cutoff
  std::vector<bool> injective_is_projective;  // I(i) projective, per simple
  Resolution dual_resolution;                 // of D(A) over A^op
};

/// The minimal injective coresolution of A is the dual of the minimal projective
/// resolution of D(A) over A^op; the injective hull I(i) = D(e_i A) is projective
/// iff some A e_j has socle S_i and dim A e_j = dim e_i A.
template <class F>
DominantDimension dominant_dimension(const Algebra<F>& a, std::size_t cutoff = 10) {
  const F& f = a.field();
  const std::size_t ne = a.idempotents.size();
  DominantDimension out;

  std::vector<std::size_t> right_dim(ne);
  for (std::size_t i = 0; i < ne; ++i) {
    Subspace<F> s(f, a.dim());
    for (std::size_t x = 0; x < a.dim(); ++x) s.insert(a.multiply(a.unit(a.idempotents[i]), a.unit(x)));
    right_dim[i] = s.dim();
  }
  out.injective_is_projective.assign(ne, false);
  for (std::size_t j = 0; j < ne; ++j) {
    auto p = projective_module(a, j);
    auto soc = module_socle(a, p);
    if (soc.size() != 1) continue;
    for (std::size_t i = 0; i < ne; ++i) {
      const auto& act = p.action[a.idempotents[i]];
      Vec<F> img(p.dim, f.zero());
      for (std::size_t r = 0; r < p.dim; ++r)
        for (std::size_t c = 0; c < p.dim; ++c) img[r] = f.add(img[r], f.mul(act(r, c), soc[0][c]));
      bool nonzero = std::any_of(img.begin(), img.end(), [&f](const auto& v) { return !f.is_zero(v); });
      if (nonzero && p.dim == right_dim[i]) out.injective_is_projective[i] = true;
    }
  }

  auto op = a.opposite();
  Module<F> dual{a.dim(), {}};
  for (std::size_t x = 0; x < a.dim(); ++x) dual.action.push_back(a.left_matrix(a.unit(x)).transpose());
  out.dual_resolution = projective_resolution(op, std::move(dual), cutoff);

  for (std::size_t t = 0; t < out.dual_resolution.steps.size(); ++t) {
    const auto& cover = out.dual_resolution.steps[t].cover;
    for (std::size_t i = 0; i < ne; ++i)
      if (cover[i] > 0 && !out.injective_is_projective[i]) {
        out.value = t;
        return out;
      }
  }
  out.infinite = out.dual_resolution.length.has_value();
  return out;
}

}  // namespace terwb
