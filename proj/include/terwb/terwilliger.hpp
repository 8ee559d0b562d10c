#pragma once

#include "terwb/algebra.hpp"
#include "terwb/classes.hpp"
#include "terwb/scheme.hpp"

#include <compare>
#include <map>
#include <numeric>

namespace terwb {

template <class F>
std::vector<Matrix<F>> adjacency_matrices(const Scheme& s, const F& field) {
  std::vector<Matrix<F>> a(s.d() + 1, Matrix<F>(field, s.n(), s.n()));
  for (Vertex x = 0; x < s.n(); ++x)
    for (Vertex y = 0; y < s.n(); ++y) a[s.relation(x, y)](x, y) = field.one();
  return a;
}

/// A_0 = I, sum A_i = J, A_i^t = A_{i'} and A_i A_j = sum_l p_{ij}^l A_l.
template <class F>
Report check_adjacency(const Scheme& s, const std::vector<Matrix<F>>& a) {
  Report rep;
  const F& f = a.at(0).field();
  const std::size_t n = s.n();
  rep.add("A_0 = I", a[0] == Matrix<F>::identity(f, n));
  Matrix<F> sum(f, n, n), ones(f, n, n);
  for (const auto& m : a) sum = sum + m;
  for (std::size_t k = 0; k < n * n; ++k) ones(k / n, k % n) = f.one();
  rep.add("sum A_i = J", sum == ones);
  std::string bad;
  for (Relation i = 0; i <= s.d() && bad.empty(); ++i) {
    if (a[i].transpose() != a[s.converse(i)]) bad = "A_" + std::to_string(i) + "^t != A_i'";
    for (Relation j = 0; j <= s.d() && bad.empty(); ++j) {
      Matrix<F> expect(f, n, n);
      for (Relation l = 0; l <= s.d(); ++l)
        if (s.p(i, j, l)) expect = expect + a[l].scaled(f.from_int(static_cast<long long>(s.p(i, j, l))));
      if (a[i] * a[j] != expect) bad = "A_" + std::to_string(i) + " A_" + std::to_string(j) + " != sum p A";
    }
  }
  rep.add("A_i A_j = sum_l p_ij^l A_l", bad.empty(), bad);
  return rep;
}

/// E_i* = sum over y in xR_i of E_yy.
template <class F>
std::vector<Matrix<F>> dual_idempotents(const Scheme& s, Vertex x, const F& field) {
  if (x >= s.n()) throw std::out_of_range("base point " + std::to_string(x) + " outside 0.." + std::to_string(s.n() - 1));
  std::vector<Matrix<F>> e(s.d() + 1, Matrix<F>(field, s.n(), s.n()));
  for (Vertex y = 0; y < s.n(); ++y) e[s.relation(x, y)](y, y) = field.one();
  return e;
}

/// Orthogonal idempotents summing to I, J E_i* J = k_i J, and E_i* A_l E_j* a 0/1 matrix.
template <class F>
Report check_dual_identities(const Scheme& s, const std::vector<Matrix<F>>& e, const std::vector<Matrix<F>>& a) {
  Report rep;
  const F& f = e.at(0).field();
  const std::size_t n = s.n();
  Matrix<F> ones(f, n, n), sum(f, n, n);
  for (std::size_t k = 0; k < n * n; ++k) ones(k / n, k % n) = f.one();
  std::string bad;
  for (Relation i = 0; i <= s.d(); ++i) {
    sum = sum + e[i];
    for (Relation j = 0; j <= s.d() && bad.empty(); ++j) {
      auto expect = i == j ? e[j] : Matrix<F>(f, n, n);
      if (e[i] * e[j] != expect) bad = "E_" + std::to_string(i) + "* E_" + std::to_string(j) + "*";
    }
  }
  rep.add("E_i* E_j* = delta_ij E_j*", bad.empty(), bad);
  rep.add("sum E_i* = I", sum == Matrix<F>::identity(f, n));
  bad.clear();
  for (Relation i = 0; i <= s.d() && bad.empty(); ++i)
    if (ones * e[i] * ones != ones.scaled(f.from_int(static_cast<long long>(s.valency(i)))))
      bad = "J E_" + std::to_string(i) + "* J != k_i J";
  rep.add("J E_i* J = k_i J", bad.empty(), bad);
  bad.clear();
  for (Relation i = 0; i <= s.d() && bad.empty(); ++i)
    for (Relation l = 0; l <= s.d() && bad.empty(); ++l)
      for (Relation j = 0; j <= s.d() && bad.empty(); ++j) {
        auto m = e[i] * a[l] * e[j];
        for (const auto& v : m.flat())
          if (!f.is_zero(v) && v != f.one()) {
            bad = "E_" + std::to_string(i) + "* A_" + std::to_string(l) + " E_" + std::to_string(j) + "*";
            break;
          }
      }
  rep.add("E_i* A_l E_j* is a 0/1 matrix", bad.empty(), bad);
  return rep;
}

template <class F>
struct TerwilligerAlgebra {
  Scheme scheme;
  Vertex x;
  F field;
  std::vector<std::string> generator_labels;
  std::vector<Matrix<F>> generators;  // A_0..A_d, E_0*..E_d*
  Subspace<F> closure;

  std::size_t n() const { return scheme.n(); }
  std::size_t dim() const { return closure.dim(); }
  bool contains(const Matrix<F>& m) const { return closure.contains(m.flat()); }
};

template <class F>
TerwilligerAlgebra<F> generate(const Scheme& s, Vertex x, const F& field) {
  auto a = adjacency_matrices(s, field);
  auto e = dual_idempotents(s, x, field);
  std::vector<std::string> labels;
  std::vector<Matrix<F>> gens;
  for (Relation i = 0; i <= s.d(); ++i) {
    labels.push_back("A_" + std::to_string(i));
    gens.push_back(a[i]);
  }
  for (Relation i = 0; i <= s.d(); ++i) {
    labels.push_back("E*_" + std::to_string(i));
    gens.push_back(e[i]);
  }
  auto closure = subalgebra_closure(gens, s.n(), field);
  return TerwilligerAlgebra<F>{s, x, field, std::move(labels), std::move(gens), std::move(closure)};
}

/// Generators and identity are members, the closure is product-closed and transpose-closed.
template <class F>
Report check_closure(const TerwilligerAlgebra<F>& tw) {
  Report rep;
  const std::size_t n = tw.n();
  std::string bad;
  for (std::size_t g = 0; g < tw.generators.size(); ++g)
    if (!tw.contains(tw.generators[g]) && bad.empty()) bad = tw.generator_labels[g];
  rep.add("contains generators", bad.empty(), bad);
  rep.add("contains identity", tw.contains(Matrix<F>::identity(tw.field, n)));
  auto basis = basis_matrices(tw.closure, n);
  bad.clear();
  for (std::size_t i = 0; i < basis.size() && bad.empty(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (!tw.contains(basis[i] * basis[j])) {
        bad = "basis product " + std::to_string(i) + "*" + std::to_string(j) + " leaves the closure";
        break;
      }
  rep.add("product-closed", bad.empty(), bad);
  bad.clear();
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!tw.contains(basis[i].transpose())) {
      bad = "transpose of basis element " + std::to_string(i) + " leaves the closure";
      break;
    }
  rep.add("transpose-closed", bad.empty(), bad);
  return rep;
}

struct BasisLabel {
  std::size_t l;
  Relation i;
  Relation j;
  auto operator<=>(const BasisLabel&) const = default;
  std::string str() const {
    return "b" + std::to_string(l) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
  }
};

class SchemeInconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class F>
struct StructuredBasis {
  Vertex x;
  std::vector<BasisLabel> labels;  // B_0 then B_1..B_r, each block row-major in class order
  std::vector<Matrix<F>> elements;
  std::map<BasisLabel, std::size_t> index;

  std::size_t size() const noexcept { return labels.size(); }
  std::size_t at(std::size_t l, Relation i, Relation j) const { return index.at({l, i, j}); }
  std::vector<std::string> label_strings() const {
    std::vector<std::string> out;
    for (const auto& b : labels) out.push_back(b.str());
    return out;
  }
};

/// b^0_ij = E_i* J E_j*; for l >= 1, b^l_ij = E_{y1 z1} + E_{y2 z2} where
/// xR_i = {y1 < y2}, xR_j = {z1 < z2} in the total order given by rank
/// (numeric order when rank is empty).
template <class F>
StructuredBasis<F> structured_basis(const Scheme& s, Vertex x, const F& field, const ClassData& c,
                                    const std::vector<std::size_t>& rank = {}) {
  if (x >= s.n()) throw std::out_of_range("base point " + std::to_string(x) + " outside the vertex set");
  if (!rank.empty() && rank.size() != s.n()) throw DimensionError("vertex order has the wrong length");
  const std::size_t n = s.n();
  StructuredBasis<F> b;
  b.x = x;
  auto add = [&b](BasisLabel label, Matrix<F> m) {
    b.index[label] = b.labels.size();
    b.labels.push_back(label);
    b.elements.push_back(std::move(m));
  };
  std::vector<std::vector<Vertex>> nbhd(s.d() + 1);
  for (Relation i = 0; i <= s.d(); ++i) {
    nbhd[i] = s.neighbourhood(x, i);
    if (!rank.empty())
      std::sort(nbhd[i].begin(), nbhd[i].end(), [&rank](Vertex u, Vertex v) { return rank[u] < rank[v]; });
  }
  for (Relation i = 0; i <= s.d(); ++i)
    for (Relation j = 0; j <= s.d(); ++j) {
      Matrix<F> m(field, n, n);
      for (auto y : nbhd[i])
        for (auto z : nbhd[j]) m(y, z) = field.one();
      add({0, i, j}, std::move(m));
    }
  for (std::size_t l = 1; l <= c.r(); ++l) {
    const auto& cls = c.classes[l - 1];
    for (auto i : cls)
      if (nbhd[i].size() != 2)
        throw SchemeInconsistencyError("|xR_" + std::to_string(i) + "| = " + std::to_string(nbhd[i].size()) +
                                       " for a valency-2 relation");
    for (auto i : cls)
      for (auto j : cls) {
        Matrix<F> m(field, n, n);
        m(nbhd[i][0], nbhd[j][0]) = field.one();
        m(nbhd[i][1], nbhd[j][1]) = field.one();
        add({l, i, j}, std::move(m));
      }
  }
  return b;
}

/// (b^l_ij)^t = b^l_ji and b^l_jj = E_j* for l >= 1 and for l = 0, j in A_1.
template <class F>
Report check_basis_invariants(const StructuredBasis<F>& b, const std::vector<Matrix<F>>& estar, const ClassData& c) {
  Report rep;
  std::string bad;
  for (std::size_t k = 0; k < b.size() && bad.empty(); ++k) {
    auto [l, i, j] = b.labels[k];
    if (b.elements[k].transpose() != b.elements[b.at(l, j, i)]) bad = b.labels[k].str();
  }
  rep.add("transpose maps b^l_ij to b^l_ji", bad.empty(), bad);
  bad.clear();
  for (auto j : c.a1)
    if (b.elements[b.at(0, j, j)] != estar[j] && bad.empty()) bad = BasisLabel{0, j, j}.str();
  for (std::size_t l = 1; l <= c.r(); ++l)
    for (auto j : c.classes[l - 1])
      if (b.elements[b.at(l, j, j)] != estar[j] && bad.empty()) bad = BasisLabel{l, j, j}.str();
  rep.add("b^l_jj = E_j*", bad.empty(), bad);
  return rep;
}

struct BasisVerification {
  Report report;
  std::size_t closure_dim = 0;
  std::size_t basis_size = 0;
  std::size_t span_dim = 0;
  std::size_t formula_dim = 0;  // |R| + |S| + (d+1)^2
};

template <class F>
BasisVerification verify_basis(const TerwilligerAlgebra<F>& tw, const StructuredBasis<F>& b, const ClassData& c) {
  BasisVerification out;
  out.closure_dim = tw.dim();
  out.basis_size = b.size();
  const std::size_t d = tw.scheme.d();
  out.formula_dim = c.r_set.size() + c.s_set.size() + (d + 1) * (d + 1);

  std::string bad;
  for (std::size_t k = 0; k < b.size(); ++k)
    if (!tw.contains(b.elements[k])) {
      bad = b.labels[k].str() + " is not in T";
      break;
    }
  out.report.add("basis elements lie in T", bad.empty(), bad);

  std::vector<Vec<F>> flat;
  for (const auto& m : b.elements) flat.push_back(m.flat());
  BasisCoordinates<F> coords(tw.field, flat, tw.n() * tw.n());
  out.span_dim = coords.rank();
  out.report.add("basis elements linearly independent", coords.independent(),
                 coords.independent() ? std::string() : b.labels[coords.dependent().front()].str() + " is dependent");
  out.report.add("span dimension = dim T", out.span_dim == out.closure_dim,
                 std::to_string(out.span_dim) + " != " + std::to_string(out.closure_dim));
  out.report.add("dim T = |R| + |S| + (d+1)^2", out.formula_dim == out.closure_dim,
                 std::to_string(out.formula_dim) + " != " + std::to_string(out.closure_dim));
  out.report.add("R and S disjoint", std::none_of(c.s_set.begin(), c.s_set.end(),
                                                  [&c](const RelationPair& p) { return c.r_set.count(p) > 0; }),
                 "a bad pair also lies in R");
  return out;
}

template <class F>
struct MultiplicationTable {
  Algebra<F> algebra;  // T in the structured basis
  Report report;
  std::size_t counterexamples = 0;
};

/// The product predicted by the three-case formula, as (target, coefficient).
inline std::optional<std::pair<BasisLabel, long long>> formula_product(const BasisLabel& a, const BasisLabel& b,
                                                                       const std::vector<std::size_t>& valency) {
  if (a.j != b.i) return std::nullopt;
  if (a.l == 0 && b.l == 0) return std::make_pair(BasisLabel{0, a.i, b.j}, static_cast<long long>(valency[a.j]));
  if (a.l != 0 && b.l != 0) {
    if (a.l != b.l) return std::nullopt;
    return std::make_pair(BasisLabel{a.l, a.i, b.j}, 1LL);
  }
  return std::make_pair(BasisLabel{0, a.i, b.j}, 1LL);
}

/// Expands every product of basis matrices in the basis and compares with the formula.
template <class F>
MultiplicationTable<F> multiplication_table(const StructuredBasis<F>& b, const Scheme& s, const F& field) {
  const std::size_t m = b.size();
  const std::size_t n = s.n();
  std::vector<Vec<F>> flat;
  for (const auto& e : b.elements) flat.push_back(e.flat());
  BasisCoordinates<F> coords(field, flat, n * n);

  std::vector<typename Algebra<F>::Sparse> table(m * m);
  std::size_t failures = 0;
  std::string first;
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      auto prod = b.elements[p] * b.elements[q];
      auto coef = coords.coordinates(prod.flat());
      Vec<F> predicted(m, field.zero());
      if (auto f = formula_product(b.labels[p], b.labels[q], s.data().valency))
        predicted[b.index.at(f->first)] = field.from_int(f->second);
      if (!coef || *coef != predicted) {
        ++failures;
        if (first.empty())
          first = b.labels[p].str() + " * " + b.labels[q].str() +
                  (coef ? " disagrees with the formula" : " is not in the span of the basis");
      }
      table[p * m + q] = to_sparse(field, coef ? *coef : predicted);
    }
  MultiplicationTable<F> out{Algebra<F>(field, b.label_strings(), std::move(table)), {}, failures};
  out.report.add("products match the three-case formula", failures == 0,
                 std::to_string(failures) + " counterexamples, first: " + first);
  return out;
}

template <class F>
struct RadicalReport {
  Subspace<F> radical;  // inside the structured-basis coordinates
  std::optional<std::size_t> index;
  std::size_t quotient_dim = 0;
  Report report;
};

/// Characteristic 2: N = span{b^0_ij : max(k_i, k_j) = 2}, checked to be a
/// nilpotent two-sided ideal whose quotient multiplies as matrix units.
template <class F>
RadicalReport<F> radical_char2(const Algebra<F>& t, const StructuredBasis<F>& b, const ClassData& c,
                               const std::vector<std::size_t>& valency) {
  if (t.field().characteristic() != 2) throw std::invalid_argument("radical_char2 needs characteristic 2");
  const std::size_t m = t.dim();
  std::vector<std::size_t> n_idx, q_idx;
  for (std::size_t k = 0; k < m; ++k) {
    const auto& lab = b.labels[k];
    bool in_n = lab.l == 0 && std::max(valency[lab.i], valency[lab.j]) == 2;
    (in_n ? n_idx : q_idx).push_back(k);
  }
  RadicalReport<F> out{t.coordinate_span(n_idx), std::nullopt, q_idx.size(), {}};
  const auto& nsp = out.radical;

  std::string bad;
  for (std::size_t a = 0; a < m && bad.empty(); ++a)
    for (auto k : n_idx) {
      if (!nsp.contains(t.multiply(t.unit(a), t.unit(k)))) bad = t.label(a) + " * " + t.label(k) + " leaves N";
      if (bad.empty() && !nsp.contains(t.multiply(t.unit(k), t.unit(a))))
        bad = t.label(k) + " * " + t.label(a) + " leaves N";
      if (!bad.empty()) break;
    }
  out.report.add("N is a two-sided ideal", bad.empty(), bad);

  auto mult = t.product_fn();
  out.index = nilpotency_index(nsp, mult);
  auto n2 = ideal_product(nsp, nsp, mult);
  auto n3 = ideal_product(n2, nsp, mult);
  out.report.add("N^3 = 0", n3.dim() == 0, "dim N^3 = " + std::to_string(n3.dim()));
  if (c.r() >= 1) {
    out.report.add("N^2 != 0", n2.dim() > 0, "N^2 = 0 although r >= 1");
    out.report.add("nilpotency index = 3", out.index == 3u,
                   out.index ? "index " + std::to_string(*out.index) : std::string("not nilpotent"));
  } else {
    out.report.add("N = 0 for thin schemes", nsp.dim() == 0, "dim N = " + std::to_string(nsp.dim()));
  }

  std::size_t expect_q = c.a1.size() * c.a1.size();
  for (const auto& cls : c.classes) expect_q += cls.size() * cls.size();
  out.report.add("quotient dimension = |A_1|^2 + sum |C_l|^2", q_idx.size() == expect_q,
                 std::to_string(q_idx.size()) + " != " + std::to_string(expect_q));
  bad.clear();
  for (auto p : q_idx)
    for (auto q : q_idx) {
      const auto& x = b.labels[p];
      const auto& y = b.labels[q];
      auto expect = t.zero();
      if (x.l == y.l && x.j == y.i) expect[b.at(x.l, x.i, y.j)] = t.field().one();
      auto got = nsp.reduce(t.multiply(t.unit(p), t.unit(q)));
      if (got != nsp.reduce(expect) && bad.empty()) bad = x.str() + " * " + y.str() + " mod N = " + t.format(got);
    }
  out.report.add("quotient basis multiplies as matrix units", bad.empty(), bad);
  return out;
}

enum class SemisimpleVerdict { semisimple_certified, not_semisimple_certified, inconclusive };

inline std::string to_string(SemisimpleVerdict v) {
  switch (v) {
    case SemisimpleVerdict::semisimple_certified: return "semisimple-certified";
    case SemisimpleVerdict::not_semisimple_certified: return "not-semisimple-certified";
    case SemisimpleVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct SemisimplicityResult {
  SemisimpleVerdict verdict;
  std::string method;           // "trace-form" or "char-2 radical"
  std::size_t radical_dim = 0;  // trace-form kernel or N
};

/// Characteristic 0 decides by the trace form; characteristic 2 uses a verified
/// N from radical_char2 when given; otherwise a zero trace-form kernel certifies
/// semisimplicity and a nonzero one is inconclusive.
template <class F>
SemisimplicityResult semisimplicity_check(const TerwilligerAlgebra<F>& tw, const RadicalReport<F>* char2 = nullptr) {
  if (tw.field.characteristic() == 2 && char2 && char2->report.passed()) {
    auto dim = char2->radical.dim();
    return {dim == 0 ? SemisimpleVerdict::semisimple_certified : SemisimpleVerdict::not_semisimple_certified,
            "char-2 radical", dim};
  }
  auto kernel = trace_form_radical(basis_matrices(tw.closure, tw.n()), tw.field, tw.n());
  if (kernel.dim() == 0) return {SemisimpleVerdict::semisimple_certified, "trace-form", 0};
  return {tw.field.characteristic() == 0 ? SemisimpleVerdict::not_semisimple_certified
                                         : SemisimpleVerdict::inconclusive,
          "trace-form", kernel.dim()};
}

struct BasepointReport {
  std::vector<std::size_t> dims;  // dim T(x) for x = 0..n-1
  bool all_equal() const {
    return std::all_of(dims.begin(), dims.end(), [this](std::size_t v) { return v == dims.front(); });
  }
};

template <class F>
BasepointReport basepoint_invariance(const Scheme& s, const F& field) {
  BasepointReport rep;
  for (Vertex x = 0; x < s.n(); ++x) rep.dims.push_back(generate(s, x, field).dim());
  return rep;
}

}  // namespace terwb
