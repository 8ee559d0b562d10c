#pragma once

#include "terwb/terwilliger.hpp"

namespace terwb {

/// Poset I = [r] with 0 < l for l >= 1, M(0) = [d], M(l) = C_l, basis labels
/// (l, S, T) = b^l_ST and the involution (l, S, T) -> (l, T, S).
struct CellDatum {
  std::size_t r = 0;
  std::vector<std::vector<Relation>> m;  // m[lambda]
  std::vector<BasisLabel> labels;
  std::vector<std::size_t> involution;  // label index -> label index

  static bool less(std::size_t mu, std::size_t lambda) { return mu == 0 && lambda >= 1; }
};

template <class F>
CellDatum cell_datum(const StructuredBasis<F>& b, const ClassData& c) {
  CellDatum datum;
  datum.r = c.r();
  for (std::size_t l = 0; l <= c.r(); ++l) datum.m.push_back(c.members(l));
  datum.labels = b.labels;
  for (const auto& lab : b.labels) datum.involution.push_back(b.at(lab.l, lab.j, lab.i));
  return datum;
}

/// Labels biject with M(l) x M(l) over l, and the involution has order 2.
inline Report check_cell_datum(const CellDatum& datum) {
  Report rep;
  std::set<BasisLabel> expect, got(datum.labels.begin(), datum.labels.end());
  for (std::size_t l = 0; l < datum.m.size(); ++l)
    for (auto s : datum.m[l])
      for (auto t : datum.m[l]) expect.insert({l, s, t});
  rep.add("labels biject with M(l) x M(l)", expect == got && got.size() == datum.labels.size());
  bool order2 = true;
  for (std::size_t k = 0; k < datum.involution.size(); ++k)
    if (datum.involution[datum.involution[k]] != k) order2 = false;
  rep.add("label involution has order 2", order2);
  return rep;
}

/// Transpose is an anti-automorphism of T of order 2 sending b^l_ST to b^l_TS.
template <class F>
Report verify_involution(const TerwilligerAlgebra<F>& tw, const StructuredBasis<F>& b) {
  Report rep;
  std::string bad;
  for (std::size_t p = 0; p < b.size() && bad.empty(); ++p)
    for (std::size_t q = 0; q < b.size(); ++q) {
      const auto& x = b.elements[p];
      const auto& y = b.elements[q];
      if ((x * y).transpose() != y.transpose() * x.transpose()) {
        bad = "(" + b.labels[p].str() + " " + b.labels[q].str() + ")^t";
        break;
      }
    }
  rep.add("(ab)^t = b^t a^t", bad.empty(), bad);
  bad.clear();
  for (std::size_t p = 0; p < b.size() && bad.empty(); ++p) {
    const auto& x = b.elements[p];
    auto [l, i, j] = b.labels[p];
    if (x.transpose().transpose() != x) bad = "order of t on " + b.labels[p].str();
    else if (x.transpose() != b.elements[b.at(l, j, i)]) bad = b.labels[p].str() + "^t";
    else if (!tw.contains(x.transpose())) bad = b.labels[p].str() + "^t leaves T";
  }
  rep.add("t has order 2 and maps b^l_ST to b^l_TS within T", bad.empty(), bad);
  rep.add("identity fixed", Matrix<F>::identity(tw.field, tw.n()).transpose() == Matrix<F>::identity(tw.field, tw.n()));
  return rep;
}

template <class F>
struct C3Result {
  Report report;
  /// r_tables[lambda][a](U, S) = r_a(U, S).
  std::vector<std::vector<Matrix<F>>> r_tables;
};

/// (C3): a C^lambda_ST = sum_U r_a(U,S) C^lambda_UT + lower terms, with r_a
/// independent of T; also checks a -> r_a is multiplicative for every lambda.
template <class F>
C3Result<F> verify_C3(const Algebra<F>& t, const StructuredBasis<F>& b, const CellDatum& datum) {
  const F& f = t.field();
  C3Result<F> out;
  std::string bad;
  for (std::size_t lambda = 0; lambda < datum.m.size(); ++lambda) {
    const auto& ml = datum.m[lambda];
    const std::size_t sz = ml.size();
    std::map<Relation, std::size_t> pos;
    for (std::size_t k = 0; k < sz; ++k) pos[ml[k]] = k;
    auto& tables = out.r_tables.emplace_back();
    for (std::size_t a = 0; a < t.dim(); ++a) {
      std::optional<Matrix<F>> ra;
      for (auto tt : ml) {
        Matrix<F> rt(f, sz, sz);
        for (auto s : ml) {
          auto prod = t.multiply(t.unit(a), t.unit(b.at(lambda, s, tt)));
          for (std::size_t k = 0; k < t.dim(); ++k) {
            if (f.is_zero(prod[k])) continue;
            const auto& lab = b.labels[k];
            if (lab.l == lambda && lab.j == tt) {
              rt(pos[lab.i], pos[s]) = prod[k];
            } else if (!CellDatum::less(lab.l, lambda) && bad.empty()) {
              bad = t.label(a) + " * " + BasisLabel{lambda, s, tt}.str() + " has a term on " + lab.str();
            }
          }
        }
        if (!ra) ra = rt;
        else if (*ra != rt && bad.empty())
          bad = "r_a(U,S) depends on T for a = " + t.label(a) + ", lambda = " + std::to_string(lambda);
      }
      tables.push_back(ra ? *ra : Matrix<F>(f, sz, sz));
    }
  }
  out.report.add("(C3) coefficients independent of T, remainder in lower cells", bad.empty(), bad);

  bad.clear();
  for (std::size_t lambda = 0; lambda < out.r_tables.size() && bad.empty(); ++lambda) {
    const auto& tables = out.r_tables[lambda];
    const std::size_t sz = datum.m[lambda].size();
    for (std::size_t a = 0; a < t.dim() && bad.empty(); ++a)
      for (std::size_t c = 0; c < t.dim(); ++c) {
        Matrix<F> lin(f, sz, sz);
        for (const auto& [k, coef] : t.product(a, c)) lin = lin + tables[k].scaled(coef);
        if (lin != tables[a] * tables[c]) {
          bad = "r_{ab} != r_a r_b for a = " + t.label(a) + ", b = " + t.label(c) + ", lambda = " + std::to_string(lambda);
          break;
        }
      }
  }
  out.report.add("a -> r_a is multiplicative on every cell", bad.empty(), bad);
  return out;
}

template <class F>
struct CellChain {
  std::vector<Subspace<F>> j;  // J_0 .. J_{r+1}
  Report report;
  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> out;
    for (const auto& s : j) out.push_back(s.dim());
    return out;
  }
  std::size_t length() const { return j.size() - 1; }
};

/// J_i = span of B_0 u ... u B_{i-1}; checks ideals, transpose stability, strict growth and subquotient dims.
template <class F>
CellChain<F> build_cell_chain(const Algebra<F>& t, const StructuredBasis<F>& b, const CellDatum& datum) {
  CellChain<F> chain;
  std::vector<std::size_t> idx;
  chain.j.push_back(t.coordinate_span({}));
  for (std::size_t lambda = 0; lambda < datum.m.size(); ++lambda) {
    for (std::size_t k = 0; k < b.size(); ++k)
      if (b.labels[k].l == lambda) idx.push_back(k);
    chain.j.push_back(t.coordinate_span(idx));
  }
  std::string bad;
  for (std::size_t i = 1; i < chain.j.size() && bad.empty(); ++i) {
    const auto& ji = chain.j[i];
    for (std::size_t a = 0; a < t.dim() && bad.empty(); ++a)
      for (const auto& v : ji.basis()) {
        if (!ji.contains(t.multiply(t.unit(a), v)) || !ji.contains(t.multiply(v, t.unit(a)))) {
          bad = "J_" + std::to_string(i) + " is not closed under multiplication by " + t.label(a);
          break;
        }
      }
  }
  chain.report.add("each J_i is a two-sided ideal", bad.empty(), bad);
  bad.clear();
  for (std::size_t i = 1; i < chain.j.size() && bad.empty(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (chain.j[i].contains(t.unit(k)) && !chain.j[i].contains(t.unit(datum.involution[k]))) {
        bad = "J_" + std::to_string(i) + " is not transpose-stable at " + b.labels[k].str();
        break;
      }
  chain.report.add("each J_i is transpose-stable", bad.empty(), bad);
  bad.clear();
  for (std::size_t i = 1; i < chain.j.size(); ++i) {
    auto step = chain.j[i].dim() - chain.j[i - 1].dim();
    auto expect = datum.m[i - 1].size() * datum.m[i - 1].size();
    if ((step != expect || !chain.j[i - 1].is_subspace_of(chain.j[i])) && bad.empty())
      bad = "dim J_" + std::to_string(i) + " / J_" + std::to_string(i - 1) + " = " + std::to_string(step) +
            ", expected " + std::to_string(expect);
  }
  chain.report.add("strictly increasing with subquotients |M(l)|^2", bad.empty(), bad);
  chain.report.add("J_{r+1} = T", chain.j.back().dim() == t.dim());
  return chain;
}

/// Heredity criterion J_l^2 not in J_{l-1}, chain length = number of simple
/// modules, and in each quotient the image of J_l is idempotent with J rad J = 0.
template <class F>
Report verify_heredity(const Algebra<F>& t, const CellChain<F>& chain, const Subspace<F>& radical,
                       std::size_t simple_count) {
  Report rep;
  auto mult = t.product_fn();
  for (std::size_t l = 1; l < chain.j.size(); ++l) {
    const auto& jl = chain.j[l];
    const auto& prev = chain.j[l - 1];
    std::string witness;
    for (std::size_t p = 0; p < jl.basis().size() && witness.empty(); ++p)
      for (std::size_t q = 0; q < jl.basis().size(); ++q) {
        auto prod = mult(jl.basis()[p], jl.basis()[q]);
        if (!prev.contains(prod)) {
          witness = t.format(jl.basis()[p]) + " * " + t.format(jl.basis()[q]) + " = " + t.format(prod);
          break;
        }
      }
    rep.add("J_" + std::to_string(l) + "^2 not in J_" + std::to_string(l - 1), !witness.empty(),
            "J_" + std::to_string(l) + "^2 is contained in J_" + std::to_string(l - 1));

    auto sq = ideal_product(jl, jl, mult);
    for (const auto& v : prev.basis()) sq.insert(v);
    rep.add("J_" + std::to_string(l) + " idempotent modulo J_" + std::to_string(l - 1), jl.is_subspace_of(sq));
    auto jrj = ideal_product(ideal_product(jl, radical, mult), jl, mult);
    rep.add("J_" + std::to_string(l) + " rad J_" + std::to_string(l) + " in J_" + std::to_string(l - 1),
            jrj.is_subspace_of(prev));
  }
  rep.add("chain length = number of simple modules", chain.length() == simple_count,
          "length " + std::to_string(chain.length()) + " vs " + std::to_string(simple_count) + " simples");
  return rep;
}

}  // namespace terwb
