#pragma once

#include "terwb/report.hpp"
#include "terwb/subspace.hpp"

#include <string>
#include <vector>

namespace terwb {

/// Finite-dimensional associative algebra given by structure constants on a
/// labelled basis. Basic presentations additionally split the basis into a
/// complete set of primitive orthogonal idempotents and a radical basis.
template <class F>
class Algebra {
 public:
  using Element = typename F::Element;
  using Vector = Vec<F>;
  using Sparse = std::vector<std::pair<std::size_t, Element>>;

  /// table[a * dim + b] = coordinates of basis_a * basis_b.
  Algebra(F field, std::vector<std::string> labels, std::vector<Sparse> table)
      : field_(std::move(field)), labels_(std::move(labels)), table_(std::move(table)) {
    if (table_.size() != labels_.size() * labels_.size())
      throw DimensionError("structure constant table does not match the basis size");
  }

  const F& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t k) const { return labels_.at(k); }
  const Sparse& product(std::size_t a, std::size_t b) const { return table_[a * dim() + b]; }

  std::vector<std::size_t> idempotents;  // basis indices, basic presentations only
  std::vector<std::size_t> radical;      // basis indices, basic presentations only

  Vector zero() const { return Vector(dim(), field_.zero()); }
  Vector unit(std::size_t k) const {
    Vector v = zero();
    v[k] = field_.one();
    return v;
  }
  Vector sparse_to_dense(const Sparse& s) const {
    Vector v = zero();
    for (const auto& [k, c] : s) v[k] = c;
    return v;
  }

  Vector multiply(const Vector& x, const Vector& y) const {
    Vector out = zero();
    for (std::size_t a = 0; a < dim(); ++a) {
      if (field_.is_zero(x[a])) continue;
      for (std::size_t b = 0; b < dim(); ++b) {
        if (field_.is_zero(y[b])) continue;
        auto xy = field_.mul(x[a], y[b]);
        for (const auto& [k, c] : product(a, b)) out[k] = field_.add(out[k], field_.mul(xy, c));
      }
    }
    return out;
  }

  Product<F> product_fn() const {
    return [this](const Vector& x, const Vector& y) { return multiply(x, y); };
  }

  /// Matrix of y -> x y (columns are images of basis vectors).
  Matrix<F> left_matrix(const Vector& x) const {
    Matrix<F> m(field_, dim(), dim());
    for (std::size_t b = 0; b < dim(); ++b) {
      auto col = multiply(x, unit(b));
      for (std::size_t k = 0; k < dim(); ++k) m(k, b) = col[k];
    }
    return m;
  }

  /// Matrix of y -> y x.
  Matrix<F> right_matrix(const Vector& x) const {
    Matrix<F> m(field_, dim(), dim());
    for (std::size_t b = 0; b < dim(); ++b) {
      auto col = multiply(unit(b), x);
      for (std::size_t k = 0; k < dim(); ++k) m(k, b) = col[k];
    }
    return m;
  }

  /// The two-sided identity, or nullopt if the algebra is not unital.
  std::optional<Vector> identity() const {
    const std::size_t m = dim();
    Matrix<F> sys(field_, 2 * m * m, m);
    Vector rhs(2 * m * m, field_.zero());
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t a = 0; a < m; ++a) {
        for (const auto& [k, c] : product(a, b)) sys(b * m + k, a) = c;
        for (const auto& [k, c] : product(b, a)) sys(m * m + b * m + k, a) = c;
      }
      rhs[b * m + b] = field_.one();
      rhs[m * m + b * m + b] = field_.one();
    }
    return solve(sys, rhs);
  }

  Algebra opposite() const {
    std::vector<Sparse> t(table_.size());
    for (std::size_t a = 0; a < dim(); ++a)
      for (std::size_t b = 0; b < dim(); ++b) t[a * dim() + b] = product(b, a);
    Algebra op(field_, labels_, std::move(t));
    op.idempotents = idempotents;
    op.radical = radical;
    return op;
  }

  Subspace<F> coordinate_span(const std::vector<std::size_t>& indices) const {
    Subspace<F> s(field_, dim());
    for (auto k : indices) s.insert(unit(k));
    return s;
  }

  std::string format(const Vector& v) const {
    std::string s;
    for (std::size_t k = 0; k < dim(); ++k) {
      if (field_.is_zero(v[k])) continue;
      if (!s.empty()) s += " + ";
      s += field_.to_string(v[k]) + "*" + labels_[k];
    }
    return s.empty() ? "0" : s;
  }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    if (a.labels_.size() != b.labels_.size()) return false;
    for (std::size_t k = 0; k < a.table_.size(); ++k)
      if (a.sparse_to_dense(a.table_[k]) != b.sparse_to_dense(b.table_[k])) return false;
    return true;
  }

 private:
  F field_;
  std::vector<std::string> labels_;
  std::vector<Sparse> table_;
};

template <class F>
typename Algebra<F>::Sparse to_sparse(const F& field, const Vec<F>& v) {
  typename Algebra<F>::Sparse s;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!field.is_zero(v[k])) s.emplace_back(k, v[k]);
  return s;
}

/// (ab)c = a(bc) on all basis triples.
template <class F>
Report check_associative(const Algebra<F>& a) {
  Report rep;
  const std::size_t m = a.dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto ij = a.sparse_to_dense(a.product(i, j));
      for (std::size_t k = 0; k < m; ++k) {
        auto jk = a.sparse_to_dense(a.product(j, k));
        if (a.multiply(ij, a.unit(k)) != a.multiply(a.unit(i), jk)) {
          rep.add("associativity", false,
                  "(" + a.label(i) + " " + a.label(j) + ") " + a.label(k) + " != " + a.label(i) + " (" + a.label(j) +
                      " " + a.label(k) + ")");
          return rep;
        }
      }
    }
  rep.add("associativity", true);
  return rep;
}

/// Checks a basic presentation: listed idempotents are orthogonal idempotents
/// summing to the identity, the radical basis spans a nilpotent two-sided ideal,
/// and the basis is the disjoint union of the two lists.
template <class F>
Report check_basic_presentation(const Algebra<F>& a) {
  Report rep;
  const F& f = a.field();
  rep.merge(check_associative(a));
  rep.add("basis split", a.idempotents.size() + a.radical.size() == a.dim(),
          std::to_string(a.idempotents.size()) + " idempotents + " + std::to_string(a.radical.size()) +
              " radical elements != dim " + std::to_string(a.dim()));

  auto sum = a.zero();
  std::string bad;
  for (auto i : a.idempotents) {
    for (std::size_t k = 0; k < a.dim(); ++k) sum[k] = f.add(sum[k], a.unit(i)[k]);
    for (auto j : a.idempotents) {
      auto expect = i == j ? a.unit(i) : a.zero();
      if (a.multiply(a.unit(i), a.unit(j)) != expect && bad.empty())
        bad = a.label(i) + " * " + a.label(j) + " = " + a.format(a.multiply(a.unit(i), a.unit(j)));
    }
  }
  rep.add("orthogonal idempotents", bad.empty(), bad);
  auto id = a.identity();
  rep.add("idempotents sum to identity", id && *id == sum,
          id ? "identity is " + a.format(*id) : std::string("algebra has no identity"));

  auto rad = a.coordinate_span(a.radical);
  std::string not_ideal;
  for (std::size_t b = 0; b < a.dim() && not_ideal.empty(); ++b)
    for (auto r : a.radical) {
      if (!rad.contains(a.multiply(a.unit(b), a.unit(r))))
        not_ideal = a.label(b) + " * " + a.label(r) + " leaves the radical";
      else if (!rad.contains(a.multiply(a.unit(r), a.unit(b))))
        not_ideal = a.label(r) + " * " + a.label(b) + " leaves the radical";
      if (!not_ideal.empty()) break;
    }
  rep.add("radical is a two-sided ideal", not_ideal.empty(), not_ideal);
  rep.add("radical is nilpotent", nilpotency_index(rad, a.product_fn()).has_value(), "radical powers stabilize");
  return rep;
}

/// dim e_u A e_v for the presentation's idempotents.
template <class F>
std::vector<std::vector<std::size_t>> cartan_matrix(const Algebra<F>& a) {
  const auto& e = a.idempotents;
  std::vector<std::vector<std::size_t>> c(e.size(), std::vector<std::size_t>(e.size(), 0));
  for (std::size_t u = 0; u < e.size(); ++u)
    for (std::size_t v = 0; v < e.size(); ++v) {
      Subspace<F> corner(a.field(), a.dim());
      for (std::size_t b = 0; b < a.dim(); ++b)
        corner.insert(a.multiply(a.multiply(a.unit(e[u]), a.unit(b)), a.unit(e[v])));
      c[u][v] = corner.dim();
    }
  return c;
}

/// Dimension of the centre.
template <class F>
std::size_t center_dim(const Algebra<F>& a) {
  const std::size_t m = a.dim();
  const F& f = a.field();
  Matrix<F> sys(f, m * m, m);
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t x = 0; x < m; ++x) {
      auto bx = a.sparse_to_dense(a.product(x, b));
      auto xb = a.sparse_to_dense(a.product(b, x));
      for (std::size_t k = 0; k < m; ++k) sys(b * m + k, x) = f.sub(bx[k], xb[k]);
    }
  return nullspace(sys).size();
}

}  // namespace terwb
