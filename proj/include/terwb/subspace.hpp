#pragma once

#include "terwb/matrix.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <tuple>

namespace terwb {

namespace detail {

/// Incrementally maintained reduced row-echelon basis. Rows are kept sorted by
/// pivot and fully reduced, so the coefficient of row k in any member vector v
/// is simply v[pivot_k]. With tracking on, every row also carries its
/// expression in terms of the inserted vectors.
template <class F>
class Echelon {
 public:
  using Element = typename F::Element;
  using Vector = Vec<F>;

  Echelon(F field, std::size_t ambient, std::size_t tracked = 0)
      : field_(std::move(field)), ambient_(ambient), tracked_(tracked), pivot_row_(ambient, npos) {}

  const F& field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<Vector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  const std::vector<Vector>& combos() const noexcept { return combos_; }

  void check_length(const Vector& v) const {
    if (v.size() != ambient_)
      throw DimensionError("vector of length " + std::to_string(v.size()) + " in ambient dimension " +
                           std::to_string(ambient_));
  }

  /// Coefficients (row index, value) of v against the current rows.
  std::vector<std::pair<std::size_t, Element>> row_coefficients(const Vector& v) const {
    std::vector<std::pair<std::size_t, Element>> coefs;
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (pivot_row_[c] == npos || field_.is_zero(v[c])) continue;
      coefs.emplace_back(pivot_row_[c], v[c]);
    }
    return coefs;
  }

  Vector reduce(Vector v) const {
    check_length(v);
    for (auto& [k, coef] : row_coefficients(v)) subtract_row(v, k, coef);
    return v;
  }

  /// Returns true when v enlarged the span. origin is the tracked index of v.
  bool insert(Vector v, std::size_t origin = 0) {
    check_length(v);
    Vector combo;
    if (tracked_ > 0) {
      combo.assign(tracked_, field_.zero());
      combo[origin] = field_.one();
    }
    for (auto& [k, coef] : row_coefficients(v)) {
      subtract_row(v, k, coef);
      if (tracked_ > 0) axpy(combo, combos_[k], field_.neg(coef));
    }
    std::size_t pivot = 0;
    while (pivot < ambient_ && field_.is_zero(v[pivot])) ++pivot;
    if (pivot == ambient_) return false;

    auto inv = field_.inv(v[pivot]);
    for (auto& e : v)
      if (!field_.is_zero(e)) e = field_.mul(e, inv);
    if (tracked_ > 0)
      for (auto& e : combo)
        if (!field_.is_zero(e)) e = field_.mul(e, inv);
    auto support = support_of(v);

    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (field_.is_zero(rows_[k][pivot])) continue;
      auto factor = rows_[k][pivot];
      for (auto c : support) rows_[k][c] = field_.sub(rows_[k][c], field_.mul(factor, v[c]));
      supports_[k] = support_of(rows_[k]);
      if (tracked_ > 0) axpy(combos_[k], combo, field_.neg(factor));
    }

    auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin());
    rows_.insert(rows_.begin() + pos, std::move(v));
    supports_.insert(supports_.begin() + pos, std::move(support));
    pivots_.insert(pivots_.begin() + pos, pivot);
    if (tracked_ > 0) combos_.insert(combos_.begin() + pos, std::move(combo));
    for (std::size_t k = pos; k < pivots_.size(); ++k) pivot_row_[pivots_[k]] = k;
    return true;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::vector<std::size_t> support_of(const Vector& v) const {
    std::vector<std::size_t> s;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!field_.is_zero(v[c])) s.push_back(c);
    return s;
  }

  void subtract_row(Vector& v, std::size_t k, const Element& coef) const {
    for (auto c : supports_[k]) v[c] = field_.sub(v[c], field_.mul(coef, rows_[k][c]));
  }

  void axpy(Vector& y, const Vector& x, const Element& a) const {
    for (std::size_t i = 0; i < y.size(); ++i)
      if (!field_.is_zero(x[i])) y[i] = field_.add(y[i], field_.mul(a, x[i]));
  }

  F field_;
  std::size_t ambient_;
  std::size_t tracked_;
  std::vector<Vector> rows_;
  std::vector<std::vector<std::size_t>> supports_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> pivot_row_;
  std::vector<Vector> combos_;
};

}  // namespace detail

/// A linear subspace of F^ambient held as a reduced row-echelon basis.
template <class F>
class Subspace {
 public:
  using Element = typename F::Element;
  using Vector = Vec<F>;

  Subspace(F field, std::size_t ambient) : ech_(std::move(field), ambient) {}

  /// Throws DimensionError if a vector has the wrong length.
  static Subspace span(F field, const std::vector<Vector>& vectors, std::size_t ambient) {
    Subspace s(std::move(field), ambient);
    for (const auto& v : vectors) s.insert(v);
    return s;
  }

  const F& field() const noexcept { return ech_.field(); }
  std::size_t dim() const noexcept { return ech_.dim(); }
  std::size_t ambient_dim() const noexcept { return ech_.ambient(); }
  const std::vector<Vector>& basis() const noexcept { return ech_.rows(); }
  const std::vector<std::size_t>& pivots() const noexcept { return ech_.pivots(); }

  bool insert(Vector v) { return ech_.insert(std::move(v)); }
  Vector reduce(Vector v) const { return ech_.reduce(std::move(v)); }

  bool contains(const Vector& v) const {
    auto r = ech_.reduce(v);
    return std::all_of(r.begin(), r.end(), [this](const Element& e) { return field().is_zero(e); });
  }

  /// Coefficients on basis(); nullopt when v is not a member.
  std::optional<Vector> coordinates(const Vector& v) const {
    if (!contains(v)) return std::nullopt;
    Vector c;
    c.reserve(dim());
    for (auto p : pivots()) c.push_back(v[p]);
    return c;
  }

  bool is_subspace_of(const Subspace& other) const {
    return std::all_of(basis().begin(), basis().end(), [&](const Vector& v) { return other.contains(v); });
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim() == b.ambient_dim() && a.basis() == b.basis();
  }

 private:
  detail::Echelon<F> ech_;
};

/// Exact coordinates with respect to a fixed (not echelonized) list of vectors.
template <class F>
class BasisCoordinates {
 public:
  using Element = typename F::Element;
  using Vector = Vec<F>;

  BasisCoordinates(F field, const std::vector<Vector>& vectors, std::size_t ambient)
      : ech_(std::move(field), ambient, std::max<std::size_t>(vectors.size(), 1)), count_(vectors.size()) {
    for (std::size_t k = 0; k < vectors.size(); ++k)
      if (!ech_.insert(vectors[k], k)) dependent_.push_back(k);
  }

  std::size_t size() const noexcept { return count_; }
  bool independent() const noexcept { return dependent_.empty(); }
  /// Indices of vectors that were combinations of earlier ones.
  const std::vector<std::size_t>& dependent() const noexcept { return dependent_; }
  std::size_t rank() const noexcept { return ech_.dim(); }

  /// Coefficients c with v = sum_k c_k vectors[k]; nullopt if v is outside the span.
  /// Only meaningful when independent().
  std::optional<Vector> coordinates(const Vector& v) const {
    const F& f = ech_.field();
    auto coefs = ech_.row_coefficients(v);
    Vector rest = ech_.reduce(v);
    for (const auto& e : rest)
      if (!f.is_zero(e)) return std::nullopt;
    Vector c(count_, f.zero());
    for (auto& [k, coef] : coefs) {
      const auto& combo = ech_.combos()[k];
      for (std::size_t i = 0; i < count_; ++i)
        if (!f.is_zero(combo[i])) c[i] = f.add(c[i], f.mul(coef, combo[i]));
    }
    return c;
  }

 private:
  detail::Echelon<F> ech_;
  std::size_t count_;
  std::vector<std::size_t> dependent_;
};

template <class F>
using Product = std::function<Vec<F>(const Vec<F>&, const Vec<F>&)>;

/// Bilinear product of flattened n x n matrices.
template <class F>
Product<F> flat_matrix_product(F field, std::size_t n) {
  return [field, n](const Vec<F>& a, const Vec<F>& b) {
    return (unflatten(field, n, a) * unflatten(field, n, b)).flat();
  };
}

/// Smallest unital subalgebra of M_n containing the generators, as a subspace of
/// flattened matrices. Built as the span of all words: the identity is seeded,
/// then every newly found element is left-multiplied by every generator until
/// nothing new appears.
template <class F>
Subspace<F> subalgebra_closure(const std::vector<Matrix<F>>& generators, std::size_t n, const F& field) {
  using Element = typename F::Element;
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Element>>> sparse;
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n) throw DimensionError("generator is not n x n");
    auto& entries = sparse.emplace_back();
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (!field.is_zero(g(r, c))) entries.emplace_back(r, c, g(r, c));
  }

  Subspace<F> space(field, n * n);
  std::deque<Vec<F>> frontier;
  auto id = Matrix<F>::identity(field, n).flat();
  space.insert(id);
  frontier.push_back(std::move(id));
  while (!frontier.empty()) {
    Vec<F> v = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& entries : sparse) {
      Vec<F> w(n * n, field.zero());
      for (const auto& [r, c, val] : entries)
        for (std::size_t j = 0; j < n; ++j) {
          const auto& src = v[c * n + j];
          if (field.is_zero(src)) continue;
          w[r * n + j] = field.add(w[r * n + j], field.mul(val, src));
        }
      if (space.insert(w)) frontier.push_back(std::move(w));
    }
  }
  return space;
}

/// Span of all products a_i * b_j over the two bases.
template <class F>
Subspace<F> ideal_product(const Subspace<F>& a, const Subspace<F>& b, const Product<F>& mult) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ideal_product: ambient mismatch");
  Subspace<F> out(a.field(), a.ambient_dim());
  for (const auto& u : a.basis())
    for (const auto& v : b.basis()) out.insert(mult(u, v));
  return out;
}

/// Least t with N^t = 0, searching t <= ambient + 1; nullopt if N is not nilpotent.
template <class F>
std::optional<std::size_t> nilpotency_index(const Subspace<F>& n, const Product<F>& mult) {
  Subspace<F> power = n;
  const std::size_t bound = n.ambient_dim() + 1;
  for (std::size_t t = 1; t <= bound; ++t) {
    if (power.dim() == 0) return t;
    auto next = ideal_product(power, n, mult);
    if (next.dim() == power.dim() && next == power) return std::nullopt;  // stationary and nonzero
    power = std::move(next);
  }
  return std::nullopt;
}

/// Kernel of (a, b) -> trace(ab) on the span of the given matrices, returned
/// inside the flattened ambient space. In characteristic 0 this is the Jacobson
/// radical; in characteristic p a zero kernel only certifies semisimplicity.
template <class F>
Subspace<F> trace_form_radical(const std::vector<Matrix<F>>& basis, const F& field, std::size_t n) {
  const std::size_t m = basis.size();
  Matrix<F> gram(field, m, m);
  std::vector<Matrix<F>> transposed;
  transposed.reserve(m);
  for (const auto& b : basis) transposed.push_back(b.transpose());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      // trace(a b) = sum_xy a_xy b_yx
      auto t = field.zero();
      const auto& a = basis[i].flat();
      const auto& bt = transposed[j].flat();
      for (std::size_t k = 0; k < a.size(); ++k)
        if (!field.is_zero(a[k]) && !field.is_zero(bt[k])) t = field.add(t, field.mul(a[k], bt[k]));
      gram(i, j) = t;
      gram(j, i) = t;
    }
  Subspace<F> radical(field, n * n);
  for (const auto& c : nullspace(gram)) {
    Vec<F> v(n * n, field.zero());
    for (std::size_t k = 0; k < m; ++k) {
      if (field.is_zero(c[k])) continue;
      const auto& b = basis[k].flat();
      for (std::size_t e = 0; e < v.size(); ++e)
        if (!field.is_zero(b[e])) v[e] = field.add(v[e], field.mul(c[k], b[e]));
    }
    radical.insert(std::move(v));
  }
  return radical;
}

/// Matrices of the basis of a subspace of flattened n x n matrices.
template <class F>
std::vector<Matrix<F>> basis_matrices(const Subspace<F>& s, std::size_t n) {
  std::vector<Matrix<F>> out;
  out.reserve(s.dim());
  for (const auto& v : s.basis()) out.push_back(unflatten(s.field(), n, v));
  return out;
}

}  // namespace terwb
