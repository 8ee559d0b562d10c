#pragma once

#include "terwb/field.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace terwb {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class F>
using Vec = std::vector<typename F::Element>;

/// Dense row-major matrix over an exact field. Entries are kept canonical by
/// construction since every write goes through the field operations.
template <class F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(F field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

  /// Entries must already be canonical field elements.
  static Matrix from_flat(F field, std::size_t rows, std::size_t cols, std::vector<Element> data) {
    if (data.size() != rows * cols) throw DimensionError("flat data does not match matrix shape");
    Matrix m(std::move(field), 0, 0);
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(data);
    return m;
  }

  const F& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Row-major flattening; the one global convention for subspace work.
  const std::vector<Element>& flat() const noexcept { return data_; }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& e : data_)
      if (!field_.is_zero(e)) return false;
    return true;
  }

  std::size_t nonzeros() const {
    std::size_t count = 0;
    for (const auto& e : data_)
      if (!field_.is_zero(e)) ++count;
    return count;
  }

  Element trace() const {
    Element t = field_.zero();
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = field_.add(t, (*this)(i, i));
    return t;
  }

  Matrix scaled(const Element& s) const {
    Matrix out(*this);
    for (auto& e : out.data_) e = field_.mul(e, s);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix out(a);
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] = a.field_.add(a.data_[k], b.data_[k]);
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix out(a);
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] = a.field_.sub(a.data_[k], b.data_[k]);
    return out;
  }

  /// Skips zero entries of the left factor; the matrices here are mostly 0/1 and sparse.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    const F& f = a.field_;
    Matrix out(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      Element* dst = &out.data_[i * b.cols_];
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Element& aik = a.data_[i * a.cols_ + k];
        if (f.is_zero(aik)) continue;
        const Element* src = &b.data_[k * b.cols_];
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (f.is_zero(src[j])) continue;
          dst[j] = f.add(dst[j], f.mul(aik, src[j]));
        }
      }
    }
    return out;
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix shape mismatch");
  }

  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

template <class F>
struct RrefResult {
  Matrix<F> form;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form by Gauss-Jordan elimination.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && f.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    auto inv = f.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || f.is_zero(m(r, col))) continue;
      auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!f.is_zero(m(row, c))) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return RrefResult<F>{std::move(m), row, std::move(pivots)};
}

/// Basis of {v : m v = 0}.
template <class F>
std::vector<Vec<F>> nullspace(const Matrix<F>& m) {
  const F& f = m.field();
  auto [form, rank, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < rank; ++r) v[pivots[r]] = f.neg(form(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some x with a x = b, or nullopt if the system is inconsistent.
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& a, const Vec<F>& b) {
  if (b.size() != a.rows()) throw DimensionError("solve: right-hand side length mismatch");
  const F& f = a.field();
  Matrix<F> aug(f, a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto [form, rank, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec<F> x(a.cols(), f.zero());
  for (std::size_t r = 0; r < rank; ++r) x[pivots[r]] = form(r, a.cols());
  return x;
}

template <class F>
Matrix<F> unflatten(const F& field, std::size_t n, const Vec<F>& v) {
  if (v.size() != n * n) throw DimensionError("vector is not a flattened n x n matrix");
  return Matrix<F>::from_flat(field, n, n, v);
}

}  // namespace terwb
