#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tder/field.hpp"

namespace tder {

template <ExactField F>
using Vector = std::vector<typename F::Scalar>;

template <ExactField F>
class Matrix {
 public:
  using Scalar = typename F::Scalar;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(F field, const std::vector<Vector<F>>& rows, std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DomainError("row length mismatch");
      std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector<F> row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }

  void append_row(std::span<const Scalar> v) {
    if (v.size() != cols_) throw DomainError("row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return tder::is_zero(x); });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

template <ExactField F>
Matrix<F> transpose(const Matrix<F>& m) {
  Matrix<F> t(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

template <ExactField F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product dimension mismatch");
  Matrix<F> out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

// M * v
template <ExactField F>
Vector<F> apply(const Matrix<F>& m, const Vector<F>& v) {
  if (v.size() != m.cols()) throw DomainError("matrix-vector dimension mismatch");
  Vector<F> out(m.rows(), m.field().zero());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!is_zero(v[c])) out[r] += m(r, c) * v[c];
  return out;
}

// v * M
template <ExactField F>
Vector<F> left_apply(const Vector<F>& v, const Matrix<F>& m) {
  if (v.size() != m.rows()) throw DomainError("vector-matrix dimension mismatch");
  Vector<F> out(m.cols(), m.field().zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (is_zero(v[r])) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] += v[r] * m(r, c);
  }
  return out;
}

template <ExactField F>
bool is_zero_vector(const Vector<F>& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& x) { return is_zero(x); });
}

// Reduced row echelon form built one row at a time. Rows stay fully reduced,
// so reducing a new vector costs one axpy per pivot it touches.
template <ExactField F>
class RowEchelon {
 public:
  using Scalar = typename F::Scalar;

  RowEchelon(F field, std::size_t cols) : field_(field), cols_(cols) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const F& field() const { return field_; }

  Vector<F> reduce(Vector<F> v) const {
    if (v.size() != cols_) throw DomainError("vector length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t p = pivots_[i];
      if (is_zero(v[p])) continue;
      const Scalar f = v[p];
      axpy(v, f, rows_[i]);
    }
    return v;
  }

  bool contains(const Vector<F>& v) const { return is_zero_vector<F>(reduce(v)); }

  // Returns true when v was independent of the rows inserted so far.
  bool insert(Vector<F> v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < cols_ && is_zero(v[p])) ++p;
    if (p == cols_) return false;
    const Scalar inv = inverse(v[p]);
    for (std::size_t j = p; j < cols_; ++j)
      if (!is_zero(v[j])) v[j] *= inv;
    for (auto& r : rows_) {
      if (is_zero(r[p])) continue;
      const Scalar f = r[p];
      axpy(r, f, v);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  // Rows sorted by pivot column.
  std::vector<Vector<F>> rows() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots_[a] < pivots_[b]; });
    std::vector<Vector<F>> out;
    for (auto i : order) out.push_back(rows_[i]);
    return out;
  }
  std::vector<std::size_t> pivot_columns() const {
    auto p = pivots_;
    std::sort(p.begin(), p.end());
    return p;
  }

 private:
  // v -= f * r
  static void axpy(Vector<F>& v, const Scalar& f, const Vector<F>& r) {
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!is_zero(r[j])) v[j] -= f * r[j];
  }

  F field_;
  std::size_t cols_;
  std::vector<Vector<F>> rows_;
  std::vector<std::size_t> pivots_;
};

template <ExactField F>
RowEchelon<F> echelon(const Matrix<F>& m) {
  RowEchelon<F> e(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row_vector(r));
  return e;
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
  return echelon(m).rank();
}

template <ExactField F>
std::size_t rank_of(const F& field, std::size_t cols, const std::vector<Vector<F>>& vectors) {
  RowEchelon<F> e(field, cols);
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

// Nullspace basis: one vector per free column (ascending), with a 1 in that
// column and zeros in every other free column.
template <ExactField F>
std::vector<Vector<F>> kernel_basis(const Matrix<F>& m) {
  const auto e = echelon(m);
  const auto rows = e.rows();
  const auto piv = e.pivot_columns();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;

  std::vector<Vector<F>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector<F> v(m.cols(), m.field().zero());
    v[f] = m.field().one();
    for (std::size_t i = 0; i < rows.size(); ++i) v[piv[i]] = -rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some x with M x = rhs, or nullopt when inconsistent.
template <ExactField F>
std::optional<Vector<F>> solve(const Matrix<F>& m, const Vector<F>& rhs) {
  if (rhs.size() != m.rows())
    throw DomainError("solve: rhs has length " + std::to_string(rhs.size()) + ", matrix has " +
                      std::to_string(m.rows()) + " rows");
  const std::size_t n = m.cols();
  RowEchelon<F> e(m.field(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector<F> v = m.row_vector(r);
    v.push_back(rhs[r]);
    e.insert(std::move(v));
  }
  const auto rows = e.rows();
  const auto piv = e.pivot_columns();
  Vector<F> x(n, m.field().zero());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (piv[i] == n) return std::nullopt;
    x[piv[i]] = rows[i][n];
  }
  return x;
}

}  // namespace tder
