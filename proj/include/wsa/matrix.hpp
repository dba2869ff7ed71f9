#pragma once

// Dense exact linear algebra over a field policy (see field.hpp). Vectors are
// row vectors; a matrix's row space is the object most algorithms care about.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wsa/field.hpp"

namespace wsa {

template <class F>
using Vec = std::vector<typename F::value_type>;

template <class F>
Vec<F> zero_vector(const F& field, std::size_t n) {
  return Vec<F>(n, field.zero());
}

template <class F>
bool is_zero_vector(const F& field, std::span<const typename F::value_type> v) {
  for (const auto& x : v)
    if (!field.is_zero(x)) return false;
  return true;
}

template <class F>
bool vectors_equal(const F& field, const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!field.equal(a[i], b[i])) return false;
  return true;
}

/// y += s * x
template <class F>
void axpy(const F& field, Vec<F>& y, const typename F::value_type& s, const Vec<F>& x) {
  if (field.is_zero(s)) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!field.is_zero(x[i])) y[i] = field.add(y[i], field.mul(s, x[i]));
}

template <class F>
Vec<F> scaled(const F& field, const typename F::value_type& s, Vec<F> x) {
  for (auto& v : x) v = field.mul(s, v);
  return x;
}

template <class F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix() = default;
  Matrix(const F& field, std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const F& field, const std::vector<Vec<F>>& rows, std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec<F> row(std::size_t r) const {
    return Vec<F>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  Matrix transpose(const F& field) const {
    Matrix t(field, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool equals(const F& field, const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!field.equal(data_[i], other.data_[i])) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

template <class F>
struct RrefResult {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form; zero rows are kept at the bottom so the shape
/// of the input is preserved.
template <class F>
RrefResult<F> rref(const F& field, Matrix<F> m) {
  RrefResult<F> out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && field.is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(lead_row, k));
    const auto inv = field.inv(m(lead_row, c));
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) = field.mul(inv, m(lead_row, k));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || field.is_zero(m(r, c))) continue;
      const auto factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        m(r, k) = field.sub(m(r, k), field.mul(factor, m(lead_row, k)));
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.rank = out.pivots.size();
  out.reduced = std::move(m);
  return out;
}

template <class F>
std::size_t rank(const F& field, const Matrix<F>& m) {
  return rref(field, m).rank;
}

/// A row space kept in reduced row echelon form under insertion.
template <class F>
class Subspace {
 public:
  using value_type = typename F::value_type;

  Subspace() = default;
  Subspace(const F& field, std::size_t ambient) : field_(field), ambient_(ambient) {}

  static Subspace span(const F& field, std::size_t ambient, const std::vector<Vec<F>>& vectors) {
    Subspace s(field, ambient);
    for (const auto& v : vectors) s.insert(v);
    return s;
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec<F>>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Remainder of v after elimination against the current basis.
  Vec<F> reduce(Vec<F> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto c = v[pivots_[i]];
      if (!field_.is_zero(c)) axpy(field_, v, field_.neg(c), rows_[i]);
    }
    return v;
  }

  bool contains(const Vec<F>& v) const { return is_zero_vector<F>(field_, reduce(v)); }

  /// Returns true if the dimension grew.
  bool insert(const Vec<F>& v) {
    Vec<F> r = reduce(v);
    std::size_t p = 0;
    while (p < r.size() && field_.is_zero(r[p])) ++p;
    if (p == r.size()) return false;
    const auto lead_inv = field_.inv(r[p]);
    for (auto& x : r) x = field_.mul(lead_inv, x);
    for (auto& row : rows_) {
      const auto c = row[p];
      if (!field_.is_zero(c)) axpy(field_, row, field_.neg(c), r);
    }
    // keep rows sorted by pivot column
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    return true;
  }

  /// Coordinates of v w.r.t. basis(), or nothing if v is outside the span.
  std::optional<Vec<F>> coordinates(const Vec<F>& v) const {
    if (!contains(v)) return std::nullopt;
    Vec<F> coords(rows_.size(), field_.zero());
    for (std::size_t i = 0; i < rows_.size(); ++i) coords[i] = v[pivots_[i]];
    return coords;
  }

  bool is_subspace_of(const Subspace& other) const {
    for (const auto& r : rows_)
      if (!other.contains(r)) return false;
    return true;
  }

  bool equals(const Subspace& other) const {
    return dim() == other.dim() && is_subspace_of(other);
  }

 private:
  F field_{};
  std::size_t ambient_ = 0;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Coefficients expressing v in the row space of `span`, if any.
template <class F>
std::optional<Vec<F>> solve_membership(const F& field, const Matrix<F>& span, const Vec<F>& v) {
  // Row-reduce [span | I] so each reduced row records the combination that produced it.
  const std::size_t n = span.cols();
  const std::size_t k = span.rows();
  Matrix<F> aug(field, k, n + k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = span(r, c);
    aug(r, n + r) = field.one();
  }
  auto red = rref(field, aug);
  Vec<F> rest = v;
  Vec<F> coeffs(k, field.zero());
  for (std::size_t i = 0; i < red.rank; ++i) {
    const std::size_t p = red.pivots[i];
    if (p >= n) break;
    const auto c = rest[p];
    if (field.is_zero(c)) continue;
    for (std::size_t col = 0; col < n; ++col)
      rest[col] = field.sub(rest[col], field.mul(c, red.reduced(i, col)));
    for (std::size_t j = 0; j < k; ++j)
      coeffs[j] = field.add(coeffs[j], field.mul(c, red.reduced(i, n + j)));
  }
  if (!is_zero_vector<F>(field, rest)) return std::nullopt;
  return coeffs;
}

/// Basis of { lambda : sum_i lambda_i images[i] = 0 }.
template <class F>
std::vector<Vec<F>> left_kernel(const F& field, const std::vector<Vec<F>>& images, std::size_t width) {
  const std::size_t k = images.size();
  Matrix<F> aug(field, k, width + k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < width; ++c) aug(r, c) = images[r][c];
    aug(r, width + r) = field.one();
  }
  auto red = rref(field, aug);
  std::vector<Vec<F>> kernel;
  for (std::size_t r = 0; r < k; ++r) {
    bool image_zero = true;
    for (std::size_t c = 0; c < width && image_zero; ++c) image_zero = field.is_zero(red.reduced(r, c));
    if (!image_zero) continue;
    Vec<F> combo(k);
    for (std::size_t j = 0; j < k; ++j) combo[j] = red.reduced(r, width + j);
    if (!is_zero_vector<F>(field, combo)) kernel.push_back(std::move(combo));
  }
  return kernel;
}

}  // namespace wsa
