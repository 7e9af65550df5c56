#pragma once

// Dense exact matrices and an incremental reduced-row-echelon span used for
// rank checks, span membership and coordinates.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "e7sym/rational.hpp"

namespace e7sym {

template <typename Field>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Field(1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  Field& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Field& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  /// Row-major flattening.
  [[nodiscard]] const std::vector<Field>& data() const { return a_; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : a_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  [[nodiscard]] Field trace() const {
    require_square("trace");
    Field t{};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    require_shape(o, "+");
    for (std::size_t k = 0; k < a_.size(); ++k) {
      if (!o.a_[k].is_zero()) a_[k] += o.a_[k];
    }
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_shape(o, "-");
    for (std::size_t k = 0; k < a_.size(); ++k) {
      if (!o.a_[k].is_zero()) a_[k] -= o.a_[k];
    }
    return *this;
  }
  Matrix& operator*=(const Field& s) {
    for (auto& x : a_) {
      if (!x.is_zero()) x *= s;
    }
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Field& s) { return a *= s; }
  friend Matrix operator*(const Field& s, Matrix a) { return a *= s; }
  Matrix operator-() const { return *this * Field(-1); }

  /// Product that skips zero entries on both sides; the operators built here
  /// are sparse, which makes this the dominant cost saving in closures.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("Matrix *: shape mismatch " + a.shape() + " x " + b.shape());
    }
    std::vector<std::vector<std::size_t>> b_nz(b.rows_);
    for (std::size_t k = 0; k < b.rows_; ++k) {
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) b_nz[k].push_back(j);
      }
    }
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Field& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j : b_nz[k]) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  [[nodiscard]] std::vector<Field> apply(const std::vector<Field>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: length mismatch");
    std::vector<Field> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
      }
    }
    return out;
  }

  [[nodiscard]] std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  void require_square(const char* what) const {
    if (!is_square()) throw std::invalid_argument(std::string(what) + ": matrix not square");
  }
  void require_shape(const Matrix& o, const char* what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw std::invalid_argument(std::string("Matrix ") + what + ": shape mismatch " + shape() +
                                  " vs " + o.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Field> a_;
};

using QMatrix = Matrix<Rational>;

/// AB - BA.
template <typename Field>
Matrix<Field> matrix_commutator(const Matrix<Field>& a, const Matrix<Field>& b) {
  if (!a.is_square() || a.rows() != b.rows() || !b.is_square()) {
    throw std::invalid_argument("matrix_commutator: need square matrices of equal size, got " +
                                a.shape() + " and " + b.shape());
  }
  return a * b - b * a;
}

/// Incrementally maintained reduced row echelon basis of a subspace of
/// Field^n. Every stored row has a leading 1 at its pivot and zeros at all
/// other pivots, so membership of v is decided by v - sum_p v[p] row_p.
/// Each row also records its expression in terms of the vectors that were
/// accepted by insert(), which yields coordinates in that original basis.
template <typename Field>
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t ambient_dim) : n_(ambient_dim), pivot_row_(ambient_dim, -1) {}

  [[nodiscard]] std::size_t ambient_dim() const { return n_; }
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }

  /// Residual of v after projecting out the span along pivot coordinates.
  [[nodiscard]] std::vector<Field> residual(const std::vector<Field>& v) const {
    check_len(v);
    std::vector<Field> r = v;
    for (std::size_t p : pivots_) {
      const Field coef = v[p];
      if (coef.is_zero()) continue;
      for (const auto& [j, x] : rows_[pivot_row_[p]].entries) r[j] -= coef * x;
    }
    return r;
  }

  [[nodiscard]] bool contains(const std::vector<Field>& v) const {
    for (const auto& x : residual(v)) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  /// Adds v if it is independent; returns whether the rank grew.
  bool insert(const std::vector<Field>& v) {
    std::vector<Field> r = residual(v);
    std::size_t piv = n_;
    for (std::size_t j = 0; j < n_; ++j) {
      if (!r[j].is_zero()) {
        piv = j;
        break;
      }
    }
    if (piv == n_) return false;

    // combination of accepted inputs equal to r: e_new - sum_p v[p] combo_p
    const std::size_t new_index = accepted_;
    std::vector<Field> combo(new_index + 1);
    combo[new_index] = Field(1);
    for (std::size_t p : pivots_) {
      const Field coef = v[p];
      if (coef.is_zero()) continue;
      const auto& c = rows_[pivot_row_[p]].combo;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (!c[k].is_zero()) combo[k] -= coef * c[k];
      }
    }

    const Field inv = Field(1) / r[piv];
    Row row;
    for (std::size_t j = 0; j < n_; ++j) {
      if (!r[j].is_zero()) row.entries.emplace_back(j, r[j] * inv);
    }
    for (auto& c : combo) {
      if (!c.is_zero()) c *= inv;
    }
    row.combo = std::move(combo);

    // clear the new pivot column from the existing rows
    for (auto& other : rows_) {
      Field f{};
      for (const auto& [j, x] : other.entries) {
        if (j == piv) {
          f = x;
          break;
        }
      }
      if (f.is_zero()) continue;
      other.entries = axpy_sparse(other.entries, row.entries, f);
      other.combo.resize(new_index + 1);
      for (std::size_t k = 0; k < row.combo.size(); ++k) {
        if (!row.combo[k].is_zero()) other.combo[k] -= f * row.combo[k];
      }
    }

    pivot_row_[piv] = static_cast<long>(rows_.size());
    pivots_.push_back(piv);
    rows_.push_back(std::move(row));
    ++accepted_;
    return true;
  }

  /// Coordinates of v with respect to the accepted vectors, in insertion
  /// order, or nullopt when v is outside the span.
  [[nodiscard]] std::optional<std::vector<Field>> coordinates(const std::vector<Field>& v) const {
    if (!contains(v)) return std::nullopt;
    std::vector<Field> out(accepted_);
    for (std::size_t p : pivots_) {
      const Field coef = v[p];
      if (coef.is_zero()) continue;
      const auto& c = rows_[pivot_row_[p]].combo;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (!c[k].is_zero()) out[k] += coef * c[k];
      }
    }
    return out;
  }

 private:
  using SparseRow = std::vector<std::pair<std::size_t, Field>>;
  struct Row {
    SparseRow entries;
    std::vector<Field> combo;
  };

  // a - f * b, both sorted by column
  static SparseRow axpy_sparse(const SparseRow& a, const SparseRow& b, const Field& f) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, k = 0;
    while (i < a.size() || k < b.size()) {
      if (k == b.size() || (i < a.size() && a[i].first < b[k].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[k].first < a[i].first) {
        out.emplace_back(b[k].first, -(f * b[k].second));
        ++k;
      } else {
        Field x = a[i].second - f * b[k].second;
        if (!x.is_zero()) out.emplace_back(a[i].first, std::move(x));
        ++i;
        ++k;
      }
    }
    return out;
  }

  void check_len(const std::vector<Field>& v) const {
    if (v.size() != n_) {
      throw std::invalid_argument("SpanBasis: vector of length " + std::to_string(v.size()) +
                                  " in ambient dimension " + std::to_string(n_));
    }
  }

  std::size_t n_;
  std::size_t accepted_ = 0;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_;
};

/// Rank of a list of vectors of equal length.
template <typename Field>
std::size_t rank_of(const std::vector<std::vector<Field>>& vectors) {
  if (vectors.empty()) return 0;
  SpanBasis<Field> span(vectors.front().size());
  for (const auto& v : vectors) span.insert(v);
  return span.rank();
}

/// Result of closing a set of square matrices under the commutator.
template <typename Field>
struct Closure {
  /// Independent generators in input order, then every commutator that
  /// enlarged the span, in discovery order.
  std::vector<Matrix<Field>> basis;
  std::size_t generator_count = 0;  // how many of `basis` came from the input
  [[nodiscard]] std::size_t dimension() const { return basis.size(); }
};

/// Repeatedly adjoins commutators [b_j, b_i] (j < i, i ascending) until the
/// span stops growing. Deterministic: the output depends only on the input
/// order.
template <typename Field>
Closure<Field> close_under_bracket(const std::vector<Matrix<Field>>& gens) {
  Closure<Field> out;
  if (gens.empty()) return out;
  const std::size_t n = gens.front().rows();
  for (const auto& g : gens) {
    if (!g.is_square() || g.rows() != n) {
      throw std::invalid_argument("close_under_bracket: expected square " + std::to_string(n) +
                                  "x" + std::to_string(n) + " matrices, got " + g.shape());
    }
  }
  SpanBasis<Field> span(n * n);
  for (const auto& g : gens) {
    if (span.insert(g.data())) out.basis.push_back(g);
  }
  out.generator_count = out.basis.size();
  for (std::size_t i = 1; i < out.basis.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Matrix<Field> c = matrix_commutator(out.basis[j], out.basis[i]);
      if (c.is_zero()) continue;
      if (span.insert(c.data())) out.basis.push_back(std::move(c));
    }
  }
  return out;
}

/// Solves a x = b exactly for square or tall a. Returns nullopt when the
/// system is inconsistent; free variables (if any) are set to zero.
template <typename Field>
std::optional<std::vector<Field>> solve(const Matrix<Field>& a, const std::vector<Field>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: length mismatch");
  const std::size_t m = a.rows(), n = a.cols();
  Matrix<Field> aug(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t sel = m;
    for (std::size_t i = row; i < m; ++i) {
      if (!aug(i, col).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == m) continue;
    for (std::size_t j = 0; j <= n; ++j) std::swap(aug(row, j), aug(sel, j));
    const Field inv = Field(1) / aug(row, col);
    for (std::size_t j = col; j <= n; ++j) aug(row, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || aug(i, col).is_zero()) continue;
      const Field f = aug(i, col);
      for (std::size_t j = col; j <= n; ++j) {
        if (!aug(row, j).is_zero()) aug(i, j) -= f * aug(row, j);
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i) {
    if (!aug(i, n).is_zero()) return std::nullopt;
  }
  std::vector<Field> x(n);
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = aug(r, n);
  return x;
}

}  // namespace e7sym
