#pragma once

#include <cstddef>
#include <map>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "tpcells/error.hpp"
#include "tpcells/laurent.hpp"

namespace tpcells {

/// Dense row-major matrix over an exact ring (Rational, LaurentPoly,
/// RationalFn). Indices are 0-based.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Columns [0, k).
  Matrix left_columns(std::size_t k) const {
    Matrix out(rows_, k);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < k; ++j) out(i, j) = (*this)(i, j);
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero_entry(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (is_zero_entry(b(k, j))) continue;
          out(i, j) += aik * b(k, j);
        }
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  template <typename F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

 private:
  static bool is_zero_entry(const T& x) {
    if constexpr (std::is_same_v<T, Rational>) {
      return sgn(x) == 0;
    } else {
      return x.is_zero();
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<LaurentPoly>;
using RationalFnMatrix = Matrix<RationalFn>;

/// k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);
/// Index of a sorted k-subset in the lexicographic list.
std::size_t subset_index(int n, const std::vector<int>& subset);

/// All left-justified minors Delta_{R,[k]} for k = 0..max_level, computed by
/// expanding along the last column; result[k] is indexed like subsets(n, k).
/// Division free, so it works over any of the rings.
template <typename T>
std::vector<std::vector<T>> left_justified_minors(const Matrix<T>& g,
                                                  int max_level) {
  const int n = static_cast<int>(g.rows());
  std::vector<std::vector<T>> out(max_level + 1);
  out[0] = {T(1)};
  for (int k = 1; k <= max_level; ++k) {
    const auto cur = subsets(n, k);
    out[k].assign(cur.size(), T(0));
    for (std::size_t idx = 0; idx < cur.size(); ++idx) {
      const auto& rows = cur[idx];
      T acc(0);
      for (int p = 0; p < k; ++p) {
        const T& entry = g(rows[p], k - 1);
        if constexpr (std::is_same_v<T, Rational>) {
          if (sgn(entry) == 0) continue;
        } else {
          if (entry.is_zero()) continue;
        }
        std::vector<int> rest;
        rest.reserve(k - 1);
        for (int q = 0; q < k; ++q)
          if (q != p) rest.push_back(rows[q]);
        const T& sub = out[k - 1][subset_index(n, rest)];
        // row rows[p] sits at position p, column k-1 is the last one
        if ((p + k - 1) % 2 == 0) {
          acc += entry * sub;
        } else {
          acc -= entry * sub;
        }
      }
      out[k][idx] = std::move(acc);
    }
  }
  return out;
}

// Exact rational linear algebra.
std::size_t rank(RationalMatrix m);
Rational determinant(RationalMatrix m);
/// Basis (as columns) of the null space {x : m x = 0}.
RationalMatrix null_space(const RationalMatrix& m);
RationalMatrix inverse(const RationalMatrix& g);
/// Horizontal concatenation.
RationalMatrix hcat(const RationalMatrix& a, const RationalMatrix& b);
std::string to_string(const RationalMatrix& m);

}  // namespace tpcells
