#include "tpcells/matrix.hpp"

#include <sstream>

namespace tpcells {

namespace {

std::size_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / i;
  return r;
}

// In-place row echelon form; returns pivot columns.
std::vector<std::size_t> echelon(RationalMatrix& m, int* swaps = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && sgn(m(piv, col)) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
      if (swaps) ++*swaps;
    }
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (sgn(m(r, col)) == 0) continue;
      const Rational f = m(r, col) / m(row, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::size_t subset_index(int n, const std::vector<int>& subset) {
  const int k = static_cast<int>(subset.size());
  std::size_t idx = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int j = prev + 1; j < subset[i]; ++j) {
      idx += binomial(n - 1 - j, k - 1 - i);
    }
    prev = subset[i];
  }
  return idx;
}

std::size_t rank(RationalMatrix m) { return echelon(m).size(); }

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw InputError("determinant of non-square matrix");
  int swaps = 0;
  const auto pivots = echelon(m, &swaps);
  if (pivots.size() < m.rows()) return 0;
  Rational d = swaps % 2 ? -1 : 1;
  for (std::size_t i = 0; i < m.rows(); ++i) d *= m(i, i);
  return d;
}

RationalMatrix null_space(const RationalMatrix& m_in) {
  RationalMatrix m = m_in;
  const auto pivots = echelon(m);
  // back-substitute to reduced row echelon form
  for (std::size_t r = pivots.size(); r-- > 0;) {
    const std::size_t c = pivots[r];
    const Rational p = m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) /= p;
    for (std::size_t above = 0; above < r; ++above) {
      if (sgn(m(above, c)) == 0) continue;
      const Rational f = m(above, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(above, j) -= f * m(r, j);
    }
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RationalMatrix basis(m.cols(), free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    basis(free_cols[f], f) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      basis(pivots[r], f) = -m(r, free_cols[f]);
    }
  }
  return basis;
}

RationalMatrix inverse(const RationalMatrix& g) {
  const std::size_t n = g.rows();
  if (g.cols() != n) throw InputError("inverse of a non-square matrix");
  RationalMatrix m = hcat(g, RationalMatrix::identity(n));
  const auto pivots = echelon(m);
  if (pivots.size() < n || pivots.back() >= n) {
    throw InputError("matrix is singular");
  }
  for (std::size_t r = n; r-- > 0;) {
    const Rational p = m(r, r);
    for (std::size_t j = r; j < m.cols(); ++j) m(r, j) /= p;
    for (std::size_t above = 0; above < r; ++above) {
      if (sgn(m(above, r)) == 0) continue;
      const Rational f = m(above, r);
      for (std::size_t j = r; j < m.cols(); ++j) m(above, j) -= f * m(r, j);
    }
  }
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(i, n + j);
  return out;
}

RationalMatrix hcat(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw InputError("hcat: row count mismatch");
  RationalMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

std::string to_string(const RationalMatrix& m) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << (j ? ", " : "") << m(i, j).get_str();
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace tpcells
