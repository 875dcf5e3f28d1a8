#pragma once

#include <optional>
#include <vector>

#include "tpcells/pinning.hpp"

namespace tpcells {

/// Delta_{R,[k]}(g) for all k-subsets R (lexicographic).
template <typename T>
std::vector<T> flag_minors(const Matrix<T>& g, int k) {
  if (k < 1 || k >= static_cast<int>(g.rows())) {
    throw InputError("flag minor level out of range");
  }
  return std::move(left_justified_minors(g, k)[k]);
}

/// Shape of the Segre product of the levels 1..n-1.
struct SegreShape {
  int n = 0;
  std::vector<std::size_t> level_sizes;  // C(n, k), k = 1..n-1
  std::size_t size() const;
  /// Per-level subset indices of a flat coordinate index (level 1 most
  /// significant).
  std::vector<std::size_t> decode(std::size_t flat) const;
  std::size_t encode(const std::vector<std::size_t>& per_level) const;
  std::string label(std::size_t flat) const;  // e.g. "{1}|{1,3}"
};
SegreShape segre_shape(int n);

/// Products prod_k Delta_{R_k,[k]}(g) over tuples (R_1, ..., R_{n-1}).
template <typename T>
std::vector<T> segre_coordinates(const Matrix<T>& g) {
  const int n = static_cast<int>(g.rows());
  const auto minors = left_justified_minors(g, n - 1);
  std::vector<T> out{T(1)};
  for (int k = 1; k < n; ++k) {
    std::vector<T> next;
    next.reserve(out.size() * minors[k].size());
    for (const auto& a : out) {
      for (const auto& b : minors[k]) next.push_back(a * b);
    }
    out = std::move(next);
  }
  return out;
}

struct CertificateReport {
  WeylElement v;
  WeylElement w;
  Word word;
  bool pass = false;
  std::size_t n_coords = 0;
  std::vector<std::size_t> zero_coords;
  int sign = 1;  // global sign applied before the check
  std::vector<std::size_t> failing_coords;
  /// Sign-normalised coordinates [p_1, ..., p_N].
  std::vector<LaurentPoly> coords;
  std::vector<std::string> var_names;
};

/// Certify that the cell's Segre coordinates have nonnegative coefficients
/// after normalising by the sign of the first nonzero coordinate.
CertificateReport certify_coordinates(std::vector<LaurentPoly> coords);
CertificateReport certify_positive(const PositiveSubexpression& pse);

/// Reconstructs the full flag from a (numeric) Segre vector. Throws
/// CheckFailure when the vector is not a decomposable, nested flag point.
Flag recover_flag(const std::vector<Rational>& segre, int n);

/// Plucker vector -> basis of the k-subspace, or nullopt if the vector is
/// not decomposable.
std::optional<RationalMatrix> plucker_to_basis(const std::vector<Rational>& p,
                                               int n, int k);

}  // namespace tpcells
