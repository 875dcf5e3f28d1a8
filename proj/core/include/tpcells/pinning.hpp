#pragma once

#include <random>
#include <span>
#include <string>
#include <vector>

#include "tpcells/matrix.hpp"
#include "tpcells/subexpr.hpp"
#include "tpcells/weyl.hpp"

namespace tpcells {

// Pinning of SL_n: B+ upper triangular, B- lower triangular, node i of A_{n-1}
// acts on coordinates i, i+1 (1-based).

template <typename T>
Matrix<T> y_generator(std::size_t n, int i, const T& m) {
  if (i < 1 || i >= static_cast<int>(n)) throw InputError("node out of range");
  auto g = Matrix<T>::identity(n);
  g(i, i - 1) = m;
  return g;
}

template <typename T>
Matrix<T> x_generator(std::size_t n, int i, const T& m) {
  if (i < 1 || i >= static_cast<int>(n)) throw InputError("node out of range");
  auto g = Matrix<T>::identity(n);
  g(i - 1, i) = m;
  return g;
}

/// s_dot_i = x_i(-1) y_i(1) x_i(-1).
template <typename T>
Matrix<T> s_dot(std::size_t n, int i) {
  if (i < 1 || i >= static_cast<int>(n)) throw InputError("node out of range");
  auto g = Matrix<T>::identity(n);
  g(i - 1, i - 1) = T(0);
  g(i, i) = T(0);
  g(i - 1, i) = T(-1);
  g(i, i - 1) = T(1);
  return g;
}

enum class GeneratorKind { X, Y, SDot, Torus };

/// Numeric generator. `arg` is the single parameter for X/Y, ignored for
/// SDot, and the positive diagonal (product 1) for Torus.
RationalMatrix generator(GeneratorKind kind, std::size_t n, int i,
                         std::span<const Rational> arg = {});

/// Symbolic parameterisation g_1 ... g_m of a cell, with one variable per
/// position of the complement of v_+.
struct CellParameterization {
  PolyMatrix matrix;
  std::vector<int> var_positions;  // variable k is t_{var_positions[k]}
  std::vector<std::string> names() const;
};

/// Type A only.
CellParameterization cell_representative(const PositiveSubexpression& pse);
/// Same product evaluated at a numeric parameter vector (one per complement
/// position, in order).
RationalMatrix cell_sample(const PositiveSubexpression& pse,
                           std::span<const Rational> params);

/// n positive rationals p/q, 1 <= p <= 9, 1 <= q <= 5.
std::vector<Rational> random_positive(std::mt19937_64& rng, std::size_t n);

/// Every minor of every size is >= 0.
bool tnn_minor_check(const RationalMatrix& g);

/// A (partial) flag in Q^n: V_d is the span of the first d columns of
/// `basis`, for d in `dims`.
class Flag {
 public:
  Flag() = default;
  /// Full flag of the column spans of an invertible matrix.
  static Flag full(const RationalMatrix& g);
  /// Partial flag; basis must have at least max(dims) independent columns.
  static Flag partial(const RationalMatrix& basis, std::vector<int> dims);
  /// E_k = span(e_1..e_k).
  static Flag standard(std::size_t n);
  /// E-bar_k = span(e_n..e_{n-k+1}).
  static Flag opposite(std::size_t n);

  std::size_t n() const { return basis_.rows(); }
  const std::vector<int>& dims() const { return dims_; }
  const RationalMatrix& basis() const { return basis_; }
  bool is_full() const { return dims_.size() + 1 == n(); }
  /// Basis of V_d (d must be 0, n, or in dims).
  RationalMatrix subspace(int d) const;
  /// Forget all dimensions not in `keep`.
  Flag projected(const std::vector<int>& keep) const;

  /// Same subspaces.
  friend bool operator==(const Flag& a, const Flag& b);

 private:
  RationalMatrix basis_;
  std::vector<int> dims_;
};

/// dim(U cap V) for column spans.
std::size_t intersection_dim(const RationalMatrix& u, const RationalMatrix& v);
/// Basis (columns) of U cap V.
RationalMatrix intersection_basis(const RationalMatrix& u,
                                  const RationalMatrix& v);

/// The w with (f1, f2) in the diagonal orbit O(w), for full flags.
WeylElement relative_position(const Flag& f1, const Flag& f2,
                              const CartanPtr& cartan);

struct BruhatPair {
  WeylElement v;
  WeylElement w;
};
/// w: position relative to B+ (standard flag), v: position of the B- cell
/// B- v B+ containing the flag.
BruhatPair bruhat_pair(const Flag& f, const CartanPtr& cartan);

/// Full flag refining p whose relative position to `reference` is minimal.
Flag refine_toward(const Flag& p, const Flag& reference);

/// Cartan datum A_{n-1}.
CartanPtr type_a(std::size_t n);

}  // namespace tpcells
