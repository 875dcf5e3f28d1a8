#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tpcells {

using Word = std::vector<int>;      // node indices, 1-based
using NodeSet = std::vector<int>;   // sorted, 1-based

/// Cartan datum of a finite root system.
///
/// Convention: a_ij = <alpha_i^vee, alpha_j>, so column j of the matrix is
/// the simple root alpha_j written in fundamental-weight coordinates.
class CartanData {
 public:
  /// Standard matrix for a named type (Bourbaki numbering).
  static std::shared_ptr<const CartanData> make(char type, int rank);
  /// Parses "A3", "C2", ...
  static std::shared_ptr<const CartanData> parse(const std::string& label);
  /// A matrix that is not necessarily of a recognised type (e.g. a folding
  /// quotient). The label is informational.
  static std::shared_ptr<const CartanData> from_matrix(
      std::vector<std::vector<int>> matrix, char type = '?');

  char type() const { return type_; }
  int rank() const { return rank_; }
  int entry(int i, int j) const { return matrix_[i - 1][j - 1]; }
  const std::vector<std::vector<int>>& matrix() const { return matrix_; }
  NodeSet nodes() const;
  std::string label() const;
  bool simply_laced() const;

  bool operator==(const CartanData& other) const {
    return matrix_ == other.matrix_;
  }

 private:
  CartanData(char type, int rank, std::vector<std::vector<int>> matrix);

  char type_;
  int rank_;
  std::vector<std::vector<int>> matrix_;
};

using CartanPtr = std::shared_ptr<const CartanData>;

/// An element of the Weyl group W(cartan).
///
/// The element is stored through its image w(rho) of the regular weight rho
/// in fundamental-weight coordinates; this is a faithful key. The normal
/// form is the lexicographically least reduced word.
class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement identity(CartanPtr cartan);
  static WeylElement simple(CartanPtr cartan, int i);
  /// Product s_{i_1} ... s_{i_m}; the word need not be reduced.
  static WeylElement from_word(CartanPtr cartan, const Word& word);
  static WeylElement longest(CartanPtr cartan);
  /// Longest element of the parabolic subgroup W_J.
  static WeylElement longest(CartanPtr cartan, const NodeSet& J);

  const CartanPtr& cartan() const { return cartan_; }
  int length() const { return static_cast<int>(word_.size()); }
  /// Lexicographically least reduced word.
  const Word& word() const { return word_; }
  const std::vector<std::int64_t>& key() const { return key_; }
  bool is_identity() const { return word_.empty(); }

  /// s_i w < w
  bool has_left_descent(int i) const { return key_[i - 1] < 0; }
  /// w s_i < w
  bool has_right_descent(int i) const;

  WeylElement inverse() const;
  WeylElement left_mul(int i) const;   // s_i w
  WeylElement right_mul(int i) const;  // w s_i

  std::string to_string() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.key_ == b.key_;
  }
  friend bool operator<(const WeylElement& a, const WeylElement& b);

 private:
  WeylElement(CartanPtr cartan, std::vector<std::int64_t> key);

  CartanPtr cartan_;
  std::vector<std::int64_t> key_;
  Word word_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const;
};

WeylElement multiply(const WeylElement& a, const WeylElement& b);
inline WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  return multiply(a, b);
}

/// v <= w in Bruhat order.
bool bruhat_leq(const WeylElement& v, const WeylElement& w);

/// True iff the word is a reduced expression.
bool is_reduced(const CartanPtr& cartan, const Word& word);

/// w = min_rep * u with min_rep in W^J and u in W_J.
struct ParabolicDecomposition {
  WeylElement min_rep;
  WeylElement u;
};
ParabolicDecomposition parabolic_decompose(const WeylElement& w,
                                           const NodeSet& J);

/// Which set enumerate() produces.
enum class Quotient { Full, Parabolic, MinReps, MaxReps };

inline constexpr std::size_t kDefaultEnumerationLimit = 40320;  // 8!

/// Complete duplicate-free list of W, W_J, W^J or W^J_max, sorted by
/// (length, word).
std::vector<WeylElement> enumerate(const CartanPtr& cartan,
                                   Quotient which = Quotient::Full,
                                   const NodeSet& J = {},
                                   std::size_t limit = kDefaultEnumerationLimit);

/// All reduced words of w, lexicographically sorted.
std::vector<Word> reduced_words(const WeylElement& w,
                                std::size_t limit = 100000);

/// Type A only: the permutation of {1..n} (one-line notation, 1-based)
/// represented by w, with s_i the transposition (i i+1) and products
/// composed as functions.
std::vector<int> to_permutation(const WeylElement& w);
WeylElement from_permutation(const CartanPtr& cartan,
                             const std::vector<int>& perm);

NodeSet parse_node_set(const std::string& text);
Word parse_word(const std::string& text);
std::string format_word(const Word& word);

}  // namespace tpcells
