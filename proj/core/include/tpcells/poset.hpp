#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tpcells/pinning.hpp"

namespace tpcells {

/// Finite poset with a rank (cell dimension) per element.
class CellPoset {
 public:
  CellPoset() = default;
  /// leq[a][b] is a <= b; must be reflexive, antisymmetric and transitive.
  CellPoset(std::vector<int> ranks, std::vector<std::vector<bool>> leq);

  std::size_t size() const { return rank_.size(); }
  int rank(std::size_t a) const { return rank_[a]; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  /// Pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  /// Elements below c (including c).
  std::vector<std::size_t> down_set(std::size_t c) const;
  /// Number of elements of each rank 0..max.
  std::vector<std::size_t> census() const;
  /// Same poset without the relation a <= b (negative controls).
  CellPoset without_relation(std::size_t a, std::size_t b) const;

 private:
  std::vector<int> rank_;
  std::vector<std::vector<bool>> leq_;
};

struct FullFlagCell {
  WeylElement v;
  WeylElement w;
  int dim = 0;
};

struct FullFlagPoset {
  std::vector<FullFlagCell> cells;
  CellPoset poset;
};

/// All pairs v <= w, ordered by (dim, w, v); (v', w') <= (v, w) iff
/// v <= v' <= w' <= w.
FullFlagPoset enumerate_full_flag_cells(const CartanPtr& cartan,
                                        std::size_t limit = 100000);

/// Sum over cells c' <= c of (-1)^dim c'.
long euler_char_closure(const CellPoset& p, std::size_t c);

struct EulerianReport {
  bool eulerian = true;
  std::size_t intervals = 0;
  /// First failing interval in the poset with a minimum adjoined; index
  /// p.size() stands for the adjoined minimum.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
  long mu = 0;
  long expected = 0;
};

/// Checks mu(a, b) = (-1)^(rk b - rk a) on every interval of the poset with
/// a minimum of rank -1 adjoined.
EulerianReport eulerian_check(const CellPoset& p);

struct ParabolicCell {
  WeylElement x;  // in W^J_max
  WeylElement u;  // in W_J
  WeylElement w;  // in W^J
  int dim = 0;    // l(w) + l(u) - l(x)
  friend bool operator==(const ParabolicCell& a, const ParabolicCell& b) {
    return a.x == b.x && a.u == b.u && a.w == b.w;
  }
};

/// All (x, u, w) with x <= wu, sorted by (dim, w, u, x).
std::vector<ParabolicCell> enumerate_QJ(const CartanPtr& cartan,
                                        const NodeSet& J);
bool in_QJ(const ParabolicCell& c, const NodeSet& J);

/// Dimensions {1..n-1} minus J (type A: node k is the k-dimensional
/// subspace).
std::vector<int> partial_dims(const CartanPtr& cartan, const NodeSet& J);

/// Index of the stratum containing a partial flag with dimensions I - J.
/// Throws CheckFailure when the triple falls outside Q^J.
ParabolicCell identify_partial_cell(const Flag& p, const CartanPtr& cartan,
                                    const NodeSet& J);

struct ParabolicPoset {
  std::vector<ParabolicCell> cells;
  CellPoset poset;
  bool sample_independent = true;
  /// Every (x, u, w) is identified back from samples of R_{x, wu}.
  bool round_trip = true;
  /// Boundary triples all have smaller dimension.
  bool dimensions_drop = true;
  std::vector<std::string> findings;
};

/// Closure order on Q^J computed by projecting samples of every full-flag
/// cell (v', w') with x <= v' <= w' <= wu and identifying the result.
ParabolicPoset project_closures(const CartanPtr& cartan, const NodeSet& J,
                                std::uint64_t seed = 1, int samples = 5);

}  // namespace tpcells
