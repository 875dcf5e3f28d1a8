#pragma once

#include <vector>

#include "tpcells/embed.hpp"

namespace tpcells {

/// A diagram automorphism sigma of a simply-laced Cartan datum and the
/// folded datum on its orbits. Orbits are numbered by their smallest node.
struct FoldingData {
  CartanPtr dot;
  std::vector<int> sigma;           // sigma[i-1] = sigma(i)
  std::vector<NodeSet> orbits;      // orbit k (1-based) is orbits[k-1]
  CartanPtr folded;

  /// Validates sigma and builds the quotient matrix
  /// A_{k,l} = sum_{i in orbit k} a_{i,j} for any j in orbit l.
  static FoldingData make(CartanPtr dot, std::vector<int> sigma);
  int orbit_of(int node) const;
};

/// A_{2n-1} -> C_n, sigma(i) = 2n - i.
FoldingData fold_a_to_c(int n);
/// D_{n+1} -> B_n, sigma swaps n and n+1.
FoldingData fold_d_to_b(int n);

/// Each folded letter becomes its orbit, nodes ascending.
Word expand_word(const FoldingData& fd, const Word& folded_word);
/// The unfolded image of a folded element.
WeylElement expand_element(const FoldingData& fd, const WeylElement& v);
/// Positions expand orbit-wise.
PositiveSubexpression expand_subexpression(const FoldingData& fd,
                                           const PositiveSubexpression& pse);

/// Cell representative on the expanded word with t_r repeated over the
/// orbit of the r-th folded letter. The unfolded datum must be type A.
CellParameterization folded_cell_representative(
    const FoldingData& fd, const PositiveSubexpression& pse);
CertificateReport certify_folded(const FoldingData& fd,
                                 const PositiveSubexpression& pse);

/// tau(g) = J g^{-T} J^{-1}, J antidiagonal with alternating signs; on SL_n
/// it sends y_i, x_i, s_dot_i to y_{n-i}, x_{n-i}, s_dot_{n-i}.
RationalMatrix flip_automorphism(const RationalMatrix& g);
/// The automorphism above acts on generators as sigma does on nodes.
bool flip_matches_sigma(const FoldingData& fd);

}  // namespace tpcells
