#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tpcells/weyl.hpp"

namespace tpcells {

struct SuiteResult {
  std::string name;
  bool applicable = true;
  bool pass = true;
  std::string detail;
  double seconds = 0;
};

/// Closures of every full-flag cell, and of every Q^J cell for each J in
/// `parabolics` (type A), have Euler characteristic 1.
SuiteResult suite_euler(const CartanPtr& cartan,
                        const std::vector<NodeSet>& parabolics);
/// Full-flag cell poset with a minimum adjoined is Eulerian.
SuiteResult suite_eulerian(const CartanPtr& cartan);
/// Positivity certificate of every cell (default words); type C cells are
/// realised by folding A_{2n-1}.
SuiteResult suite_certify(const CartanPtr& cartan);
/// Generator identities in SL_3, then coordinate transport along word
/// paths. random_pairs = 0: every cell of w0 and every reduced word of w0;
/// otherwise that many random (v, w, word, word) instances.
SuiteResult suite_braid(const CartanPtr& cartan, std::uint64_t seed,
                        std::size_t random_pairs);
/// Sampled cell points lie in their cell; sampled y-products are totally
/// nonnegative.
SuiteResult suite_membership(const CartanPtr& cartan, std::uint64_t seed,
                             int samples);
/// dim P = l(w) - l(v) and every monomial of S occurs.
SuiteResult suite_toric(const CartanPtr& cartan);
/// Boundary scan of every cell.
SuiteResult suite_glue(const CartanPtr& cartan, std::uint64_t seed);
/// Folded positive subexpressions agree with direct computation (type B
/// via D_{n+1}, type C via A_{2n-1}).
SuiteResult suite_fold(const CartanPtr& cartan);
/// Censuses of the full-flag and Q^J posets against a permutation-model
/// oracle (type A).
SuiteResult suite_census(const CartanPtr& cartan, const NodeSet& J);
/// Samples of R_{x,wu} project to the stratum (x, u, w).
SuiteResult suite_partial(const CartanPtr& cartan, const NodeSet& J,
                          std::uint64_t seed, int samples);

const std::vector<std::string>& suite_names();
/// Runs one named suite (or "all") with default settings.
std::vector<SuiteResult> run_suites(const std::string& name,
                                    const CartanPtr& cartan,
                                    const std::vector<NodeSet>& parabolics,
                                    std::uint64_t seed);

/// Independent census oracle on permutations: number of pairs v <= w per
/// dimension (Bruhat order by the rank-matrix criterion).
std::vector<std::size_t> oracle_full_census(int n);
/// Number of (x, u, w) in Q^J per dimension, on permutations.
std::vector<std::size_t> oracle_qj_census(int n, const NodeSet& J);

}  // namespace tpcells
