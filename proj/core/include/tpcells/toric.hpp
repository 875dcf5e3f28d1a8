#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tpcells/embed.hpp"
#include "tpcells/polytope.hpp"

namespace tpcells {

/// S = exponents of a coordinate list, with C[j][m] the coefficient of x^m
/// in p_j. Zero coordinates keep an all-zero row but contribute nothing to S.
struct ExponentSet {
  std::size_t arity = 0;
  std::vector<Exponent> points;
  std::vector<std::vector<Integer>> coeffs;
  std::vector<std::size_t> zero_rows;

  /// Every point of S occurs in some coordinate.
  bool columns_nonzero() const;
  LatticePolytope hull() const { return LatticePolytope::hull(points); }
};

ExponentSet build_exponent_set(std::span<const LaurentPoly> coords);

/// [g_1(x) : ... : g_N(x)] with g_j(x) = sum_m C[j][m] x_m.
std::vector<Rational> glue_eval(const ExponentSet& es,
                                std::span<const Rational> x);

/// x_m = t^m on the points of `support` (indices into S), 0 elsewhere.
std::vector<Rational> face_point(const ExponentSet& es,
                                 const std::vector<std::size_t>& support,
                                 std::span<const Rational> t);

struct BoundaryHit {
  Face face;
  bool identified = false;
  WeylElement v;
  WeylElement w;
  bool sandwiched = false;       // v <= v' <= w' <= w
  bool sample_independent = false;
  std::string error;             // recover_flag / identification failure
};

struct BoundaryScanReport {
  WeylElement v;
  WeylElement w;
  int polytope_dim = 0;
  std::vector<BoundaryHit> hits;
  /// Boundary cells of the closure, i.e. v <= v' <= w' <= w minus (v, w).
  std::size_t closure_cells = 0;
  std::size_t cells_hit = 0;
  bool pass = true;
};

/// Samples every proper face of the cell's polytope at t = (1, ..., 1) and
/// `extra_samples` random positive rational t, pushes the point through the
/// glueing map and identifies the boundary cell it lands in.
BoundaryScanReport boundary_scan(const PositiveSubexpression& pse,
                                 std::uint64_t seed = 1,
                                 int extra_samples = 3);

}  // namespace tpcells
