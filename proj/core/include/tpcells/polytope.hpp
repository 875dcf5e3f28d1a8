#pragma once

#include <cstddef>
#include <vector>

#include "tpcells/laurent.hpp"

namespace tpcells {

/// Facet inequality normal . x <= offset.
struct Facet {
  std::vector<Integer> normal;
  Integer offset;
};

/// A face of the polytope, given by the indices of the points of S on it.
struct Face {
  std::vector<std::size_t> points;
  int dim = 0;
};

/// Convex hull of a finite point set S in Z^n, computed exactly.
///
/// Facets are computed by the double description method in the affine hull
/// of S; when S is not full-dimensional the facet normals are supported on a
/// set of pivot coordinates and `equations` describes the affine hull.
class LatticePolytope {
 public:
  static LatticePolytope hull(std::vector<Exponent> points);

  std::size_t ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  const std::vector<Exponent>& points() const { return points_; }
  /// Indices into points().
  const std::vector<std::size_t>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  /// Affine hull as equations normal . x = offset.
  const std::vector<Facet>& equations() const { return equations_; }
  /// Points of S on each facet.
  const std::vector<std::vector<std::size_t>>& facet_points() const {
    return facet_points_;
  }

  bool contains(const Exponent& x) const;

  /// Every nonempty face, including the polytope itself, sorted by
  /// (dim, points).
  std::vector<Face> faces() const;
  /// Affine dimension of a set of points of S.
  int affine_dim(const std::vector<std::size_t>& subset) const;

 private:
  std::size_t ambient_ = 0;
  int dim_ = -1;
  std::vector<Exponent> points_;
  std::vector<std::size_t> vertices_;
  std::vector<Facet> facets_;
  std::vector<Facet> equations_;
  std::vector<std::vector<std::size_t>> facet_points_;
};

}  // namespace tpcells
