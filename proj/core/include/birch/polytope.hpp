#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "birch/exponent.hpp"
#include "birch/linalg.hpp"
#include "birch/rational.hpp"

namespace birch {

/// Supporting halfspace normal . x <= offset; the normal is a primitive
/// integer vector.
struct Facet {
  RationalVector normal;
  Rational offset;
};

/// A proper face, given by its vertices and all input points lying on it.
struct Face {
  std::vector<ExponentVector> vertices;
  std::vector<ExponentVector> points;
  int dim = 0;
};

struct Simplicity {
  bool simple = false;
  /// Other endpoint of every edge meeting the queried vertex.
  std::vector<ExponentVector> neighbors;
};

struct Barycentric {
  RationalVector weights;
  bool interior = false;  ///< every weight strictly positive
};

/// Raised by queries that only make sense for full-dimensional hulls.
class DimensionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact convex hull of a small lattice point set.
///
/// Facets are found by testing every hyperplane through dim affinely
/// independent input points, which is exhaustive and exact but only meant
/// for ambient dimension up to about 4 and a few dozen points. Lower
/// dimensional hulls are handled in coordinates of their affine span;
/// ambient facets are exported only when dim() == arity().
class NewtonPolytope {
 public:
  /// Throws std::invalid_argument on an empty or mixed-arity point set.
  static NewtonPolytope hull(std::vector<ExponentVector> points);

  std::size_t arity() const { return arity_; }
  int dim() const { return dim_; }
  bool full_dimensional() const { return dim_ == static_cast<int>(arity_); }

  /// Deduplicated input points, graded-lex ascending.
  const std::vector<ExponentVector>& points() const { return points_; }
  const std::vector<ExponentVector>& vertices() const { return vertices_; }
  /// Empty unless full_dimensional().
  const std::vector<Facet>& facets() const { return facets_; }

  bool is_vertex(const ExponentVector& p) const;
  bool contains(const ExponentVector& p) const;
  /// Strict inequality on every facet. Throws DimensionError unless
  /// full_dimensional().
  bool is_interior(const ExponentVector& p) const;
  /// Membership in the relative interior of the hull (any dimension).
  bool is_relative_interior(const ExponentVector& p) const;

  /// Throws DimensionError unless full_dimensional(), std::invalid_argument
  /// when `v` is not a vertex.
  Simplicity is_simple_at(const ExponentVector& v) const;

  /// Every nonempty proper face.
  std::vector<Face> faces() const;
  /// Proper faces not containing the origin. Throws std::invalid_argument
  /// when the origin is not one of the input points.
  std::vector<Face> faces_avoiding_origin() const;
  std::vector<std::pair<ExponentVector, ExponentVector>> edges() const;

 private:
  struct LocalFacet {
    RationalVector normal;
    Rational offset;
    std::vector<std::size_t> on;  ///< indices of points on the facet
  };

  std::optional<RationalVector> local_coordinates(const ExponentVector& p) const;
  std::vector<std::vector<std::size_t>> face_index_sets() const;
  Face make_face(const std::vector<std::size_t>& idx) const;

  std::size_t arity_ = 0;
  int dim_ = 0;
  std::vector<ExponentVector> points_;
  std::vector<ExponentVector> vertices_;
  std::vector<Facet> facets_;

  RationalVector origin_;
  linalg::Matrix basis_;  ///< dim_ rows spanning the affine hull directions
  std::vector<RationalVector> local_;
  std::vector<LocalFacet> local_facets_;
};

/// Barycentric coordinates of `p` with respect to affinely independent
/// `simplex`. Throws std::invalid_argument when the vertices are affinely
/// dependent or `p` lies outside their affine span.
Barycentric barycentric(std::span<const ExponentVector> simplex, const ExponentVector& p);

bool affinely_independent(std::span<const ExponentVector> points);

}  // namespace birch
