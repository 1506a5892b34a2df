#pragma once

#include <span>
#include <utility>
#include <vector>

#include "birch/exponent.hpp"
#include "birch/linalg.hpp"
#include "birch/poly.hpp"

namespace birch {

/// Exponent map alpha -> T (alpha - base) with T invertible over Q.
///
/// Under the exponential change of coordinates this is a bijection of the
/// positive orthant: g(x) with x = exp(T^T log y) equals g^T(y), where g is
/// the polynomial divided by x^base.
struct MonomialTransform {
  linalg::Matrix matrix;
  ExponentVector base;
  Integer scale = 1;                 ///< mu
  std::vector<Integer> axis_degrees;  ///< k_i; empty for general transforms

  std::size_t arity() const { return base.arity(); }
  static MonomialTransform identity(std::size_t n);
  static MonomialTransform linear(linalg::Matrix m);

  ExponentVector map(const ExponentVector& e) const;
};

/// Applies t to every exponent; coefficients are unchanged. Throws
/// std::domain_error when an image exponent is not integral.
Polynomial apply(const MonomialTransform& t, const Polynomial& f);

/// Composite of `second` after `first`. Throws std::domain_error when the
/// composite translation is not integral.
MonomialTransform compose(const MonomialTransform& second, const MonomialTransform& first);

/// x = exp(T^T log y). Throws std::domain_error on a nonpositive coordinate.
std::vector<double> pullback_point(const MonomialTransform& t, std::span<const double> y);
/// Inverse of pullback_point: y = exp(T^{-T} log x).
std::vector<double> pushforward_point(const MonomialTransform& t, std::span<const double> x);

struct Normalization {
  MonomialTransform transform;
  Polynomial polynomial;                 ///< (f / x^a0)^T
  std::vector<ExponentVector> neighbors; ///< edge neighbours a_1..a_n of a0
};

/// Moves a simple vertex a0 of New(f) to the origin and maps its edge
/// neighbours onto the even axis points 2k_i e_i. The postconditions (even
/// outer exponents, interior inner exponents, neighbour images) are checked
/// exactly and violations throw std::logic_error. Inner terms are those with
/// negative coefficients and must lie in the interior of New(f).
///
/// Throws DimensionError for a lower-dimensional hull and
/// std::invalid_argument when a0 is not a simple vertex or an inner term is
/// not interior.
Normalization normalize_at_vertex(const Polynomial& f, const ExponentVector& a0);

}  // namespace birch
