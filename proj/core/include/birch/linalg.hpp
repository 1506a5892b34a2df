#pragma once

#include <optional>
#include <vector>

#include "birch/rational.hpp"

namespace birch::linalg {

/// Dense row-major rational matrix.
using Matrix = std::vector<RationalVector>;

Matrix identity(std::size_t n);
Matrix transpose(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);
RationalVector multiply(const Matrix& a, const RationalVector& x);
Rational dot(const RationalVector& a, const RationalVector& b);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(Matrix m);
Rational determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);
/// Basis of {x : m x = 0}; `cols` is needed when m has no rows.
std::vector<RationalVector> nullspace(const Matrix& m, std::size_t cols);

struct LinearSolution {
  enum class Kind { Unique, Infinite, Inconsistent } kind;
  RationalVector particular;             ///< valid unless Inconsistent
  std::vector<RationalVector> directions;  ///< nullspace when Infinite
};

LinearSolution solve(const Matrix& a, const RationalVector& b);

/// Affine dimension of a point set (-1 for the empty set).
int affine_dimension(const std::vector<RationalVector>& points);

}  // namespace birch::linalg
