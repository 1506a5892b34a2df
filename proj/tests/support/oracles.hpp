#pragma once

// Brute-force reference implementations used to cross-check the library.
// They share no code with birch::core beyond the Rational type.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "birch/poly.hpp"

namespace oracle {

using birch::Rational;
using Point = std::vector<Rational>;

Point to_point(const birch::ExponentVector& e);

/// p / q in lowest terms; GMP leaves two-argument construction uncanonicalized.
Rational ratio(long p, long q);

/// Unique solution of the square or overdetermined system A x = b, or
/// nullopt when it is inconsistent or has free variables.
std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b);

/// p in conv(S), by Caratheodory: some affinely independent subset of S
/// holds p with nonnegative barycentric weights.
bool in_hull(const std::vector<Point>& s, const Point& p);

/// Indices of points that are not in the hull of the others.
std::vector<std::size_t> vertices(const std::vector<Point>& s);

/// p + delta * (+-e_j) in conv(S) for every j, with delta = 1e-6.
bool in_interior(const std::vector<Point>& s, const Point& p);

/// Central difference of the double evaluation of f.
std::vector<double> fd_gradient(const birch::Polynomial& f, const std::vector<double>& x, double h);

/// sum_{a in A} c_a (a - gamma) x^a - sum_{b in B} d_b (b - gamma) x^b, built term by term.
std::vector<birch::Polynomial> birch_system(
    const std::vector<std::pair<std::vector<std::int64_t>, Rational>>& a,
    const std::vector<std::pair<std::vector<std::int64_t>, Rational>>& b,
    const std::vector<std::int64_t>& gamma);

/// Sign changes of the coefficient sequence by descending exponent.
int sign_variations(const std::vector<Rational>& descending);

/// Product of (x - r) over roots times q, coefficients in ascending order.
std::vector<Rational> expand(const std::vector<Rational>& roots, const std::vector<Rational>& q);

}  // namespace oracle

namespace fixture {

/// {0,2}^3; edges join vertices at Hamming distance 1.
std::vector<birch::ExponentVector> cube();
/// (1,1,1) +- e_i; edges join every pair that is not antipodal.
std::vector<birch::ExponentVector> octahedron();
/// Edge neighbours of v by the rules above.
std::vector<birch::ExponentVector> cube_neighbors(const birch::ExponentVector& v);
std::vector<birch::ExponentVector> octahedron_neighbors(const birch::ExponentVector& v);

/// m random lattice points in [0, range]^n.
std::vector<birch::ExponentVector> random_points(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                                 std::int64_t range);

/// Polynomial with positive outer terms on a simplex or box and negative
/// terms strictly inside it, plus a vertex at which it is simple.
std::pair<birch::Polynomial, birch::ExponentVector> random_admissible(std::mt19937_64& rng, std::size_t n);

/// Integer matrix with determinant +-1, a product of elementary moves.
std::vector<std::vector<std::int64_t>> random_unimodular(std::mt19937_64& rng, std::size_t n);

/// sum c_a x^a - d x^b with b the centroid of a random simplex and d large
/// enough that the orthant infimum is negative and attained.
birch::Polynomial random_negative_circuit(std::mt19937_64& rng, std::size_t n);

}  // namespace fixture
