#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "birch/exponent.hpp"
#include "birch/poly.hpp"
#include "birch/rational.hpp"

namespace birch {

struct WeightedExponent {
  ExponentVector exponent;
  Rational coefficient;
};

/// f = sum_a c_a x^a - d x^beta with the a's spanning a simplex and beta in
/// its relative interior. `weights` are beta's barycentric coordinates.
struct CircuitPolynomial {
  std::vector<WeightedExponent> outer;
  ExponentVector inner;
  Rational inner_coefficient;  ///< d in the form above (may be negative)
  RationalVector weights;
  double log_circuit_number = 0.0;
  double circuit_number = 0.0;

  std::size_t arity() const { return inner.arity(); }
  Polynomial to_polynomial() const;
};

/// Outcome of comparing the inner coefficient with the circuit number.
enum class CircuitBound {
  Strict,    ///< |d| (or d) strictly below the circuit number
  Boundary,  ///< equal, or within the comparison guard band
  Violated,
};

class NotACircuit : public std::invalid_argument {
 public:
  enum class Reason { TooFewTerms, NotSimplex, NonPositiveOuter, InnerNotInterior, OddOuter };
  NotACircuit(Reason reason, const std::string& what)
      : std::invalid_argument(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

/// Builds the circuit record from explicit data, computing weights and the
/// circuit number. Throws NotACircuit.
CircuitPolynomial make_circuit(std::vector<WeightedExponent> outer, const ExponentVector& inner,
                               const Rational& inner_coefficient, bool require_even = true);

/// Recognizes f as a circuit polynomial. With `require_even` the outer
/// exponents must lie in (2N)^n; the orthant variant drops that.
CircuitPolynomial recognize_circuit(const Polynomial& f, bool require_even = true);

/// log of prod (c_a / lambda_a)^lambda_a in 113-bit binary floating point.
double log_circuit_number(const std::vector<WeightedExponent>& outer, const RationalVector& weights);

/// Compares `value` > 0 against the circuit number. Exact when the common
/// denominator of the weights is small, otherwise decided on logarithms
/// with a 1e-12 guard band that resolves to Boundary.
CircuitBound compare_with_circuit_number(const CircuitPolynomial& c, const Rational& value);

/// Global nonnegativity criterion: for even beta need d <= Theta, otherwise
/// |d| <= Theta.
CircuitBound nonnegativity(const CircuitPolynomial& c);
bool is_nonnegative(const CircuitPolynomial& c);

/// Nonnegativity over the open positive orthant: d <= Theta.
CircuitBound orthant_nonnegativity(const CircuitPolynomial& c);
bool is_nonnegative_on_orthant(const CircuitPolynomial& c);

/// Input of the covering decomposition: sum_A c_a x^a + d_gamma x^gamma -
/// sum_B d_b x^b, with gamma optional.
struct CoverInput {
  std::vector<WeightedExponent> outer;  ///< A with c_a > 0
  std::vector<WeightedExponent> inner;  ///< B with d_b > 0
  std::optional<WeightedExponent> gamma;
};

struct CoverDecomposition {
  std::vector<CircuitPolynomial> circuits;
  /// Each selected simplex (outer exponents only, gamma included when used).
  std::vector<std::vector<ExponentVector>> simplices;
  Polynomial leftover;  ///< positive terms not used by any circuit
  Polynomial total() const;
};

class NoCover : public std::invalid_argument {
 public:
  NoCover(const ExponentVector& b, const std::string& what)
      : std::invalid_argument(what), inner_(b) {}
  const ExponentVector& inner() const { return inner_; }

 private:
  ExponentVector inner_;
};

/// Writes the input as a sum of circuit polynomials plus leftover positive
/// terms. For each b the first subset of A (by size, then lexicographic in
/// graded-lex order) whose union with gamma is a simplex containing b in its
/// relative interior is chosen; each c_a is split evenly among the simplices
/// using it and d_gamma is split as d_gamma / |B|. Throws NoCover when some
/// b has no covering simplex.
CoverDecomposition cover_decompose(const CoverInput& input);

}  // namespace birch
