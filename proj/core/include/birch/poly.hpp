#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "birch/exponent.hpp"
#include "birch/rational.hpp"

namespace birch {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Exponents may be negative (Laurent polynomials); the parser only ever
/// produces nonnegative exponents. Values are immutable once built: every
/// operation returns a new polynomial. Zero coefficients are never stored.
class Polynomial {
 public:
  using Term = std::pair<ExponentVector, Rational>;
  using TermMap = std::map<ExponentVector, Rational>;

  explicit Polynomial(std::size_t arity = 1);
  /// Collects like terms; zero sums are dropped.
  Polynomial(std::size_t arity, const std::vector<Term>& terms);

  static Polynomial constant(std::size_t arity, const Rational& c);
  static Polynomial monomial(const ExponentVector& e, const Rational& c = 1);

  std::size_t arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool contains(const ExponentVector& e) const { return terms_.count(e) != 0; }
  /// Zero when `e` is not in the support.
  Rational coefficient(const ExponentVector& e) const;
  std::vector<ExponentVector> support() const;
  std::int64_t total_degree() const;
  bool has_negative_exponents() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& k) const;
  /// Multiplication by the Laurent monomial x^shift.
  Polynomial shifted(const ExponentVector& shift) const;
  bool operator==(const Polynomial& o) const = default;

  /// Exact evaluation. Throws std::domain_error on a zero coordinate raised
  /// to a negative power.
  Rational evaluate(std::span<const Rational> point) const;
  /// Floating-point evaluation with exponentiation by squaring.
  double evaluate(std::span<const double> point) const;

  Polynomial partial(std::size_t i) const;
  std::vector<Polynomial> gradient() const;

  /// x_i -> x_i^2 for every i.
  Polynomial square_substitute() const;

  /// Sign variations of the coefficient sequence by descending exponent.
  /// Throws std::invalid_argument unless arity() == 1.
  int descartes_bound() const;

  /// Canonical text, terms in descending graded-lex order. Uses x1..xn
  /// when `variables` is empty.
  std::string to_string(std::span<const std::string> variables = {}) const;

 private:
  void add_term(const ExponentVector& e, const Rational& c);

  std::size_t arity_;
  TermMap terms_;
};

/// Error raised by `parse`; `offset()` is the byte offset of the failure.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownVariable, BadExponent };

  ParseError(Kind kind, std::size_t offset, const std::string& what);
  Kind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

/// Parses the polynomial grammar
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := coeff ('*' factor)* | factor ('*' factor)*
///   factor := var ('^' uint)?
///   coeff  := int | int '/' uint | decimal
/// with insignificant whitespace. Decimals convert exactly.
Polynomial parse(std::string_view text, std::span<const std::string> variables);

/// Default variable names x1..xn.
std::vector<std::string> default_variables(std::size_t n);

}  // namespace birch
