#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "birch/rational.hpp"

namespace birch {

/// Integer exponent vector of a (Laurent) monomial.
///
/// Ordering is graded-lex: total degree first, then lexicographic on the
/// entries. This is the canonical term order used for printing and for any
/// deterministic enumeration over supports.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t arity) : e_(arity, 0) {}
  ExponentVector(std::initializer_list<std::int64_t> entries) : e_(entries) {}
  explicit ExponentVector(std::vector<std::int64_t> entries) : e_(std::move(entries)) {}

  static ExponentVector unit(std::size_t arity, std::size_t i, std::int64_t scale = 1);

  std::size_t arity() const { return e_.size(); }
  std::int64_t operator[](std::size_t i) const { return e_[i]; }
  std::int64_t& operator[](std::size_t i) { return e_[i]; }
  std::span<const std::int64_t> entries() const { return e_; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  std::int64_t degree() const;
  bool is_zero() const;
  bool is_nonnegative() const;
  bool is_even() const;

  ExponentVector operator+(const ExponentVector& o) const;
  ExponentVector operator-(const ExponentVector& o) const;
  ExponentVector operator*(std::int64_t k) const;

  RationalVector to_rational() const;

  bool operator==(const ExponentVector&) const = default;
  std::strong_ordering operator<=>(const ExponentVector& o) const;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> e_;
};

/// Converts an integral rational vector; throws std::domain_error otherwise.
ExponentVector to_exponent(const RationalVector& v);

}  // namespace birch
