#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "birch/circuit.hpp"
#include "birch/poly.hpp"

namespace birch {

enum class OrthantStatus { Nonnegative, Negative, Unknown };

struct OrthantOptions {
  int budget = 10'000;  ///< descent iterations per start
  int starts = 32;
  std::uint64_t seed = 0;
};

/// Semi-decision of f >= 0 on the open positive orthant.
///
/// Nonnegative carries an exact certificate: circuits that each pass the
/// orthant criterion plus positive leftover terms, summing to f. Negative
/// carries a rational witness with its exact (negative) value.
struct OrthantVerdict {
  OrthantStatus status = OrthantStatus::Unknown;
  std::string method;  ///< "positive-coefficients", "circuit-cover", "witness", "none"
  std::optional<CoverDecomposition> certificate;
  std::optional<RationalVector> witness;
  std::optional<Rational> witness_value;
};

/// Searches for a rational point p > 0 with f(p) < 0 (exactly verified):
/// multistart minimization in log coordinates, then snapping each float
/// coordinate to a continued-fraction approximation with denominator at most
/// 10^6, falling back to 10^9.
std::optional<RationalVector> find_negative_point(const Polynomial& f, const OrthantOptions& options = {});

/// Snaps a positive float point to rationals and returns it when f is
/// exactly negative there.
std::optional<RationalVector> snap_negative(const Polynomial& f, std::span<const double> x);

/// Tries, in order: all coefficients positive; a circuit cover of the
/// negative terms by the positive ones; a numeric witness search.
OrthantVerdict decide_orthant(const Polynomial& f, const OrthantOptions& options = {});

/// Re-checks a verdict from scratch: witness value exactly negative, or
/// certificate reconstructing f with every circuit orthant-nonnegative.
bool verify_verdict(const Polynomial& f, const OrthantVerdict& verdict);

}  // namespace birch
