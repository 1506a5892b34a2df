#pragma once

#include <optional>
#include <string>
#include <vector>

#include "birch/orthant.hpp"
#include "birch/poly.hpp"

namespace birch {

enum class HypothesisStatus { Pass, Fail, Unknown };

struct Hypothesis {
  std::string name;
  HypothesisStatus status = HypothesisStatus::Unknown;
  std::string evidence;
};

enum class MinimizeConclusion { HasGlobalMinimizerInOrthant, OriginIsMinimizer, NotApplicable, Unknown };

struct MinimizeReport {
  std::vector<Hypothesis> hypotheses;
  MinimizeConclusion conclusion = MinimizeConclusion::NotApplicable;
  std::optional<std::vector<double>> minimizer;
  std::optional<double> value;
  std::optional<double> gradient_norm;
  /// Exact point p > 0 with f(p) < f(0).
  std::optional<RationalVector> below_origin;
};

/// Checks the hypotheses of the global-minimizer existence theorem for
/// f = sum_A c_a x^a - sum_B d_b x^b (A in (2N)^n, B interior, full
/// dimension, Conv(A u {0}) simple at 0) and, when the origin is beaten by an
/// exact witness, locates the minimizer numerically. Odd exponents are
/// handled by the substitution x_i -> x_i^2; the reported minimizer is then
/// mapped back to the original coordinates.
MinimizeReport check_and_minimize(const Polynomial& f, const OrthantOptions& options = {});

std::string to_string(HypothesisStatus s);
std::string to_string(MinimizeConclusion c);

}  // namespace birch
