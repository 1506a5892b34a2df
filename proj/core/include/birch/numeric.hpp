#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "birch/circuit.hpp"
#include "birch/poly.hpp"

namespace birch {

struct NumericResult {
  std::vector<double> point;  ///< strictly positive
  double value_or_residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct MinimizeOptions {
  int starts = 32;
  int max_iterations = 10'000;
  std::uint64_t seed = 0;
  double start_sigma = 2.0;
  double gradient_tol = 1e-8;
  /// Also start from the minimizer of f / x^b for every negative term b.
  bool term_starts = true;
  /// Stop a run as soon as its value drops below this.
  std::optional<double> stop_below;
};

struct MinimizeOutcome {
  std::vector<NumericResult> runs;  ///< in start order
  std::size_t best = 0;             ///< index of the smallest value
  const NumericResult& best_run() const { return runs[best]; }
};

/// Multistart minimization of f over the open positive orthant, carried
/// out on g(u) = f(exp(u)): gradient descent with Armijo backtracking
/// followed by a damped Newton polish. Term starts, when enabled, run first.
/// `converged` means the gradient of f
/// at the point has Euclidean norm below gradient_tol.
MinimizeOutcome minimize_on_orthant(const Polynomial& f, const MinimizeOptions& options = {});

/// Single local run from the given log-coordinate start.
NumericResult minimize_from(const Polynomial& f, std::vector<double> u0,
                            const MinimizeOptions& options = {});

/// max_i |F_i(x)| / (1 + max_k |term_ik(x)|).
double scaled_residual(const std::vector<Polynomial>& system, std::span<const double> x);

struct SolveOptions {
  int starts = 64;
  std::uint64_t seed = 0;
  double residual_tol = 1e-9;
  double dedupe_tol = 1e-6;
  int max_iterations = 200;
  int max_halvings = 40;
};

/// Damped Newton on F(exp(u)) from random starts with log coordinates
/// uniform in [-3, 3]^n. Returns converged, deduplicated positive roots in
/// order of first discovery.
std::vector<NumericResult> solve_system(const std::vector<Polynomial>& system,
                                        const SolveOptions& options = {});

enum class ThresholdMode { Inf, Sup };

/// f_d = sum c_a x^a + d x^gamma - sum d_b x^b (Inf) or
/// f_d = sum c_a x^a - sum d_b x^b - d x^gamma (Sup).
struct ThresholdQuery {
  std::vector<WeightedExponent> outer;
  std::vector<WeightedExponent> inner;
  ExponentVector gamma;
  ThresholdMode mode = ThresholdMode::Sup;

  Polynomial instance(const Rational& d) const;
};

enum class OrthantSign { Nonnegative, Negative, Unknown };

struct ThresholdOptions {
  double tol = 1e-4;
  MinimizeOptions minimize{};
  int orthant_budget = 10'000;
  double bracket_cap = 1073741824.0;  // 2^30
};

struct ThresholdResult {
  double lo = 0.0;
  double hi = 0.0;
  int oracle_calls = 0;
  /// Minimizer of f_d at the bracket midpoint; its value is close to 0.
  std::optional<NumericResult> near_zero;
};

class ThresholdError : public std::runtime_error {
 public:
  ThresholdError(const std::string& what, double lo, double hi)
      : std::runtime_error(what), lo_(lo), hi_(hi) {}
  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  double lo_, hi_;
};

/// Numeric sign of the orthant infimum of f.
OrthantSign orthant_sign(const Polynomial& f, const MinimizeOptions& options);

/// Bisection on d for the nonnegativity threshold d*. Throws
/// std::invalid_argument when the query shape is wrong and ThresholdError
/// when the oracle is inconclusive at a bracket end.
ThresholdResult estimate_threshold(const ThresholdQuery& query, const ThresholdOptions& options = {});

}  // namespace birch
