#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "birch/circuit.hpp"
#include "birch/minimize.hpp"
#include "birch/numeric.hpp"
#include "birch/orthant.hpp"
#include "birch/poly.hpp"

namespace birch {

/// sum_A c_a (a - gamma) x^a - sum_B d_b (b - gamma) x^b = 0, one equation
/// per coordinate.
struct BirchSystem {
  std::size_t arity = 0;
  std::vector<WeightedExponent> a;  ///< c_a > 0
  std::vector<WeightedExponent> b;  ///< d_b > 0
  ExponentVector gamma;

  std::vector<Polynomial> reconstruct() const;
  /// sum_A c_a x^a - sum_B d_b x^b
  Polynomial base_polynomial() const;
};

class RecognitionError : public std::invalid_argument {
 public:
  enum class Reason { Shape, Inconsistent, NonIntegralGamma, NegativeGamma, ZeroScalar };
  RecognitionError(Reason reason, const std::string& what)
      : std::invalid_argument(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

/// Recovers (A, c, B, d, gamma) from n equations in n variables: every
/// monomial's coefficient vector across the equations must be a nonzero
/// multiple of (alpha - gamma) for one common gamma.
BirchSystem recognize_birch(const std::vector<Polynomial>& system);

enum class Verdict { ExistsPositiveZero, ExactlyOnePositiveZero, NotApplicable, Unknown };

struct Witness {
  std::vector<double> point;
  double residual = 0.0;
};

struct Certificate {
  Verdict verdict = Verdict::NotApplicable;
  std::optional<std::string> theorem;  ///< "P4.1", "P4.5", "T4.6", "T4.8", "T4.10", "Birch"
  BirchSystem system;
  std::vector<Hypothesis> hypotheses;
  std::optional<OrthantVerdict> orthant;
  std::optional<Witness> witness;
  std::vector<Witness> all_zeros;  ///< every distinct zero found by validate
};

struct CertifyOptions {
  OrthantOptions orthant{};
  SolveOptions solve{};
};

/// Applies the existence results in order of strength. Every structural
/// hypothesis is decided exactly; only the orthant sign of the base
/// polynomial is semi-decided.
Certificate certify(const BirchSystem& system, const CertifyOptions& options = {});

/// Attaches a numerically located positive zero (scaled residual below
/// 1e-9). A failed search leaves the verdict unchanged and witness empty.
Certificate validate(const Certificate& cert, const CertifyOptions& options = {});

std::string to_string(Verdict v);

}  // namespace birch
