#pragma once

#include <vector>

#include "birch/exponent.hpp"
#include "birch/poly.hpp"

namespace birch {

/// The three necessary conditions for coercivity of a polynomial with a
/// positive constant term.
struct NecessaryConditions {
  bool even_vertices = false;       ///< V(A) in (2N)^n
  bool positive_vertices = false;   ///< vertex coefficients positive
  bool axis_vertices = false;       ///< 2k_i e_i in V(A) for every i
  bool all() const { return even_vertices && positive_vertices && axis_vertices; }
};

enum class Coercivity { Coercive, NotCoercive, Unknown };

struct CoercivityReport {
  NecessaryConditions necessary;
  std::vector<ExponentVector> d_set;
  bool sufficient = false;
  Coercivity verdict = Coercivity::Unknown;
  /// True when the constant term was replaced by 1 before checking.
  bool shifted = false;
};

/// Throws std::invalid_argument unless f has a positive constant term.
NecessaryConditions check_necessary(const Polynomial& f);

/// Non-vertex support points lying on a face of New(f) that avoids the
/// origin. Throws std::invalid_argument when the origin is not in supp(f).
std::vector<ExponentVector> compute_d_set(const Polynomial& f);

/// Every member of the D set has a positive coefficient. Throws
/// std::invalid_argument when the necessary conditions fail.
bool check_sufficient(const Polynomial& f);

/// Three-valued verdict. When the constant term is absent or nonpositive
/// the conditions are evaluated on f with its constant term set to 1, which
/// leaves coercivity unchanged.
CoercivityReport analyze_coercivity(const Polynomial& f);

}  // namespace birch
