#include "birch/minimize.hpp"

#include <algorithm>
#include <cmath>

#include "birch/numeric.hpp"
#include "birch/polytope.hpp"

namespace birch {

std::string to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::Pass: return "pass";
    case HypothesisStatus::Fail: return "fail";
    case HypothesisStatus::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(MinimizeConclusion c) {
  switch (c) {
    case MinimizeConclusion::HasGlobalMinimizerInOrthant: return "HasGlobalMinimizerInOrthant";
    case MinimizeConclusion::OriginIsMinimizer: return "OriginIsMinimizer";
    case MinimizeConclusion::NotApplicable: return "NotApplicable";
    case MinimizeConclusion::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

Hypothesis check(std::string name, bool ok, std::string evidence) {
  return {std::move(name), ok ? HypothesisStatus::Pass : HypothesisStatus::Fail, std::move(evidence)};
}

}  // namespace

MinimizeReport check_and_minimize(const Polynomial& input, const OrthantOptions& options) {
  MinimizeReport report;
  const std::size_t n = input.arity();
  const ExponentVector zero(n);

  if (input.is_zero() || input.has_negative_exponents()) {
    report.hypotheses.push_back(check("shape", false, "need a nonzero polynomial with exponents in N^n"));
    return report;
  }
  const bool odd = std::any_of(input.terms().begin(), input.terms().end(),
                               [](const auto& t) { return t.second > 0 && !t.first.is_even(); });
  const Polynomial f = odd ? input.square_substitute() : input;
  if (odd)
    report.hypotheses.push_back(
        {"square substitution", HypothesisStatus::Pass,
         "positive terms with odd exponents; working with f(x_1^2, ..., x_n^2)"});

  std::vector<ExponentVector> a_pts, b_pts;
  for (const auto& [e, c] : f.terms()) (c > 0 ? a_pts : b_pts).push_back(e);
  report.hypotheses.push_back(check("A in (2N)^n", true, std::to_string(a_pts.size()) + " positive terms"));

  if (b_pts.empty()) {
    report.hypotheses.push_back(check("B empty", true, "no negative terms: f >= f(0) on R^n"));
    report.conclusion = MinimizeConclusion::OriginIsMinimizer;
    report.minimizer = std::vector<double>(n, 0.0);
    report.value = f.coefficient(zero).get_d();
    return report;
  }

  const auto hull = NewtonPolytope::hull(f.support());
  const bool full = hull.full_dimensional();
  report.hypotheses.push_back(check("dim New(f) = n", full, "dim " + std::to_string(hull.dim())));
  bool interior = full;
  std::string bad;
  if (full)
    for (const auto& b : b_pts)
      if (!hull.is_interior(b)) {
        interior = false;
        bad = b.to_string();
      }
  report.hypotheses.push_back(
      check("B in interior of New(f)", interior, interior ? "all negative terms interior" : "not interior: " + bad));

  auto with_origin = a_pts;
  with_origin.push_back(zero);
  const auto cone = NewtonPolytope::hull(with_origin);
  bool simple = false;
  std::string simple_evidence = "Conv(A u {0}) not full-dimensional";
  if (cone.full_dimensional() && cone.is_vertex(zero)) {
    const auto s = cone.is_simple_at(zero);
    simple = s.simple;
    simple_evidence = std::to_string(s.neighbors.size()) + " edges at 0";
  }
  report.hypotheses.push_back(check("Conv(A u {0}) simple at 0", simple, simple_evidence));

  if (!(full && interior && simple)) {
    report.conclusion = MinimizeConclusion::NotApplicable;
    return report;
  }

  const Rational f0 = f.coefficient(zero);
  const Polynomial shifted = f - Polynomial::constant(n, f0);
  auto p = find_negative_point(shifted, options);
  if (!p) {
    // Origin might be optimal; only claim it with an exact certificate.
    auto verdict = decide_orthant(shifted, options);
    if (verdict.status == OrthantStatus::Nonnegative) {
      report.hypotheses.push_back(check("0 not a global minimizer", false,
                                        "f - f(0) certified nonnegative (" + verdict.method + ")"));
      report.conclusion = MinimizeConclusion::OriginIsMinimizer;
      report.minimizer = std::vector<double>(n, 0.0);
      report.value = f0.get_d();
      return report;
    }
    report.hypotheses.push_back({"0 not a global minimizer", HypothesisStatus::Unknown,
                                 "no exact witness with f(p) < f(0) found"});
    report.conclusion = MinimizeConclusion::Unknown;
    return report;
  }
  std::string witness = "f(p) < f(0) at p = (";
  for (std::size_t i = 0; i < p->size(); ++i) witness += (i ? ", " : "") + (*p)[i].get_str();
  report.hypotheses.push_back(check("0 not a global minimizer", true, witness + ")"));
  report.below_origin = *p;
  report.conclusion = MinimizeConclusion::HasGlobalMinimizerInOrthant;

  MinimizeOptions mo;
  mo.starts = options.starts;
  mo.seed = options.seed;
  mo.max_iterations = options.budget;
  auto outcome = minimize_on_orthant(f, mo);
  // Polish again from the best point, which also covers a start at the witness.
  std::vector<double> u0(n);
  for (std::size_t i = 0; i < n; ++i) u0[i] = std::log(outcome.best_run().point[i]);
  auto best = minimize_from(f, u0, mo);
  if (best.value_or_residual > outcome.best_run().value_or_residual) best = outcome.best_run();

  auto grads = f.gradient();
  double gn = 0.0;
  for (const auto& g : grads) {
    const double v = g.evaluate(std::span<const double>(best.point));
    gn += v * v;
  }
  std::vector<double> point = best.point;
  if (odd)
    for (auto& x : point) x *= x;
  report.minimizer = point;
  report.value = best.value_or_residual;
  report.gradient_norm = std::sqrt(gn);
  return report;
}

}  // namespace birch
