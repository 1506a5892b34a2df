#include "birch/numeric.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "birch/expsum.hpp"
#include "birch/orthant.hpp"
#include "birch/polytope.hpp"

namespace birch {
namespace {

constexpr double kArmijo = 1e-4;
constexpr double kShrink = 0.5;
constexpr double kMaxLogCoordinate = 700.0;
// Below this every term has underflowed for practical purposes.
constexpr double kNegligibleTerm = 1e-250;

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

std::vector<double> exp_point(const Vec& u) {
  std::vector<double> x(u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) x[i] = std::exp(u[i]);
  return x;
}

double value_grad(const ExpSum& g, const Vec& u, Vec& grad) {
  return g.value_and_gradient(std::span<const double>(u.data(), u.size()),
                              std::span<double>(grad.data(), grad.size()));
}

// Gradient of f in x coordinates from the gradient in log coordinates.
double x_gradient_norm(const Vec& grad_u, const Vec& u) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    const double gi = grad_u[i] / std::exp(u[i]);
    s += gi * gi;
  }
  return std::sqrt(s);
}

}  // namespace

NumericResult minimize_from(const Polynomial& f, std::vector<double> u0, const MinimizeOptions& options) {
  const ExpSum g(f);
  const auto n = static_cast<Eigen::Index>(f.arity());
  Vec u = Eigen::Map<const Vec>(u0.data(), n);
  for (int k = 0; k < 60 && !std::isfinite(g.value(std::span<const double>(u.data(), n))); ++k) u *= 0.5;

  Vec grad(n), trial_grad(n);
  double val = value_grad(g, u, grad);
  NumericResult result;
  auto finish = [&](bool allow_converged) {
    result.point = exp_point(u);
    result.value_or_residual = val;
    result.converged = allow_converged && std::isfinite(val) &&
                       x_gradient_norm(grad, u) < options.gradient_tol;
    return result;
  };
  auto below_stop = [&] { return options.stop_below && val < *options.stop_below; };

  // Gradient descent with Armijo backtracking. The gradient is divided by the
  // largest term so that steps are measured in log-coordinate units; plain
  // steps stall on plateaus where every term is tiny and overshoot where one
  // term is huge.
  double step = 1.0;
  int it = 0;
  for (; it < options.max_iterations; ++it) {
    if (below_stop()) return finish(false);
    const double scale = g.max_term(std::span<const double>(u.data(), n));
    if (!(scale > kNegligibleTerm)) break;
    const double gnorm2 = grad.squaredNorm();
    if (std::sqrt(gnorm2) < 1e-4 * (1.0 + std::abs(val)) && std::sqrt(gnorm2) < 1e-3 * scale) break;
    step = std::min(step * 2.0, 1e3);
    bool accepted = false;
    while (step > 1e-20) {
      Vec trial = u - (step / scale) * grad;
      const double tv = value_grad(g, trial, trial_grad);
      if (std::isfinite(tv) && tv <= val - kArmijo * step * gnorm2 / scale) {
        u = std::move(trial);
        val = tv;
        grad = trial_grad;
        accepted = true;
        break;
      }
      step *= kShrink;
    }
    if (!accepted || u.cwiseAbs().maxCoeff() > kMaxLogCoordinate) break;
  }
  result.iterations = it;

  // Damped Newton polish; falls back to a gradient step off convex regions.
  std::vector<double> hess(static_cast<std::size_t>(n * n));
  for (int k = 0; k < 100; ++k, ++result.iterations) {
    if (below_stop()) return finish(false);
    if (x_gradient_norm(grad, u) < 1e-3 * options.gradient_tol) break;
    g.hessian(std::span<const double>(u.data(), n), hess);
    const Mat h = Eigen::Map<const Mat>(hess.data(), n, n);
    Eigen::LDLT<Mat> ldlt(h);
    Vec dir;
    if (ldlt.info() == Eigen::Success && ldlt.isPositive() && (ldlt.vectorD().array() > 0).all()) {
      dir = -ldlt.solve(grad);
    } else {
      dir = -grad;
    }
    const double gnorm = grad.norm();
    const double scale = g.max_term(std::span<const double>(u.data(), n));
    double t = 1.0;
    bool accepted = false;
    for (int h = 0; h < 50; ++h, t *= kShrink) {
      Vec trial = u + t * dir;
      const double tv = value_grad(g, trial, trial_grad);
      if (!std::isfinite(tv)) continue;
      const bool decrease = tv < val;
      const bool flat = tv <= val + 1e-15 * (1.0 + scale) && trial_grad.norm() < gnorm;
      if (decrease || flat) {
        u = std::move(trial);
        val = tv;
        grad = trial_grad;
        accepted = true;
        break;
      }
    }
    if (!accepted || u.cwiseAbs().maxCoeff() > kMaxLogCoordinate) break;
  }
  return finish(true);
}

MinimizeOutcome minimize_on_orthant(const Polynomial& f, const MinimizeOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal(0.0, options.start_sigma);
  std::vector<std::vector<double>> starts(static_cast<std::size_t>(std::max(options.starts, 1)));
  for (auto& s : starts) {
    s.resize(f.arity());
    for (auto& x : s) x = normal(rng);
  }
  if (options.term_starts) {
    // f < 0 somewhere iff f / x^b < 0 somewhere. For a negative term b inside
    // the Newton polytope, f / x^b grows in every direction of log space, so
    // its minimizer is a start that does not drift onto a far plateau.
    std::vector<std::vector<double>> extra;
    MinimizeOptions inner = options;
    inner.stop_below.reset();
    for (const auto& [e, c] : f.terms()) {
      if (c >= 0) continue;
      auto r = minimize_from(f.shifted(ExponentVector(f.arity()) - e), std::vector<double>(f.arity(), 0.0), inner);
      std::vector<double> u;
      for (double x : r.point) u.push_back(std::log(x));
      if (std::all_of(u.begin(), u.end(), [](double v) { return std::isfinite(v); })) extra.push_back(std::move(u));
    }
    starts.insert(starts.begin(), extra.begin(), extra.end());
  }
  MinimizeOutcome out;
  for (auto& s : starts) {
    out.runs.push_back(minimize_from(f, std::move(s), options));
    const auto& r = out.runs.back();
    if (r.value_or_residual < out.runs[out.best].value_or_residual) out.best = out.runs.size() - 1;
    if (options.stop_below && r.value_or_residual < *options.stop_below) break;
  }
  return out;
}

double scaled_residual(const std::vector<Polynomial>& system, std::span<const double> x) {
  double worst = 0.0;
  for (const auto& eq : system) {
    double value = 0.0, biggest = 0.0;
    for (const auto& [e, c] : eq.terms()) {
      double t = c.get_d();
      for (std::size_t i = 0; i < x.size(); ++i) t *= std::pow(x[i], static_cast<double>(e[i]));
      value += t;
      biggest = std::max(biggest, std::abs(t));
    }
    worst = std::max(worst, std::abs(value) / (1.0 + biggest));
  }
  return worst;
}

std::vector<NumericResult> solve_system(const std::vector<Polynomial>& system, const SolveOptions& options) {
  if (system.empty()) return {};
  const std::size_t n = system.front().arity();
  if (system.size() != n) throw std::invalid_argument("solve_system: need n equations in n variables");
  std::vector<ExpSum> eqs;
  for (const auto& p : system) {
    if (p.arity() != n) throw std::invalid_argument("solve_system: arity mismatch");
    eqs.emplace_back(p);
  }
  const auto N = static_cast<Eigen::Index>(n);

  auto residual = [&](const Vec& u, Vec& f, Mat* jac) {
    Vec grad(N);
    Vec scaled(N);
    for (Eigen::Index i = 0; i < N; ++i) {
      const std::span<const double> us(u.data(), n);
      f[i] = eqs[i].value_and_gradient(us, std::span<double>(grad.data(), n));
      const double s = 1.0 + eqs[i].max_term(us);
      scaled[i] = f[i] / s;
      if (jac) jac->row(i) = grad.transpose() / s;
      f[i] = scaled[i];
    }
    return f.norm();
  };

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> uniform(-3.0, 3.0);
  std::vector<Vec> starts(static_cast<std::size_t>(std::max(options.starts, 0)), Vec(N));
  for (auto& s : starts)
    for (Eigen::Index i = 0; i < N; ++i) s[i] = uniform(rng);

  std::vector<NumericResult> roots;
  for (auto& u : starts) {
    Vec f(N), f_trial(N);
    Mat jac(N, N);
    double norm = residual(u, f, &jac);
    int it = 0;
    for (; it < options.max_iterations && std::isfinite(norm); ++it) {
      if (f.cwiseAbs().maxCoeff() < 1e-3 * options.residual_tol) break;
      Eigen::FullPivLU<Mat> lu(jac);
      if (!lu.isInvertible()) break;
      const Vec delta = -lu.solve(f);
      double t = 1.0;
      bool accepted = false;
      for (int h = 0; h <= options.max_halvings; ++h, t *= 0.5) {
        Vec trial = u + t * delta;
        if (trial.cwiseAbs().maxCoeff() > kMaxLogCoordinate) continue;
        const double tn = residual(trial, f_trial, nullptr);
        if (std::isfinite(tn) && tn < norm) {
          u = std::move(trial);
          accepted = true;
          break;
        }
      }
      if (!accepted) break;
      norm = residual(u, f, &jac);
      if ((t * delta).cwiseAbs().maxCoeff() < 1e-14) break;
    }
    const auto x = exp_point(u);
    const double res = scaled_residual(system, x);
    if (!(res < options.residual_tol)) continue;
    if (!std::all_of(x.begin(), x.end(), [](double v) { return v > 0.0 && std::isfinite(v); })) continue;
    const bool duplicate = std::any_of(roots.begin(), roots.end(), [&](const NumericResult& r) {
      double d = 0.0;
      for (std::size_t i = 0; i < n; ++i) d = std::max(d, std::abs(r.point[i] - x[i]));
      return d < options.dedupe_tol;
    });
    if (!duplicate) roots.push_back({x, res, it, true});
  }
  return roots;
}

Polynomial ThresholdQuery::instance(const Rational& d) const {
  std::vector<Polynomial::Term> terms;
  for (const auto& a : outer) terms.emplace_back(a.exponent, a.coefficient);
  for (const auto& b : inner) terms.emplace_back(b.exponent, -b.coefficient);
  terms.emplace_back(gamma, mode == ThresholdMode::Inf ? d : Rational(-d));
  return Polynomial(gamma.arity(), terms);
}

OrthantSign orthant_sign(const Polynomial& f, const MinimizeOptions& options) {
  MinimizeOptions opts = options;
  opts.stop_below = -1e-12;
  const auto outcome = minimize_on_orthant(f, opts);
  bool any_finite = false;
  const ExpSum g(f);
  for (const auto& run : outcome.runs) {
    if (!std::isfinite(run.value_or_residual)) {
      if (run.value_or_residual < 0) return OrthantSign::Negative;
      continue;
    }
    std::vector<double> u(run.point.size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::log(run.point[i]);
    const double margin = 1e-12 * (1.0 + g.max_term(u));
    if (run.value_or_residual < -margin) return OrthantSign::Negative;
    any_finite = true;
  }
  return any_finite ? OrthantSign::Nonnegative : OrthantSign::Unknown;
}

ThresholdResult estimate_threshold(const ThresholdQuery& query, const ThresholdOptions& options) {
  if (!(options.tol > 0)) throw std::invalid_argument("estimate_threshold: tol must be positive");
  std::vector<ExponentVector> a_pts;
  for (const auto& a : query.outer) {
    if (a.coefficient <= 0) throw std::invalid_argument("estimate_threshold: c_a must be positive");
    a_pts.push_back(a.exponent);
  }
  for (const auto& b : query.inner)
    if (b.coefficient <= 0) throw std::invalid_argument("estimate_threshold: d_b must be positive");
  if (a_pts.empty()) throw std::invalid_argument("estimate_threshold: empty A");

  if (query.mode == ThresholdMode::Inf) {
    auto pts = a_pts;
    pts.push_back(query.gamma);
    if (!NewtonPolytope::hull(pts).is_vertex(query.gamma))
      throw std::invalid_argument("estimate_threshold: gamma must be a vertex of Conv(A u {gamma})");
  } else {
    const auto hull = NewtonPolytope::hull(a_pts);
    if (!hull.full_dimensional() || !hull.is_interior(query.gamma))
      throw std::invalid_argument("estimate_threshold: gamma must be interior to Conv(A)");
    std::vector<Polynomial::Term> terms;
    for (const auto& a : query.outer) terms.emplace_back(a.exponent, a.coefficient);
    for (const auto& b : query.inner) terms.emplace_back(b.exponent, -b.coefficient);
    const auto base = Polynomial(query.gamma.arity(), terms);
    OrthantOptions oo;
    oo.budget = options.orthant_budget;
    oo.seed = options.minimize.seed;
    if (decide_orthant(base, oo).status == OrthantStatus::Negative)
      throw std::invalid_argument("estimate_threshold: base polynomial is negative on the orthant");
  }

  ThresholdResult result;
  auto oracle = [&](double d) {
    ++result.oracle_calls;
    return orthant_sign(query.instance(rational_from_double(d)), options.minimize);
  };
  // `good` is the sign on the nonnegative side of d*.
  const bool inf = query.mode == ThresholdMode::Inf;
  auto nonneg_side = [&](OrthantSign s, double lo, double hi) {
    if (s == OrthantSign::Unknown) throw ThresholdError("threshold oracle inconclusive", lo, hi);
    return s == OrthantSign::Nonnegative;
  };

  double lo = 0.0, hi = 1.0;
  const bool at_zero = nonneg_side(oracle(0.0), 0.0, 0.0);
  if (inf && at_zero) {
    result.lo = result.hi = 0.0;
    return result;
  }
  if (!inf && !at_zero)
    throw ThresholdError("base polynomial is numerically negative on the orthant", 0.0, 0.0);
  // Grow hi until the oracle flips.
  while (nonneg_side(oracle(hi), lo, hi) != inf) {
    lo = hi;
    hi *= 2.0;
    if (hi > options.bracket_cap) throw ThresholdError("threshold bracket exceeded cap", lo, hi);
  }
  while (hi - lo > options.tol) {
    const double mid = 0.5 * (lo + hi);
    const bool nonneg = nonneg_side(oracle(mid), lo, hi);
    if (nonneg == inf) hi = mid;
    else lo = mid;
  }
  result.lo = lo;
  result.hi = hi;
  MinimizeOptions polish = options.minimize;
  polish.stop_below.reset();
  result.near_zero = minimize_on_orthant(query.instance(rational_from_double(0.5 * (lo + hi))), polish).best_run();
  return result;
}

}  // namespace birch
