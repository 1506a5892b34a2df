#include "birch/orthant.hpp"

#include <algorithm>
#include <cmath>

#include "birch/numeric.hpp"

namespace birch {

std::optional<RationalVector> snap_negative(const Polynomial& f, std::span<const double> x) {
  for (const long bound : {1'000'000L, 1'000'000'000L}) {
    RationalVector p;
    bool ok = true;
    for (double xi : x) {
      if (!(xi > 0.0) || !std::isfinite(xi)) {
        ok = false;
        break;
      }
      Rational q = best_rational(rational_from_double(xi), Integer(bound));
      if (q <= 0) q = Rational(1, bound);
      p.push_back(q);
    }
    if (ok && f.evaluate(std::span<const Rational>(p)) < 0) return p;
  }
  return std::nullopt;
}

std::optional<RationalVector> find_negative_point(const Polynomial& f, const OrthantOptions& options) {
  if (f.is_zero()) return std::nullopt;
  Rational biggest = 0;
  for (const auto& [e, c] : f.terms()) biggest = std::max(biggest, Rational(abs(c)));
  MinimizeOptions mo;
  mo.starts = options.starts;
  mo.seed = options.seed;
  mo.max_iterations = options.budget;
  mo.stop_below = -1e-3 * biggest.get_d();
  const auto outcome = minimize_on_orthant(f, mo);
  std::vector<std::size_t> order(outcome.runs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return outcome.runs[a].value_or_residual < outcome.runs[b].value_or_residual;
  });
  MinimizeOptions polish = mo;
  polish.stop_below.reset();
  for (auto i : order) {
    const auto& run = outcome.runs[i];
    if (!(run.value_or_residual < 0)) break;
    // Runs stop early once clearly negative; descend further so the witness
    // sits near a local minimizer rather than wherever the run stopped.
    std::vector<double> u;
    for (double xi : run.point) u.push_back(std::log(xi));
    const auto deeper = minimize_from(f, u, polish);
    if (deeper.value_or_residual < run.value_or_residual)
      if (auto p = snap_negative(f, deeper.point)) return p;
    if (auto p = snap_negative(f, run.point)) return p;
  }
  return std::nullopt;
}

OrthantVerdict decide_orthant(const Polynomial& f, const OrthantOptions& options) {
  OrthantVerdict v;
  std::vector<WeightedExponent> pos, neg;
  for (const auto& [e, c] : f.terms()) {
    if (c > 0) pos.push_back({e, c});
    else neg.push_back({e, -c});
  }
  if (neg.empty()) {
    v.status = OrthantStatus::Nonnegative;
    v.method = "positive-coefficients";
    v.certificate = CoverDecomposition{{}, {}, f};
    return v;
  }
  if (!pos.empty()) {
    try {
      auto cover = cover_decompose({pos, neg, std::nullopt});
      if (std::all_of(cover.circuits.begin(), cover.circuits.end(),
                      [](const auto& c) { return is_nonnegative_on_orthant(c); })) {
        v.status = OrthantStatus::Nonnegative;
        v.method = "circuit-cover";
        v.certificate = std::move(cover);
        return v;
      }
    } catch (const NoCover&) {
      // Some negative term is not interior; fall through to the search.
    }
  }
  if (auto p = find_negative_point(f, options)) {
    v.status = OrthantStatus::Negative;
    v.method = "witness";
    v.witness_value = f.evaluate(std::span<const Rational>(*p));
    v.witness = std::move(p);
    return v;
  }
  v.method = "none";
  return v;
}

bool verify_verdict(const Polynomial& f, const OrthantVerdict& verdict) {
  switch (verdict.status) {
    case OrthantStatus::Negative: {
      if (!verdict.witness) return false;
      for (const auto& q : *verdict.witness)
        if (q <= 0) return false;
      return f.evaluate(std::span<const Rational>(*verdict.witness)) < 0;
    }
    case OrthantStatus::Nonnegative: {
      if (!verdict.certificate) return false;
      const auto& cert = *verdict.certificate;
      for (const auto& [e, c] : cert.leftover.terms())
        if (c <= 0) return false;
      for (const auto& c : cert.circuits)
        if (!is_nonnegative_on_orthant(c)) return false;
      return cert.total() == f;
    }
    case OrthantStatus::Unknown:
      return true;
  }
  return false;
}

}  // namespace birch
