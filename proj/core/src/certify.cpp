#include "birch/certify.hpp"

#include <algorithm>
#include <map>

#include "birch/linalg.hpp"
#include "birch/polytope.hpp"

namespace birch {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ExistsPositiveZero: return "ExistsPositiveZero";
    case Verdict::ExactlyOnePositiveZero: return "ExactlyOnePositiveZero";
    case Verdict::NotApplicable: return "NotApplicable";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::vector<Polynomial> BirchSystem::reconstruct() const {
  std::vector<Polynomial> eqs;
  for (std::size_t i = 0; i < arity; ++i) {
    std::vector<Polynomial::Term> terms;
    for (const auto& t : a)
      terms.emplace_back(t.exponent, t.coefficient * static_cast<long>(t.exponent[i] - gamma[i]));
    for (const auto& t : b)
      terms.emplace_back(t.exponent, -t.coefficient * static_cast<long>(t.exponent[i] - gamma[i]));
    eqs.emplace_back(arity, terms);
  }
  return eqs;
}

Polynomial BirchSystem::base_polynomial() const {
  std::vector<Polynomial::Term> terms;
  for (const auto& t : a) terms.emplace_back(t.exponent, t.coefficient);
  for (const auto& t : b) terms.emplace_back(t.exponent, -t.coefficient);
  return Polynomial(arity, terms);
}

namespace {

using Coefficients = std::map<ExponentVector, RationalVector>;

// Scalar s with v = s (alpha - gamma), if any.
std::optional<Rational> scalar_for(const ExponentVector& alpha, const RationalVector& v,
                                   const RationalVector& gamma) {
  std::optional<Rational> s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rational diff = Rational(static_cast<long>(alpha[i])) - gamma[i];
    if (diff != 0) {
      s = v[i] / diff;
      break;
    }
  }
  if (!s || *s == 0) return std::nullopt;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != *s * (Rational(static_cast<long>(alpha[i])) - gamma[i])) return std::nullopt;
  return s;
}

bool gamma_fits(const Coefficients& coeffs, const RationalVector& gamma) {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [&](const auto& kv) { return scalar_for(kv.first, kv.second, gamma).has_value(); });
}

}  // namespace

BirchSystem recognize_birch(const std::vector<Polynomial>& system) {
  if (system.empty()) throw RecognitionError(RecognitionError::Reason::Shape, "empty system");
  const std::size_t n = system.front().arity();
  if (system.size() != n)
    throw RecognitionError(RecognitionError::Reason::Shape,
                           "need as many equations as variables (" + std::to_string(system.size()) +
                               " vs " + std::to_string(n) + ")");
  Coefficients coeffs;
  for (std::size_t i = 0; i < n; ++i) {
    if (system[i].arity() != n) throw RecognitionError(RecognitionError::Reason::Shape, "arity mismatch");
    for (const auto& [e, c] : system[i].terms()) {
      if (!e.is_nonnegative())
        throw RecognitionError(RecognitionError::Reason::Shape, "negative exponent in system");
      auto [it, inserted] = coeffs.try_emplace(e, RationalVector(n, 0));
      it->second[i] = c;
    }
  }
  if (coeffs.empty()) throw RecognitionError(RecognitionError::Reason::Shape, "system is identically zero");

  // v_j gamma_i - v_i gamma_j = v_j alpha_i - v_i alpha_j for i < j.
  linalg::Matrix m;
  RationalVector rhs;
  for (const auto& [alpha, v] : coeffs)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        RationalVector row(n, 0);
        row[i] = v[j];
        row[j] = -v[i];
        if (row[i] == 0 && row[j] == 0) continue;
        m.push_back(std::move(row));
        rhs.push_back(v[j] * static_cast<long>(alpha[i]) - v[i] * static_cast<long>(alpha[j]));
      }

  RationalVector gamma;
  auto sol = m.empty() ? linalg::LinearSolution{linalg::LinearSolution::Kind::Infinite,
                                                RationalVector(n, 0), linalg::identity(n)}
                       : linalg::solve(m, rhs);
  if (sol.kind == linalg::LinearSolution::Kind::Inconsistent)
    throw RecognitionError(RecognitionError::Reason::Inconsistent,
                           "no gamma makes every coefficient vector parallel to alpha - gamma");
  if (sol.kind == linalg::LinearSolution::Kind::Unique) {
    gamma = sol.particular;
    for (const auto& g : gamma)
      if (!is_integer(g))
        throw RecognitionError(RecognitionError::Reason::NonIntegralGamma,
                               "gamma is not integral (" + g.get_str() + ")");
    for (const auto& g : gamma)
      if (g < 0) throw RecognitionError(RecognitionError::Reason::NegativeGamma, "gamma is negative");
    if (!gamma_fits(coeffs, gamma))
      throw RecognitionError(RecognitionError::Reason::ZeroScalar,
                             "some monomial has alpha = gamma or a zero scalar");
  } else {
    // Underdetermined: search the lattice box spanned by the support.
    std::vector<std::int64_t> lo(n, 0), hi(n, 0);
    bool first = true;
    for (const auto& [alpha, v] : coeffs) {
      for (std::size_t i = 0; i < n; ++i) {
        lo[i] = first ? alpha[i] : std::min(lo[i], alpha[i]);
        hi[i] = first ? alpha[i] : std::max(hi[i], alpha[i]);
      }
      first = false;
    }
    std::vector<std::int64_t> cur = lo;
    bool found = false;
    for (;;) {
      RationalVector cand;
      for (auto c : cur) cand.emplace_back(static_cast<long>(c));
      if (gamma_fits(coeffs, cand)) {
        gamma = cand;
        found = true;
        break;
      }
      bool advanced = false;
      for (std::size_t k = n; k-- > 0;) {
        if (cur[k] < hi[k]) {
          ++cur[k];
          for (std::size_t r = k + 1; r < n; ++r) cur[r] = lo[r];
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
    if (!found)
      throw RecognitionError(RecognitionError::Reason::Inconsistent,
                             "no integral gamma in the support box fits the system");
  }

  BirchSystem bs;
  bs.arity = n;
  bs.gamma = to_exponent(gamma);
  for (const auto& [alpha, v] : coeffs) {
    const Rational s = *scalar_for(alpha, v, gamma);
    if (s > 0) bs.a.push_back({alpha, s});
    else bs.b.push_back({alpha, -s});
  }
  return bs;
}

namespace {

Hypothesis hyp(std::string name, bool ok, std::string evidence) {
  return {std::move(name), ok ? HypothesisStatus::Pass : HypothesisStatus::Fail, std::move(evidence)};
}

std::string join(const std::vector<ExponentVector>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + pts[i].to_string();
  return s.empty() ? "none" : s;
}

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
  return s;
}

std::string describe(const OrthantVerdict& v) {
  switch (v.status) {
    case OrthantStatus::Nonnegative:
      return "nonnegative on the orthant (" + v.method + ", " +
             std::to_string(v.certificate ? v.certificate->circuits.size() : 0) + " circuits)";
    case OrthantStatus::Negative: {
      std::string s = "negative at (";
      for (std::size_t i = 0; i < v.witness->size(); ++i) s += (i ? ", " : "") + (*v.witness)[i].get_str();
      return s + "), value " + v.witness_value->get_str();
    }
    case OrthantStatus::Unknown: return "undecided within budget";
  }
  return "";
}

}  // namespace

Certificate certify(const BirchSystem& bs, const CertifyOptions& options) {
  Certificate cert;
  cert.system = bs;
  const std::size_t n = bs.arity;
  auto& H = cert.hypotheses;
  auto not_applicable = [&]() -> Certificate& {
    cert.verdict = Verdict::NotApplicable;
    return cert;
  };

  std::vector<ExponentVector> a_pts, b_pts;
  for (const auto& t : bs.a) a_pts.push_back(t.exponent);
  for (const auto& t : bs.b) b_pts.push_back(t.exponent);
  const bool positive = std::all_of(bs.a.begin(), bs.a.end(), [](const auto& t) { return t.coefficient > 0; }) &&
                        std::all_of(bs.b.begin(), bs.b.end(), [](const auto& t) { return t.coefficient > 0; });
  H.push_back(hyp("c_a, d_b > 0", positive, positive ? "all weights positive" : "nonpositive weight"));
  const bool lattice = bs.gamma.is_nonnegative() &&
                       std::all_of(a_pts.begin(), a_pts.end(), [](const auto& e) { return e.is_nonnegative(); }) &&
                       std::all_of(b_pts.begin(), b_pts.end(), [](const auto& e) { return e.is_nonnegative(); });
  H.push_back(hyp("exponents in N^n", lattice, "gamma = " + bs.gamma.to_string()));
  if (!positive || !lattice || a_pts.empty()) return not_applicable();

  const auto hull_a = NewtonPolytope::hull(a_pts);
  const bool gamma_interior_a = hull_a.full_dimensional() && hull_a.is_interior(bs.gamma);

  if (b_pts.empty()) {
    H.push_back(hyp("B empty", true, "no negative terms"));
    H.push_back(hyp("dim Conv(A) = n", hull_a.full_dimensional(), "dim " + std::to_string(hull_a.dim())));
    H.push_back(hyp("gamma in interior of Conv(A)", gamma_interior_a, bs.gamma.to_string()));
    if (!gamma_interior_a) return not_applicable();
    cert.verdict = Verdict::ExactlyOnePositiveZero;
    cert.theorem = "Birch";
    return cert;
  }

  auto delta_pts = a_pts;
  delta_pts.push_back(bs.gamma);
  const auto delta = NewtonPolytope::hull(delta_pts);
  H.push_back(hyp("dim Delta = n", delta.full_dimensional(),
                  "dim " + std::to_string(delta.dim()) + ", n = " + std::to_string(n)));
  if (!delta.full_dimensional()) return not_applicable();

  std::vector<ExponentVector> outside;
  for (const auto& b : b_pts)
    if (!delta.is_interior(b)) outside.push_back(b);
  H.push_back(hyp("B in interior of Delta", outside.empty(),
                  outside.empty() ? "all " + std::to_string(b_pts.size()) + " interior"
                                  : "not interior: " + join(outside)));

  std::vector<ExponentVector> simple_vertices;
  std::map<ExponentVector, std::vector<ExponentVector>> neighbours;
  for (const auto& v : delta.vertices()) {
    auto s = delta.is_simple_at(v);
    if (s.simple) {
      simple_vertices.push_back(v);
      neighbours[v] = s.neighbors;
    }
  }
  H.push_back(hyp("Delta simple at some vertex", !simple_vertices.empty(),
                  "simple at " + join(simple_vertices)));
  if (!outside.empty() || simple_vertices.empty()) return not_applicable();

  const bool gamma_vertex = delta.is_vertex(bs.gamma);
  if (!gamma_interior_a && !gamma_vertex) {
    H.push_back(hyp("gamma placement", false, "gamma lies on the boundary of Delta but is not a vertex"));
    return not_applicable();
  }

  // Simple vertex other than gamma, preferring one without gamma as an edge
  // neighbour.
  std::optional<ExponentVector> a0;
  for (int pass = 0; pass < 2 && !a0; ++pass)
    for (const auto& v : simple_vertices) {
      if (v == bs.gamma) continue;
      const auto& nb = neighbours[v];
      if (pass == 0 && std::find(nb.begin(), nb.end(), bs.gamma) != nb.end()) continue;
      a0 = v;
      break;
    }

  const auto base = bs.base_polynomial();
  cert.orthant = decide_orthant(base, options.orthant);
  const auto status = cert.orthant->status;
  const std::string orthant_evidence = describe(*cert.orthant);

  std::vector<std::string> routes;
  if (gamma_interior_a) {
    H.push_back(hyp("gamma in interior of Conv(A)", true, bs.gamma.to_string()));
    routes.push_back("T4.10");
    cert.verdict = Verdict::ExistsPositiveZero;
    if (status == OrthantStatus::Nonnegative) {
      H.push_back(hyp("base nonnegative on orthant", true, orthant_evidence));
      cert.theorem = "T4.8";
      routes.insert(routes.begin(), "T4.8");
    } else if (status == OrthantStatus::Negative && a0) {
      H.push_back(hyp("base not nonnegative on orthant", true, orthant_evidence));
      H.push_back(hyp("simple at vertex a0 != gamma", true,
                      a0->to_string() + " with neighbours " + join(neighbours[*a0])));
      cert.theorem = "P4.5";
      routes.insert(routes.begin(), {"P4.5", "T4.6"});
    } else {
      H.push_back({"base orthant sign", HypothesisStatus::Unknown, orthant_evidence + " (not required)"});
      cert.theorem = "T4.10";
    }
  } else {
    H.push_back(hyp("gamma vertex of Delta", true, bs.gamma.to_string()));
    if (status == OrthantStatus::Nonnegative) {
      H.push_back(hyp("base not nonnegative on orthant", false, orthant_evidence));
      return not_applicable();
    }
    if (status == OrthantStatus::Unknown) {
      H.push_back({"base not nonnegative on orthant", HypothesisStatus::Unknown, orthant_evidence});
      cert.verdict = Verdict::Unknown;
      return cert;
    }
    H.push_back(hyp("base not nonnegative on orthant", true, orthant_evidence));
    const bool simple_at_gamma = neighbours.count(bs.gamma) != 0;
    if (simple_at_gamma) {
      H.push_back(hyp("Delta simple at gamma", true, "neighbours " + join(neighbours[bs.gamma])));
      routes.push_back("P4.1");
    }
    if (a0) {
      const auto& nb = neighbours[*a0];
      std::string ev = a0->to_string() + " with neighbours " + join(nb);
      if (std::find(nb.begin(), nb.end(), bs.gamma) != nb.end()) ev += " (gamma is an edge neighbour)";
      if (!simple_at_gamma) H.push_back(hyp("simple at vertex a0 != gamma", true, ev));
      routes.push_back("P4.5");
    }
    routes.push_back("T4.6");
    cert.theorem = simple_at_gamma ? "P4.1" : "P4.5";
    cert.verdict = Verdict::ExistsPositiveZero;
  }
  H.push_back({"applicable routes", HypothesisStatus::Pass, join(routes)});
  return cert;
}

Certificate validate(const Certificate& cert, const CertifyOptions& options) {
  Certificate out = cert;
  if (cert.verdict != Verdict::ExistsPositiveZero && cert.verdict != Verdict::ExactlyOnePositiveZero)
    return out;
  const auto system = cert.system.reconstruct();
  const auto roots = solve_system(system, options.solve);
  for (const auto& r : roots) out.all_zeros.push_back({r.point, r.value_or_residual});
  if (!out.all_zeros.empty()) out.witness = out.all_zeros.front();
  return out;
}

}  // namespace birch
