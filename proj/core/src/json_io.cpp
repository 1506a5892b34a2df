#include "birch/json_io.hpp"

namespace birch {

std::string to_string(Coercivity c) {
  switch (c) {
    case Coercivity::Coercive: return "Coercive";
    case Coercivity::NotCoercive: return "NotCoercive";
    case Coercivity::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(OrthantStatus s) {
  switch (s) {
    case OrthantStatus::Nonnegative: return "Nonnegative";
    case OrthantStatus::Negative: return "Negative";
    case OrthantStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(CircuitBound b) {
  switch (b) {
    case CircuitBound::Strict: return "strict";
    case CircuitBound::Boundary: return "boundary";
    case CircuitBound::Violated: return "violated";
  }
  return "violated";
}

Json to_json(const ExponentVector& e) {
  Json j = Json::array();
  for (auto x : e) j.push_back(x);
  return j;
}

Json to_json(const Rational& q) { return q.get_str(); }

Json to_json(const RationalVector& v) {
  Json j = Json::array();
  for (const auto& q : v) j.push_back(q.get_str());
  return j;
}

Json to_json(std::span<const double> v) {
  Json j = Json::array();
  for (double x : v) j.push_back(x);
  return j;
}

Json terms_to_json(const Polynomial& f) {
  Json j = Json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    j.push_back(Json{{"exp", to_json(it->first)}, {"coeff", to_json(it->second)}});
  return j;
}

Json to_json(const NewtonPolytope& p) {
  Json j;
  j["dim"] = p.dim();
  j["full_dimensional"] = p.full_dimensional();
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(to_json(v));
  j["vertices"] = verts;
  Json facets = Json::array();
  for (const auto& f : p.facets()) facets.push_back(Json{{"normal", to_json(f.normal)}, {"offset", to_json(f.offset)}});
  j["facets"] = facets;
  if (p.full_dimensional()) {
    Json simple = Json::array();
    for (const auto& v : p.vertices()) {
      auto s = p.is_simple_at(v);
      Json nb = Json::array();
      for (const auto& w : s.neighbors) nb.push_back(to_json(w));
      simple.push_back(Json{{"vertex", to_json(v)}, {"simple", s.simple}, {"neighbors", nb}});
    }
    j["simplicity"] = simple;
  }
  return j;
}

Json to_json(const CircuitPolynomial& c) {
  Json j;
  Json outer = Json::array();
  for (const auto& o : c.outer) outer.push_back(Json{{"exp", to_json(o.exponent)}, {"c", to_json(o.coefficient)}});
  j["outer"] = outer;
  j["inner"] = Json{{"exp", to_json(c.inner)}, {"d", to_json(c.inner_coefficient)}};
  j["weights"] = to_json(c.weights);
  j["circuit_number"] = c.circuit_number;
  return j;
}

Json to_json(const CoverDecomposition& d, std::span<const std::string> variables) {
  Json j;
  Json circuits = Json::array();
  for (const auto& c : d.circuits) {
    Json cj = to_json(c);
    cj["orthant"] = to_string(orthant_nonnegativity(c));
    circuits.push_back(cj);
  }
  j["circuits"] = circuits;
  j["leftover"] = d.leftover.to_string(variables);
  return j;
}

Json to_json(const CoercivityReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["necessary"] = Json{{"even_vertices", r.necessary.even_vertices},
                        {"positive_vertices", r.necessary.positive_vertices},
                        {"axis_vertices", r.necessary.axis_vertices}};
  Json d = Json::array();
  for (const auto& e : r.d_set) d.push_back(to_json(e));
  j["D"] = d;
  j["sufficient"] = r.sufficient;
  j["constant_shifted"] = r.shifted;
  return j;
}

Json to_json(const OrthantVerdict& v, std::span<const std::string> variables) {
  Json j;
  j["status"] = to_string(v.status);
  j["method"] = v.method;
  j["certificate"] = v.certificate ? to_json(*v.certificate, variables) : Json(nullptr);
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  j["witness_value"] = v.witness_value ? to_json(*v.witness_value) : Json(nullptr);
  return j;
}

Json to_json(const MonomialTransform& t) {
  Json j;
  Json m = Json::array();
  for (const auto& row : t.matrix) m.push_back(to_json(row));
  j["matrix"] = m;
  j["base"] = to_json(t.base);
  j["mu"] = t.scale.get_str();
  Json k = Json::array();
  for (const auto& x : t.axis_degrees) k.push_back(x.get_str());
  j["axis_degrees"] = k;
  return j;
}

Json to_json(const Hypothesis& h) {
  return Json{{"name", h.name}, {"status", to_string(h.status)}, {"evidence", h.evidence}};
}

Json to_json(const MinimizeReport& r) {
  Json j;
  j["conclusion"] = to_string(r.conclusion);
  Json hs = Json::array();
  for (const auto& h : r.hypotheses) hs.push_back(to_json(h));
  j["hypotheses"] = hs;
  j["minimizer"] = r.minimizer ? to_json(std::span<const double>(*r.minimizer)) : Json(nullptr);
  j["value"] = r.value ? Json(*r.value) : Json(nullptr);
  j["gradient_norm"] = r.gradient_norm ? Json(*r.gradient_norm) : Json(nullptr);
  return j;
}

Json to_json(const NumericResult& r) {
  return Json{{"point", to_json(std::span<const double>(r.point))},
              {"residual", r.value_or_residual},
              {"iterations", r.iterations},
              {"converged", r.converged}};
}

Json to_json(const ThresholdResult& r) {
  Json j;
  j["lo"] = r.lo;
  j["hi"] = r.hi;
  j["oracle_calls"] = r.oracle_calls;
  if (r.near_zero)
    j["near_zero"] = Json{{"point", to_json(std::span<const double>(r.near_zero->point))},
                          {"value", r.near_zero->value_or_residual}};
  else
    j["near_zero"] = nullptr;
  return j;
}

Json to_json(const BirchSystem& s) {
  Json j;
  j["gamma"] = to_json(s.gamma);
  Json a = Json::array(), b = Json::array();
  for (const auto& t : s.a) a.push_back(Json{{"exp", to_json(t.exponent)}, {"c", to_json(t.coefficient)}});
  for (const auto& t : s.b) b.push_back(Json{{"exp", to_json(t.exponent)}, {"d", to_json(t.coefficient)}});
  j["A"] = a;
  j["B"] = b;
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["theorem"] = c.theorem ? Json(*c.theorem) : Json(nullptr);
  const Json sys = to_json(c.system);
  j["gamma"] = sys["gamma"];
  j["A"] = sys["A"];
  j["B"] = sys["B"];
  Json hs = Json::array();
  for (const auto& h : c.hypotheses) hs.push_back(to_json(h));
  j["hypotheses"] = hs;
  if (c.witness)
    j["witness"] = Json{{"point", to_json(std::span<const double>(c.witness->point))},
                        {"residual", c.witness->residual}};
  else
    j["witness"] = nullptr;
  return j;
}

}  // namespace birch
