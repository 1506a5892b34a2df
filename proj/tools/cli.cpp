#include "cli.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "birch/certify.hpp"
#include "birch/coercive.hpp"
#include "birch/minimize.hpp"
#include "birch/numeric.hpp"
#include "birch/orthant.hpp"
#include "birch/polytope.hpp"
#include "birch/transform.hpp"

namespace birch::cli {
namespace {

constexpr std::int64_t kDegreeWarning = 200;

const std::set<std::string> kCommands = {"parse",     "polytope", "circuit", "coercive", "nonneg",
                                         "transform", "minimize", "certify", "solve",    "threshold"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

OrthantOptions orthant_options(const JobSpec& spec) {
  OrthantOptions o;
  o.budget = spec.budget;
  o.seed = spec.seed;
  return o;
}

Polynomial single(const JobSpec& spec) {
  auto polys = split_polynomials(spec.input);
  if (polys.size() != 1)
    throw std::invalid_argument("expected exactly one polynomial, got " + std::to_string(polys.size()));
  return parse(polys.front(), spec.variables);
}

std::vector<Polynomial> system_of(const JobSpec& spec) {
  std::vector<Polynomial> out;
  for (const auto& line : split_polynomials(spec.input)) out.push_back(parse(line, spec.variables));
  if (out.size() != spec.variables.size())
    throw std::invalid_argument("system has " + std::to_string(out.size()) + " equations for " +
                                std::to_string(spec.variables.size()) + " variables");
  return out;
}

RunResult cmd_parse(const JobSpec& spec) {
  const auto f = single(spec);
  RunResult r;
  r.document["canonical"] = f.to_string(spec.variables);
  r.document["terms"] = terms_to_json(f);
  r.document["degree"] = f.total_degree();
  return r;
}

RunResult cmd_polytope(const JobSpec& spec) {
  const auto f = single(spec);
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has an empty Newton polytope");
  const auto hull = NewtonPolytope::hull(f.support());
  RunResult r;
  r.document = to_json(hull);
  if (f.contains(ExponentVector(f.arity()))) {
    Json faces = Json::array();
    for (const auto& face : hull.faces_avoiding_origin()) {
      Json vs = Json::array();
      for (const auto& v : face.vertices) vs.push_back(to_json(v));
      faces.push_back(Json{{"dim", face.dim}, {"vertices", vs}});
    }
    r.document["faces_avoiding_origin"] = faces;
  } else {
    r.document["faces_avoiding_origin"] = nullptr;
  }
  if (hull.full_dimensional()) {
    Json interior = Json::array();
    for (const auto& p : hull.points())
      if (hull.is_interior(p)) interior.push_back(to_json(p));
    r.document["interior_points"] = interior;
  }
  return r;
}

RunResult cmd_circuit(const JobSpec& spec) {
  const auto f = single(spec);
  RunResult r;
  try {
    const auto c = recognize_circuit(f, false);
    const bool even = std::all_of(c.outer.begin(), c.outer.end(),
                                  [](const auto& o) { return o.exponent.is_even() && o.exponent.is_nonnegative(); });
    r.document["circuit"] = to_json(c);
    r.document["even_outer"] = even;
    r.document["nonnegative"] = even ? Json(to_string(nonnegativity(c))) : Json(nullptr);
    r.document["orthant_nonnegative"] = to_string(orthant_nonnegativity(c));
  } catch (const NotACircuit& e) {
    r.document["circuit"] = nullptr;
    r.document["reason"] = e.what();
  }
  return r;
}

RunResult cmd_coercive(const JobSpec& spec) {
  const auto report = analyze_coercivity(single(spec));
  RunResult r;
  r.document = to_json(report);
  r.exit_code = report.verdict == Coercivity::Unknown ? 2 : 0;
  return r;
}

RunResult cmd_nonneg(const JobSpec& spec) {
  const auto f = single(spec);
  const auto verdict = decide_orthant(f, orthant_options(spec));
  RunResult r;
  r.document = to_json(verdict, spec.variables);
  r.exit_code = verdict.status == OrthantStatus::Unknown ? 2 : 0;
  return r;
}

RunResult cmd_transform(const JobSpec& spec) {
  const auto f = single(spec);
  const auto hull = NewtonPolytope::hull(f.support());
  ExponentVector a0;
  if (spec.vertex) {
    a0 = ExponentVector(*spec.vertex);
    if (a0.arity() != f.arity()) throw std::invalid_argument("--vertex has the wrong length");
  } else {
    if (!hull.full_dimensional()) throw std::invalid_argument("Newton polytope is not full-dimensional");
    bool found = false;
    for (const auto& v : hull.vertices())
      if (hull.is_simple_at(v).simple) {
        a0 = v;
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("no simple vertex");
  }
  const auto norm = normalize_at_vertex(f, a0);
  RunResult r;
  r.document["vertex"] = to_json(a0);
  Json nb = Json::array();
  for (const auto& v : norm.neighbors) nb.push_back(to_json(v));
  r.document["neighbors"] = nb;
  r.document["transform"] = to_json(norm.transform);
  r.document["polynomial"] = norm.polynomial.to_string(spec.variables);
  r.document["degree"] = norm.polynomial.total_degree();
  if (norm.polynomial.total_degree() > kDegreeWarning)
    r.warnings.push_back("transformed polynomial has total degree " +
                         std::to_string(norm.polynomial.total_degree()) + " (> 200)");
  return r;
}

RunResult cmd_minimize(const JobSpec& spec) {
  const auto report = check_and_minimize(single(spec), orthant_options(spec));
  RunResult r;
  r.document = to_json(report);
  r.exit_code = report.conclusion == MinimizeConclusion::Unknown ? 2 : 0;
  return r;
}

CertifyOptions certify_options(const JobSpec& spec) {
  CertifyOptions o;
  o.orthant = orthant_options(spec);
  o.solve.starts = spec.starts;
  o.solve.seed = spec.seed;
  return o;
}

RunResult cmd_certify(const JobSpec& spec) {
  const auto system = system_of(spec);
  RunResult r;
  BirchSystem bs;
  try {
    bs = recognize_birch(system);
  } catch (const RecognitionError& e) {
    Json j;
    j["verdict"] = "NotApplicable";
    j["theorem"] = nullptr;
    j["gamma"] = nullptr;
    j["A"] = Json::array();
    j["B"] = Json::array();
    j["hypotheses"] = Json::array({Json{{"name", "Birch-type structure"}, {"status", "fail"}, {"evidence", e.what()}}});
    j["witness"] = nullptr;
    r.document = j;
    return r;
  }
  const auto opts = certify_options(spec);
  auto cert = certify(bs, opts);
  if (spec.validate) cert = validate(cert, opts);
  r.document = to_json(cert);
  r.exit_code = cert.verdict == Verdict::Unknown ? 2 : 0;
  return r;
}

RunResult cmd_solve(const JobSpec& spec) {
  const auto system = system_of(spec);
  SolveOptions o;
  o.starts = spec.starts;
  o.seed = spec.seed;
  const auto roots = solve_system(system, o);
  RunResult r;
  Json arr = Json::array();
  for (const auto& root : roots) arr.push_back(to_json(root));
  r.document["starts"] = spec.starts;
  r.document["seed"] = spec.seed;
  r.document["zeros"] = arr;
  return r;
}

RunResult cmd_threshold(const JobSpec& spec) {
  const auto f = single(spec);
  if (!spec.gamma) throw std::invalid_argument("threshold needs --gamma");
  ThresholdQuery q;
  q.gamma = ExponentVector(*spec.gamma);
  if (q.gamma.arity() != f.arity()) throw std::invalid_argument("--gamma has the wrong length");
  if (spec.mode == "sup") q.mode = ThresholdMode::Sup;
  else if (spec.mode == "inf") q.mode = ThresholdMode::Inf;
  else throw std::invalid_argument("--mode must be inf or sup");
  if (f.contains(q.gamma)) throw std::invalid_argument("base polynomial already has a gamma term");
  for (const auto& [e, c] : f.terms()) {
    if (c > 0) q.outer.push_back({e, c});
    else q.inner.push_back({e, -c});
  }
  ThresholdOptions o;
  o.tol = spec.tol;
  o.minimize.seed = spec.seed;
  o.minimize.max_iterations = spec.budget;
  o.orthant_budget = spec.budget;
  RunResult r;
  try {
    r.document = to_json(estimate_threshold(q, o));
  } catch (const ThresholdError& e) {
    r.document = Json{{"error", e.what()}, {"lo", e.lo()}, {"hi", e.hi()}};
    r.exit_code = 2;
  }
  return r;
}

}  // namespace

std::vector<std::string> split_polynomials(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream parts(line);
    std::string part;
    while (std::getline(parts, part, ';')) {
      part = trim(part);
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

void check_spec(const JobSpec& spec) {
  if (!kCommands.count(spec.command)) throw std::invalid_argument("unknown command '" + spec.command + "'");
  if (spec.variables.empty()) throw std::invalid_argument("--vars must name at least one variable");
  std::set<std::string> seen(spec.variables.begin(), spec.variables.end());
  if (seen.size() != spec.variables.size()) throw std::invalid_argument("--vars must be distinct");
  if (!(spec.tol > 0)) throw std::invalid_argument("--tol must be positive");
  if (spec.budget <= 0) throw std::invalid_argument("--budget must be positive");
  if (spec.starts <= 0) throw std::invalid_argument("--starts must be positive");
}

RunResult run(const JobSpec& spec) {
  try {
    check_spec(spec);
    if (spec.command == "parse") return cmd_parse(spec);
    if (spec.command == "polytope") return cmd_polytope(spec);
    if (spec.command == "circuit") return cmd_circuit(spec);
    if (spec.command == "coercive") return cmd_coercive(spec);
    if (spec.command == "nonneg") return cmd_nonneg(spec);
    if (spec.command == "transform") return cmd_transform(spec);
    if (spec.command == "minimize") return cmd_minimize(spec);
    if (spec.command == "certify") return cmd_certify(spec);
    if (spec.command == "solve") return cmd_solve(spec);
    return cmd_threshold(spec);
  } catch (const ParseError& e) {
    return {1, Json{{"error", e.what()}, {"offset", e.offset()}}, {}};
  } catch (const std::exception& e) {
    return {1, Json{{"error", e.what()}}, {}};
  }
}

}  // namespace birch::cli
