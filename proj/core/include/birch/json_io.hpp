#pragma once

#include <json.hpp>

#include "birch/certify.hpp"
#include "birch/circuit.hpp"
#include "birch/coercive.hpp"
#include "birch/minimize.hpp"
#include "birch/numeric.hpp"
#include "birch/orthant.hpp"
#include "birch/polytope.hpp"
#include "birch/transform.hpp"

namespace birch {

/// Key order is insertion order so documents are byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const ExponentVector& e);
Json to_json(const Rational& q);
Json to_json(const RationalVector& v);
Json to_json(std::span<const double> v);
Json terms_to_json(const Polynomial& f);
Json to_json(const NewtonPolytope& p);
Json to_json(const CircuitPolynomial& c);
Json to_json(const CoverDecomposition& d, std::span<const std::string> variables);
Json to_json(const CoercivityReport& r);
Json to_json(const OrthantVerdict& v, std::span<const std::string> variables);
Json to_json(const MonomialTransform& t);
Json to_json(const Hypothesis& h);
Json to_json(const MinimizeReport& r);
Json to_json(const NumericResult& r);
Json to_json(const ThresholdResult& r);
Json to_json(const BirchSystem& s);
/// {verdict, theorem, gamma, A, B, hypotheses, witness}
Json to_json(const Certificate& c);

std::string to_string(Coercivity c);
std::string to_string(OrthantStatus s);
std::string to_string(CircuitBound b);

}  // namespace birch
