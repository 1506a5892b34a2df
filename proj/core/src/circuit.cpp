#include "birch/circuit.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <map>

#include "birch/combinatorics.hpp"
#include "birch/polytope.hpp"

namespace birch {
namespace {

using Quad = boost::multiprecision::cpp_bin_float_quad;

constexpr double kGuardBand = 1e-12;
// Largest common weight denominator for which the comparison is done by
// exact integer powers.
constexpr unsigned long kExactPowerLimit = 64;

Quad log_quad(const Rational& q) {
  const Quad num(q.get_num().get_str());
  const Quad den(q.get_den().get_str());
  return boost::multiprecision::log(num) - boost::multiprecision::log(den);
}

Quad log_theta_quad(const std::vector<WeightedExponent>& outer, const RationalVector& weights) {
  Quad s = 0;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const Quad w = Quad(weights[i].get_num().get_str()) / Quad(weights[i].get_den().get_str());
    s += w * (log_quad(outer[i].coefficient) - log_quad(weights[i]));
  }
  return s;
}

Rational rational_pow(const Rational& q, unsigned long k) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), k);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

Polynomial CircuitPolynomial::to_polynomial() const {
  std::vector<Polynomial::Term> terms;
  for (const auto& o : outer) terms.emplace_back(o.exponent, o.coefficient);
  terms.emplace_back(inner, -inner_coefficient);
  return Polynomial(inner.arity(), terms);
}

double log_circuit_number(const std::vector<WeightedExponent>& outer, const RationalVector& weights) {
  return static_cast<double>(log_theta_quad(outer, weights));
}

CircuitPolynomial make_circuit(std::vector<WeightedExponent> outer, const ExponentVector& inner,
                               const Rational& inner_coefficient, bool require_even) {
  if (outer.empty()) throw NotACircuit(NotACircuit::Reason::TooFewTerms, "circuit needs outer terms");
  std::sort(outer.begin(), outer.end(),
            [](const auto& a, const auto& b) { return a.exponent < b.exponent; });
  std::vector<ExponentVector> exps;
  for (const auto& o : outer) exps.push_back(o.exponent);
  if (!affinely_independent(exps))
    throw NotACircuit(NotACircuit::Reason::NotSimplex,
                      "condition (1): outer exponents are not the vertices of a simplex");
  for (const auto& o : outer)
    if (o.coefficient <= 0)
      throw NotACircuit(NotACircuit::Reason::NonPositiveOuter,
                        "condition (2): outer coefficient at " + o.exponent.to_string() +
                            " is not positive");
  Barycentric bc;
  try {
    bc = barycentric(exps, inner);
  } catch (const std::invalid_argument&) {
    throw NotACircuit(NotACircuit::Reason::InnerNotInterior,
                      "condition (3): inner exponent " + inner.to_string() +
                          " is outside the affine span of the simplex");
  }
  if (!bc.interior)
    throw NotACircuit(NotACircuit::Reason::InnerNotInterior,
                      "condition (3): inner exponent " + inner.to_string() +
                          " is not interior to the simplex");
  if (require_even)
    for (const auto& e : exps)
      if (!e.is_even() || !e.is_nonnegative())
        throw NotACircuit(NotACircuit::Reason::OddOuter,
                          "outer exponent " + e.to_string() + " is not in (2N)^n");
  CircuitPolynomial c{std::move(outer), inner, inner_coefficient, bc.weights, 0.0, 0.0};
  c.log_circuit_number = log_circuit_number(c.outer, c.weights);
  c.circuit_number = std::exp(c.log_circuit_number);
  return c;
}

CircuitPolynomial recognize_circuit(const Polynomial& f, bool require_even) {
  if (f.size() < 2)
    throw NotACircuit(NotACircuit::Reason::TooFewTerms, "a circuit polynomial has at least two terms");
  const auto hull = NewtonPolytope::hull(f.support());
  std::vector<ExponentVector> non_vertices;
  for (const auto& p : hull.points())
    if (!hull.is_vertex(p)) non_vertices.push_back(p);
  if (non_vertices.empty())
    throw NotACircuit(NotACircuit::Reason::InnerNotInterior,
                      "condition (3): every exponent is a vertex, no inner term is interior");
  if (non_vertices.size() > 1)
    throw NotACircuit(NotACircuit::Reason::NotSimplex,
                      "more than one exponent lies off the vertex set");
  std::vector<WeightedExponent> outer;
  for (const auto& v : hull.vertices()) outer.push_back({v, f.coefficient(v)});
  const auto& beta = non_vertices.front();
  return make_circuit(std::move(outer), beta, -f.coefficient(beta), require_even);
}

CircuitBound compare_with_circuit_number(const CircuitPolynomial& c, const Rational& value) {
  if (value <= 0) return CircuitBound::Strict;
  const Integer l = lcm_of_denominators(c.weights);
  if (l.fits_ulong_p() && l.get_ui() <= kExactPowerLimit) {
    // value^L against prod (c_a / lambda_a)^(lambda_a L), all exact.
    const unsigned long L = l.get_ui();
    Rational rhs = 1;
    for (std::size_t i = 0; i < c.outer.size(); ++i) {
      const Rational power = c.weights[i] * Rational(l);
      rhs *= rational_pow(c.outer[i].coefficient / c.weights[i], power.get_num().get_ui());
    }
    const Rational lhs = rational_pow(value, L);
    if (lhs < rhs) return CircuitBound::Strict;
    if (lhs == rhs) return CircuitBound::Boundary;
    return CircuitBound::Violated;
  }
  const Quad diff = log_quad(value) - log_theta_quad(c.outer, c.weights);
  if (diff < -kGuardBand) return CircuitBound::Strict;
  if (diff <= kGuardBand) return CircuitBound::Boundary;
  return CircuitBound::Violated;
}

CircuitBound nonnegativity(const CircuitPolynomial& c) {
  const bool even_inner = c.inner.is_even() && c.inner.is_nonnegative();
  return compare_with_circuit_number(c, even_inner ? c.inner_coefficient : abs(c.inner_coefficient));
}

bool is_nonnegative(const CircuitPolynomial& c) { return nonnegativity(c) != CircuitBound::Violated; }

CircuitBound orthant_nonnegativity(const CircuitPolynomial& c) {
  return compare_with_circuit_number(c, c.inner_coefficient);
}

bool is_nonnegative_on_orthant(const CircuitPolynomial& c) {
  return orthant_nonnegativity(c) != CircuitBound::Violated;
}

Polynomial CoverDecomposition::total() const {
  Polynomial sum = leftover;
  for (const auto& c : circuits) sum = sum + c.to_polynomial();
  return sum;
}

CoverDecomposition cover_decompose(const CoverInput& input) {
  std::size_t arity = 0;
  if (!input.outer.empty()) arity = input.outer.front().exponent.arity();
  else if (!input.inner.empty()) arity = input.inner.front().exponent.arity();
  else if (input.gamma) arity = input.gamma->exponent.arity();
  else throw std::invalid_argument("cover_decompose: empty input");

  std::vector<WeightedExponent> outer = input.outer;
  std::sort(outer.begin(), outer.end(),
            [](const auto& a, const auto& b) { return a.exponent < b.exponent; });
  for (const auto& o : outer)
    if (o.coefficient <= 0) throw std::invalid_argument("cover_decompose: outer coefficients must be positive");

  const std::size_t extra = input.gamma ? 1 : 0;
  const std::size_t max_subset = arity + 1 - extra;
  const std::size_t min_subset = input.gamma ? 1 : 2;

  std::vector<std::vector<std::size_t>> chosen;
  std::vector<RationalVector> chosen_weights;
  for (const auto& b : input.inner) {
    if (b.coefficient <= 0) throw std::invalid_argument("cover_decompose: inner weights must be positive");
    std::optional<std::vector<std::size_t>> pick;
    RationalVector weights;
    for (std::size_t k = min_subset; k <= max_subset && !pick; ++k) {
      for_each_combination(outer.size(), k, [&](const std::vector<std::size_t>& idx) {
        std::vector<ExponentVector> simplex;
        for (auto i : idx) simplex.push_back(outer[i].exponent);
        if (input.gamma) simplex.push_back(input.gamma->exponent);
        if (!affinely_independent(simplex)) return false;
        try {
          auto bc = barycentric(simplex, b.exponent);
          if (!bc.interior) return false;
          weights = bc.weights;
        } catch (const std::invalid_argument&) {
          return false;
        }
        pick = idx;
        return true;
      });
    }
    if (!pick)
      throw NoCover(b.exponent, "no covering simplex for inner exponent " + b.exponent.to_string());
    chosen.push_back(*pick);
  }

  std::vector<std::size_t> multiplicity(outer.size(), 0);
  for (const auto& idx : chosen)
    for (auto i : idx) ++multiplicity[i];

  CoverDecomposition out{{}, {}, Polynomial(arity)};
  const Rational gamma_share =
      input.gamma && !input.inner.empty()
          ? input.gamma->coefficient / Rational(static_cast<long>(input.inner.size()))
          : Rational(0);
  for (std::size_t j = 0; j < input.inner.size(); ++j) {
    std::vector<WeightedExponent> parts;
    std::vector<ExponentVector> simplex;
    for (auto i : chosen[j]) {
      parts.push_back({outer[i].exponent,
                       outer[i].coefficient / Rational(static_cast<long>(multiplicity[i]))});
      simplex.push_back(outer[i].exponent);
    }
    if (input.gamma) {
      parts.push_back({input.gamma->exponent, gamma_share});
      simplex.push_back(input.gamma->exponent);
    }
    out.circuits.push_back(
        make_circuit(std::move(parts), input.inner[j].exponent, input.inner[j].coefficient, false));
    out.simplices.push_back(std::move(simplex));
  }

  std::vector<Polynomial::Term> rest;
  for (std::size_t i = 0; i < outer.size(); ++i)
    if (multiplicity[i] == 0) rest.emplace_back(outer[i].exponent, outer[i].coefficient);
  if (input.gamma && input.inner.empty()) rest.emplace_back(input.gamma->exponent, input.gamma->coefficient);
  out.leftover = Polynomial(arity, rest);
  return out;
}

}  // namespace birch
