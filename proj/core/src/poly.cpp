#include "birch/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace birch {
namespace {

Rational rational_pow(const Rational& base, std::int64_t k) {
  if (k == 0) return 1;
  if (base == 0) {
    if (k < 0) throw std::domain_error("zero coordinate raised to a negative power");
    return 0;
  }
  const unsigned long m = static_cast<unsigned long>(k < 0 ? -k : k);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), m);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), m);
  Rational r = k < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

double double_pow(double base, std::int64_t k) {
  if (k < 0) {
    if (base == 0.0) throw std::domain_error("zero coordinate raised to a negative power");
    return 1.0 / double_pow(base, -k);
  }
  double result = 1.0;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

}  // namespace

Polynomial::Polynomial(std::size_t arity) : arity_(arity) {
  if (arity == 0) throw std::invalid_argument("polynomial arity must be positive");
}

Polynomial::Polynomial(std::size_t arity, const std::vector<Term>& terms) : Polynomial(arity) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

Polynomial Polynomial::constant(std::size_t arity, const Rational& c) {
  Polynomial p(arity);
  p.add_term(ExponentVector(arity), c);
  return p;
}

Polynomial Polynomial::monomial(const ExponentVector& e, const Rational& c) {
  Polynomial p(e.arity());
  p.add_term(e, c);
  return p;
}

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
  if (e.arity() != arity_) throw std::invalid_argument("exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<ExponentVector> Polynomial::support() const {
  std::vector<ExponentVector> s;
  s.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

std::int64_t Polynomial::total_degree() const {
  std::int64_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
  return d;
}

bool Polynomial::has_negative_exponents() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return !t.first.is_nonnegative(); });
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (o.arity_ != arity_) throw std::invalid_argument("arity mismatch");
  Polynomial r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (o.arity_ != arity_) throw std::invalid_argument("arity mismatch");
  Polynomial r(arity_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

Polynomial Polynomial::scaled(const Rational& k) const {
  Polynomial r(arity_);
  if (k == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * k);
  return r;
}

Polynomial Polynomial::shifted(const ExponentVector& shift) const {
  Polynomial r(arity_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + shift, c);
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity_) throw std::invalid_argument("point arity mismatch");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < arity_; ++i) t *= rational_pow(point[i], e[i]);
    sum += t;
  }
  return sum;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (point.size() != arity_) throw std::invalid_argument("point arity mismatch");
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < arity_; ++i) t *= double_pow(point[i], e[i]);
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::partial(std::size_t i) const {
  if (i >= arity_) throw std::out_of_range("partial: variable index");
  Polynomial r(arity_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    ExponentVector d = e;
    d[i] -= 1;
    r.add_term(d, c * static_cast<long>(e[i]));
  }
  return r;
}

std::vector<Polynomial> Polynomial::gradient() const {
  std::vector<Polynomial> g;
  g.reserve(arity_);
  for (std::size_t i = 0; i < arity_; ++i) g.push_back(partial(i));
  return g;
}

Polynomial Polynomial::square_substitute() const {
  Polynomial r(arity_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e * 2, c);
  return r;
}

int Polynomial::descartes_bound() const {
  if (arity_ != 1) throw std::invalid_argument("descartes_bound requires a univariate polynomial");
  int changes = 0;
  int last = 0;
  // Map order is ascending; sign changes are symmetric under reversal.
  for (const auto& [e, c] : terms_) {
    const int s = sgn(c);
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::string Polynomial::to_string(std::span<const std::string> variables) const {
  std::vector<std::string> fallback;
  if (variables.empty()) {
    fallback = default_variables(arity_);
    variables = fallback;
  }
  if (variables.size() != arity_) throw std::invalid_argument("variable count mismatch");
  if (terms_.empty()) return "0";

  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    std::string factors;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += variables[i];
      if (e[i] != 1) factors += "^" + std::to_string(e[i]);
    }
    if (factors.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += factors;
    } else {
      out += mag.get_str() + "*" + factors;
    }
  }
  return out;
}

std::vector<std::string> default_variables(std::size_t n) {
  std::vector<std::string> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i + 1));
  return v;
}

}  // namespace birch
