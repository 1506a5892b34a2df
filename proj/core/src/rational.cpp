#include "birch/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace birch {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::size_t i = 0;
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
    std::string digits;
    std::size_t frac = 0;
    bool seen_dot = false;
    for (; i < s.size(); ++i) {
      if (s[i] == '.') {
        if (seen_dot) throw std::invalid_argument("malformed decimal: " + s);
        seen_dot = true;
      } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        digits.push_back(s[i]);
        if (seen_dot) ++frac;
      } else {
        throw std::invalid_argument("malformed decimal: " + s);
      }
    }
    if (digits.empty()) throw std::invalid_argument("malformed decimal: " + s);
    Integer num(digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    Rational q(num, den);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("malformed rational: " + s);
  q.canonicalize();
  return q;
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  Rational q(x);
  return q;
}

Rational best_rational(const Rational& x, const Integer& max_den) {
  if (x.get_den() <= max_den) return x;
  // Convergents h/k of the continued fraction of x.
  Integer h_prev2 = 0, h_prev = 1, k_prev2 = 1, k_prev = 0;
  Integer num = x.get_num(), den = x.get_den();
  Rational best = x;
  while (den != 0) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Integer h = a * h_prev + h_prev2;
    Integer k = a * k_prev + k_prev2;
    if (k > max_den) {
      // Largest admissible semiconvergent.
      Integer t = (max_den - k_prev2) / k_prev;
      Rational semi(t * h_prev + h_prev2, t * k_prev + k_prev2);
      semi.canonicalize();
      Rational conv(h_prev, k_prev);
      conv.canonicalize();
      return abs(semi - x) < abs(conv - x) ? semi : conv;
    }
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    Integer r = num - a * den;
    num = den;
    den = r;
    best = Rational(h, k);
  }
  best.canonicalize();
  return best;
}

Integer lcm_of_denominators(const RationalVector& values) {
  Integer l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace birch
