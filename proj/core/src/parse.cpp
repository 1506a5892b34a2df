#include <cctype>

#include "birch/poly.hpp"

namespace birch {

ParseError::ParseError(Kind kind, std::size_t offset, const std::string& what)
    : std::runtime_error(what + " at byte " + std::to_string(offset)),
      kind_(kind),
      offset_(offset) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> vars) : s_(text), vars_(vars) {}

  Polynomial run() {
    std::vector<Polynomial::Term> terms;
    skip_ws();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    terms.push_back(term(sign));
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      const char c = s_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(term(c == '-' ? -1 : 1));
    }
    return Polynomial(vars_.size(), terms);
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what,
                         ParseError::Kind kind = ParseError::Kind::Syntax) const {
    throw ParseError(kind, pos_, what);
  }

  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
  static bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
  }
  static bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Polynomial::Term term(int sign) {
    skip_ws();
    Rational coeff = sign;
    ExponentVector exps(vars_.size());
    if (is_digit(peek()) || peek() == '.') {
      coeff *= coefficient();
    } else {
      factor(exps);
    }
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      factor(exps);
    }
    return {exps, coeff};
  }

  Rational coefficient() {
    const std::size_t start = pos_;
    std::string whole = digits();
    if (peek() == '.') {
      ++pos_;
      std::string frac = digits();
      if (whole.empty() && frac.empty()) fail("malformed decimal");
      return rational_from_string((whole.empty() ? "0" : whole) + "." + frac);
    }
    if (whole.empty()) fail("expected a coefficient");
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      std::string den = digits();
      if (den.empty()) fail("expected a denominator");
      if (Integer(den) == 0) {
        pos_ = start;
        fail("zero denominator");
      }
      Rational q{Integer(whole), Integer(den)};
      q.canonicalize();
      return q;
    }
    return Rational(Integer(whole));
  }

  void factor(ExponentVector& exps) {
    skip_ws();
    const std::size_t start = pos_;
    if (!is_ident_start(peek())) fail("expected a variable");
    while (pos_ < s_.size() && is_ident(s_[pos_])) ++pos_;
    const std::string_view name = s_.substr(start, pos_ - start);
    std::size_t index = vars_.size();
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) index = i;
    if (index == vars_.size()) {
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'", ParseError::Kind::UnknownVariable);
    }
    std::int64_t power = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      std::string d = digits();
      if (d.empty() || peek() == '.' || peek() == '/') {
        pos_ = at;
        fail("exponent must be a nonnegative integer", ParseError::Kind::BadExponent);
      }
      Integer big(d);
      if (!big.fits_slong_p()) {
        pos_ = at;
        fail("exponent too large", ParseError::Kind::BadExponent);
      }
      power = big.get_si();
    }
    exps[index] += power;
  }

  std::string_view s_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse(std::string_view text, std::span<const std::string> variables) {
  if (variables.empty()) throw std::invalid_argument("no variables declared");
  return Parser(text, variables).run();
}

}  // namespace birch
