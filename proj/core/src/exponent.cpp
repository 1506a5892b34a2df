#include "birch/exponent.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace birch {

ExponentVector ExponentVector::unit(std::size_t arity, std::size_t i, std::int64_t scale) {
  ExponentVector v(arity);
  v.e_[i] = scale;
  return v;
}

std::int64_t ExponentVector::degree() const {
  std::int64_t d = 0;
  for (auto x : e_) d += x;
  return d;
}

bool ExponentVector::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](auto x) { return x == 0; });
}

bool ExponentVector::is_nonnegative() const {
  return std::all_of(e_.begin(), e_.end(), [](auto x) { return x >= 0; });
}

bool ExponentVector::is_even() const {
  return std::all_of(e_.begin(), e_.end(), [](auto x) { return x % 2 == 0; });
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
  assert(arity() == o.arity());
  ExponentVector r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const {
  assert(arity() == o.arity());
  ExponentVector r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

ExponentVector ExponentVector::operator*(std::int64_t k) const {
  ExponentVector r(*this);
  for (auto& x : r.e_) x *= k;
  return r;
}

RationalVector ExponentVector::to_rational() const {
  RationalVector v;
  v.reserve(e_.size());
  for (auto x : e_) v.emplace_back(static_cast<long>(x));
  return v;
}

std::strong_ordering ExponentVector::operator<=>(const ExponentVector& o) const {
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  return e_ <=> o.e_;
}

std::string ExponentVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

ExponentVector to_exponent(const RationalVector& v) {
  std::vector<std::int64_t> e;
  e.reserve(v.size());
  for (const auto& q : v) {
    if (!is_integer(q)) throw std::domain_error("non-integral exponent " + q.get_str());
    if (!q.get_num().fits_slong_p()) throw std::overflow_error("exponent out of range");
    e.push_back(q.get_num().get_si());
  }
  return ExponentVector(std::move(e));
}

}  // namespace birch
