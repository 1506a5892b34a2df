#include "birch/expsum.hpp"

#include <algorithm>
#include <cmath>

namespace birch {

ExpSum::ExpSum(const Polynomial& f) : arity_(f.arity()) {
  for (const auto& [e, c] : f.terms()) {
    coeffs_.push_back(c.get_d());
    for (auto x : e) exps_.push_back(static_cast<double>(x));
  }
}

double ExpSum::value(std::span<const double> u) const {
  double s = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    double dot = 0.0;
    for (std::size_t i = 0; i < arity_; ++i) dot += exps_[k * arity_ + i] * u[i];
    s += coeffs_[k] * std::exp(dot);
  }
  return s;
}

double ExpSum::max_term(std::span<const double> u) const {
  double m = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    double dot = 0.0;
    for (std::size_t i = 0; i < arity_; ++i) dot += exps_[k * arity_ + i] * u[i];
    m = std::max(m, std::abs(coeffs_[k]) * std::exp(dot));
  }
  return m;
}

double ExpSum::value_and_gradient(std::span<const double> u, std::span<double> grad) const {
  std::fill(grad.begin(), grad.end(), 0.0);
  double s = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const double* a = &exps_[k * arity_];
    double dot = 0.0;
    for (std::size_t i = 0; i < arity_; ++i) dot += a[i] * u[i];
    const double t = coeffs_[k] * std::exp(dot);
    s += t;
    for (std::size_t i = 0; i < arity_; ++i) grad[i] += t * a[i];
  }
  return s;
}

void ExpSum::hessian(std::span<const double> u, std::span<double> hess) const {
  std::fill(hess.begin(), hess.end(), 0.0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const double* a = &exps_[k * arity_];
    double dot = 0.0;
    for (std::size_t i = 0; i < arity_; ++i) dot += a[i] * u[i];
    const double t = coeffs_[k] * std::exp(dot);
    for (std::size_t i = 0; i < arity_; ++i)
      for (std::size_t j = 0; j < arity_; ++j) hess[i * arity_ + j] += t * a[i] * a[j];
  }
}

}  // namespace birch
