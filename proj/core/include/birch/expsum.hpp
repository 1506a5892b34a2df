#pragma once

#include <span>
#include <vector>

#include "birch/poly.hpp"

namespace birch {

/// f(exp(u)) = sum_k c_k exp(<a_k, u>) as a smooth function of log
/// coordinates u, with floating-point coefficients.
class ExpSum {
 public:
  explicit ExpSum(const Polynomial& f);

  std::size_t arity() const { return arity_; }
  std::size_t size() const { return coeffs_.size(); }

  double value(std::span<const double> u) const;
  /// Largest |c_k exp(<a_k,u>)|, the natural roundoff scale of value(u).
  double max_term(std::span<const double> u) const;
  double value_and_gradient(std::span<const double> u, std::span<double> grad) const;
  /// Row-major n x n Hessian.
  void hessian(std::span<const double> u, std::span<double> hess) const;

 private:
  std::size_t arity_;
  std::vector<double> coeffs_;
  std::vector<double> exps_;  ///< row-major size() x arity_
};

}  // namespace birch
