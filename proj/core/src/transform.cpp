#include "birch/transform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "birch/polytope.hpp"

namespace birch {

MonomialTransform MonomialTransform::identity(std::size_t n) {
  return linear(linalg::identity(n));
}

MonomialTransform MonomialTransform::linear(linalg::Matrix m) {
  const std::size_t n = m.size();
  if (linalg::determinant(m) == 0) throw std::invalid_argument("transform matrix is singular");
  return MonomialTransform{std::move(m), ExponentVector(n), 1, {}};
}

ExponentVector MonomialTransform::map(const ExponentVector& e) const {
  return to_exponent(linalg::multiply(matrix, (e - base).to_rational()));
}

Polynomial apply(const MonomialTransform& t, const Polynomial& f) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.size());
  for (const auto& [e, c] : f.terms()) terms.emplace_back(t.map(e), c);
  return Polynomial(f.arity(), terms);
}

MonomialTransform compose(const MonomialTransform& second, const MonomialTransform& first) {
  // second(first(a)) = T2 (T1 (a - b1) - b2) = T2 T1 (a - b1 - T1^{-1} b2)
  auto inv = linalg::inverse(first.matrix);
  if (!inv) throw std::invalid_argument("compose: singular transform");
  RationalVector shift = linalg::multiply(*inv, second.base.to_rational());
  RationalVector base = first.base.to_rational();
  for (std::size_t i = 0; i < base.size(); ++i) base[i] += shift[i];
  MonomialTransform t{linalg::multiply(second.matrix, first.matrix), to_exponent(base),
                      second.scale * first.scale, {}};
  return t;
}

namespace {

std::vector<double> exp_linear(const linalg::Matrix& m, std::span<const double> v) {
  const std::size_t n = m.size();
  std::vector<double> logs(n), out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(v[i] > 0.0)) throw std::domain_error("point must be strictly positive");
    logs[i] = std::log(v[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += m[i][j].get_d() * logs[j];
    out[i] = std::exp(s);
  }
  return out;
}

}  // namespace

std::vector<double> pullback_point(const MonomialTransform& t, std::span<const double> y) {
  if (y.size() != t.arity()) throw std::invalid_argument("pullback_point: arity mismatch");
  return exp_linear(linalg::transpose(t.matrix), y);
}

std::vector<double> pushforward_point(const MonomialTransform& t, std::span<const double> x) {
  if (x.size() != t.arity()) throw std::invalid_argument("pushforward_point: arity mismatch");
  auto inv = linalg::inverse(linalg::transpose(t.matrix));
  if (!inv) throw std::invalid_argument("pushforward_point: singular transform");
  return exp_linear(*inv, x);
}

Normalization normalize_at_vertex(const Polynomial& f, const ExponentVector& a0) {
  const std::size_t n = f.arity();
  const auto hull = NewtonPolytope::hull(f.support());
  if (!hull.full_dimensional())
    throw DimensionError("normalize_at_vertex: Newton polytope is not full-dimensional");
  if (!hull.is_vertex(a0))
    throw std::invalid_argument("normalize_at_vertex: " + a0.to_string() + " is not a vertex");
  const auto simplicity = hull.is_simple_at(a0);
  if (!simplicity.simple)
    throw std::invalid_argument("normalize_at_vertex: Newton polytope is not simple at " +
                                a0.to_string());
  for (const auto& [e, c] : f.terms())
    if (c < 0 && !hull.is_interior(e))
      throw std::invalid_argument("normalize_at_vertex: negative term " + e.to_string() +
                                  " is not interior to the Newton polytope");

  // Pair neighbours with axes so that edge i leans towards e_i; axis-aligned
  // inputs then keep their orientation.
  std::vector<std::size_t> perm(n), best_perm;
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::int64_t best_score = -1;
  do {
    std::int64_t score = 0;
    for (std::size_t i = 0; i < n; ++i) score += std::abs((simplicity.neighbors[perm[i]] - a0)[i]);
    if (score > best_score) best_score = score, best_perm = perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<ExponentVector> neighbors;
  for (auto k : best_perm) neighbors.push_back(simplicity.neighbors[k]);

  // M has columns a_i - a0; T' = M^{-1} sends a_i - a0 to e_i.
  linalg::Matrix m(n, RationalVector(n));
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = (neighbors[j] - a0).to_rational();
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
  }
  auto t_prime = linalg::inverse(m);
  if (!t_prime) throw std::logic_error("edge directions at a simple vertex are dependent");

  RationalVector images;
  for (const auto& e : f.support()) {
    auto v = linalg::multiply(*t_prime, (e - a0).to_rational());
    images.insert(images.end(), v.begin(), v.end());
  }
  const Integer mu = lcm_of_denominators(images);
  linalg::Matrix t = *t_prime;
  for (auto& row : t)
    for (auto& x : row) x *= 2 * Rational(mu);

  MonomialTransform transform{std::move(t), a0, mu, std::vector<Integer>(n, mu)};
  Normalization out{transform, apply(transform, f), neighbors};

  for (std::size_t i = 0; i < n; ++i) {
    const auto img = transform.map(neighbors[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const Integer expected = i == j ? Integer(2 * mu) : Integer(0);
      if (Integer(static_cast<long>(img[j])) != expected)
        throw std::logic_error("edge neighbour does not map to 2k_i e_i");
    }
  }
  const auto image_hull = NewtonPolytope::hull(out.polynomial.support());
  for (const auto& [e, c] : out.polynomial.terms()) {
    if (c > 0 && !(e.is_even() && e.is_nonnegative()))
      throw std::logic_error("transformed outer exponent " + e.to_string() + " is not in (2N)^n");
    if (c < 0 && !(e.is_nonnegative() && image_hull.is_interior(e)))
      throw std::logic_error("transformed inner exponent " + e.to_string() + " is not interior");
  }
  return out;
}

}  // namespace birch
