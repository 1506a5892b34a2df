#include "oracles.hpp"

#include <cmath>
#include <set>

namespace oracle {

Point to_point(const birch::ExponentVector& e) {
  Point p;
  for (auto v : e.entries()) p.emplace_back(static_cast<long>(v));
  return p;
}

Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) return std::nullopt;  // free column
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < cols) return std::nullopt;
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
  return x;
}

namespace {

bool subset_holds(const std::vector<Point>& s, const std::vector<std::size_t>& idx, const Point& p) {
  const std::size_t d = p.size();
  std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(idx.size()));
  std::vector<Rational> b(d + 1);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    for (std::size_t j = 0; j < d; ++j) a[j][k] = s[idx[k]][j];
    a[d][k] = 1;
  }
  for (std::size_t j = 0; j < d; ++j) b[j] = p[j];
  b[d] = 1;
  const auto lambda = solve_unique(a, b);
  if (!lambda) return false;
  for (const auto& l : *lambda)
    if (l < 0) return false;
  return true;
}

bool search(const std::vector<Point>& s, const Point& p, std::vector<std::size_t>& idx, std::size_t from,
            std::size_t max_size) {
  if (!idx.empty() && subset_holds(s, idx, p)) return true;
  if (idx.size() == max_size) return false;
  for (std::size_t i = from; i < s.size(); ++i) {
    idx.push_back(i);
    if (search(s, p, idx, i + 1, max_size)) return true;
    idx.pop_back();
  }
  return false;
}

}  // namespace

bool in_hull(const std::vector<Point>& s, const Point& p) {
  std::vector<std::size_t> idx;
  return search(s, p, idx, 0, p.size() + 1);
}

std::vector<std::size_t> vertices(const std::vector<Point>& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<Point> others;
    bool duplicate = false;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j == i) continue;
      if (s[j] == s[i]) duplicate = duplicate || j < i;
      others.push_back(s[j]);
    }
    if (duplicate) continue;
    std::vector<Point> distinct;
    for (const auto& q : others)
      if (q != s[i]) distinct.push_back(q);
    if (!in_hull(distinct, s[i])) out.push_back(i);
  }
  return out;
}

bool in_interior(const std::vector<Point>& s, const Point& p) {
  const Rational delta(1, 1'000'000);
  for (std::size_t j = 0; j < p.size(); ++j)
    for (int sign : {-1, 1}) {
      Point q = p;
      q[j] += sign * delta;
      if (!in_hull(s, q)) return false;
    }
  return true;
}

std::vector<double> fd_gradient(const birch::Polynomial& f, const std::vector<double>& x, double h) {
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto hi = x, lo = x;
    const double step = h * std::max(1.0, std::abs(x[i]));
    hi[i] += step;
    lo[i] -= step;
    g[i] = (f.evaluate(std::span<const double>(hi)) - f.evaluate(std::span<const double>(lo))) / (2 * step);
  }
  return g;
}

std::vector<birch::Polynomial> birch_system(
    const std::vector<std::pair<std::vector<std::int64_t>, Rational>>& a,
    const std::vector<std::pair<std::vector<std::int64_t>, Rational>>& b,
    const std::vector<std::int64_t>& gamma) {
  const std::size_t n = gamma.size();
  std::vector<birch::Polynomial> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<birch::Polynomial::Term> terms;
    for (const auto& [e, c] : a) terms.emplace_back(birch::ExponentVector(e), c * Rational(static_cast<long>(e[i] - gamma[i])));
    for (const auto& [e, d] : b) terms.emplace_back(birch::ExponentVector(e), -d * Rational(static_cast<long>(e[i] - gamma[i])));
    out.emplace_back(n, terms);
  }
  return out;
}

int sign_variations(const std::vector<Rational>& descending) {
  int changes = 0, last = 0;
  for (const auto& c : descending) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<Rational> expand(const std::vector<Rational>& roots, const std::vector<Rational>& q) {
  std::vector<Rational> p = q;
  for (const auto& r : roots) {
    std::vector<Rational> next(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] -= r * p[k];
    }
    p = std::move(next);
  }
  return p;
}

}  // namespace oracle

namespace fixture {

using birch::ExponentVector;
using birch::Rational;

std::vector<ExponentVector> cube() {
  std::vector<ExponentVector> out;
  for (int mask = 0; mask < 8; ++mask)
    out.push_back({2 * (mask & 1), 2 * ((mask >> 1) & 1), 2 * ((mask >> 2) & 1)});
  return out;
}

std::vector<ExponentVector> octahedron() {
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (int s : {-1, 1}) {
      ExponentVector v{1, 1, 1};
      v[i] += s;
      out.push_back(v);
    }
  return out;
}

std::vector<ExponentVector> cube_neighbors(const ExponentVector& v) {
  std::vector<ExponentVector> out;
  for (const auto& w : cube()) {
    int diff = 0;
    for (std::size_t i = 0; i < 3; ++i) diff += v[i] != w[i];
    if (diff == 1) out.push_back(w);
  }
  return out;
}

std::vector<ExponentVector> octahedron_neighbors(const ExponentVector& v) {
  std::vector<ExponentVector> out;
  for (const auto& w : octahedron()) {
    if (w == v) continue;
    if ((v + w) == ExponentVector{2, 2, 2}) continue;  // antipodal
    out.push_back(w);
  }
  return out;
}

std::vector<ExponentVector> random_points(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                          std::int64_t range) {
  std::uniform_int_distribution<std::int64_t> coord(0, range);
  std::vector<ExponentVector> out;
  for (std::size_t k = 0; k < m; ++k) {
    ExponentVector e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = coord(rng);
    out.push_back(e);
  }
  return out;
}

}  // namespace fixture

namespace fixture {

namespace {

/// Random affinely independent simplex in [0, range]^n.
std::vector<ExponentVector> random_simplex(std::mt19937_64& rng, std::size_t n, std::int64_t range) {
  for (;;) {
    auto pts = random_points(rng, n, n + 1, range);
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[j][i] = static_cast<long>(pts[i + 1][j] - pts[0][j]);
    if (oracle::solve_unique(m, std::vector<Rational>(n, Rational(0)))) return pts;
  }
}

}  // namespace

std::pair<birch::Polynomial, ExponentVector> random_admissible(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> coeff(1, 9);
  std::vector<birch::Polynomial::Term> terms;
  std::vector<ExponentVector> outer;
  if (rng() % 2 == 0) {
    outer = random_simplex(rng, n, 4);
  } else {
    std::uniform_int_distribution<std::int64_t> side(1, 4), shift(0, 3);
    ExponentVector lo(n), len(n);
    for (std::size_t i = 0; i < n; ++i) lo[i] = shift(rng), len[i] = side(rng);
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
      ExponentVector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = lo[i] + ((mask >> i) & 1 ? len[i] : 0);
      outer.push_back(v);
    }
  }
  const auto scale = static_cast<std::int64_t>(outer.size() + 2);
  for (auto& a : outer) a = a * scale;
  for (const auto& a : outer) terms.emplace_back(a, coeff(rng));
  // Inner points: convex combinations with positive weights summing to scale.
  std::uniform_int_distribution<std::size_t> pick(0, outer.size() - 1);
  const int inner_count = 1 + static_cast<int>(rng() % 3);
  for (int k = 0; k < inner_count; ++k) {
    ExponentVector b(n);
    std::vector<std::int64_t> w(outer.size(), 0);
    std::int64_t left = scale;
    for (std::size_t j = 0; j < outer.size() && left > 0; ++j) {
      w[j] = 1;
      --left;
    }
    while (left > 0) {
      ++w[pick(rng)];
      --left;
    }
    for (std::size_t j = 0; j < outer.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) b[i] += w[j] * outer[j][i];
    for (std::size_t i = 0; i < n; ++i) b[i] /= scale;
    terms.emplace_back(b, -coeff(rng));
  }
  birch::Polynomial f(n, terms);
  return {f, outer[pick(rng)]};
}

std::vector<std::vector<std::int64_t>> random_unimodular(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> mult(-1, 1);
  for (int step = 0; step < 3; ++step) {
    const std::size_t r = idx(rng), c = idx(rng);
    if (r == c) {
      for (auto& v : m[r]) v = -v;
      continue;
    }
    const int k = mult(rng);
    for (std::size_t j = 0; j < n; ++j) m[r][j] += k * m[c][j];
  }
  return m;
}

birch::Polynomial random_negative_circuit(std::mt19937_64& rng, std::size_t n) {
  const auto simplex = random_simplex(rng, n, 3);
  std::uniform_int_distribution<int> coeff(1, 4);
  std::vector<birch::Polynomial::Term> terms;
  ExponentVector centroid(n);
  Rational sum = 0;
  for (const auto& a : simplex) {
    const Rational c = coeff(rng);
    sum += c;
    terms.emplace_back(a * static_cast<std::int64_t>(n + 1), c);
    centroid = centroid + a;
  }
  // The circuit number is a weighted geometric mean of c_a / lambda_a,
  // hence at most sum c_a.
  terms.emplace_back(centroid, -(sum + 1));
  return birch::Polynomial(n, terms);
}

}  // namespace fixture
