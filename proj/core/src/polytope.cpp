#include "birch/polytope.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "birch/combinatorics.hpp"

namespace birch {
namespace {

RationalVector difference(const RationalVector& a, const RationalVector& b) {
  RationalVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

// Scales a nonzero rational vector to the primitive integer vector with the
// same direction.
RationalVector primitive(RationalVector v) {
  const Integer l = lcm_of_denominators(v);
  Integer g = 0;
  for (auto& x : v) {
    x *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g != 0 && g != 1)
    for (auto& x : v) x /= Rational(g);
  return v;
}

}  // namespace

NewtonPolytope NewtonPolytope::hull(std::vector<ExponentVector> points) {
  if (points.empty()) throw std::invalid_argument("hull of an empty point set");
  NewtonPolytope P;
  P.arity_ = points.front().arity();
  for (const auto& p : points)
    if (p.arity() != P.arity_) throw std::invalid_argument("hull: mixed arity");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  P.points_ = std::move(points);

  std::vector<RationalVector> coords;
  for (const auto& p : P.points_) coords.push_back(p.to_rational());
  P.dim_ = linalg::affine_dimension(coords);
  const auto d = static_cast<std::size_t>(P.dim_);

  if (P.full_dimensional()) {
    P.origin_ = RationalVector(P.arity_, 0);
    P.basis_ = linalg::identity(P.arity_);
    P.local_ = coords;
  } else {
    // Greedy basis of difference vectors from the first point.
    P.origin_ = coords[0];
    for (std::size_t i = 1; i < coords.size() && P.basis_.size() < d; ++i) {
      auto trial = P.basis_;
      trial.push_back(difference(coords[i], P.origin_));
      if (linalg::rank(trial) == trial.size()) P.basis_ = std::move(trial);
    }
    for (const auto& p : P.points_) P.local_.push_back(*P.local_coordinates(p));
  }

  if (d == 0) {
    P.vertices_ = P.points_;
    return P;
  }

  const std::size_t m = P.points_.size();
  std::set<RationalVector> seen;
  for_each_combination(m, d, [&](const std::vector<std::size_t>& idx) {
    std::vector<RationalVector> sub;
    for (auto i : idx) sub.push_back(P.local_[i]);
    if (linalg::affine_dimension(sub) != static_cast<int>(d) - 1) return false;
    linalg::Matrix rows;
    for (std::size_t k = 1; k < sub.size(); ++k) rows.push_back(difference(sub[k], sub[0]));
    auto ns = linalg::nullspace(rows, d);
    if (ns.size() != 1) return false;
    RationalVector normal = primitive(ns[0]);
    Rational offset = linalg::dot(normal, sub[0]);
    bool any_above = false, any_below = false;
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational v = linalg::dot(normal, P.local_[i]);
      if (v > offset) any_above = true;
      else if (v < offset) any_below = true;
      else on.push_back(i);
      if (any_above && any_below) return false;
    }
    if (any_above) {
      for (auto& x : normal) x = -x;
      offset = -offset;
    }
    if (seen.insert(normal).second) P.local_facets_.push_back({normal, offset, std::move(on)});
    return false;
  });

  for (std::size_t i = 0; i < m; ++i) {
    linalg::Matrix tight;
    for (const auto& f : P.local_facets_)
      if (std::binary_search(f.on.begin(), f.on.end(), i)) tight.push_back(f.normal);
    if (linalg::rank(tight) == d) P.vertices_.push_back(P.points_[i]);
  }
  if (P.full_dimensional())
    for (const auto& f : P.local_facets_) P.facets_.push_back({f.normal, f.offset});
  return P;
}

std::optional<RationalVector> NewtonPolytope::local_coordinates(const ExponentVector& p) const {
  if (p.arity() != arity_) throw std::invalid_argument("point arity mismatch");
  RationalVector q = difference(p.to_rational(), origin_);
  if (basis_.empty()) {
    for (const auto& x : q)
      if (x != 0) return std::nullopt;
    return RationalVector{};
  }
  auto sol = linalg::solve(linalg::transpose(basis_), q);
  if (sol.kind == linalg::LinearSolution::Kind::Inconsistent) return std::nullopt;
  return sol.particular;
}

bool NewtonPolytope::is_vertex(const ExponentVector& p) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), p);
}

bool NewtonPolytope::contains(const ExponentVector& p) const {
  auto q = local_coordinates(p);
  if (!q) return false;
  return std::all_of(local_facets_.begin(), local_facets_.end(),
                     [&](const LocalFacet& f) { return linalg::dot(f.normal, *q) <= f.offset; });
}

bool NewtonPolytope::is_relative_interior(const ExponentVector& p) const {
  if (dim_ == 0) return false;
  auto q = local_coordinates(p);
  if (!q) return false;
  return std::all_of(local_facets_.begin(), local_facets_.end(),
                     [&](const LocalFacet& f) { return linalg::dot(f.normal, *q) < f.offset; });
}

bool NewtonPolytope::is_interior(const ExponentVector& p) const {
  if (!full_dimensional())
    throw DimensionError("interior test needs a full-dimensional hull (dim " +
                         std::to_string(dim_) + " < " + std::to_string(arity_) + ")");
  return is_relative_interior(p);
}

std::vector<std::vector<std::size_t>> NewtonPolytope::face_index_sets() const {
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : local_facets_)
    if (seen.insert(f.on).second) out.push_back(f.on);
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& f : local_facets_) {
      std::vector<std::size_t> inter;
      std::set_intersection(out[k].begin(), out[k].end(), f.on.begin(), f.on.end(),
                            std::back_inserter(inter));
      if (!inter.empty() && seen.insert(inter).second) out.push_back(std::move(inter));
    }
  }
  return out;
}

Face NewtonPolytope::make_face(const std::vector<std::size_t>& idx) const {
  Face face;
  std::vector<RationalVector> pts;
  for (auto i : idx) {
    face.points.push_back(points_[i]);
    if (is_vertex(points_[i])) face.vertices.push_back(points_[i]);
    pts.push_back(local_[i]);
  }
  face.dim = linalg::affine_dimension(pts);
  return face;
}

std::vector<Face> NewtonPolytope::faces() const {
  std::vector<Face> out;
  for (const auto& idx : face_index_sets()) out.push_back(make_face(idx));
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  return out;
}

std::vector<Face> NewtonPolytope::faces_avoiding_origin() const {
  const ExponentVector zero(arity_);
  if (!std::binary_search(points_.begin(), points_.end(), zero))
    throw std::invalid_argument("faces_avoiding_origin: origin is not a point of the set");
  std::vector<Face> out;
  for (auto& face : faces())
    if (!std::binary_search(face.points.begin(), face.points.end(), zero))
      out.push_back(std::move(face));
  return out;
}

std::vector<std::pair<ExponentVector, ExponentVector>> NewtonPolytope::edges() const {
  std::vector<std::pair<ExponentVector, ExponentVector>> out;
  if (dim_ == 1) {
    out.emplace_back(vertices_[0], vertices_[1]);
    return out;
  }
  for (const auto& face : faces())
    if (face.dim == 1) out.emplace_back(face.vertices[0], face.vertices[1]);
  return out;
}

Simplicity NewtonPolytope::is_simple_at(const ExponentVector& v) const {
  if (!full_dimensional())
    throw DimensionError("simplicity query needs a full-dimensional hull");
  if (!is_vertex(v)) throw std::invalid_argument("is_simple_at: " + v.to_string() + " is not a vertex");
  Simplicity s;
  for (const auto& [a, b] : edges()) {
    if (a == v) s.neighbors.push_back(b);
    else if (b == v) s.neighbors.push_back(a);
  }
  std::sort(s.neighbors.begin(), s.neighbors.end());
  s.simple = s.neighbors.size() == static_cast<std::size_t>(dim_);
  return s;
}

bool affinely_independent(std::span<const ExponentVector> points) {
  std::vector<RationalVector> coords;
  for (const auto& p : points) coords.push_back(p.to_rational());
  return linalg::affine_dimension(coords) == static_cast<int>(points.size()) - 1;
}

Barycentric barycentric(std::span<const ExponentVector> simplex, const ExponentVector& p) {
  if (simplex.empty()) throw std::invalid_argument("barycentric: empty simplex");
  if (!affinely_independent(simplex))
    throw std::invalid_argument("barycentric: vertices are affinely dependent");
  const std::size_t n = p.arity(), k = simplex.size();
  // Rows: one per coordinate plus the partition-of-unity row.
  linalg::Matrix a(n + 1, RationalVector(k));
  RationalVector b(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = static_cast<long>(simplex[j][i]);
    b[i] = static_cast<long>(p[i]);
  }
  for (std::size_t j = 0; j < k; ++j) a[n][j] = 1;
  b[n] = 1;
  auto sol = linalg::solve(a, b);
  if (sol.kind == linalg::LinearSolution::Kind::Inconsistent)
    throw std::invalid_argument("barycentric: point outside the affine span");
  Barycentric out{sol.particular, true};
  for (const auto& w : out.weights)
    if (w <= 0) out.interior = false;
  return out;
}

}  // namespace birch
