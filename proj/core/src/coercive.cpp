#include "birch/coercive.hpp"

#include <algorithm>
#include <stdexcept>

#include "birch/polytope.hpp"

namespace birch {
namespace {

void require_positive_constant(const Polynomial& f) {
  if (f.coefficient(ExponentVector(f.arity())) <= 0)
    throw std::invalid_argument("coercivity conditions need a positive constant term");
}

}  // namespace

NecessaryConditions check_necessary(const Polynomial& f) {
  require_positive_constant(f);
  const auto hull = NewtonPolytope::hull(f.support());
  NecessaryConditions nc;
  const auto& verts = hull.vertices();
  nc.even_vertices = std::all_of(verts.begin(), verts.end(),
                                 [](const auto& v) { return v.is_even() && v.is_nonnegative(); });
  nc.positive_vertices =
      std::all_of(verts.begin(), verts.end(), [&](const auto& v) { return f.coefficient(v) > 0; });
  nc.axis_vertices = true;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    const bool found = std::any_of(verts.begin(), verts.end(), [&](const ExponentVector& v) {
      if (v[i] <= 0 || v[i] % 2 != 0) return false;
      for (std::size_t j = 0; j < v.arity(); ++j)
        if (j != i && v[j] != 0) return false;
      return true;
    });
    nc.axis_vertices = nc.axis_vertices && found;
  }
  return nc;
}

std::vector<ExponentVector> compute_d_set(const Polynomial& f) {
  if (!f.contains(ExponentVector(f.arity())))
    throw std::invalid_argument("compute_d_set: origin is not in the support");
  const auto hull = NewtonPolytope::hull(f.support());
  std::vector<ExponentVector> d;
  for (const auto& face : hull.faces_avoiding_origin())
    for (const auto& p : face.points)
      if (!hull.is_vertex(p)) d.push_back(p);
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

bool check_sufficient(const Polynomial& f) {
  if (!check_necessary(f).all())
    throw std::invalid_argument("check_sufficient: necessary coercivity conditions fail");
  const auto d = compute_d_set(f);
  return std::all_of(d.begin(), d.end(), [&](const auto& a) { return f.coefficient(a) > 0; });
}

CoercivityReport analyze_coercivity(const Polynomial& f) {
  CoercivityReport report;
  Polynomial g = f;
  const ExponentVector zero(f.arity());
  if (f.coefficient(zero) <= 0) {
    g = f - Polynomial::constant(f.arity(), f.coefficient(zero)) + Polynomial::constant(f.arity(), 1);
    report.shifted = true;
  }
  report.necessary = check_necessary(g);
  report.d_set = compute_d_set(g);
  if (!report.necessary.all()) {
    report.verdict = Coercivity::NotCoercive;
    return report;
  }
  report.sufficient = check_sufficient(g);
  report.verdict = report.sufficient ? Coercivity::Coercive : Coercivity::Unknown;
  return report;
}

}  // namespace birch
