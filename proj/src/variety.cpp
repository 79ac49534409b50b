#include "cyline/variety.hpp"

#include <algorithm>
#include <numeric>

namespace cyline {

CompleteIntersection::CompleteIntersection(int ambient_dim, std::vector<HomogeneousPoly> polys)
    : ambient_dim_(ambient_dim), polys_(std::move(polys)) {
  if (ambient_dim_ < 1) throw DimensionError("ambient dimension must be positive");
  if (polys_.empty()) throw DimensionError("a complete intersection needs at least one polynomial");
  if (static_cast<int>(polys_.size()) >= ambient_dim_) {
    throw DimensionError("complete intersection of " + std::to_string(polys_.size()) +
                         " hypersurfaces in P^" + std::to_string(ambient_dim_) +
                         " is not of positive dimension");
  }
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    if (polys_[i].num_vars() != ambient_dim_ + 1) {
      throw DimensionError("polynomial " + std::to_string(i) + " has " +
                           std::to_string(polys_[i].num_vars()) + " variables, expected " +
                           std::to_string(ambient_dim_ + 1));
    }
    if (polys_[i].is_zero()) throw DimensionError("polynomial " + std::to_string(i) + " is zero");
    if (polys_[i].degree() < 1) {
      throw DimensionError("polynomial " + std::to_string(i) + " is constant");
    }
  }
}

std::vector<int> CompleteIntersection::degrees() const {
  std::vector<int> d;
  for (const auto& p : polys_) d.push_back(p.degree());
  return d;
}

Incidence lies_on(const Line& l, const CompleteIntersection& X, double tol) {
  if (l.ambient_dim() != X.ambient_dim()) {
    throw DimensionError("line in P^" + std::to_string(l.ambient_dim()) + " vs variety in P^" +
                         std::to_string(X.ambient_dim()));
  }
  const Eigen::VectorXcd r0 = l.row(0);
  const Eigen::VectorXcd r1 = l.row(1);
  Incidence out;
  for (const auto& p : X.polys()) {
    BinaryForm f = restrict_to_line(p, r0, r1);
    const double scale = restriction_scale(p, r0, r1);
    if (scale > 0.0) out.residual = std::max(out.residual, f.max_abs() / scale);
    out.restrictions.push_back(std::move(f));
  }
  out.incident = out.residual <= tol;
  return out;
}

CyCheck cy_check(const CompleteIntersection& X) {
  const auto d = X.degrees();
  const int total = std::accumulate(d.begin(), d.end(), 0);
  CyCheck out;
  out.canonical_twist = total - X.ambient_dim() - 1;
  out.calabi_yau = out.canonical_twist == 0;
  out.threefold = X.ambient_dim() == X.codim() + 3;
  return out;
}

}  // namespace cyline
