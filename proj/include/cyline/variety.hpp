#pragma once

#include <vector>

#include "cyline/line.hpp"
#include "cyline/polynomial.hpp"

namespace cyline {

// Complete intersection of k hypersurfaces in P^n, k < n.
class CompleteIntersection {
 public:
  CompleteIntersection(int ambient_dim, std::vector<HomogeneousPoly> polys);

  int ambient_dim() const { return ambient_dim_; }
  int codim() const { return static_cast<int>(polys_.size()); }
  const std::vector<HomogeneousPoly>& polys() const { return polys_; }
  std::vector<int> degrees() const;

 private:
  int ambient_dim_;
  std::vector<HomogeneousPoly> polys_;
};

struct Incidence {
  bool incident = false;
  // Largest restricted coefficient, normalized by restriction_scale, over all polynomials.
  double residual = 0.0;
  std::vector<BinaryForm> restrictions;
};

Incidence lies_on(const Line& l, const CompleteIntersection& X, double tol = kIncidenceTol);

struct CyCheck {
  bool calabi_yau = false;  // sum d_i = n + 1
  bool threefold = false;   // n = k + 3
  int canonical_twist = 0;  // K_X = O_X(sum d_i - n - 1)
};

CyCheck cy_check(const CompleteIntersection& X);

}  // namespace cyline
