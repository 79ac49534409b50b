#pragma once

#include <vector>

#include "cyline/families.hpp"
#include "cyline/line.hpp"
#include "cyline/variety.hpp"

namespace cyline {

// x |-> y with y_j = scale_j * x_{perm_j}: a coordinate permutation followed by a
// diagonal scaling. Acts on P^n, so elements differing by a common factor are identified.
class MonomialAutomorphism {
 public:
  MonomialAutomorphism(std::vector<int> perm, std::vector<Complex> scale);

  static MonomialAutomorphism identity(int size);
  static MonomialAutomorphism permutation(std::vector<int> perm);
  static MonomialAutomorphism diagonal(std::vector<Complex> scale);
  // Product of disjoint cycles given with 0-based coordinates, e.g. {{0,1},{3,4}}.
  static MonomialAutomorphism cycles(int size, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<Complex>& scale() const { return scale_; }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;
  // Matrix A with apply(x) = A x.
  Eigen::MatrixXcd matrix() const;
  MonomialAutomorphism inverse() const;
  // Projective representative: scale rescaled so its first entry of magnitude >= kZeroTol is 1.
  MonomialAutomorphism normalized() const;
  bool projectively_equal(const MonomialAutomorphism& other, double tol = 1e-9) const;
  bool is_identity(double tol = 1e-9) const;

  // (g * h)(x) = g(h(x)).
  friend MonomialAutomorphism operator*(const MonomialAutomorphism& g, const MonomialAutomorphism& h);

 private:
  std::vector<int> perm_;
  std::vector<Complex> scale_;
};

Line apply(const MonomialAutomorphism& g, const Line& l);

// Whether the pullback of every defining polynomial of X lies in the span of X's equations
// of the same degree; sufficient for g to preserve X.
bool preserves(const MonomialAutomorphism& g, const CompleteIntersection& X, double tol = 1e-9);

// Finite group of projective monomial automorphisms. Elements are stored normalized and
// deduplicated; the generators used for orbit closure are kept alongside.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<MonomialAutomorphism> generators, std::vector<MonomialAutomorphism> elements);

  std::size_t order() const { return elements_.size(); }
  const std::vector<MonomialAutomorphism>& generators() const { return generators_; }
  const std::vector<MonomialAutomorphism>& elements() const { return elements_; }
  bool contains(const MonomialAutomorphism& g, double tol = 1e-9) const;

 private:
  std::vector<MonomialAutomorphism> generators_;
  std::vector<MonomialAutomorphism> elements_;
};

class GroupCapExceeded : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kDefaultGroupCap = 10000;

// Closure of the generators under composition. Throws GroupCapExceeded beyond `cap` elements.
FiniteGroup generate_group(const std::vector<MonomialAutomorphism>& gens,
                           std::size_t cap = kDefaultGroupCap);

// Elements g with g(l) = l.
FiniteGroup stabilizer(const Line& l, const FiniteGroup& grp, double tol = kLineTol);

struct Orbit {
  std::vector<Line> lines;
  std::size_t stabilizer_order = 0;
  double max_residual = 0.0;
};

// Breadth-first closure of {l} under the group's generators. Every member is checked for
// incidence with X (NumericError on failure) and |orbit| * |stabilizer| = |grp| is enforced.
Orbit orbit(const Line& l, const FiniteGroup& grp, const CompleteIntersection& X,
            double incidence_tol = 1e-7, double line_tol = kLineTol);

struct OrbitUnion {
  std::size_t total = 0;
  bool disjoint = false;
  std::vector<std::size_t> orbit_sizes;
  double max_residual = 0.0;
};

OrbitUnion union_of_orbits(const std::vector<Line>& seeds, const FiniteGroup& grp,
                           const CompleteIntersection& X, double incidence_tol = 1e-7,
                           double line_tol = kLineTol);

// The automorphism groups exhibited for each family.
struct FamilySymmetry {
  MonomialAutomorphism phi;  // distinguished automorphism fixing the constructed lines
  FiniteGroup diagonal;      // the cyclotomic/sign group
  FiniteGroup permutations;  // the coordinate-permutation group
  FiniteGroup product;       // generated by both
};

// (3,3): phi = (01)(34); diagonal = <alpha1, alpha2, alpha3> of order 81;
// permutations = S3 x S3 on {0,1,2} and {3,4,5}.
FamilySymmetry symmetry_33();
// (2,2,2,2): phi = (024)(135); permutations = S3 on the pairs (01),(23),(45) together with
// the swaps (01),(23),(45),(67); diagonal = the order-8 sign group.
FamilySymmetry symmetry_2222();
FamilySymmetry family_symmetry(Family family);

}  // namespace cyline
