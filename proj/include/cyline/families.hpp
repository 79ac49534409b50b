#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyline/variety.hpp"

namespace cyline {

enum class Family { cubic_pair, four_quadrics };

// "33" / "2222"
Family parse_family(const std::string& name);
std::string family_name(Family f);

// Fixed primitive roots of unity: omega = exp(2 pi i / 3), zeta = exp(2 pi i / 9).
Complex omega();
Complex zeta();

// x0^3 + x1^3 + x2^3 - 3 lambda x3 x4 x5 = 0, x3^3 + x4^3 + x5^3 - 3 lambda x0 x1 x2 = 0 in P^5.
CompleteIntersection build_family_33(Complex lambda);

// The four quadrics in P^7: the first is x0^2 + ... + x5^2 - 2 mu x6 x7; the other three
// contain every square except one of the pairs (4,5), (2,3), (0,1), whose product carries
// -2 lambda instead.
CompleteIntersection build_family_2222(Complex lambda, Complex mu);

struct Degeneracy {
  std::string code;
  std::string message;
};

class DegenerateParameterError : public Error {
 public:
  explicit DegenerateParameterError(Degeneracy d) : Error(d.message), degeneracy_(std::move(d)) {}
  const Degeneracy& degeneracy() const { return degeneracy_; }

 private:
  Degeneracy degeneracy_;
};

struct Family33Params {
  Complex lambda;
};

struct Family2222Params {
  Complex lambda;
  Complex mu;
};

// Lines (a t + s : a t - s : b t : c t + p s : c t - p s : t).
struct LineSolution33 {
  Complex a, b, c, p;
  Line line;
  double incidence_residual = 0.0;
};

// Lines (s + a t : q s + t : w s + a t : w q s + t : w^2 s + a t : w^2 q s + t : c t : d t).
struct LineSolution2222 {
  Complex a, c, d, q;
  Line line;
  double incidence_residual = 0.0;
};

template <class Solution>
struct LineConstruction {
  std::vector<Solution> solutions;
  std::vector<std::string> warnings;
};

// Degeneracy of the (3,3) pencil: lambda = 0 or lambda^6 in {1, 4}. Returns the hard
// degeneracy when within kDegeneracyTol, otherwise nullopt; near misses go to warnings.
std::optional<Degeneracy> degeneracy_33(Complex lambda, std::vector<std::string>* warnings = nullptr);
std::optional<Degeneracy> degeneracy_2222(Complex lambda, Complex mu,
                                          std::vector<std::string>* warnings = nullptr);

// The 36 lines joining V+ = {(a:a:b:c:c:1)} and V- = {(1:-1:0:p:-p:0)}.
// Throws DegenerateParameterError on the degeneracy locus.
LineConstruction<LineSolution33> lines_33(const Family33Params& params);

// The 8 lines joining V+ = {(a:1:a:1:a:1:c:d)} and V_w = {(1:q:w:wq:w^2:w^2q:0:0)}.
LineConstruction<LineSolution2222> lines_2222(const Family2222Params& params);

// Largest absolute defect of the algebraic relations defining each solution.
double relation_residual(const LineSolution33& sol, Complex lambda);
double relation_residual(const LineSolution2222& sol, Complex lambda, Complex mu);

// Whether the column span of `basis` meets the line, judged by the smallest singular value
// of the stacked generators relative to the largest.
bool meets_subspace(const Line& l, const Eigen::MatrixXcd& basis, double tol = 1e-8);

// Bases (as columns) of the two invariant subspaces of the family's distinguished automorphism.
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> invariant_subspaces(Family family);

bool invariant_subspace_check(const Line& l, Family family, double tol = 1e-8);

}  // namespace cyline
