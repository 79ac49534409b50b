#pragma once

#include <map>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cyline/core.hpp"

namespace cyline {

using Exponent = std::vector<int>;

// Dense binary form: coeffs[j] multiplies s^(degree - j) t^j.
struct BinaryForm {
  int degree = 0;
  std::vector<Complex> coeffs{Complex{0.0}};

  BinaryForm() = default;
  explicit BinaryForm(int deg) : degree(deg), coeffs(static_cast<std::size_t>(deg) + 1, Complex{0.0}) {}
  BinaryForm(int deg, std::vector<Complex> c);

  double max_abs() const;
  bool is_zero(double abs_tol) const { return max_abs() <= abs_tol; }
  Complex evaluate(Complex s, Complex t) const;

  friend BinaryForm operator*(const BinaryForm& lhs, const BinaryForm& rhs);
};

// Sparse homogeneous polynomial in num_vars variables with complex coefficients.
// Coefficients below kZeroTol times the largest magnitude are pruned on construction.
class HomogeneousPoly {
 public:
  using Terms = std::map<Exponent, Complex>;

  HomogeneousPoly(int num_vars, int degree);
  HomogeneousPoly(int num_vars, int degree, Terms terms);

  static HomogeneousPoly monomial(int num_vars, Exponent exps, Complex coeff = 1.0);
  static HomogeneousPoly variable(int num_vars, int index);
  static HomogeneousPoly constant(int num_vars, Complex value);

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  double max_abs_coeff() const;
  Complex coeff(const Exponent& exps) const;

  Complex evaluate(std::span<const Complex> point) const;
  HomogeneousPoly derivative(int var) const;

  // Coefficient-wise comparison with tolerance relative to the larger of the two scales.
  bool approx_equal(const HomogeneousPoly& other, double rel_tol = kZeroTol) const;

  HomogeneousPoly& operator*=(Complex c);
  friend HomogeneousPoly operator+(const HomogeneousPoly& lhs, const HomogeneousPoly& rhs);
  friend HomogeneousPoly operator-(const HomogeneousPoly& lhs, const HomogeneousPoly& rhs);
  friend HomogeneousPoly operator*(const HomogeneousPoly& lhs, const HomogeneousPoly& rhs);
  friend HomogeneousPoly operator*(Complex c, HomogeneousPoly p) { return p *= c; }
  friend HomogeneousPoly operator-(HomogeneousPoly p) { return p *= -1.0; }

 private:
  void prune();

  int num_vars_;
  int degree_;
  Terms terms_;
};

enum class PolyOp { add, mul };
HomogeneousPoly poly_arith(const HomogeneousPoly& p, const HomogeneousPoly& q, PolyOp op);

// r(y) = p(L y) where L has p.num_vars() rows; the result has L.cols() variables.
HomogeneousPoly substitute_linear(const HomogeneousPoly& p, const Eigen::MatrixXcd& L);

// r(y) = p(A y) for square invertible A. Throws NumericError when A is singular or
// its condition number exceeds max_condition.
HomogeneousPoly change_coordinates(const HomogeneousPoly& p, const Eigen::MatrixXcd& A,
                                   double max_condition = 1e10);

// p(s * row0 + t * row1) as a dense binary form; no pruning, so residuals survive.
BinaryForm restrict_to_line(const HomogeneousPoly& p, const Eigen::VectorXcd& row0,
                            const Eigen::VectorXcd& row1);

// Upper bound on the coefficients of restrict_to_line(p, row0, row1):
// sum over terms of |c| * prod_i (|row0_i| + |row1_i|)^e_i.
double restriction_scale(const HomogeneousPoly& p, const Eigen::VectorXcd& row0,
                         const Eigen::VectorXcd& row1);

}  // namespace cyline
