#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cyline/core.hpp"

namespace cyline {

// All complex roots, with multiplicity, of sum_k coeffs[k] z^k (ascending powers).
// Trailing coefficients below kZeroTol times the largest are trimmed first. Degree 1 and 2
// are solved in closed form; higher degrees use companion-matrix eigenvalues followed by
// one Newton step. Roots come back sorted by (real, imaginary) part.
//
// Throws NumericError for the zero polynomial or a nonzero constant.
std::vector<Complex> univariate_roots(std::span<const Complex> coeffs);

// |p(z)| / sum_k |c_k| |z|^k, the scale-free residual used by the root contract.
double root_residual(std::span<const Complex> coeffs, Complex z);

// All k-th roots of z, starting from the principal one and rotating by exp(2 pi i / k).
std::vector<Complex> kth_roots(Complex z, int k);

// Orthonormal basis of the nullspace of M from its singular value decomposition.
// Singular values at or below tol * sigma_max count as zero; an all-zero M has the full
// space as its nullspace.
std::vector<Eigen::VectorXcd> numeric_nullspace(const Eigen::MatrixXcd& M, double tol);

}  // namespace cyline
