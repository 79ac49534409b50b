#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyline {

using BigInt = boost::multiprecision::cpp_int;

// Symmetric polynomial in two variables expanded in Schur polynomials
// s_(a,b)(x1, x2) = (x1^(a+1) x2^b - x1^b x2^(a+1)) / (x1 - x2), a >= b >= 0.
struct SymmetricBinaryPoly {
  int degree = 0;
  std::map<std::pair<int, int>, BigInt> schur_coeffs;

  BigInt coeff(int a, int b) const;
};

// Top Chern class of the bundle of degree-d forms on the tautological line bundle, for
// every d in `degrees`: prod_i prod_{j=0}^{d_i} (j x1 + (d_i - j) x2), in the Schur basis.
SymmetricBinaryPoly chern_product(std::span<const int> degrees);

struct ExpectedCount {
  std::optional<BigInt> count;  // set iff the class degree matches the Grassmannian dimension
  int class_degree = 0;         // sum (d_i + 1)
  int grassmannian_dim = 0;     // 2 (n - 1)
  std::string message;
};

// Number of lines on a generic complete intersection of the given degrees in P^n: the
// coefficient of the point class s_(n-1,n-1).
ExpectedCount expected_lines(std::span<const int> degrees, int ambient);

}  // namespace cyline
