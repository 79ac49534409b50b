#include "cyline/schubert.hpp"

#include <stdexcept>
#include <vector>

#include "cyline/core.hpp"

namespace cyline {

BigInt SymmetricBinaryPoly::coeff(int a, int b) const {
  auto it = schur_coeffs.find({a, b});
  return it == schur_coeffs.end() ? BigInt(0) : it->second;
}

SymmetricBinaryPoly chern_product(std::span<const int> degrees) {
  // Dense monomial coefficients: mono[i] multiplies x1^i x2^(D - i).
  std::vector<BigInt> mono{1};
  for (int d : degrees) {
    if (d < 1) throw Error("hypersurface degrees must be at least 1");
    for (int j = 0; j <= d; ++j) {
      // multiply by j x1 + (d - j) x2
      std::vector<BigInt> next(mono.size() + 1, 0);
      for (std::size_t i = 0; i < mono.size(); ++i) {
        next[i + 1] += mono[i] * j;
        next[i] += mono[i] * (d - j);
      }
      mono = std::move(next);
    }
  }
  const int D = static_cast<int>(mono.size()) - 1;
  SymmetricBinaryPoly out;
  out.degree = D;
  // s_(a,b) = sum_{i=b}^{a} x1^i x2^(D-i), so the coefficient of s_(a,b) is
  // mono[a] - mono[a+1] for a >= D - a.
  for (int b = 0; 2 * b <= D; ++b) {
    const int a = D - b;
    BigInt c = mono[static_cast<std::size_t>(a)];
    if (a + 1 <= D) c -= mono[static_cast<std::size_t>(a + 1)];
    if (c != 0) out.schur_coeffs[{a, b}] = c;
  }
  return out;
}

ExpectedCount expected_lines(std::span<const int> degrees, int ambient) {
  ExpectedCount out;
  if (degrees.empty()) throw Error("expected_lines needs at least one degree");
  for (int d : degrees) out.class_degree += d + 1;
  out.grassmannian_dim = 2 * (ambient - 1);
  if (ambient < 2 || out.class_degree != out.grassmannian_dim) {
    out.message = "dimension mismatch: the top Chern class has degree " +
                  std::to_string(out.class_degree) + " but the Grassmannian of lines in P^" +
                  std::to_string(ambient) + " has dimension " + std::to_string(out.grassmannian_dim);
    return out;
  }
  out.count = chern_product(degrees).coeff(ambient - 1, ambient - 1);
  return out;
}

}  // namespace cyline
