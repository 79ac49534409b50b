#include "cyline/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cyline {

namespace {

Complex horner(std::span<const Complex> c, Complex z) {
  Complex acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
  return acc;
}

Complex horner_derivative(std::span<const Complex> c, Complex z) {
  Complex acc = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) acc = acc * z + c[k] * static_cast<double>(k);
  return acc;
}

// Ordering by real part, then imaginary part, with ties on the real part decided within
// a relative tolerance so that conjugate pairs sort consistently.
bool root_less(Complex x, Complex y, double scale) {
  const double tol = kZeroTol * scale;
  if (std::abs(x.real() - y.real()) > tol) return x.real() < y.real();
  return x.imag() < y.imag();
}

}  // namespace

double root_residual(std::span<const Complex> coeffs, Complex z) {
  double scale = 0.0;
  const double r = std::abs(z);
  double rk = 1.0;
  for (const auto& c : coeffs) {
    scale += std::abs(c) * rk;
    rk *= r;
  }
  return scale > 0.0 ? std::abs(horner(coeffs, z)) / scale : 0.0;
}

std::vector<Complex> univariate_roots(std::span<const Complex> coeffs) {
  double cmax = 0.0;
  for (const auto& c : coeffs) {
    if (!is_finite(c)) throw NumericError("non-finite polynomial coefficient");
    cmax = std::max(cmax, std::abs(c));
  }
  if (cmax == 0.0) throw NumericError("univariate_roots: zero polynomial");
  std::size_t n = coeffs.size();
  while (n > 0 && std::abs(coeffs[n - 1]) <= kZeroTol * cmax) --n;
  const int degree = static_cast<int>(n) - 1;
  if (degree < 1) throw NumericError("univariate_roots: polynomial has degree 0");
  std::span<const Complex> c = coeffs.first(n);

  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(degree));
  if (degree == 1) {
    roots.push_back(-c[0] / c[1]);
  } else if (degree == 2) {
    const Complex a = c[2];
    const Complex b = c[1];
    const Complex k = c[0];
    const Complex sq = std::sqrt(b * b - 4.0 * a * k);
    // Choose the sign that avoids cancellation, then recover the partner from the product.
    const Complex q = -0.5 * (std::real(std::conj(b) * sq) >= 0.0 ? b + sq : b - sq);
    if (q == 0.0) {
      roots = {0.0, 0.0};
    } else {
      roots = {q / a, k / q};
    }
  } else {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
    for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < degree; ++i) companion(i, degree - 1) = -c[i] / c[degree];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
    if (es.info() != Eigen::Success) throw NumericError("companion eigenvalue solver failed");
    for (int i = 0; i < degree; ++i) {
      Complex z = es.eigenvalues()(i);
      const Complex dp = horner_derivative(c, z);
      if (std::abs(dp) > 0.0) {
        const Complex polished = z - horner(c, z) / dp;
        if (is_finite(polished) && root_residual(c, polished) <= root_residual(c, z)) z = polished;
      }
      roots.push_back(z);
    }
  }

  double scale = 1.0;
  for (const auto& z : roots) scale = std::max(scale, std::abs(z));
  // Insertion sort: the tolerance-aware comparator is not a strict weak order in general.
  for (std::size_t i = 1; i < roots.size(); ++i) {
    for (std::size_t j = i; j > 0 && root_less(roots[j], roots[j - 1], scale); --j) {
      std::swap(roots[j], roots[j - 1]);
    }
  }
  return roots;
}

std::vector<Complex> kth_roots(Complex z, int k) {
  if (k < 1) throw NumericError("kth_roots: k must be positive");
  const Complex principal = z == 0.0 ? Complex{0.0} : std::pow(z, 1.0 / k);
  const Complex unit = std::polar(1.0, 2.0 * std::numbers::pi / k);
  std::vector<Complex> out;
  Complex w = 1.0;
  for (int j = 0; j < k; ++j) {
    out.push_back(principal * w);
    w *= unit;
  }
  return out;
}

std::vector<Eigen::VectorXcd> numeric_nullspace(const Eigen::MatrixXcd& M, double tol) {
  const Eigen::Index cols = M.cols();
  std::vector<Eigen::VectorXcd> basis;
  if (cols == 0) return basis;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol * smax && sv(i) > 0.0) ++rank;
  }
  const Eigen::MatrixXcd& V = svd.matrixV();
  for (Eigen::Index j = rank; j < cols; ++j) basis.emplace_back(V.col(j));
  return basis;
}

}  // namespace cyline
