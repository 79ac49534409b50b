#include <doctest.h>

#include <cmath>
#include <random>

#include "cyline/families.hpp"
#include "cyline/polynomial.hpp"
#include "cyline/roots.hpp"
#include "oracles.hpp"

using namespace cyline;

namespace {

HomogeneousPoly mono(std::vector<int> e, Complex c = 1.0) {
  const int n = static_cast<int>(e.size());
  return HomogeneousPoly::monomial(n, std::move(e), c);
}

}  // namespace

TEST_CASE("poly_arith: additive inverse gives zero") {
  const auto p = mono({3, 0, 0});
  const auto z = poly_arith(p, -p, PolyOp::add);
  CHECK(z.is_zero());
  CHECK(z.degree() == 3);
}

TEST_CASE("poly_arith: monomial product") {
  const auto prod = poly_arith(mono({1, 0}), mono({0, 1}), PolyOp::mul);
  CHECK(prod.degree() == 2);
  REQUIRE(prod.terms().size() == 1);
  CHECK(prod.coeff({1, 1}) == Complex(1.0));
}

TEST_CASE("poly_arith: Fermat cubic piece of the (3,3) pencil") {
  const Complex lambda = 2.0;
  const auto X = build_family_33(lambda);
  const auto cubic = mono({3, 0, 0, 0, 0, 0}) + mono({0, 3, 0, 0, 0, 0}) + mono({0, 0, 3, 0, 0, 0});
  const auto one = HomogeneousPoly::constant(6, 1.0);
  const auto mixed = mono({0, 0, 0, 1, 1, 1}, -3.0 * lambda);
  CHECK(poly_arith(cubic, one, PolyOp::mul).approx_equal(X.polys()[0] - mixed));
}

TEST_CASE("poly_arith: shape errors") {
  CHECK_THROWS_AS(mono({1, 0}) + mono({2, 0}), DimensionError);
  CHECK_THROWS_AS(mono({1, 0}) + mono({1, 0, 0}), DimensionError);
  CHECK_THROWS_AS(mono({1, 0}) * mono({1, 0, 0}), DimensionError);
  CHECK_THROWS_AS(HomogeneousPoly(2, 2, {{{1, 0}, 1.0}}), DimensionError);
}

TEST_CASE("poly_arith: degree additivity") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = oracle::random_poly(rng, 3, 2);
    const auto q = oracle::random_poly(rng, 3, 3);
    const auto pq = p * q;
    CHECK(!pq.is_zero());
    CHECK(pq.degree() == 5);
    const auto pt = oracle::random_point(rng, 3);
    CHECK(std::abs(pq.evaluate(pt) - p.evaluate(pt) * q.evaluate(pt)) <= 1e-10 * std::abs(pq.evaluate(pt)) + 1e-12);
  }
}

TEST_CASE("pruning drops sub-threshold coefficients") {
  const auto p = HomogeneousPoly(2, 1, {{{1, 0}, 1.0}, {{0, 1}, 1e-12}});
  CHECK(p.terms().size() == 1);
}

TEST_CASE("derivative") {
  // d/dx0 of x0^3 x1 + 2 x0 x1^3 = 3 x0^2 x1 + 2 x1^3
  const auto p = mono({3, 1}) + mono({1, 3}, 2.0);
  const auto d = p.derivative(0);
  CHECK(d.degree() == 3);
  CHECK(d.coeff({2, 1}) == Complex(3.0));
  CHECK(d.coeff({0, 3}) == Complex(2.0));
}

TEST_CASE("change_coordinates: identity and permutation") {
  std::mt19937 rng(1);
  const auto p = oracle::random_poly(rng, 3, 3);
  CHECK(change_coordinates(p, Eigen::MatrixXcd::Identity(3, 3)).approx_equal(p));

  Eigen::MatrixXcd swap = Eigen::MatrixXcd::Zero(2, 2);
  swap(0, 1) = swap(1, 0) = 1.0;
  const auto r = change_coordinates(mono({3, 0}), swap);
  CHECK(r.approx_equal(mono({0, 3})));
}

TEST_CASE("change_coordinates: r(y) = p(Ay) at random points") {
  std::mt19937 rng(2);
  const auto p = oracle::random_poly(rng, 4, 3);
  const Eigen::MatrixXcd A = oracle::random_matrix(rng, 4, 4);
  const auto r = change_coordinates(p, A);
  CHECK(r.degree() == 3);
  for (int k = 0; k < 5; ++k) {
    const auto y = oracle::random_point(rng, 4);
    Eigen::VectorXcd yv = Eigen::Map<const Eigen::VectorXcd>(y.data(), 4);
    Eigen::VectorXcd x = A * yv;
    const std::vector<Complex> xs(x.data(), x.data() + 4);
    const Complex expected = p.evaluate(xs);
    CHECK(std::abs(r.evaluate(y) - expected) <= 1e-9 * (1.0 + std::abs(expected)));
  }
}

TEST_CASE("change_coordinates: round trip through the inverse") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = oracle::random_poly(rng, 3, 3);
    const Eigen::MatrixXcd A = oracle::random_matrix(rng, 3, 3) + 2.0 * Eigen::MatrixXcd::Identity(3, 3);
    const auto back = change_coordinates(change_coordinates(p, A), A.inverse());
    CHECK(back.approx_equal(p, 1e-8));
  }
}

TEST_CASE("change_coordinates: singular matrix rejected") {
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Ones(2, 2);
  CHECK_THROWS_AS(change_coordinates(mono({1, 1}), A), NumericError);
  CHECK_THROWS_AS(change_coordinates(mono({1, 1}), Eigen::MatrixXcd::Identity(3, 3)), DimensionError);
}

TEST_CASE("restrict_to_line keeps exact cancellation") {
  // x0^5 + x1^5 on (s : -s) vanishes identically.
  const auto p = mono({5, 0}) + mono({0, 5});
  Eigen::VectorXcd r0(2), r1(2);
  r0 << 1.0, -1.0;
  r1 << 0.0, 0.0;
  const auto f = restrict_to_line(p, r0, r1);
  CHECK(f.degree == 5);
  CHECK(f.max_abs() == 0.0);
}

TEST_CASE("univariate_roots: z^2 - 1") {
  const std::vector<Complex> c = {-1.0, 0.0, 1.0};
  const auto r = univariate_roots(c);
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0] - Complex(-1.0)) < 1e-14);
  CHECK(std::abs(r[1] - Complex(1.0)) < 1e-14);
}

TEST_CASE("univariate_roots: q^2 + 2 lambda q + 1 at lambda = 2") {
  // Quadratic formula by hand: -2 +- sqrt(3).
  const std::vector<Complex> c = {1.0, 4.0, 1.0};
  const auto r = univariate_roots(c);
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0] - Complex(-2.0 - std::sqrt(3.0))) < 1e-13);
  CHECK(std::abs(r[1] - Complex(-2.0 + std::sqrt(3.0))) < 1e-13);
}

TEST_CASE("univariate_roots: double root of the c^3 quadratic at lambda = 1") {
  // 64u^2 - (16 - 32)u + 1 = (8u + 1)^2
  const std::vector<Complex> c = {1.0, 16.0, 64.0};
  const auto r = univariate_roots(c);
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0] + 0.125) < 1e-12);
  CHECK(std::abs(r[1] + 0.125) < 1e-12);
}

TEST_CASE("univariate_roots: errors") {
  const std::vector<Complex> zero = {0.0, 0.0};
  const std::vector<Complex> constant = {3.0, 0.0, 1e-15};
  CHECK_THROWS_AS(univariate_roots(zero), NumericError);
  CHECK_THROWS_AS(univariate_roots(constant), NumericError);
}

TEST_CASE("univariate_roots: reconstruction property") {
  std::mt19937 rng(11);
  for (int degree = 1; degree <= 8; ++degree) {
    std::vector<Complex> c;
    for (int k = 0; k <= degree; ++k) c.push_back(oracle::random_complex(rng));
    const auto roots = univariate_roots(c);
    REQUIRE(static_cast<int>(roots.size()) == degree);
    // lead * prod (z - r_i), expanded in ascending powers
    std::vector<Complex> rebuilt = {c.back()};
    for (const auto& r : roots) {
      std::vector<Complex> next(rebuilt.size() + 1, 0.0);
      for (std::size_t i = 0; i < rebuilt.size(); ++i) {
        next[i + 1] += rebuilt[i];
        next[i] -= r * rebuilt[i];
      }
      rebuilt = next;
    }
    double scale = 0.0;
    for (const auto& x : c) scale = std::max(scale, std::abs(x));
    for (int k = 0; k <= degree; ++k) CHECK(std::abs(rebuilt[k] - c[k]) <= 1e-9 * scale);
    for (const auto& r : roots) CHECK(root_residual(c, r) < 1e-12);
  }
}

TEST_CASE("univariate_roots: deterministic sorted order") {
  const std::vector<Complex> c = {-6.0, 11.0, -6.0, 1.0};  // (z-1)(z-2)(z-3)
  const auto r = univariate_roots(c);
  REQUIRE(r.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(r[k] - Complex(k + 1.0)) < 1e-10);
}

TEST_CASE("numeric_nullspace: small cases") {
  CHECK(numeric_nullspace(Eigen::MatrixXcd::Identity(2, 2), 1e-9).empty());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Ones(2, 2);
  const auto ns = numeric_nullspace(m, 1e-9);
  REQUIRE(ns.size() == 1);
  CHECK(std::abs(ns[0](0) + ns[0](1)) < 1e-12);
  CHECK(std::abs(ns[0].norm() - 1.0) < 1e-12);
  CHECK(numeric_nullspace(Eigen::MatrixXcd::Zero(2, 3), 1e-9).size() == 3);
}

TEST_CASE("numeric_nullspace: residual and orthonormality property") {
  std::mt19937 rng(5);
  const double tol = 1e-9;
  for (int trial = 0; trial < 10; ++trial) {
    const int r = 2 + trial % 3;
    const int c = 5;
    // rank-deficient by construction: product of r x k and k x c
    const int k = 1 + trial % r;
    const Eigen::MatrixXcd M = oracle::random_matrix(rng, r, k) * oracle::random_matrix(rng, k, c);
    const auto ns = numeric_nullspace(M, tol);
    CHECK(static_cast<int>(ns.size()) == c - oracle::gaussian_rank(M));
    const double mnorm = M.norm();
    for (std::size_t i = 0; i < ns.size(); ++i) {
      CHECK((M * ns[i]).norm() <= 10.0 * tol * mnorm);
      for (std::size_t j = 0; j < ns.size(); ++j) {
        const Complex ip = ns[i].dot(ns[j]);
        CHECK(std::abs(ip - Complex(i == j ? 1.0 : 0.0)) < 1e-10);
      }
    }
  }
}

TEST_CASE("parse_complex") {
  CHECK(parse_complex("2") == Complex(2.0, 0.0));
  CHECK(parse_complex("1.5,-2") == Complex(1.5, -2.0));
  CHECK_THROWS_AS(parse_complex("x"), Error);
  CHECK_THROWS_AS(parse_complex("1,2,3"), Error);
}
