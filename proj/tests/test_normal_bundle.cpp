#include <doctest.h>

#include <random>

#include "cyline/families.hpp"
#include "cyline/normal_bundle.hpp"
#include "cyline/report.hpp"
#include "cyline/symmetry.hpp"
#include "oracles.hpp"

using namespace cyline;

namespace {

BinaryForm random_form(std::mt19937& rng, int degree) {
  std::vector<Complex> c;
  for (int k = 0; k <= degree; ++k) c.push_back(oracle::random_complex(rng));
  return BinaryForm(degree, c);
}

// Evaluates sum_j M_ij(s,t) T_j(s,t) directly from the witness coefficients.
double witness_defect(const RestrictionMatrix& M, const SyzygySearch& s, Complex a, Complex b) {
  const int t = *s.degree;
  double worst = 0.0;
  for (int i = 0; i < M.rows(); ++i) {
    Complex acc = 0.0;
    double scale = 0.0;
    for (int j = 0; j < M.cols(); ++j) {
      Complex tj = 0.0;
      for (int m = 0; m <= t; ++m) tj += s.witness[j][m] * std::pow(a, t - m) * std::pow(b, m);
      const Complex term = M.entries[i][j].evaluate(a, b) * tj;
      acc += term;
      scale += std::abs(term);
    }
    worst = std::max(worst, std::abs(acc) / std::max(scale, 1e-300));
  }
  return worst;
}

Eigen::MatrixXcd fermat_complement() {
  // x0 = y0, x1 = y2 - y0, x2 = y1, x3 = y3 - y1, x4 = y4
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(5, 3);
  c(1, 0) = 1.0;
  c(3, 1) = 1.0;
  c(4, 2) = 1.0;
  return c;
}

}  // namespace

TEST_CASE("Fermat fixture with an explicit normalization") {
  const auto X = fermat_quintic();
  const Line l = fermat_fixture_line();
  const Normalization norm = normalize_line_coords(X, l, fermat_complement());
  const RestrictionMatrix M = restriction_matrix(norm.variety);
  REQUIRE(M.rows() == 1);
  REQUIRE(M.cols() == 3);
  // Hand-computed row (5 y0^4, 5 y1^4, 0).
  const std::vector<Complex> a = {5.0, 0.0, 0.0, 0.0, 0.0};
  const std::vector<Complex> b = {0.0, 0.0, 0.0, 0.0, 5.0};
  for (int k = 0; k <= 4; ++k) {
    CHECK(std::abs(M.entries[0][0].coeffs[k] - a[k]) < 1e-12);
    CHECK(std::abs(M.entries[0][1].coeffs[k] - b[k]) < 1e-12);
    CHECK(std::abs(M.entries[0][2].coeffs[k]) < 1e-12);
  }
  const SyzygySearch s = minimal_syzygy_degree(M);
  REQUIRE(s.degree.has_value());
  CHECK(*s.degree == 0);
  CHECK(s.nullity == 1);
  CHECK(std::abs(s.witness[0][0]) < 1e-12);
  CHECK(std::abs(s.witness[1][0]) < 1e-12);
  CHECK(std::abs(std::abs(s.witness[2][0]) - 1.0) < 1e-12);

  const LineAnalysis a1 = analyze_normalized(X, l, norm);
  CHECK(a1.splitting == SplittingType{1, -3});
  CHECK(a1.tangent_dim == 2);
  const LineAnalysis a2 = analyze_line(X, l);
  CHECK(a2.splitting == SplittingType{1, -3});
}

TEST_CASE("(3,3) line: t = 1, witness is a genuine syzygy") {
  const auto X = build_family_33(2.0);
  const Line l = lines_33({2.0}).solutions.front().line;
  const Normalization norm = normalize_line_coords(X, l);
  const RestrictionMatrix M = restriction_matrix(norm.variety);
  CHECK(M.rows() == 2);
  CHECK(M.cols() == 4);
  CHECK(M.row_degree(0) == 2);

  // Independent rank check of the linear systems.
  CHECK(oracle::gaussian_rank(syzygy_system(M, 0)) == 4);
  const Eigen::MatrixXcd sys1 = syzygy_system(M, 1);
  CHECK(sys1.cols() == 8);
  CHECK(sys1.cols() - oracle::gaussian_rank(sys1) == 1);

  const SyzygySearch s = minimal_syzygy_degree(M);
  REQUIRE(s.degree.has_value());
  CHECK(*s.degree == 1);
  CHECK(s.nullity == 1);
  CHECK(s.residual < 1e-10);
  std::mt19937 rng(8);
  for (int k = 0; k < 5; ++k) {
    CHECK(witness_defect(M, s, oracle::random_complex(rng), oracle::random_complex(rng)) < 1e-9);
  }
}

TEST_CASE("random quadratic restriction matrix has no syzygy below degree 2") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    RestrictionMatrix M;
    M.entries.assign(2, std::vector<BinaryForm>{});
    for (auto& row : M.entries) {
      for (int j = 0; j < 4; ++j) row.push_back(random_form(rng, 2));
    }
    CHECK(oracle::gaussian_rank(syzygy_system(M, 0)) == 4);
    CHECK(oracle::gaussian_rank(syzygy_system(M, 1)) == 8);
    const SyzygySearch s = minimal_syzygy_degree(M, 2);
    REQUIRE(s.degree.has_value());
    CHECK(*s.degree == 2);
    CHECK(s.nullity == 2);
    CHECK(splitting_type(*s.degree, s.nullity) == SplittingType{-1, -1});
    CHECK(witness_defect(M, s, oracle::random_complex(rng), oracle::random_complex(rng)) < 1e-9);

    const SyzygySearch capped = minimal_syzygy_degree(M, 1);
    CHECK_FALSE(capped.degree.has_value());
    CHECK(capped.nullity_by_degree.size() == 2);
  }
}

TEST_CASE("splitting_type and tangent dimension") {
  CHECK(splitting_type(0) == SplittingType{1, -3});
  CHECK(splitting_type(1) == SplittingType{0, -2});
  CHECK(splitting_type(2) == SplittingType{-1, -1});
  CHECK(splitting_type(3) == SplittingType{-1, -1});
  CHECK_THROWS_AS(splitting_type(-1), Error);
  CHECK_THROWS_AS(splitting_type(0, 2), Error);
  CHECK(hilbert_tangent_dim({1, -3}) == 2);
  CHECK(hilbert_tangent_dim({0, -2}) == 1);
  CHECK(hilbert_tangent_dim({-1, -1}) == 0);
}

TEST_CASE("analysis error paths") {
  std::mt19937 rng(12);
  const auto X = build_family_33(2.0);
  CHECK_THROWS_AS(analyze_line(X, Line(oracle::random_matrix(rng, 2, 6))), Error);
  AnalysisOptions bad;
  bad.max_t = 0;
  CHECK_THROWS_AS(analyze_line(X, lines_33({2.0}).solutions.front().line, bad), Error);

  // Cubic threefold in P^4 is not Calabi-Yau.
  HomogeneousPoly cubic(5, 3);
  for (int i = 0; i < 5; ++i) {
    Exponent e(5, 0);
    e[i] = 3;
    cubic = cubic + HomogeneousPoly::monomial(5, e);
  }
  Eigen::MatrixXcd span(2, 5);
  span << 1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, -1.0, 0.0;
  CHECK_THROWS_AS(analyze_line(CompleteIntersection(4, {cubic}), Line(span)), Error);
}

TEST_CASE("diagnostic kernel dimensions on the constructed lines") {
  const auto X = build_family_33(2.0);
  for (const auto& s : lines_33({2.0}).solutions) {
    const LineAnalysis a = analyze_line(X, s.line);
    CHECK(a.splitting == SplittingType{0, -2});
    CHECK(a.tangent_dim == 1);
    CHECK(a.nullity_by_degree == std::vector<std::size_t>{0, 1, 2, 4, 6});
    REQUIRE(a.second_generator_degree.has_value());
    CHECK(*a.second_generator_degree == 3);
    CHECK(a.nullity_consistent);
  }
}

TEST_CASE("splitting type is invariant under symmetries") {
  std::mt19937 rng(77);
  auto check_family = [&](const CompleteIntersection& X, const Line& seed, const FiniteGroup& grp) {
    const SplittingType base = analyze_line(X, seed).splitting;
    std::uniform_int_distribution<std::size_t> pick(0, grp.order() - 1);
    for (int k = 0; k < 20; ++k) {
      const Line moved = apply(grp.elements()[pick(rng)], seed);
      CHECK(analyze_line(X, moved).splitting == base);
    }
  };
  check_family(build_family_33(2.0), lines_33({2.0}).solutions[3].line, symmetry_33().product);
  check_family(build_family_2222(2.0, 3.0), lines_2222({2.0, 3.0}).solutions[2].line,
               symmetry_2222().product);
}

TEST_CASE("syzygy degree does not depend on the chosen normalization") {
  std::mt19937 rng(5150);
  const auto X = build_family_33(2.0);
  const auto sols = lines_33({2.0}).solutions;
  for (int i = 0; i < 10; ++i) {
    const Line& l = sols[static_cast<std::size_t>(i) * 3].line;
    const auto n1 = normalize_line_coords(X, l, oracle::random_matrix(rng, 6, 4));
    const auto n2 = normalize_line_coords(X, l, oracle::random_matrix(rng, 6, 4));
    const auto a1 = analyze_normalized(X, l, n1);
    const auto a2 = analyze_normalized(X, l, n2);
    CHECK(a1.syzygy_degree == 1);
    CHECK(a2.syzygy_degree == 1);
  }
}

TEST_CASE("normalization rejects a complement that meets the line") {
  const auto X = fermat_quintic();
  Eigen::MatrixXcd c = fermat_complement();
  c.col(2) = fermat_fixture_line().row(0);
  CHECK_THROWS_AS(normalize_line_coords(X, fermat_fixture_line(), c), Error);
}
