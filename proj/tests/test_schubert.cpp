#include <doctest.h>

#include <algorithm>
#include <vector>

#include "cyline/core.hpp"
#include "cyline/schubert.hpp"

using namespace cyline;

namespace {

BigInt ipow(const BigInt& x, int k) {
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// s_(a,b)(x1, x2) = sum_{k=b}^{a} x1^k x2^(a+b-k)
BigInt schur_value(int a, int b, const BigInt& x1, const BigInt& x2) {
  BigInt r = 0;
  for (int k = b; k <= a; ++k) r += ipow(x1, k) * ipow(x2, a + b - k);
  return r;
}

BigInt product_value(const std::vector<int>& degrees, const BigInt& x1, const BigInt& x2) {
  BigInt r = 1;
  for (int d : degrees) {
    for (int j = 0; j <= d; ++j) r *= BigInt(j) * x1 + BigInt(d - j) * x2;
  }
  return r;
}

}  // namespace

TEST_CASE("chern product of a single linear form") {
  const std::vector<int> d = {1};
  const auto p = chern_product(d);
  CHECK(p.degree == 2);
  CHECK(p.coeff(1, 1) == 1);
  CHECK(p.coeff(2, 0) == 0);
}

TEST_CASE("chern product for cubics: 18 s_(3,1) + 27 s_(2,2)") {
  const std::vector<int> d = {3};
  const auto p = chern_product(d);
  CHECK(p.degree == 4);
  CHECK(p.coeff(4, 0) == 0);
  CHECK(p.coeff(3, 1) == 18);
  CHECK(p.coeff(2, 2) == 27);
  const auto c = expected_lines(d, 3);
  REQUIRE(c.count.has_value());
  CHECK(*c.count == 27);
}

TEST_CASE("Schur expansion agrees with direct evaluation") {
  const std::vector<std::vector<int>> cases = {{5}, {3, 3}, {4, 2}, {3, 2, 2}, {2, 2, 2, 2}, {7, 1}, {6}};
  for (const auto& d : cases) {
    const auto p = chern_product(d);
    for (int x1 = -3; x1 <= 3; ++x1) {
      for (int x2 : {1, 2, 5}) {
        BigInt sum = 0;
        for (const auto& [ab, coeff] : p.schur_coeffs) sum += coeff * schur_value(ab.first, ab.second, x1, x2);
        CHECK(sum == product_value(d, x1, x2));
      }
    }
  }
}

TEST_CASE("expected line counts on Calabi-Yau complete intersections") {
  struct Row {
    std::vector<int> degrees;
    int ambient;
    long expected;
  };
  const std::vector<Row> rows = {{{5}, 4, 2875},   {{3, 3}, 5, 1053},         {{4, 2}, 5, 1280},
                                 {{3, 2, 2}, 6, 720}, {{2, 2, 2, 2}, 7, 512}};
  for (const auto& r : rows) {
    const auto c = expected_lines(r.degrees, r.ambient);
    REQUIRE(c.count.has_value());
    CHECK(*c.count == r.expected);
    CHECK(c.class_degree == c.grassmannian_dim);
  }
}

TEST_CASE("expected count is symmetric in the degrees") {
  std::vector<int> d = {3, 2, 2};
  const BigInt base = *expected_lines(d, 6).count;
  std::sort(d.begin(), d.end());
  do {
    CHECK(*expected_lines(d, 6).count == base);
  } while (std::next_permutation(d.begin(), d.end()));
}

TEST_CASE("dimension mismatch yields no count") {
  const std::vector<int> d = {4};
  const auto c = expected_lines(d, 4);
  CHECK_FALSE(c.count.has_value());
  CHECK(c.class_degree == 5);
  CHECK(c.grassmannian_dim == 6);
  CHECK_FALSE(c.message.empty());
}

TEST_CASE("large degrees stay exact") {
  // Degree 21 hypersurface in P^12; reference value from an independent symbolic expansion.
  const std::vector<int> d = {21};
  const auto c = expected_lines(d, 12);
  REQUIRE(c.count.has_value());
  CHECK(*c.count == BigInt("3381929766320534635615064019"));
  CHECK(*expected_lines(std::vector<int>{13}, 8).count == BigInt("210776836330775"));
}

TEST_CASE("invalid input") {
  const std::vector<int> bad = {0};
  CHECK_THROWS_AS(chern_product(bad), Error);
  const std::vector<int> empty;
  CHECK_THROWS_AS(expected_lines(empty, 4), Error);
}
