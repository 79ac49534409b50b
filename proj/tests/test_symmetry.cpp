#include <doctest.h>

#include <random>

#include "cyline/families.hpp"
#include "cyline/symmetry.hpp"
#include "oracles.hpp"

using namespace cyline;

TEST_CASE("composition order and inverse") {
  const auto g = MonomialAutomorphism::cycles(3, {{0, 1}});
  const auto h = MonomialAutomorphism::diagonal({1.0, 2.0, 3.0});
  Eigen::VectorXcd x(3);
  x << 1.0, 10.0, 100.0;
  CHECK(((g * h).apply(x) - g.apply(h.apply(x))).norm() < 1e-14);
  CHECK(((g * h).matrix() - g.matrix() * h.matrix()).norm() < 1e-14);
  CHECK((g * h * (g * h).inverse()).is_identity());
  CHECK(MonomialAutomorphism::diagonal({2.0, 2.0, 2.0}).is_identity());
  CHECK_FALSE(g.is_identity());
}

TEST_CASE("small groups") {
  CHECK(generate_group({MonomialAutomorphism::identity(4)}).order() == 1);
  const auto c3 = MonomialAutomorphism::cycles(3, {{0, 1, 2}});
  const auto grp = generate_group({c3});
  CHECK(grp.order() == 3);
  CHECK(grp.contains(c3 * c3));
  CHECK_THROWS_AS(generate_group({MonomialAutomorphism::diagonal({1.0, std::polar(1.0, 1.0)})}, 50),
                  GroupCapExceeded);
}

TEST_CASE("(3,3) group orders") {
  const auto sym = symmetry_33();
  CHECK(sym.diagonal.order() == 81);
  CHECK(sym.permutations.order() == 36);
  CHECK(sym.product.order() == 2916);
  const auto X = build_family_33(2.0);
  for (const auto& g : sym.product.generators()) CHECK(preserves(g, X));
}

TEST_CASE("(2,2,2,2) group orders") {
  const auto sym = symmetry_2222();
  CHECK(sym.diagonal.order() == 8);
  CHECK(sym.permutations.order() == 96);
  CHECK(sym.product.order() == 768);
  const auto X = build_family_2222(2.0, 3.0);
  for (const auto& g : sym.product.generators()) CHECK(preserves(g, X));
}

TEST_CASE("a non-symmetry is detected") {
  const auto X = build_family_33(2.0);
  CHECK_FALSE(preserves(MonomialAutomorphism::cycles(6, {{0, 3}}), X));
  CHECK_FALSE(preserves(MonomialAutomorphism::diagonal({1.0, 2.0, 1.0, 1.0, 1.0, 1.0}), X));
}

TEST_CASE("alpha1 moves a constructed line to another line on X") {
  const Complex w = omega();
  const auto alpha1 = MonomialAutomorphism::diagonal({1.0, w, 1.0 / w, 1.0, 1.0, 1.0});
  const auto X = build_family_33(2.0);
  const Line l = lines_33({2.0}).solutions.front().line;
  const Line m = apply(alpha1, l);
  CHECK_FALSE(same_line(l, m));
  CHECK(lies_on(m, X).residual < 1e-12);
}

TEST_CASE("orbit and stabilizers of a (3,3) line") {
  const auto sym = symmetry_33();
  const auto X = build_family_33(2.0);
  const auto sols = lines_33({2.0}).solutions;
  for (std::size_t i : {std::size_t{0}, std::size_t{17}, std::size_t{35}}) {
    const Line& l = sols[i].line;
    CHECK(stabilizer(l, sym.diagonal).order() == 1);
    CHECK(stabilizer(l, sym.permutations).order() == 2);
    const Orbit o = orbit(l, sym.product, X);
    CHECK(o.lines.size() == 1458);
    CHECK(o.lines.size() * o.stabilizer_order == sym.product.order());
    CHECK(o.max_residual < 1e-7);
  }
}

TEST_CASE("orbits of (2,2,2,2) seeds") {
  const auto sym = symmetry_2222();
  const auto X = build_family_2222(2.0, 3.0);
  const auto sols = lines_2222({2.0, 3.0}).solutions;
  REQUIRE(sols.size() == 8);
  for (const auto& s : sols) {
    CHECK(stabilizer(s.line, sym.diagonal).order() == 1);
    CHECK(stabilizer(s.line, sym.product).order() == 3);
    const Orbit o = orbit(s.line, sym.product, X);
    CHECK(o.lines.size() == 256);
    CHECK(o.max_residual < 1e-7);
  }
}

TEST_CASE("the (2,2,2,2) seeds share one orbit") {
  // q -> 1/q is realized by (01)(23)(45), c <-> d by (67), (c, d) -> (-c, -d) by a sign change.
  const auto sym = symmetry_2222();
  const auto swap_pairs = MonomialAutomorphism::cycles(8, {{0, 1}, {2, 3}, {4, 5}});
  const auto swap_cd = MonomialAutomorphism::cycles(8, {{6, 7}});
  const auto flip = MonomialAutomorphism::diagonal({1.0, 1.0, 1.0, 1.0, 1.0, 1.0, -1.0, -1.0});
  CHECK(sym.product.contains(swap_pairs));
  CHECK(sym.product.contains(swap_cd));
  CHECK(sym.diagonal.contains(flip));

  const auto sols = lines_2222({2.0, 3.0}).solutions;
  const auto small = generate_group({swap_pairs, swap_cd, flip});
  CHECK(small.order() == 8);
  LineSet reached;
  for (const auto& g : small.elements()) reached.insert(apply(g, sols.front().line));
  CHECK(reached.size() == 8);
  for (const auto& s : sols) CHECK(reached.contains(s.line));

  const auto X = build_family_2222(2.0, 3.0);
  const OrbitUnion u = union_of_orbits({sols[0].line, sols[5].line}, sym.product, X);
  CHECK_FALSE(u.disjoint);
  CHECK(u.total == 256);
}

TEST_CASE("union of orbits: repeated seed is not disjoint, trivial group gives singletons") {
  const auto X = build_family_33(2.0);
  const auto sols = lines_33({2.0}).solutions;
  const auto sym = symmetry_33();
  const OrbitUnion twice = union_of_orbits({sols[0].line, sols[0].line}, sym.diagonal, X);
  CHECK_FALSE(twice.disjoint);
  CHECK(twice.total == 81);

  const auto trivial = generate_group({MonomialAutomorphism::identity(6)});
  std::vector<Line> seeds;
  for (const auto& s : sols) seeds.push_back(s.line);
  const OrbitUnion u = union_of_orbits(seeds, trivial, X);
  CHECK(u.disjoint);
  CHECK(u.total == 36);
}

TEST_CASE("orbit refuses lines off the variety") {
  std::mt19937 rng(3);
  const auto sym = symmetry_33();
  CHECK_THROWS_AS(orbit(Line(oracle::random_matrix(rng, 2, 6)), sym.diagonal, build_family_33(2.0)),
                  NumericError);
}

TEST_CASE("phi is in the permutation groups") {
  CHECK(symmetry_33().permutations.contains(symmetry_33().phi));
  CHECK(symmetry_2222().permutations.contains(symmetry_2222().phi));
  CHECK(family_symmetry(Family::cubic_pair).product.order() == 2916);
}
