#include "cyline/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cyline/roots.hpp"

namespace cyline {

namespace {

std::string fmt(Complex z) {
  std::ostringstream os;
  os.precision(12);
  if (z.imag() == 0.0) {
    os << z.real();
  } else {
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  }
  return os.str();
}

HomogeneousPoly mono(int nv, Exponent e, Complex c) {
  return HomogeneousPoly::monomial(nv, std::move(e), c);
}

// |lhs - rhs| relative to the magnitudes involved.
double rel(Complex lhs, Complex rhs) {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
  return std::abs(lhs - rhs) / scale;
}

void check_near(double distance, const std::string& what, std::vector<std::string>* warnings) {
  if (warnings != nullptr && distance <= kNearDegeneracyTol) {
    std::ostringstream os;
    os << "parameter is within " << distance << " of the degeneracy locus " << what;
    warnings->push_back(os.str());
  }
}

template <class Solution>
void ensure_distinct(const std::vector<Solution>& sols, const std::string& family) {
  LineSet set(1e-6);
  for (const auto& s : sols) {
    if (!set.insert(s.line)) {
      throw DegenerateParameterError(
          {"lines_not_distinct", family + ": constructed lines coincide; parameter is not generic"});
    }
  }
}

}  // namespace

Family parse_family(const std::string& name) {
  if (name == "33") return Family::cubic_pair;
  if (name == "2222") return Family::four_quadrics;
  throw Error("unknown family '" + name + "' (expected 33 or 2222)");
}

std::string family_name(Family f) { return f == Family::cubic_pair ? "33" : "2222"; }

Complex omega() { return std::polar(1.0, 2.0 * std::numbers::pi / 3.0); }
Complex zeta() { return std::polar(1.0, 2.0 * std::numbers::pi / 9.0); }

CompleteIntersection build_family_33(Complex lambda) {
  const int nv = 6;
  HomogeneousPoly f = mono(nv, {3, 0, 0, 0, 0, 0}, 1.0) + mono(nv, {0, 3, 0, 0, 0, 0}, 1.0) +
                      mono(nv, {0, 0, 3, 0, 0, 0}, 1.0) +
                      mono(nv, {0, 0, 0, 1, 1, 1}, -3.0 * lambda);
  HomogeneousPoly g = mono(nv, {0, 0, 0, 3, 0, 0}, 1.0) + mono(nv, {0, 0, 0, 0, 3, 0}, 1.0) +
                      mono(nv, {0, 0, 0, 0, 0, 3}, 1.0) +
                      mono(nv, {1, 1, 1, 0, 0, 0}, -3.0 * lambda);
  return CompleteIntersection(5, {std::move(f), std::move(g)});
}

CompleteIntersection build_family_2222(Complex lambda, Complex mu) {
  const int nv = 8;
  auto square = [&](int i) {
    Exponent e(nv, 0);
    e[i] = 2;
    return mono(nv, std::move(e), 1.0);
  };
  auto product = [&](int i, int j, Complex c) {
    Exponent e(nv, 0);
    e[i] = 1;
    e[j] = 1;
    return mono(nv, std::move(e), c);
  };
  // Quadric k in {1,2,3} omits the squares of pair (6-2k, 7-2k) and carries that pair's
  // product instead; quadric 0 omits (6,7).
  std::vector<HomogeneousPoly> polys;
  const int omitted[4] = {6, 4, 2, 0};
  for (int k = 0; k < 4; ++k) {
    HomogeneousPoly q(nv, 2);
    for (int i = 0; i < nv; ++i) {
      if (i == omitted[k] || i == omitted[k] + 1) continue;
      q = q + square(i);
    }
    q = q + product(omitted[k], omitted[k] + 1, k == 0 ? -2.0 * mu : -2.0 * lambda);
    polys.push_back(std::move(q));
  }
  return CompleteIntersection(7, std::move(polys));
}

std::optional<Degeneracy> degeneracy_33(Complex lambda, std::vector<std::string>* warnings) {
  const double zero_dist = std::abs(lambda);
  const Complex l6 = std::pow(lambda, 6);
  const double d1 = std::abs(l6 - 1.0);
  const double d4 = std::abs(l6 / 4.0 - 1.0);
  if (zero_dist <= kDegeneracyTol) {
    return Degeneracy{"lambda_zero", "(3,3) pencil: lambda = 0 gives c = 0 in the sextic"};
  }
  // The quadratic 64u^2 - (16 l^6 - 32)u + l^6 in u = c^3 has discriminant
  // 256 (l^6 - 1)(l^6 - 4); its double root is u = (16 l^6 - 32) / 128.
  if (d1 <= kDegeneracyTol) {
    return Degeneracy{"lambda6_eq_1",
                      "(3,3) pencil: lambda^6 = 1, so 64u^2 - (16 lambda^6 - 32)u + lambda^6 has the "
                      "double root u = c^3 = -1/8"};
  }
  if (d4 <= kDegeneracyTol) {
    return Degeneracy{"lambda6_eq_4",
                      "(3,3) pencil: lambda^6 = 4, so 64u^2 - (16 lambda^6 - 32)u + lambda^6 has the "
                      "double root u = c^3 = 1/4"};
  }
  check_near(zero_dist, "lambda = 0", warnings);
  check_near(d1, "lambda^6 = 1", warnings);
  check_near(d4, "lambda^6 = 4", warnings);
  return std::nullopt;
}

std::optional<Degeneracy> degeneracy_2222(Complex lambda, Complex mu,
                                          std::vector<std::string>* warnings) {
  const double dl = std::abs(lambda * lambda - 1.0);
  const double dm = std::abs(mu);
  if (dl <= kDegeneracyTol) {
    const Complex q = -lambda;
    return Degeneracy{"lambda_sq_eq_1", "(2,2,2,2) family: lambda^2 = 1, so q^2 + 2 lambda q + 1 has "
                                        "the double root q = " +
                                            fmt(q) + " and lambda q + 1 = 0"};
  }
  if (dm <= kDegeneracyTol) {
    return Degeneracy{"mu_zero", "(2,2,2,2) family: mu = 0 leaves d = (3a^2 + 3)/(2 mu c) undefined"};
  }
  check_near(dl, "lambda^2 = 1", warnings);
  check_near(dm, "mu = 0", warnings);
  return std::nullopt;
}

LineConstruction<LineSolution33> lines_33(const Family33Params& params) {
  const Complex lambda = params.lambda;
  LineConstruction<LineSolution33> out;
  if (auto d = degeneracy_33(lambda, &out.warnings)) throw DegenerateParameterError(*d);

  const Complex l6 = std::pow(lambda, 6);
  const std::vector<Complex> quad = {l6, -(16.0 * l6 - 32.0), 64.0};
  const CompleteIntersection X = build_family_33(lambda);
  for (const Complex u : univariate_roots(quad)) {
    for (const Complex c : kth_roots(u, 3)) {
      const Complex a3 = (2.0 * u + 1.0) * lambda / (12.0 * c);
      for (const Complex a : kth_roots(a3, 3)) {
        const Complex b = 4.0 * a * c / (lambda * lambda);
        const Complex p0 = std::sqrt(-2.0 * a / lambda);
        for (const Complex p : {p0, -p0}) {
          Eigen::MatrixXcd span(2, 6);
          span << 1.0, -1.0, 0.0, p, -p, 0.0,  //
              a, a, b, c, c, 1.0;
          Line line(std::move(span));
          const Incidence inc = lies_on(line, X);
          if (!inc.incident) {
            std::ostringstream os;
            os << "(3,3) construction produced a line with incidence residual " << inc.residual;
            throw NumericError(os.str());
          }
          out.solutions.push_back({a, b, c, p, std::move(line), inc.residual});
        }
      }
    }
  }
  ensure_distinct(out.solutions, "(3,3) pencil");
  return out;
}

LineConstruction<LineSolution2222> lines_2222(const Family2222Params& params) {
  const Complex lambda = params.lambda;
  const Complex mu = params.mu;
  LineConstruction<LineSolution2222> out;
  if (auto d = degeneracy_2222(lambda, mu, &out.warnings)) throw DegenerateParameterError(*d);

  const Complex w = omega();
  const CompleteIntersection X = build_family_2222(lambda, mu);
  const std::vector<Complex> qpoly = {1.0, 2.0 * lambda, 1.0};
  for (const Complex q : univariate_roots(qpoly)) {
    const Complex a = -(lambda + q) / (lambda * q + 1.0);
    const Complex k = 3.0 * a * a + 3.0;
    if (std::abs(k) <= kDegeneracyTol * std::max(1.0, std::abs(a * a))) {
      throw DegenerateParameterError(
          {"vanishing_c", "(2,2,2,2) family: 3a^2 + 3 = 0 at a = " + fmt(a) + ", forcing c = 0"});
    }
    // c^2 + d^2 + 2a^2 - 2 lambda a + 2 = 0 with c d = (3a^2 + 3)/(2 mu):
    // 4 mu^2 c^4 + 4 mu^2 (2a^2 - 2 lambda a + 2) c^2 + (3a^2 + 3)^2 = 0.
    const Complex m2 = 4.0 * mu * mu;
    const std::vector<Complex> cpoly = {k * k, m2 * (2.0 * a * a - 2.0 * lambda * a + 2.0), m2};
    const auto c2roots = univariate_roots(cpoly);
    if (std::abs(c2roots[0] - c2roots[1]) <= kDegeneracyTol * std::abs(c2roots[0])) {
      throw DegenerateParameterError(
          {"repeated_c_root", "(2,2,2,2) family: the quartic in c has a repeated root at a = " +
                                  fmt(a)});
    }
    for (const Complex c2 : c2roots) {
      const Complex c0 = std::sqrt(c2);
      for (const Complex c : {c0, -c0}) {
        const Complex d = k / (2.0 * mu * c);
        Eigen::MatrixXcd span(2, 8);
        span << 1.0, q, w, w * q, w * w, w * w * q, 0.0, 0.0,  //
            a, 1.0, a, 1.0, a, 1.0, c, d;
        Line line(std::move(span));
        const Incidence inc = lies_on(line, X);
        if (!inc.incident) {
          std::ostringstream os;
          os << "(2,2,2,2) construction produced a line with incidence residual " << inc.residual;
          throw NumericError(os.str());
        }
        out.solutions.push_back({a, c, d, q, std::move(line), inc.residual});
      }
    }
  }
  ensure_distinct(out.solutions, "(2,2,2,2) family");
  return out;
}

double relation_residual(const LineSolution33& s, Complex lambda) {
  const Complex c3 = s.c * s.c * s.c;
  const Complex l6 = std::pow(lambda, 6);
  double r = rel(s.a * s.a * s.a, (2.0 * c3 + 1.0) * lambda / (12.0 * s.c));
  r = std::max(r, rel(s.b, 4.0 * s.a * s.c / (lambda * lambda)));
  r = std::max(r, rel(s.p * s.p, -2.0 * s.a / lambda));
  const double sextic_scale = std::abs(64.0 * c3 * c3) + std::abs((16.0 * l6 - 32.0) * c3) +
                              std::abs(l6);
  r = std::max(r, std::abs(64.0 * c3 * c3 - (16.0 * l6 - 32.0) * c3 + l6) / sextic_scale);
  return r;
}

double relation_residual(const LineSolution2222& s, Complex lambda, Complex mu) {
  const Complex a2 = s.a * s.a;
  const Complex k = 3.0 * a2 + 3.0;
  double r = std::abs(s.q * s.q + 2.0 * lambda * s.q + 1.0) /
             (std::abs(s.q * s.q) + std::abs(2.0 * lambda * s.q) + 1.0);
  r = std::max(r, rel(s.a, -(lambda + s.q) / (lambda * s.q + 1.0)));
  r = std::max(r, rel(2.0 * mu * s.c * s.d, k));
  const Complex c2 = s.c * s.c;
  const Complex m2 = 4.0 * mu * mu;
  const Complex mid = m2 * (2.0 * a2 - 2.0 * lambda * s.a + 2.0);
  const double scale = std::abs(m2 * c2 * c2) + std::abs(mid * c2) + std::abs(k * k);
  r = std::max(r, std::abs(m2 * c2 * c2 + mid * c2 + k * k) / scale);
  return r;
}

bool meets_subspace(const Line& l, const Eigen::MatrixXcd& basis, double tol) {
  const Eigen::Index n1 = l.span().cols();
  if (basis.rows() != n1) throw DimensionError("subspace basis has the wrong ambient size");
  const Eigen::Index k = basis.cols();
  if (2 + k > n1) return true;
  Eigen::MatrixXcd stacked(2 + k, n1);
  stacked.topRows(2) = l.span();
  stacked.bottomRows(k) = basis.transpose();
  for (Eigen::Index i = 0; i < stacked.rows(); ++i) stacked.row(i).normalize();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked);
  const auto& sv = svd.singularValues();
  return sv(sv.size() - 1) <= tol * sv(0);
}

std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> invariant_subspaces(Family family) {
  if (family == Family::cubic_pair) {
    // V+ = (a:a:b:c:c:d), V- = (q:-q:0:p:-p:0)
    Eigen::MatrixXcd plus = Eigen::MatrixXcd::Zero(6, 4);
    plus(0, 0) = plus(1, 0) = 1.0;
    plus(2, 1) = 1.0;
    plus(3, 2) = plus(4, 2) = 1.0;
    plus(5, 3) = 1.0;
    Eigen::MatrixXcd minus = Eigen::MatrixXcd::Zero(6, 2);
    minus(0, 0) = 1.0;
    minus(1, 0) = -1.0;
    minus(3, 1) = 1.0;
    minus(4, 1) = -1.0;
    return {plus, minus};
  }
  // V+ = (a:b:a:b:a:b:c:d), V_w = (p:q:wp:wq:w^2p:w^2q:0:0)
  const Complex w = omega();
  Eigen::MatrixXcd plus = Eigen::MatrixXcd::Zero(8, 4);
  plus(0, 0) = plus(2, 0) = plus(4, 0) = 1.0;
  plus(1, 1) = plus(3, 1) = plus(5, 1) = 1.0;
  plus(6, 2) = 1.0;
  plus(7, 3) = 1.0;
  Eigen::MatrixXcd eig = Eigen::MatrixXcd::Zero(8, 2);
  eig(0, 0) = 1.0;
  eig(2, 0) = w;
  eig(4, 0) = w * w;
  eig(1, 1) = 1.0;
  eig(3, 1) = w;
  eig(5, 1) = w * w;
  return {plus, eig};
}

bool invariant_subspace_check(const Line& l, Family family, double tol) {
  const auto [plus, other] = invariant_subspaces(family);
  return meets_subspace(l, plus, tol) && meets_subspace(l, other, tol);
}

}  // namespace cyline
