#include "cyline/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace cyline {

namespace {

void check_exponent(const Exponent& e, int num_vars, int degree) {
  if (static_cast<int>(e.size()) != num_vars) {
    throw DimensionError("exponent vector has length " + std::to_string(e.size()) + ", expected " +
                         std::to_string(num_vars));
  }
  int total = 0;
  for (int x : e) {
    if (x < 0) throw DimensionError("negative exponent");
    total += x;
  }
  if (total != degree) {
    throw DimensionError("exponent vector sums to " + std::to_string(total) +
                         ", expected degree " + std::to_string(degree));
  }
}

// Binomial expansion of (a s + b t)^k as a dense binary form.
BinaryForm linear_power(Complex a, Complex b, int k) {
  BinaryForm out(k);
  Complex binom = 1.0;
  for (int j = 0; j <= k; ++j) {
    out.coeffs[j] = binom * std::pow(a, k - j) * std::pow(b, j);
    binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
  }
  return out;
}

}  // namespace

BinaryForm::BinaryForm(int deg, std::vector<Complex> c) : degree(deg), coeffs(std::move(c)) {
  if (deg < 0 || static_cast<int>(coeffs.size()) != deg + 1) {
    throw DimensionError("binary form of degree " + std::to_string(deg) + " needs " +
                         std::to_string(deg + 1) + " coefficients");
  }
}

double BinaryForm::max_abs() const {
  double m = 0.0;
  for (const auto& c : coeffs) m = std::max(m, std::abs(c));
  return m;
}

Complex BinaryForm::evaluate(Complex s, Complex t) const {
  Complex acc = 0.0;
  for (int j = 0; j <= degree; ++j) acc += coeffs[j] * std::pow(s, degree - j) * std::pow(t, j);
  return acc;
}

BinaryForm operator*(const BinaryForm& lhs, const BinaryForm& rhs) {
  BinaryForm out(lhs.degree + rhs.degree);
  for (int i = 0; i <= lhs.degree; ++i) {
    if (lhs.coeffs[i] == 0.0) continue;
    for (int j = 0; j <= rhs.degree; ++j) out.coeffs[i + j] += lhs.coeffs[i] * rhs.coeffs[j];
  }
  return out;
}

HomogeneousPoly::HomogeneousPoly(int num_vars, int degree) : num_vars_(num_vars), degree_(degree) {
  if (num_vars < 1) throw DimensionError("polynomial needs at least one variable");
  if (degree < 0) throw DimensionError("negative degree");
}

HomogeneousPoly::HomogeneousPoly(int num_vars, int degree, Terms terms)
    : HomogeneousPoly(num_vars, degree) {
  for (const auto& [e, c] : terms) {
    check_exponent(e, num_vars, degree);
    if (!is_finite(c)) throw NumericError("non-finite polynomial coefficient");
  }
  terms_ = std::move(terms);
  prune();
}

HomogeneousPoly HomogeneousPoly::monomial(int num_vars, Exponent exps, Complex coeff) {
  const int deg = std::accumulate(exps.begin(), exps.end(), 0);
  return HomogeneousPoly(num_vars, deg, Terms{{std::move(exps), coeff}});
}

HomogeneousPoly HomogeneousPoly::variable(int num_vars, int index) {
  if (index < 0 || index >= num_vars) throw DimensionError("variable index out of range");
  Exponent e(num_vars, 0);
  e[index] = 1;
  return monomial(num_vars, std::move(e));
}

HomogeneousPoly HomogeneousPoly::constant(int num_vars, Complex value) {
  return HomogeneousPoly(num_vars, 0, Terms{{Exponent(num_vars, 0), value}});
}

void HomogeneousPoly::prune() {
  const double cut = kZeroTol * max_abs_coeff();
  std::erase_if(terms_, [cut](const auto& kv) { return std::abs(kv.second) <= cut; });
}

double HomogeneousPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

Complex HomogeneousPoly::coeff(const Exponent& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Complex{0.0} : it->second;
}

Complex HomogeneousPoly::evaluate(std::span<const Complex> point) const {
  if (static_cast<int>(point.size()) != num_vars_) throw DimensionError("evaluation point size");
  Complex acc = 0.0;
  for (const auto& [e, c] : terms_) {
    Complex m = c;
    for (int i = 0; i < num_vars_; ++i) {
      if (e[i] != 0) m *= std::pow(point[i], e[i]);
    }
    acc += m;
  }
  return acc;
}

HomogeneousPoly HomogeneousPoly::derivative(int var) const {
  if (var < 0 || var >= num_vars_) throw DimensionError("derivative variable out of range");
  if (degree_ == 0) return HomogeneousPoly(num_vars_, 0);
  Terms out;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    out[d] += c * static_cast<double>(e[var]);
  }
  return HomogeneousPoly(num_vars_, degree_ - 1, std::move(out));
}

bool HomogeneousPoly::approx_equal(const HomogeneousPoly& other, double rel_tol) const {
  if (num_vars_ != other.num_vars_ || degree_ != other.degree_) return false;
  const double scale = std::max({max_abs_coeff(), other.max_abs_coeff(), 1e-300});
  for (const auto& [e, c] : terms_) {
    if (std::abs(c - other.coeff(e)) > rel_tol * scale) return false;
  }
  for (const auto& [e, c] : other.terms_) {
    if (std::abs(c - coeff(e)) > rel_tol * scale) return false;
  }
  return true;
}

HomogeneousPoly& HomogeneousPoly::operator*=(Complex c) {
  for (auto& [e, v] : terms_) v *= c;
  prune();
  return *this;
}

HomogeneousPoly operator+(const HomogeneousPoly& lhs, const HomogeneousPoly& rhs) {
  if (lhs.num_vars_ != rhs.num_vars_) throw DimensionError("adding polynomials in different rings");
  if (lhs.degree_ != rhs.degree_) {
    throw DimensionError("adding polynomials of degree " + std::to_string(lhs.degree_) + " and " +
                         std::to_string(rhs.degree_));
  }
  const double scale = std::max(lhs.max_abs_coeff(), rhs.max_abs_coeff());
  HomogeneousPoly out = lhs;
  for (const auto& [e, c] : rhs.terms_) out.terms_[e] += c;
  // Cancellation is judged against the operands, not the (possibly tiny) result.
  const double cut = kZeroTol * scale;
  std::erase_if(out.terms_, [cut](const auto& kv) { return std::abs(kv.second) <= cut; });
  out.prune();
  return out;
}

HomogeneousPoly operator-(const HomogeneousPoly& lhs, const HomogeneousPoly& rhs) {
  return lhs + (-rhs);
}

HomogeneousPoly operator*(const HomogeneousPoly& lhs, const HomogeneousPoly& rhs) {
  if (lhs.num_vars_ != rhs.num_vars_) {
    throw DimensionError("multiplying polynomials in different rings");
  }
  HomogeneousPoly out(lhs.num_vars_, lhs.degree_ + rhs.degree_);
  Exponent e(lhs.num_vars_);
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) {
      for (int i = 0; i < lhs.num_vars_; ++i) e[i] = e1[i] + e2[i];
      out.terms_[e] += c1 * c2;
    }
  }
  out.prune();
  return out;
}

HomogeneousPoly poly_arith(const HomogeneousPoly& p, const HomogeneousPoly& q, PolyOp op) {
  return op == PolyOp::add ? p + q : p * q;
}

HomogeneousPoly substitute_linear(const HomogeneousPoly& p, const Eigen::MatrixXcd& L) {
  if (L.rows() != p.num_vars()) {
    throw DimensionError("substitution matrix has " + std::to_string(L.rows()) +
                         " rows, polynomial has " + std::to_string(p.num_vars()) + " variables");
  }
  const int m = static_cast<int>(L.cols());
  const int n = p.num_vars();

  // powers[i][k] = (sum_j L(i,j) y_j)^k, built on demand.
  std::vector<std::vector<HomogeneousPoly>> powers(n);
  auto power = [&](int i, int k) -> const HomogeneousPoly& {
    auto& row = powers[i];
    if (row.empty()) {
      row.push_back(HomogeneousPoly::constant(m, 1.0));
      HomogeneousPoly::Terms lin;
      for (int j = 0; j < m; ++j) {
        if (L(i, j) == 0.0) continue;
        Exponent e(m, 0);
        e[j] = 1;
        lin[e] = L(i, j);
      }
      row.emplace_back(m, 1, std::move(lin));
    }
    while (static_cast<int>(row.size()) <= k) row.push_back(row.back() * row[1]);
    return row[k];
  };

  HomogeneousPoly::Terms acc;
  for (const auto& [e, c] : p.terms()) {
    HomogeneousPoly term = HomogeneousPoly::constant(m, c);
    for (int i = 0; i < n; ++i) {
      if (e[i] != 0) term = term * power(i, e[i]);
    }
    for (const auto& [te, tc] : term.terms()) acc[te] += tc;
  }
  // Prune relative to the size of the expanded terms so cancellation debris disappears.
  double scale = 0.0;
  for (const auto& [e, c] : p.terms()) {
    double t = std::abs(c);
    for (int i = 0; i < n; ++i) t *= std::pow(L.row(i).cwiseAbs().sum(), e[i]);
    scale = std::max(scale, t);
  }
  std::erase_if(acc, [&](const auto& kv) { return std::abs(kv.second) <= kZeroTol * scale; });
  return HomogeneousPoly(m, p.degree(), std::move(acc));
}

HomogeneousPoly change_coordinates(const HomogeneousPoly& p, const Eigen::MatrixXcd& A,
                                   double max_condition) {
  if (A.rows() != A.cols() || A.rows() != p.num_vars()) {
    throw DimensionError("coordinate change must be a square matrix of size " +
                         std::to_string(p.num_vars()));
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  if (!(smin > 0.0) || smax / smin > max_condition) {
    std::ostringstream os;
    os << "coordinate change is singular or ill-conditioned (condition "
       << (smin > 0.0 ? smax / smin : INFINITY) << ")";
    throw NumericError(os.str());
  }
  return substitute_linear(p, A);
}

BinaryForm restrict_to_line(const HomogeneousPoly& p, const Eigen::VectorXcd& row0,
                            const Eigen::VectorXcd& row1) {
  if (row0.size() != p.num_vars() || row1.size() != p.num_vars()) {
    throw DimensionError("line and polynomial live in different projective spaces");
  }
  BinaryForm out(p.degree());
  for (const auto& [e, c] : p.terms()) {
    BinaryForm term(0, {c});
    for (int i = 0; i < p.num_vars(); ++i) {
      if (e[i] != 0) term = term * linear_power(row0(i), row1(i), e[i]);
    }
    for (int j = 0; j <= out.degree; ++j) out.coeffs[j] += term.coeffs[j];
  }
  return out;
}

double restriction_scale(const HomogeneousPoly& p, const Eigen::VectorXcd& row0,
                         const Eigen::VectorXcd& row1) {
  double total = 0.0;
  for (const auto& [e, c] : p.terms()) {
    double t = std::abs(c);
    for (int i = 0; i < p.num_vars(); ++i) {
      if (e[i] != 0) t *= std::pow(std::abs(row0(i)) + std::abs(row1(i)), e[i]);
    }
    total += t;
  }
  return total;
}

Complex parse_complex(const std::string& text) {
  std::istringstream is(text);
  double re = 0.0;
  double im = 0.0;
  char comma = 0;
  if (!(is >> re)) throw Error("cannot parse complex number '" + text + "'");
  if (is >> comma) {
    if (comma != ',' || !(is >> im)) throw Error("cannot parse complex number '" + text + "'");
  }
  std::string rest;
  if (is >> rest) throw Error("trailing characters in complex number '" + text + "'");
  return {re, im};
}

}  // namespace cyline
