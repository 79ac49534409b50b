#include "cyline/line.hpp"

#include <cmath>

namespace cyline {

Line::Line(Eigen::MatrixXcd span) : span_(std::move(span)) {
  if (span_.rows() != 2 || span_.cols() < 2) {
    throw DimensionError("a line needs a 2 x (n+1) spanning matrix with n >= 1");
  }
  if (!span_.allFinite()) throw NumericError("non-finite entry in line span");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(span_);
  const auto& sv = svd.singularValues();
  if (!(sv(1) > kZeroTol * sv(0))) throw NumericError("line span is rank deficient");
}

Line Line::through(const Eigen::VectorXcd& p, const Eigen::VectorXcd& q) {
  if (p.size() != q.size()) throw DimensionError("points lie in different projective spaces");
  Eigen::MatrixXcd span(2, p.size());
  span.row(0) = p.transpose();
  span.row(1) = q.transpose();
  return Line(std::move(span));
}

Eigen::VectorXcd Line::point(Complex s, Complex t) const {
  return (s * span_.row(0) + t * span_.row(1)).transpose();
}

int plucker_index(int i, int j, int n) {
  // Entries with first index < i occupy sum_{k<i} (n - k) slots.
  return i * n - i * (i - 1) / 2 + (j - i - 1);
}

Eigen::VectorXcd Line::plucker() const {
  const int m = static_cast<int>(span_.cols());
  Eigen::VectorXcd p(m * (m - 1) / 2);
  int k = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      p(k++) = span_(0, i) * span_(1, j) - span_(0, j) * span_(1, i);
    }
  }
  return p;
}

Eigen::VectorXcd canonical_plucker(const Line& l) {
  Eigen::VectorXcd p = l.plucker();
  const double norm = p.norm();
  if (!(norm > 0.0)) throw NumericError("line span is rank deficient");
  p /= norm;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (std::abs(p(i)) > kPivotTol) {
      p *= std::conj(p(i)) / std::abs(p(i));
      p(i) = std::abs(p(i));
      break;
    }
  }
  return p;
}

bool same_line(const Line& l1, const Line& l2, double tol) {
  if (l1.ambient_dim() != l2.ambient_dim()) return false;
  return (canonical_plucker(l1) - canonical_plucker(l2)).cwiseAbs().maxCoeff() <= tol;
}

double LineSet::key(const Eigen::VectorXcd& v) const {
  // Fixed linear functional; entrywise agreement within tol moves it by at most
  // tol * (sum of weights).
  double k = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    k += v(i).real() / static_cast<double>(i + 1) + v(i).imag() / static_cast<double>(i + 2);
  }
  return k;
}

std::ptrdiff_t LineSet::find(const Eigen::VectorXcd& v) const {
  double weight = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    weight += 1.0 / static_cast<double>(i + 1) + 1.0 / static_cast<double>(i + 2);
  }
  const double k = key(v);
  const double window = 2.0 * tol_ * weight;
  for (auto it = index_.lower_bound(k - window); it != index_.end() && it->first <= k + window;
       ++it) {
    const auto& w = canonical_[it->second];
    if (w.size() == v.size() && (w - v).cwiseAbs().maxCoeff() <= tol_) {
      return static_cast<std::ptrdiff_t>(it->second);
    }
  }
  return -1;
}

bool LineSet::insert(const Line& l) {
  Eigen::VectorXcd v = canonical_plucker(l);
  if (find(v) >= 0) return false;
  index_.emplace(key(v), lines_.size());
  lines_.push_back(l);
  canonical_.push_back(std::move(v));
  return true;
}

bool LineSet::contains(const Line& l) const { return find(canonical_plucker(l)) >= 0; }

}  // namespace cyline
