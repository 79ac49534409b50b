#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "cyline/core.hpp"

namespace cyline {

// A line in P^n given by a 2 x (n+1) spanning matrix of rank 2.
class Line {
 public:
  explicit Line(Eigen::MatrixXcd span);
  static Line through(const Eigen::VectorXcd& p, const Eigen::VectorXcd& q);

  const Eigen::MatrixXcd& span() const { return span_; }
  Eigen::VectorXcd row(int i) const { return span_.row(i).transpose(); }
  int ambient_dim() const { return static_cast<int>(span_.cols()) - 1; }

  // Point s * row0 + t * row1.
  Eigen::VectorXcd point(Complex s, Complex t) const;

  // All 2x2 minors p_ij = r0_i r1_j - r0_j r1_i for i < j, in lexicographic order of (i, j).
  Eigen::VectorXcd plucker() const;

 private:
  Eigen::MatrixXcd span_;
};

// Index of minor (i, j), i < j, in the Plücker vector of a line in P^n.
int plucker_index(int i, int j, int n);

// Unit Plücker vector whose first entry of magnitude above kPivotTol is real and positive.
// Two spans describe the same line iff their canonical vectors agree.
inline constexpr double kPivotTol = 1e-6;
Eigen::VectorXcd canonical_plucker(const Line& l);

bool same_line(const Line& l1, const Line& l2, double tol = kLineTol);

// Set of lines deduplicated by canonical Plücker vector within an absolute tolerance.
class LineSet {
 public:
  explicit LineSet(double tol = kLineTol) : tol_(tol) {}

  // Returns true when the line was not already present.
  bool insert(const Line& l);
  bool contains(const Line& l) const;
  std::size_t size() const { return lines_.size(); }
  const std::vector<Line>& lines() const { return lines_; }
  const std::vector<Eigen::VectorXcd>& canonical() const { return canonical_; }

 private:
  double key(const Eigen::VectorXcd& v) const;
  std::ptrdiff_t find(const Eigen::VectorXcd& v) const;

  double tol_;
  std::vector<Line> lines_;
  std::vector<Eigen::VectorXcd> canonical_;
  std::multimap<double, std::size_t> index_;
};

}  // namespace cyline
