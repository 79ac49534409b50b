#pragma once

#include <optional>
#include <vector>

#include "cyline/variety.hpp"

namespace cyline {

// N = O(a) + O(b) with a >= b, a + b = -2 and a <= 1.
struct SplittingType {
  int a = 0;
  int b = 0;
  friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

struct Normalization {
  CompleteIntersection variety;  // X in coordinates where the line is {y2 = ... = yn = 0}
  Eigen::MatrixXcd witness;      // x = witness * y
};

// Witness columns 0 and 1 are the span rows; the remaining columns are standard basis
// vectors chosen greedily to stay as independent of the span as possible.
// Throws Error when l does not lie on X.
Normalization normalize_line_coords(const CompleteIntersection& X, const Line& l,
                                    double incidence_tol = kIncidenceTol);

// Same, with an explicit (n+1) x (n-1) complement for columns 2..n.
Normalization normalize_line_coords(const CompleteIntersection& X, const Line& l,
                                    const Eigen::MatrixXcd& complement,
                                    double incidence_tol = kIncidenceTol);

// k x (n-1) matrix of binary forms in (y0, y1); entry (i, j) = dF_i/dy_{j+2} on the line.
struct RestrictionMatrix {
  std::vector<std::vector<BinaryForm>> entries;

  int rows() const { return static_cast<int>(entries.size()); }
  int cols() const { return entries.empty() ? 0 : static_cast<int>(entries.front().size()); }
  int row_degree(int i) const { return entries[i].front().degree; }
};

// Throws Error when some polynomial does not vanish on the standard line.
RestrictionMatrix restriction_matrix(const CompleteIntersection& normalized);

struct SyzygySearch {
  std::optional<int> degree;             // nullopt means "at least max_t + 1"
  std::size_t nullity = 0;               // kernel dimension at `degree`
  std::vector<std::size_t> nullity_by_degree;  // one entry per searched degree 0..max_t
  // Coefficients of the witness T: witness[j][m] multiplies s^(t-m) t^m in column j.
  std::vector<std::vector<Complex>> witness;
  double residual = 0.0;  // max over rows of |M T| coefficients, rows scaled to unit size
};

// Linear system whose kernel is the space of syzygies of degree t.
Eigen::MatrixXcd syzygy_system(const RestrictionMatrix& M, int t);

// Smallest t <= max_t admitting a nonzero T with M T = 0. With stop_at_first == false the
// search continues to max_t so nullity_by_degree is complete.
SyzygySearch minimal_syzygy_degree(const RestrictionMatrix& M, int max_t = 2,
                                   double tol = kNullspaceTol, bool stop_at_first = true);

// Throws Error for t < 0 or for a t = 0 kernel of dimension >= 2.
SplittingType splitting_type(int t, std::size_t nullity = 1);

// h^0 of the split bundle: sum over components O(e), e >= 0, of e + 1.
int hilbert_tangent_dim(const SplittingType& s);

struct AnalysisOptions {
  int max_t = 2;
  int diagnostic_max_t = 4;
  double tol = kNullspaceTol;
  double incidence_tol = kIncidenceTol;
};

struct LineAnalysis {
  SplittingType splitting;
  int tangent_dim = 0;
  int syzygy_degree = 0;  // t, or max_t + 1 when none was found up to max_t
  SyzygySearch search;
  std::vector<std::size_t> nullity_by_degree;  // 0..diagnostic_max_t
  std::optional<int> second_generator_degree;
  bool nullity_consistent = false;  // kernel dimensions match O(1-t1) + O(1-t2)
  double incidence_residual = 0.0;
  double normalization_residual = 0.0;
};

LineAnalysis analyze_line(const CompleteIntersection& X, const Line& l,
                          const AnalysisOptions& opts = {});
LineAnalysis analyze_normalized(const CompleteIntersection& X, const Line& l,
                                const Normalization& norm, const AnalysisOptions& opts = {});

}  // namespace cyline
