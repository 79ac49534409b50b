#include "cyline/normal_bundle.hpp"

#include <algorithm>
#include <sstream>

#include "cyline/roots.hpp"

namespace cyline {

namespace {

Eigen::MatrixXcd greedy_complement(const Line& l) {
  const Eigen::Index n1 = l.span().cols();
  Eigen::MatrixXcd basis(n1, 2);
  basis.col(0) = l.row(0);
  basis.col(1) = l.row(1);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(basis);
  Eigen::MatrixXcd Q = qr.householderQ() * Eigen::MatrixXcd::Identity(n1, 2);

  Eigen::MatrixXcd complement(n1, n1 - 2);
  std::vector<bool> used(static_cast<std::size_t>(n1), false);
  for (Eigen::Index k = 0; k < n1 - 2; ++k) {
    Eigen::Index best = -1;
    double best_norm = -1.0;
    Eigen::VectorXcd best_residual;
    for (Eigen::Index j = 0; j < n1; ++j) {
      if (used[j]) continue;
      Eigen::VectorXcd e = Eigen::VectorXcd::Unit(n1, j);
      Eigen::VectorXcd r = e - Q * (Q.adjoint() * e);
      r -= Q * (Q.adjoint() * r);
      if (r.norm() > best_norm + 1e-12) {
        best = j;
        best_norm = r.norm();
        best_residual = r;
      }
    }
    used[best] = true;
    complement.col(k) = Eigen::VectorXcd::Unit(n1, best);
    Q.conservativeResize(Eigen::NoChange, Q.cols() + 1);
    Q.col(Q.cols() - 1) = best_residual / best_norm;
  }
  return complement;
}

}  // namespace

Normalization normalize_line_coords(const CompleteIntersection& X, const Line& l,
                                    double incidence_tol) {
  return normalize_line_coords(X, l, greedy_complement(l), incidence_tol);
}

Normalization normalize_line_coords(const CompleteIntersection& X, const Line& l,
                                    const Eigen::MatrixXcd& complement, double incidence_tol) {
  const Incidence inc = lies_on(l, X, incidence_tol);
  if (!inc.incident) {
    std::ostringstream os;
    os << "line does not lie on the variety (residual " << inc.residual << ")";
    throw Error(os.str());
  }
  const Eigen::Index n1 = X.ambient_dim() + 1;
  if (complement.rows() != n1 || complement.cols() != n1 - 2) {
    throw DimensionError("complement must be (n+1) x (n-1)");
  }
  Eigen::MatrixXcd witness(n1, n1);
  witness.col(0) = l.row(0);
  witness.col(1) = l.row(1);
  witness.rightCols(n1 - 2) = complement;

  std::vector<HomogeneousPoly> polys;
  for (const auto& p : X.polys()) polys.push_back(change_coordinates(p, witness));
  return {CompleteIntersection(X.ambient_dim(), std::move(polys)), std::move(witness)};
}

RestrictionMatrix restriction_matrix(const CompleteIntersection& normalized) {
  const int n = normalized.ambient_dim();
  RestrictionMatrix M;
  for (std::size_t i = 0; i < normalized.polys().size(); ++i) {
    const auto& F = normalized.polys()[i];
    const int d = F.degree();
    const double scale = std::max(F.max_abs_coeff(), 1e-300);
    std::vector<BinaryForm> row(static_cast<std::size_t>(n - 1), BinaryForm(d - 1));
    for (const auto& [e, c] : F.terms()) {
      int tail = 0;
      int which = -1;
      for (int k = 2; k <= n; ++k) {
        if (e[k] != 0) {
          tail += e[k];
          which = k;
        }
      }
      if (tail == 0) {
        if (std::abs(c) > kIncidenceTol * scale) {
          throw Error("polynomial " + std::to_string(i) +
                      " does not vanish on the standard line; it is not in the line's ideal");
        }
      } else if (tail == 1) {
        // Linear in the normal coordinates: contributes c * y0^e0 y1^e1 to dF/dy_which.
        row[which - 2].coeffs[e[1]] += c;
      }
    }
    M.entries.push_back(std::move(row));
  }
  return M;
}

Eigen::MatrixXcd syzygy_system(const RestrictionMatrix& M, int t) {
  const int cols = M.cols();
  Eigen::Index total_rows = 0;
  for (int i = 0; i < M.rows(); ++i) total_rows += M.row_degree(i) + t + 1;
  Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(total_rows, static_cast<Eigen::Index>(cols) * (t + 1));
  Eigen::Index r0 = 0;
  for (int i = 0; i < M.rows(); ++i) {
    const int d = M.row_degree(i);
    double scale = 0.0;
    for (const auto& f : M.entries[i]) scale = std::max(scale, f.max_abs());
    const double inv = scale > 0.0 ? 1.0 / scale : 1.0;
    for (int k = 0; k <= d + t; ++k) {
      for (int j = 0; j < cols; ++j) {
        const auto& f = M.entries[i][j];
        for (int m = 0; m <= t; ++m) {
          const int idx = k - m;
          if (idx >= 0 && idx <= d) S(r0 + k, j * (t + 1) + m) = f.coeffs[idx] * inv;
        }
      }
    }
    r0 += d + t + 1;
  }
  return S;
}

SyzygySearch minimal_syzygy_degree(const RestrictionMatrix& M, int max_t, double tol,
                                   bool stop_at_first) {
  if (max_t < 0) throw Error("max_t must be non-negative");
  SyzygySearch out;
  for (int t = 0; t <= max_t; ++t) {
    const Eigen::MatrixXcd S = syzygy_system(M, t);
    const auto kernel = numeric_nullspace(S, tol);
    out.nullity_by_degree.push_back(kernel.size());
    if (!kernel.empty() && !out.degree) {
      out.degree = t;
      out.nullity = kernel.size();
      const Eigen::VectorXcd& v = kernel.front();
      out.residual = (S * v).cwiseAbs().maxCoeff();
      for (int j = 0; j < M.cols(); ++j) {
        std::vector<Complex> col;
        for (int m = 0; m <= t; ++m) col.push_back(v(j * (t + 1) + m));
        out.witness.push_back(std::move(col));
      }
      if (stop_at_first) break;
    }
  }
  return out;
}

SplittingType splitting_type(int t, std::size_t nullity) {
  if (t < 0) throw Error("syzygy degree must be non-negative");
  if (t == 0) {
    if (nullity >= 2) {
      throw Error("constant syzygies of dimension " + std::to_string(nullity) +
                  " contradict a + b = -2; the variety is not a smooth Calabi-Yau threefold along "
                  "the line");
    }
    return {1, -3};
  }
  if (t == 1) return {0, -2};
  return {-1, -1};
}

int hilbert_tangent_dim(const SplittingType& s) {
  int h0 = 0;
  for (int e : {s.a, s.b}) {
    if (e >= 0) h0 += e + 1;
  }
  return h0;
}

LineAnalysis analyze_line(const CompleteIntersection& X, const Line& l, const AnalysisOptions& opts) {
  return analyze_normalized(X, l, normalize_line_coords(X, l, opts.incidence_tol), opts);
}

LineAnalysis analyze_normalized(const CompleteIntersection& X, const Line& l,
                                const Normalization& norm, const AnalysisOptions& opts) {
  if (opts.max_t < 1) throw Error("max_t must be at least 1 to separate the three splitting types");
  const CyCheck cy = cy_check(X);
  if (!cy.calabi_yau || !cy.threefold) {
    throw Error("normal bundle analysis needs a Calabi-Yau threefold complete intersection");
  }
  LineAnalysis out;
  out.incidence_residual = lies_on(l, X, opts.incidence_tol).residual;
  {
    Eigen::MatrixXcd standard = Eigen::MatrixXcd::Zero(2, X.ambient_dim() + 1);
    standard(0, 0) = 1.0;
    standard(1, 1) = 1.0;
    out.normalization_residual = lies_on(Line(standard), norm.variety).residual;
  }
  const RestrictionMatrix M = restriction_matrix(norm.variety);
  const int search_to = std::max(opts.max_t, opts.diagnostic_max_t);
  SyzygySearch full = minimal_syzygy_degree(M, search_to, opts.tol, false);
  out.nullity_by_degree = full.nullity_by_degree;

  out.search = full;
  out.search.nullity_by_degree.resize(static_cast<std::size_t>(opts.max_t) + 1);
  if (full.degree && *full.degree > opts.max_t) {
    out.search.degree.reset();
    out.search.nullity = 0;
    out.search.witness.clear();
    out.search.residual = 0.0;
  }
  out.syzygy_degree = out.search.degree ? *out.search.degree : opts.max_t + 1;
  out.splitting = splitting_type(out.syzygy_degree, out.search.nullity);
  out.tangent_dim = hilbert_tangent_dim(out.splitting);

  if (full.degree) {
    const int t1 = *full.degree;
    for (int t = t1; t <= search_to; ++t) {
      if (out.nullity_by_degree[t] > static_cast<std::size_t>(t - t1 + 1)) {
        out.second_generator_degree = t;
        break;
      }
    }
  }
  const int t1 = 1 - out.splitting.a;
  const int t2 = 1 - out.splitting.b;
  out.nullity_consistent = true;
  for (int t = 0; t <= search_to; ++t) {
    const std::size_t expected =
        static_cast<std::size_t>(std::max(0, t - t1 + 1) + std::max(0, t - t2 + 1));
    if (out.nullity_by_degree[t] != expected) out.nullity_consistent = false;
  }
  return out;
}

}  // namespace cyline
