#pragma once

#include <string>

#include "cyline/io.hpp"
#include "cyline/parallel.hpp"

namespace cyline {

struct ReproduceOptions {
  Complex lambda33 = 2.0;
  Complex lambda2222 = 2.0;
  Complex mu = 3.0;
  double incidence_tol = kIncidenceTol;
  double orbit_tol = 1e-7;
  double nullspace_tol = kNullspaceTol;
  int max_t = 2;
  unsigned threads = 1;
};

// {"command", "inputs", "outputs", "residual_summary", "timing"}; everything except
// "timing" is a deterministic function of the options.
struct RunReport {
  json document;
  bool passed = false;
  int exit_code = 0;  // 0 iff every stage passed, else the 1-based index of the first failure
};

RunReport reproduce_paper(const ReproduceOptions& opts = {});

// Plain-text table: the expected line counts followed by one status line per stage.
std::string summary_table(const RunReport& report);

// Fermat quintic in P^4 and the line (s : -s : t : -t : 0) on it.
CompleteIntersection fermat_quintic();
Line fermat_fixture_line();

}  // namespace cyline
