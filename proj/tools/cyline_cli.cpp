// Command-line driver for line constructions, orbits, normal bundles and line counts.

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cyline/report.hpp"
#include "cyline/symmetry.hpp"

using namespace cyline;

namespace {

struct Globals {
  std::optional<double> tol;
  int max_t = 2;
  std::string out;
  unsigned threads = 1;
};

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_json_file(out, j);
  }
}

std::vector<int> parse_degrees(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw Error("empty degree list");
  return out;
}

std::vector<Line> seeds_for(Family family, Complex lambda, Complex mu,
                            std::vector<std::string>* warnings) {
  std::vector<Line> seeds;
  if (family == Family::cubic_pair) {
    auto c = lines_33({lambda});
    for (auto& s : c.solutions) seeds.push_back(s.line);
    *warnings = c.warnings;
  } else {
    auto c = lines_2222({lambda, mu});
    for (auto& s : c.solutions) seeds.push_back(s.line);
    *warnings = c.warnings;
  }
  return seeds;
}

CompleteIntersection variety_for(Family family, Complex lambda, Complex mu) {
  return family == Family::cubic_pair ? build_family_33(lambda) : build_family_2222(lambda, mu);
}

int cmd_expected_count(const std::string& degrees_text, std::optional<int> ambient, bool as_json,
                       const Globals& g) {
  const auto degrees = parse_degrees(degrees_text);
  const int n = ambient.value_or(static_cast<int>(degrees.size()) + 3);
  const ExpectedCount c = expected_lines(degrees, n);
  if (as_json || !g.out.empty()) {
    json coeffs = json::array();
    for (const auto& [part, v] : chern_product(degrees).schur_coeffs) {
      coeffs.push_back(json{{"partition", {part.first, part.second}}, {"coeff", to_json(v)}});
    }
    json rep{{"command", "expected-count"},
             {"inputs", {{"degrees", degrees}, {"ambient", n}}},
             {"outputs",
              {{"count", c.count ? to_json(*c.count) : json(nullptr)},
               {"class_degree", c.class_degree},
               {"grassmannian_dim", c.grassmannian_dim},
               {"message", c.message},
               {"schur_coeffs", std::move(coeffs)}}}};
    emit(rep, g.out);
    if (!g.out.empty() && c.count) std::cout << *c.count << '\n';
  } else if (c.count) {
    std::cout << *c.count << '\n';
  } else {
    std::cerr << c.message << '\n';
  }
  return c.count ? 0 : 1;
}

int cmd_construct(Family family, Complex lambda, Complex mu, const Globals& g) {
  json lines = json::array();
  std::vector<std::string> warnings;
  if (family == Family::cubic_pair) {
    auto c = lines_33({lambda});
    for (const auto& s : c.solutions) {
      json j = solution_to_json(s, lambda);
      json entry = j["line"];
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() != "line") entry[it.key()] = it.value();
      }
      lines.push_back(std::move(entry));
    }
    warnings = c.warnings;
  } else {
    auto c = lines_2222({lambda, mu});
    for (const auto& s : c.solutions) {
      json j = solution_to_json(s, lambda, mu);
      json entry = j["line"];
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() != "line") entry[it.key()] = it.value();
      }
      lines.push_back(std::move(entry));
    }
    warnings = c.warnings;
  }
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  emit(lines, g.out);
  if (!g.out.empty()) std::cout << lines.size() << " lines written to " << g.out << '\n';
  return 0;
}

int cmd_orbit(Family family, Complex lambda, Complex mu, std::size_t seed_index, bool with_lines,
              const Globals& g) {
  const double tol = g.tol.value_or(1e-7);
  const CompleteIntersection X = variety_for(family, lambda, mu);
  std::vector<std::string> warnings;
  const auto seeds = seeds_for(family, lambda, mu, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  if (seed_index >= seeds.size()) throw Error("seed index out of range");
  const FamilySymmetry sym = family_symmetry(family);
  const Line& seed = seeds[seed_index];
  const Orbit o = orbit(seed, sym.product, X, tol);
  const OrbitUnion u = union_of_orbits(seeds, sym.product, X, tol);
  json rep{{"command", "orbit"},
           {"inputs",
            {{"family", family_name(family)},
             {"lambda", to_json(lambda)},
             {"mu", to_json(mu)},
             {"seed_index", seed_index},
             {"tol", tol}}},
           {"outputs",
            {{"group_orders",
              {{"diagonal", sym.diagonal.order()},
               {"permutations", sym.permutations.order()},
               {"product", sym.product.order()}}},
             {"stabilizer_orders",
              {{"diagonal", stabilizer(seed, sym.diagonal).order()},
               {"permutations", stabilizer(seed, sym.permutations).order()},
               {"product", o.stabilizer_order}}},
             {"orbit_size", o.lines.size()},
             {"seed_orbit_sizes", u.orbit_sizes},
             {"union_total", u.total},
             {"disjoint", u.disjoint},
             {"max_incidence_residual", std::max(o.max_residual, u.max_residual)}}}};
  if (with_lines) {
    json ls = json::array();
    for (const auto& l : o.lines) ls.push_back(json{{"span", to_json(l)["span"]}, {"canonical", canonical_to_json(l)}});
    rep["outputs"]["lines"] = std::move(ls);
  }
  emit(rep, g.out);
  return 0;
}

int cmd_normal_bundle(const std::string& variety_path, const std::string& line_path,
                      std::size_t line_index, const Globals& g) {
  const CompleteIntersection X = variety_from_json(read_json_file(variety_path));
  const json lj = read_json_file(line_path);
  Line l = lj.is_array() ? line_from_json(lj.at(line_index), "[" + std::to_string(line_index) + "]")
                         : line_from_json(lj);
  AnalysisOptions opts;
  opts.max_t = g.max_t;
  if (g.tol) opts.incidence_tol = *g.tol;
  const LineAnalysis a = analyze_line(X, l, opts);
  emit(analysis_to_json(a), g.out);
  return 0;
}

int cmd_verify(const std::string& variety_path, const std::string& lines_path, const Globals& g) {
  const double tol = g.tol.value_or(kIncidenceTol);
  const CompleteIntersection X = variety_from_json(read_json_file(variety_path));
  const json lj = read_json_file(lines_path);
  std::vector<Line> lines;
  if (lj.is_array()) {
    for (std::size_t i = 0; i < lj.size(); ++i) {
      lines.push_back(line_from_json(lj[i], "[" + std::to_string(i) + "]"));
    }
  } else {
    lines.push_back(line_from_json(lj));
  }
  const CyCheck cy = cy_check(X);
  json per_line = json::array();
  bool all = true;
  double max_res = 0.0;
  for (const auto& l : lines) {
    const Incidence inc = lies_on(l, X, tol);
    all = all && inc.incident;
    max_res = std::max(max_res, inc.residual);
    per_line.push_back(json{{"incident", inc.incident}, {"residual", inc.residual}});
  }
  json rep{{"command", "verify"},
           {"inputs", {{"variety", variety_path}, {"lines", lines_path}, {"tol", tol}}},
           {"outputs",
            {{"calabi_yau", cy.calabi_yau},
             {"threefold", cy.threefold},
             {"canonical_twist", cy.canonical_twist},
             {"all_incident", all},
             {"lines", std::move(per_line)}}},
           {"residual_summary", {{"max_incidence", max_res}}}};
  emit(rep, g.out);
  return all ? 0 : 1;
}

int cmd_reproduce(Complex l33, Complex l2222, Complex mu, const Globals& g) {
  ReproduceOptions opts;
  opts.lambda33 = l33;
  opts.lambda2222 = l2222;
  opts.mu = mu;
  opts.max_t = g.max_t;
  opts.threads = g.threads;
  if (g.tol) {
    opts.incidence_tol = *g.tol;
    opts.orbit_tol = *g.tol;
  }
  const RunReport r = reproduce_paper(opts);
  std::cout << summary_table(r);
  if (!g.out.empty()) write_json_file(g.out, r.document);
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lines on Calabi-Yau complete intersection threefolds"};
  app.require_subcommand(1);
  Globals g;
  double tol_value = 0.0;
  auto* tol_opt = app.add_option("--tol", tol_value, "Residual tolerance for incidence checks");
  app.add_option("--max-t", g.max_t, "Largest syzygy degree searched for the splitting type")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Write JSON output to this file");
  app.add_option("--threads", g.threads, "Worker threads for per-line analysis");

  std::string family_text = "33";
  std::string lambda_text = "2";
  std::string mu_text = "3";

  auto* expected = app.add_subcommand("expected-count", "Expected number of lines via Schubert calculus");
  std::string degrees_text;
  std::optional<int> ambient;
  bool as_json = false;
  expected->add_option("--degrees", degrees_text, "Comma-separated degrees, e.g. 3,3")->required();
  expected->add_option("--ambient", ambient, "Ambient projective dimension (default k+3)");
  expected->add_flag("--json", as_json, "Print the JSON report with all Schur coefficients");

  auto* construct = app.add_subcommand("construct", "Construct the explicit lines of a family");
  construct->add_option("--family", family_text, "33 or 2222")->required();
  construct->add_option("--lambda", lambda_text, "lambda as RE[,IM]");
  construct->add_option("--mu", mu_text, "mu as RE[,IM] (2222 only)");

  auto* orbit_cmd = app.add_subcommand("orbit", "Orbit of a constructed line under the family's group");
  std::size_t seed_index = 0;
  bool with_lines = false;
  orbit_cmd->add_option("--family", family_text, "33 or 2222")->required();
  orbit_cmd->add_option("--lambda", lambda_text, "lambda as RE[,IM]");
  orbit_cmd->add_option("--mu", mu_text, "mu as RE[,IM] (2222 only)");
  orbit_cmd->add_option("--seed-index", seed_index, "Which constructed line to expand");
  orbit_cmd->add_flag("--with-lines", with_lines, "Include every orbit line in the report");

  auto* nb = app.add_subcommand("normal-bundle", "Splitting type of the normal bundle of a line");
  std::string variety_path;
  std::string line_path;
  std::size_t line_index = 0;
  nb->add_option("--variety", variety_path, "Variety JSON")->required();
  nb->add_option("--line", line_path, "Line JSON (object, or array with --index)")->required();
  nb->add_option("--index", line_index, "Entry to use when the line file holds an array");

  auto* verify = app.add_subcommand("verify", "Check that lines lie on a variety");
  std::string lines_path;
  verify->add_option("--variety", variety_path, "Variety JSON")->required();
  verify->add_option("--lines", lines_path, "Line JSON or array of lines")->required();

  auto* repro = app.add_subcommand("reproduce-paper", "Run every construction and check end to end");
  std::string l33_text = "2";
  std::string l2222_text = "2";
  repro->add_option("--lambda33", l33_text, "lambda for the (3,3) pencil");
  repro->add_option("--lambda2222", l2222_text, "lambda for the (2,2,2,2) family");
  repro->add_option("--mu", mu_text, "mu for the (2,2,2,2) family");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  CLI11_PARSE(app, argc, argv);
  if (tol_opt->count() > 0) g.tol = tol_value;

  try {
    if (*expected) return cmd_expected_count(degrees_text, ambient, as_json, g);
    if (*construct) {
      return cmd_construct(parse_family(family_text), parse_complex(lambda_text), parse_complex(mu_text), g);
    }
    if (*orbit_cmd) {
      return cmd_orbit(parse_family(family_text), parse_complex(lambda_text), parse_complex(mu_text),
                       seed_index, with_lines, g);
    }
    if (*nb) return cmd_normal_bundle(variety_path, line_path, line_index, g);
    if (*verify) return cmd_verify(variety_path, lines_path, g);
    if (*repro) {
      return cmd_reproduce(parse_complex(l33_text), parse_complex(l2222_text), parse_complex(mu_text), g);
    }
  } catch (const DegenerateParameterError& e) {
    std::cerr << "degenerate parameter [" << e.degeneracy().code << "]: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
