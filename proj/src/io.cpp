#include "cyline/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace cyline {

namespace {

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError((path.empty() ? "<root>" : path) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(join(path, key) + ": missing field");
  return *it;
}

const json& array_field(const json& j, const std::string& key, const std::string& path) {
  const json& a = field(j, key, path);
  if (!a.is_array()) throw SchemaError(join(path, key) + ": expected an array");
  return a;
}

int int_field(const json& j, const std::string& key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_number_integer()) throw SchemaError(join(path, key) + ": expected an integer");
  return v.get<int>();
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path + ": expected a number");
  return j.get<double>();
}

}  // namespace

double round_significant(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return std::stod(os.str());
}

json to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const HomogeneousPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back(json{{"exps", e}, {"re", c.real()}, {"im", c.imag()}});
  }
  return json{{"num_vars", p.num_vars()}, {"degree", p.degree()}, {"terms", std::move(terms)}};
}

json to_json(const Line& l) {
  json rows = json::array();
  for (int r = 0; r < 2; ++r) {
    json row = json::array();
    for (Eigen::Index i = 0; i < l.span().cols(); ++i) row.push_back(to_json(l.span()(r, i)));
    rows.push_back(std::move(row));
  }
  return json{{"span", std::move(rows)}};
}

json to_json(const CompleteIntersection& X) {
  json polys = json::array();
  for (const auto& p : X.polys()) polys.push_back(to_json(p));
  return json{{"ambient_dim", X.ambient_dim()}, {"polys", std::move(polys)}};
}

json to_json(const SplittingType& s) { return json::array({s.a, s.b}); }

json to_json(const BigInt& n) {
  // Exact integers beyond 64 bits are emitted as strings.
  if (n <= BigInt(std::numeric_limits<std::int64_t>::max()) &&
      n >= BigInt(std::numeric_limits<std::int64_t>::min())) {
    return json(static_cast<std::int64_t>(n));
  }
  return json(n.str());
}

Complex complex_from_json(const json& j, const std::string& path) {
  const double re = number(field(j, "re", path), join(path, "re"));
  const double im = j.contains("im") ? number(j.at("im"), join(path, "im")) : 0.0;
  return {re, im};
}

HomogeneousPoly poly_from_json(const json& j, const std::string& path) {
  const int num_vars = int_field(j, "num_vars", path);
  const int degree = int_field(j, "degree", path);
  const json& terms = array_field(j, "terms", path);
  if (num_vars < 1) throw SchemaError(join(path, "num_vars") + ": must be positive");
  if (degree < 0) throw SchemaError(join(path, "degree") + ": must be non-negative");
  HomogeneousPoly::Terms out;
  const std::string tpath = join(path, "terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string p = index(tpath, i);
    const json& exps = array_field(terms[i], "exps", p);
    Exponent e;
    int total = 0;
    for (std::size_t k = 0; k < exps.size(); ++k) {
      if (!exps[k].is_number_integer() || exps[k].get<int>() < 0) {
        throw SchemaError(index(join(p, "exps"), k) + ": expected a non-negative integer");
      }
      e.push_back(exps[k].get<int>());
      total += e.back();
    }
    if (static_cast<int>(e.size()) != num_vars) {
      throw SchemaError(join(p, "exps") + ": length " + std::to_string(e.size()) +
                        " does not match num_vars " + std::to_string(num_vars));
    }
    if (total != degree) {
      throw SchemaError(join(p, "exps") + ": exponents sum to " + std::to_string(total) +
                        ", not degree " + std::to_string(degree));
    }
    out[e] += complex_from_json(terms[i], p);
  }
  return HomogeneousPoly(num_vars, degree, std::move(out));
}

Line line_from_json(const json& j, const std::string& path) {
  const json& span = array_field(j, "span", path);
  const std::string spath = join(path, "span");
  if (span.size() != 2) throw SchemaError(spath + ": expected exactly two rows");
  const std::size_t cols = span[0].is_array() ? span[0].size() : 0;
  Eigen::MatrixXcd m(2, static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < 2; ++r) {
    const std::string rpath = index(spath, r);
    if (!span[r].is_array()) throw SchemaError(rpath + ": expected an array");
    if (span[r].size() != cols || cols < 2) {
      throw SchemaError(rpath + ": rows must have equal length of at least 2");
    }
    for (std::size_t i = 0; i < cols; ++i) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i)) =
          complex_from_json(span[r][i], index(rpath, i));
    }
  }
  try {
    return Line(std::move(m));
  } catch (const Error& e) {
    throw SchemaError(spath + ": " + e.what());
  }
}

CompleteIntersection variety_from_json(const json& j, const std::string& path) {
  const int n = int_field(j, "ambient_dim", path);
  const json& polys = array_field(j, "polys", path);
  std::vector<HomogeneousPoly> out;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    out.push_back(poly_from_json(polys[i], index(join(path, "polys"), i)));
  }
  try {
    return CompleteIntersection(n, std::move(out));
  } catch (const Error& e) {
    throw SchemaError((path.empty() ? std::string("<root>") : path) + ": " + e.what());
  }
}

json canonical_to_json(const Line& l) {
  json out = json::array();
  const Eigen::VectorXcd v = canonical_plucker(l);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back(json::array({round_significant(v(i).real(), 12), round_significant(v(i).imag(), 12)}));
  }
  return out;
}

json solution_to_json(const LineSolution33& s, Complex lambda) {
  return json{{"line", to_json(s.line)},
              {"a", to_json(s.a)},
              {"b", to_json(s.b)},
              {"c", to_json(s.c)},
              {"p", to_json(s.p)},
              {"incidence_residual", s.incidence_residual},
              {"relation_residual", relation_residual(s, lambda)}};
}

json solution_to_json(const LineSolution2222& s, Complex lambda, Complex mu) {
  return json{{"line", to_json(s.line)},
              {"a", to_json(s.a)},
              {"c", to_json(s.c)},
              {"d", to_json(s.d)},
              {"q", to_json(s.q)},
              {"incidence_residual", s.incidence_residual},
              {"relation_residual", relation_residual(s, lambda, mu)}};
}

json analysis_to_json(const LineAnalysis& a) {
  json witness = json::array();
  for (const auto& col : a.search.witness) {
    json c = json::array();
    for (const auto& z : col) c.push_back(to_json(z));
    witness.push_back(std::move(c));
  }
  return json{{"splitting", to_json(a.splitting)},
              {"tangent_dim", a.tangent_dim},
              {"syzygy_degree", a.syzygy_degree},
              {"syzygy_nullity", a.search.nullity},
              {"nullity_by_degree", a.nullity_by_degree},
              {"second_generator_degree",
               a.second_generator_degree ? json(*a.second_generator_degree) : json(nullptr)},
              {"nullity_consistent", a.nullity_consistent},
              {"witness_coeffs", std::move(witness)},
              {"residuals",
               {{"incidence", a.incidence_residual},
                {"normalization", a.normalization_residual},
                {"syzygy", a.search.residual}}}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path.string() + ": malformed JSON: " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace cyline
