#include "cyline/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace cyline {

MonomialAutomorphism::MonomialAutomorphism(std::vector<int> perm, std::vector<Complex> scale)
    : perm_(std::move(perm)), scale_(std::move(scale)) {
  if (perm_.size() != scale_.size() || perm_.empty()) {
    throw DimensionError("permutation and scale must have the same positive length");
  }
  std::vector<bool> seen(perm_.size(), false);
  for (int p : perm_) {
    if (p < 0 || p >= size() || seen[p]) throw Error("not a permutation");
    seen[p] = true;
  }
  for (const auto& s : scale_) {
    if (!is_finite(s) || std::abs(s) < kZeroTol) throw NumericError("scale entries must be nonzero");
  }
}

MonomialAutomorphism MonomialAutomorphism::identity(int size) {
  std::vector<int> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  return {std::move(perm), std::vector<Complex>(size, 1.0)};
}

MonomialAutomorphism MonomialAutomorphism::permutation(std::vector<int> perm) {
  const std::size_t n = perm.size();
  return {std::move(perm), std::vector<Complex>(n, 1.0)};
}

MonomialAutomorphism MonomialAutomorphism::diagonal(std::vector<Complex> scale) {
  std::vector<int> perm(scale.size());
  std::iota(perm.begin(), perm.end(), 0);
  return {std::move(perm), std::move(scale)};
}

MonomialAutomorphism MonomialAutomorphism::cycles(int size,
                                                  const std::vector<std::vector<int>>& cycles) {
  std::vector<int> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  // Cycle (c0 c1 ... ck) sends the coordinate at c_i to position c_{i+1}: y_{c_{i+1}} = x_{c_i}.
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int from = cyc[i];
      const int to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= size || to < 0 || to >= size) throw Error("cycle entry out of range");
      perm[to] = from;
    }
  }
  return permutation(std::move(perm));
}

Eigen::VectorXcd MonomialAutomorphism::apply(const Eigen::VectorXcd& x) const {
  if (x.size() != size()) throw DimensionError("automorphism and point dimensions differ");
  Eigen::VectorXcd y(x.size());
  for (int j = 0; j < size(); ++j) y(j) = scale_[j] * x(perm_[j]);
  return y;
}

Eigen::MatrixXcd MonomialAutomorphism::matrix() const {
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(size(), size());
  for (int j = 0; j < size(); ++j) A(j, perm_[j]) = scale_[j];
  return A;
}

MonomialAutomorphism MonomialAutomorphism::inverse() const {
  std::vector<int> perm(size());
  std::vector<Complex> scale(size());
  // y_j = s_j x_{p_j}  =>  x_i = y_{p^{-1}(i)} / s_{p^{-1}(i)}
  for (int j = 0; j < size(); ++j) {
    perm[perm_[j]] = j;
    scale[perm_[j]] = 1.0 / scale_[j];
  }
  return {std::move(perm), std::move(scale)};
}

MonomialAutomorphism MonomialAutomorphism::normalized() const {
  Complex pivot = 1.0;
  for (const auto& s : scale_) {
    if (std::abs(s) >= kZeroTol) {
      pivot = s;
      break;
    }
  }
  std::vector<Complex> scale(scale_);
  for (auto& s : scale) s /= pivot;
  return {perm_, std::move(scale)};
}

bool MonomialAutomorphism::projectively_equal(const MonomialAutomorphism& other, double tol) const {
  if (perm_ != other.perm_) return false;
  const auto a = normalized();
  const auto b = other.normalized();
  for (int i = 0; i < size(); ++i) {
    if (std::abs(a.scale_[i] - b.scale_[i]) > tol) return false;
  }
  return true;
}

bool MonomialAutomorphism::is_identity(double tol) const {
  return projectively_equal(identity(size()), tol);
}

MonomialAutomorphism operator*(const MonomialAutomorphism& g, const MonomialAutomorphism& h) {
  if (g.size() != h.size()) throw DimensionError("composing automorphisms of different spaces");
  std::vector<int> perm(g.size());
  std::vector<Complex> scale(g.size());
  // g(h(x))_j = g.s_j * h(x)_{g.p_j} = g.s_j * h.s_{g.p_j} * x_{h.p_{g.p_j}}
  for (int j = 0; j < g.size(); ++j) {
    perm[j] = h.perm_[g.perm_[j]];
    scale[j] = g.scale_[j] * h.scale_[g.perm_[j]];
  }
  return {std::move(perm), std::move(scale)};
}

Line apply(const MonomialAutomorphism& g, const Line& l) {
  if (g.size() != l.ambient_dim() + 1) throw DimensionError("automorphism and line dimensions differ");
  return Line::through(g.apply(l.row(0)), g.apply(l.row(1)));
}

bool preserves(const MonomialAutomorphism& g, const CompleteIntersection& X, double tol) {
  const Eigen::MatrixXcd A = g.matrix();
  for (const auto& p : X.polys()) {
    const HomogeneousPoly pulled = substitute_linear(p, A);
    std::vector<const HomogeneousPoly*> same;
    for (const auto& q : X.polys()) {
      if (q.degree() == p.degree()) same.push_back(&q);
    }
    std::map<Exponent, Eigen::Index> slot;
    auto index_of = [&](const Exponent& e) {
      auto [it, inserted] = slot.emplace(e, static_cast<Eigen::Index>(slot.size()));
      return it->second;
    };
    for (const auto* q : same) {
      for (const auto& [e, c] : q->terms()) index_of(e);
    }
    for (const auto& [e, c] : pulled.terms()) index_of(e);
    Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(slot.size()),
                                                    static_cast<Eigen::Index>(same.size()));
    Eigen::VectorXcd target = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(slot.size()));
    for (std::size_t k = 0; k < same.size(); ++k) {
      for (const auto& [e, c] : same[k]->terms()) basis(slot[e], static_cast<Eigen::Index>(k)) = c;
    }
    for (const auto& [e, c] : pulled.terms()) target(slot[e]) = c;
    const Eigen::VectorXcd coef = basis.colPivHouseholderQr().solve(target);
    if ((basis * coef - target).norm() > tol * std::max(1.0, target.norm())) return false;
  }
  return true;
}

FiniteGroup::FiniteGroup(std::vector<MonomialAutomorphism> generators,
                         std::vector<MonomialAutomorphism> elements)
    : generators_(std::move(generators)), elements_(std::move(elements)) {
  if (elements_.empty()) throw Error("a group has at least the identity");
  for (auto& e : elements_) e = e.normalized();
  for (auto& g : generators_) g = g.normalized();
}

bool FiniteGroup::contains(const MonomialAutomorphism& g, double tol) const {
  return std::any_of(elements_.begin(), elements_.end(),
                     [&](const auto& e) { return e.projectively_equal(g, tol); });
}

FiniteGroup generate_group(const std::vector<MonomialAutomorphism>& gens, std::size_t cap) {
  if (gens.empty()) throw Error("generate_group needs at least one generator to fix the dimension");
  const int n = gens.front().size();
  for (const auto& g : gens) {
    if (g.size() != n) throw DimensionError("generators act on different spaces");
  }
  std::vector<MonomialAutomorphism> elements{MonomialAutomorphism::identity(n)};
  std::map<std::vector<int>, std::vector<std::size_t>> by_perm;
  by_perm[elements[0].perm()].push_back(0);

  auto find = [&](const MonomialAutomorphism& g) {
    auto it = by_perm.find(g.perm());
    if (it == by_perm.end()) return false;
    for (std::size_t idx : it->second) {
      const auto& e = elements[idx];
      bool equal = true;
      for (int i = 0; i < n && equal; ++i) equal = std::abs(e.scale()[i] - g.scale()[i]) <= 1e-9;
      if (equal) return true;
    }
    return false;
  };

  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t idx = frontier.front();
    frontier.pop_front();
    for (const auto& gen : gens) {
      MonomialAutomorphism h = (gen * elements[idx]).normalized();
      if (find(h)) continue;
      if (elements.size() >= cap) {
        throw GroupCapExceeded("group generation exceeded the cap of " + std::to_string(cap) +
                               " elements");
      }
      by_perm[h.perm()].push_back(elements.size());
      elements.push_back(std::move(h));
      frontier.push_back(elements.size() - 1);
    }
  }
  return FiniteGroup(gens, std::move(elements));
}

FiniteGroup stabilizer(const Line& l, const FiniteGroup& grp, double tol) {
  const Eigen::VectorXcd ref = canonical_plucker(l);
  std::vector<MonomialAutomorphism> fixing;
  for (const auto& g : grp.elements()) {
    const Eigen::VectorXcd img = canonical_plucker(apply(g, l));
    if ((img - ref).cwiseAbs().maxCoeff() <= tol) fixing.push_back(g);
  }
  std::vector<MonomialAutomorphism> gens;
  for (const auto& g : fixing) {
    if (!g.is_identity()) gens.push_back(g);
  }
  return FiniteGroup(std::move(gens), std::move(fixing));
}

Orbit orbit(const Line& l, const FiniteGroup& grp, const CompleteIntersection& X,
            double incidence_tol, double line_tol) {
  LineSet set(line_tol);
  set.insert(l);
  Orbit out;
  out.max_residual = lies_on(l, X, incidence_tol).residual;
  std::size_t next = 0;
  while (next < set.size()) {
    const Line current = set.lines()[next++];
    for (const auto& g : grp.generators()) {
      Line img = apply(g, current);
      if (set.contains(img)) continue;
      const Incidence inc = lies_on(img, X, incidence_tol);
      if (!inc.incident) {
        std::ostringstream os;
        os << "orbit member fails incidence with residual " << inc.residual;
        throw NumericError(os.str());
      }
      out.max_residual = std::max(out.max_residual, inc.residual);
      set.insert(img);
    }
  }
  out.lines = set.lines();
  out.stabilizer_order = stabilizer(l, grp, line_tol).order();
  if (out.lines.size() * out.stabilizer_order != grp.order()) {
    std::ostringstream os;
    os << "orbit-stabilizer identity fails: |orbit| = " << out.lines.size()
       << ", |stabilizer| = " << out.stabilizer_order << ", |group| = " << grp.order();
    throw NumericError(os.str());
  }
  return out;
}

OrbitUnion union_of_orbits(const std::vector<Line>& seeds, const FiniteGroup& grp,
                           const CompleteIntersection& X, double incidence_tol, double line_tol) {
  OrbitUnion out;
  LineSet all(line_tol);
  std::size_t sum = 0;
  for (const auto& seed : seeds) {
    const Orbit o = orbit(seed, grp, X, incidence_tol, line_tol);
    out.orbit_sizes.push_back(o.lines.size());
    out.max_residual = std::max(out.max_residual, o.max_residual);
    sum += o.lines.size();
    for (const auto& line : o.lines) all.insert(line);
  }
  out.total = all.size();
  out.disjoint = out.total == sum;
  return out;
}

FamilySymmetry symmetry_33() {
  const Complex w = omega();
  const Complex z = zeta();
  const auto a1 = MonomialAutomorphism::diagonal({1.0, w, 1.0 / w, 1.0, 1.0, 1.0});
  const auto a2 = MonomialAutomorphism::diagonal({1.0, 1.0, w, z, z, 1.0 / (z * z)});
  const auto a3 = MonomialAutomorphism::diagonal({1.0, 1.0, 1.0, 1.0, w, 1.0 / w});
  const std::vector<MonomialAutomorphism> diag{a1, a2, a3};
  const std::vector<MonomialAutomorphism> perms{
      MonomialAutomorphism::cycles(6, {{0, 1}}), MonomialAutomorphism::cycles(6, {{1, 2}}),
      MonomialAutomorphism::cycles(6, {{3, 4}}), MonomialAutomorphism::cycles(6, {{4, 5}})};
  std::vector<MonomialAutomorphism> both = diag;
  both.insert(both.end(), perms.begin(), perms.end());
  return {MonomialAutomorphism::cycles(6, {{0, 1}, {3, 4}}), generate_group(diag),
          generate_group(perms), generate_group(both)};
}

FamilySymmetry symmetry_2222() {
  const std::vector<MonomialAutomorphism> diag{
      MonomialAutomorphism::diagonal({-1.0, -1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0}),
      MonomialAutomorphism::diagonal({1.0, 1.0, -1.0, -1.0, 1.0, 1.0, 1.0, 1.0}),
      MonomialAutomorphism::diagonal({1.0, 1.0, 1.0, 1.0, -1.0, -1.0, 1.0, 1.0})};
  const auto phi = MonomialAutomorphism::cycles(8, {{0, 2, 4}, {1, 3, 5}});
  const std::vector<MonomialAutomorphism> perms{
      phi, MonomialAutomorphism::cycles(8, {{0, 2}, {1, 3}}),
      MonomialAutomorphism::cycles(8, {{0, 1}}), MonomialAutomorphism::cycles(8, {{2, 3}}),
      MonomialAutomorphism::cycles(8, {{4, 5}}), MonomialAutomorphism::cycles(8, {{6, 7}})};
  std::vector<MonomialAutomorphism> both = diag;
  both.insert(both.end(), perms.begin(), perms.end());
  return {phi, generate_group(diag), generate_group(perms), generate_group(both)};
}

FamilySymmetry family_symmetry(Family family) {
  return family == Family::cubic_pair ? symmetry_33() : symmetry_2222();
}

}  // namespace cyline
