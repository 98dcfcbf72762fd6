#include "orbitrig/predict.hpp"

#include "orbitrig/errors.hpp"
#include "orbitrig/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace orbitrig {

const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::FlexCertified: return "flex-certified";
    case Conclusion::NoFlexAtThisConfig: return "no-flex-at-this-config";
    case Conclusion::Inconclusive: return "inconclusive";
    case Conclusion::NotApplicable: return "not-applicable";
  }
  return "?";
}

const char* to_string(EdgeRole r) {
  switch (r) {
    case EdgeRole::Bar: return "bar";
    case EdgeRole::Cable: return "cable";
    case EdgeRole::Strut: return "strut";
  }
  return "?";
}

const char* to_string(StressSearch s) {
  switch (s) {
    case StressSearch::Feasible: return "feasible";
    case StressSearch::Infeasible: return "infeasible";
    case StressSearch::NotFound: return "not-found";
  }
  return "?";
}

Counts counts(const OrbitStructure& os, const Mobility& mob) {
  return Counts{static_cast<Eigen::Index>(os.rows()), os.columns(), mob.m, mob.spanning};
}

Counts counts(const SymmetricFramework& fw) { return counts(orbit_structure(fw), mobility(fw)); }

Verdict maxwell_verdict(const Counts& k, bool generic) {
  Verdict v;
  v.rule = "maxwell";
  v.hypotheses = {{"r", k.r}, {"c", k.c}, {"m", k.m}};
  const Eigen::Index budget = k.c - k.m;
  if (k.r < budget) {
    v.conclusion = Conclusion::FlexCertified;
    v.detail = "r = " + std::to_string(k.r) + " < " + std::to_string(budget) + " = c - m";
    v.finite_mechanism = generic && k.spanning;
  } else {
    v.conclusion = Conclusion::Inconclusive;
    v.detail = "r = " + std::to_string(k.r) + (k.r == budget ? " = " : " > ") +
               std::to_string(budget) + " = c - m";
    if (k.r > budget) {
      v.stress_guaranteed = true;
      v.detail += "; a fully symmetric self-stress exists";
    }
  }
  return v;
}

namespace {

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

enum class Shape { None, HalfTurn, Reflection };

// Order-2 groups only; the non-identity element decides the shape.
std::pair<Shape, std::size_t> involution_shape(const PointGroup& group, const Tolerance& tol) {
  if (group.order() != 2) return {Shape::None, 0};
  const std::size_t x = group.identity() == 0 ? 1 : 0;
  if (is_half_turn(group.matrix(x), tol)) return {Shape::HalfTurn, x};
  if (is_reflection(group.matrix(x), tol)) return {Shape::Reflection, x};
  return {Shape::None, 0};
}

}  // namespace

std::vector<Verdict> special_counting_verdicts(const SymmetricFramework& fw, const Counts& k,
                                               const std::vector<FixedCount>& fixed) {
  std::vector<Verdict> out;
  const auto [shape, x] = involution_shape(fw.group(), fw.tolerance());
  if (shape == Shape::None) return out;
  const long d = fw.dim();
  const long n = fw.vertex_count();
  const long edges = static_cast<long>(fw.graph().edge_count());
  const long j = fixed.at(x).joints;
  const long b = fixed.at(x).bars;

  Verdict v;
  long required = 0;
  bool holds = false;
  std::string condition;
  if (shape == Shape::HalfTurn) {
    if (d == 2) {
      v.rule = "thm-2d-c2";
      required = 2 * n - 4;
      holds = j == 0 && b == 0;
      condition = "j = b = 0";
    } else if (d == 3) {
      v.rule = "thm-3d-c2";
      required = 3 * n - 6;
      holds = j == 0 && b == 0;
      condition = "j = b = 0";
    } else {
      v.rule = "thm-d-c2";
      required = d * n - binomial(d + 1, 2);
      if (d == 4) {
        holds = b == 0;
        condition = "b = 0";
      } else {
        holds = 2 * (d - 4) * j > 2 * b + d * (d - 7) + 8;
        condition = "2(d-4) j > 2b + d(d-7) + 8";
      }
    }
  } else {
    if (d == 2) {
      v.rule = "thm-2d-cs";
      required = 2 * n - 4;
      holds = b == 0;
      condition = "b = 0";
    } else if (d == 3) {
      v.rule = "thm-3d-cs";
      required = 3 * n - 6;
      holds = j > b;
      condition = "j > b";
    } else {
      v.rule = "thm-d-cs";
      required = d * n - binomial(d + 1, 2);
      holds = 2 * (d - 2) * j > 2 * b + d * (d - 3);
      condition = "2(d-2) j > 2b + d(d-3)";
    }
  }
  v.hypotheses = {{"d", d}, {"edges", edges}, {"required_edges", required}, {"j", j}, {"b", b}};
  if (edges != required) {
    v.conclusion = Conclusion::NotApplicable;
    v.detail = "|E| = " + std::to_string(edges) + " differs from " + std::to_string(required);
  } else if (holds) {
    v.conclusion = Conclusion::FlexCertified;
    v.detail = condition + " holds";
    v.finite_mechanism = fw.generic() && k.spanning;
  } else {
    v.conclusion = Conclusion::Inconclusive;
    v.detail = condition + " fails";
  }
  out.push_back(std::move(v));
  return out;
}

RankReport rank_verdict(const SymmetricFramework& fw, const OrbitMatrix& o, const Mobility& mob) {
  const auto& tol = fw.tolerance();
  RankReport rep;
  rep.flexes = flex_summary(o, mob, tol);
  rep.rank = rank(o.matrix, tol);
  rep.stresses = reduced_stresses(o, tol);
  rep.stress_dim = rep.stresses.size();

  Verdict& v = rep.verdict;
  v.rule = "rank";
  v.hypotheses = {{"rank", rep.rank},
                  {"kernel", rep.flexes.kernel_dim},
                  {"m", rep.flexes.mobility},
                  {"stresses", rep.stress_dim}};
  if (rep.flexes.flex_dim > 0) {
    v.conclusion = Conclusion::FlexCertified;
    v.detail = "dim ker O - m = " + std::to_string(rep.flexes.flex_dim);
    v.finite_mechanism = fw.generic() && mob.spanning;
    if (!rep.flexes.certificates.empty()) {
      v.certificate = normalized_certificate(rep.flexes.certificates.vector(0));
    }
  } else {
    v.conclusion = Conclusion::NoFlexAtThisConfig;
    v.detail = "dim ker O = m = " + std::to_string(rep.flexes.mobility);
  }
  return rep;
}

RankReport rank_verdict(const SymmetricFramework& fw) {
  const auto os = orbit_structure(fw);
  return rank_verdict(fw, orbit_matrix(fw, os), mobility(fw));
}

namespace {

constexpr int kSamples = 10000;
constexpr double kEnumerationBudget = 4e6;

double margin_of(const Vector& lifted, const std::vector<std::pair<Eigen::Index, double>>& signs) {
  const double scale = lifted.cwiseAbs().maxCoeff();
  if (!(scale > 0.0)) return -1.0;
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& [e, sign] : signs) worst = std::min(worst, sign * lifted(e) / scale);
  return worst;
}

// max s subject to s <= g_i . t for every row g_i of `g`, |t_j| <= 1, by
// enumerating vertices of the (k+1)-dimensional polyhedron.
std::optional<Vector> best_vertex(const Matrix& g) {
  const Eigen::Index k = g.cols();
  const Eigen::Index q = g.rows();
  const Eigen::Index total = q + 2 * k;
  Matrix a(total, k + 1);
  Vector rhs(total);
  a.setZero();
  for (Eigen::Index i = 0; i < q; ++i) {
    a.block(i, 0, 1, k) = -g.row(i);
    a(i, k) = 1.0;
    rhs(i) = 0.0;
  }
  for (Eigen::Index j = 0; j < k; ++j) {
    a(q + 2 * j, j) = 1.0;
    rhs(q + 2 * j) = 1.0;
    a(q + 2 * j + 1, j) = -1.0;
    rhs(q + 2 * j + 1) = 1.0;
  }
  const double slack = 1e-12 * std::max(1.0, g.cwiseAbs().maxCoeff());

  std::optional<Vector> best;
  std::vector<Eigen::Index> pick(static_cast<std::size_t>(k + 1));
  for (Eigen::Index i = 0; i <= k; ++i) pick[i] = i;
  while (true) {
    Matrix sub(k + 1, k + 1);
    Vector b(k + 1);
    for (Eigen::Index i = 0; i <= k; ++i) {
      sub.row(i) = a.row(pick[i]);
      b(i) = rhs(pick[i]);
    }
    Eigen::FullPivLU<Matrix> lu(sub);
    if (lu.rank() == k + 1) {
      const Vector z = lu.solve(b);
      if (((a * z - rhs).array() <= slack).all() && (!best || z(k) > (*best)(k))) best = z;
    }
    Eigen::Index i = k;
    while (i >= 0 && pick[i] == total - (k + 1) + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (Eigen::Index j = i + 1; j <= k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

}  // namespace

ProperStress proper_stress_check(const SymmetricFramework& fw, const TensegrityAssignment& assignment,
                                 std::uint64_t seed) {
  const auto& graph = fw.graph();
  const auto& tol = fw.tolerance();
  if (assignment.roles.size() != graph.edge_count()) {
    throw Error(ErrorKind::InvalidAssignment, "assignment has " +
                                                  std::to_string(assignment.roles.size()) +
                                                  " roles for " + std::to_string(graph.edge_count()) +
                                                  " edges");
  }
  const auto os = orbit_structure(fw);
  const auto o = orbit_matrix(fw, os);
  std::vector<EdgeRole> orbit_role(os.rows(), EdgeRole::Bar);
  for (std::size_t k = 0; k < os.rows(); ++k) {
    const auto& members = os.edge_orbits[k].edges;
    orbit_role[k] = assignment.roles[members.front()];
    for (std::size_t e : members) {
      if (assignment.roles[e] != orbit_role[k]) {
        const Edge& a = graph.edge(members.front());
        const Edge& b = graph.edge(e);
        throw Error(ErrorKind::InvalidAssignment,
                    "edges {" + std::to_string(a.u + 1) + "," + std::to_string(a.v + 1) + "} and {" +
                        std::to_string(b.u + 1) + "," + std::to_string(b.v + 1) +
                        "} share an orbit but not a role");
      }
    }
  }

  ProperStress out;
  const Matrix r = rigidity_matrix(graph, fw.config(), tol);
  out.underlying_rigid =
      rank(r, tol) == r.cols() - trivial_motions(fw.config(), tol).size();

  const SubspaceBasis w = reduced_stresses(o, tol);
  out.kernel_dim = w.size();

  std::vector<std::pair<Eigen::Index, double>> edge_signs;
  std::vector<std::pair<Eigen::Index, double>> orbit_signs;
  for (std::size_t k = 0; k < os.rows(); ++k) {
    if (orbit_role[k] == EdgeRole::Bar) continue;
    const double sign = orbit_role[k] == EdgeRole::Cable ? 1.0 : -1.0;
    orbit_signs.emplace_back(static_cast<Eigen::Index>(k), sign);
    for (std::size_t e : os.edge_orbits[k].edges) {
      edge_signs.emplace_back(static_cast<Eigen::Index>(e), sign);
    }
  }

  auto accept = [&](const Vector& reduced) {
    // Sign constraints fix the orientation; only unconstrained witnesses are canonicalized.
    out.reduced = orbit_signs.empty() ? normalized_certificate(reduced) : Vector(reduced.normalized());
    out.lifted = lift_stress(o, os, out.reduced);
    out.margin = orbit_signs.empty() ? 0.0 : margin_of(out.lifted, edge_signs);
    out.outcome = StressSearch::Feasible;
  };

  if (w.empty()) {
    out.method = orbit_signs.empty() ? "unconstrained" : "vertex-enumeration";
    out.outcome = StressSearch::Infeasible;
    return out;
  }
  if (orbit_signs.empty()) {
    out.method = "unconstrained";
    accept(w.vector(0));
    return out;
  }

  const Eigen::Index k = w.size();
  Matrix g(static_cast<Eigen::Index>(orbit_signs.size()), k);
  for (std::size_t i = 0; i < orbit_signs.size(); ++i) {
    const auto [row, sign] = orbit_signs[i];
    g.row(static_cast<Eigen::Index>(i)) = sign * o.row_meta[row].alpha * w.matrix().row(row);
  }

  double combos = 1.0;
  for (Eigen::Index i = 0; i <= k; ++i) {
    combos *= static_cast<double>(g.rows() + 2 * k - i) / static_cast<double>(i + 1);
  }
  if (k <= 3 && combos <= kEnumerationBudget) {
    out.method = "vertex-enumeration";
    const auto z = best_vertex(g);
    if (z) {
      const Vector reduced = w.matrix() * z->head(k);
      const Vector lifted = lift_stress(o, os, reduced);
      if (margin_of(lifted, edge_signs) > tol.rel) {
        accept(reduced);
        return out;
      }
    }
    out.outcome = StressSearch::Infeasible;
    return out;
  }

  out.method = "sampling";
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  double best_margin = -std::numeric_limits<double>::infinity();
  Vector best;
  for (int draw = 0; draw < kSamples; ++draw) {
    Vector t(k);
    for (Eigen::Index i = 0; i < k; ++i) t(i) = dist(rng);
    const Vector reduced = w.matrix() * t;
    const double margin = margin_of(lift_stress(o, os, reduced), edge_signs);
    if (margin > best_margin) {
      best_margin = margin;
      best = reduced;
    }
  }
  if (best_margin > tol.rel) {
    accept(best);
  } else {
    out.outcome = StressSearch::NotFound;
    out.margin = best_margin;
  }
  return out;
}

Vector symmetrize_stress(const SymmetricFramework& fw, const Vector& omega) {
  const auto& graph = fw.graph();
  if (omega.size() != static_cast<Eigen::Index>(graph.edge_count())) {
    throw Error(ErrorKind::DimensionMismatch, "stress length differs from edge count");
  }
  require_finite(omega, "stress");
  const Matrix r = rigidity_matrix(graph, fw.config(), fw.tolerance());
  const double residual = (r.transpose() * omega).norm();
  if (residual > 1e-8 * std::max(1.0, spectral_norm(r) * omega.norm())) {
    throw Error(ErrorKind::NotASelfStress, "input is not a self-stress (residual " +
                                               std::to_string(residual) + ")");
  }
  Vector out = Vector::Zero(omega.size());
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(e);
    for (std::size_t x = 0; x < fw.group().order(); ++x) {
      const auto image = graph.edge_index(fw.action().image(x, edge.u), fw.action().image(x, edge.v));
      out(static_cast<Eigen::Index>(e)) += omega(static_cast<Eigen::Index>(*image));
    }
  }
  return out;
}

}  // namespace orbitrig
