#include "orbitrig/framework.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <string>

namespace orbitrig {

namespace {

std::string vertex_label(int v) { return std::to_string(v + 1); }

bool is_permutation_of(const std::vector<int>& perm, int n) {
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

double point_scale(const Vector& p) { return std::max(1.0, p.norm()); }

}  // namespace

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) : n_(vertex_count) {
  if (vertex_count < 0) throw Error(ErrorKind::Schema, "vertex count must be non-negative");
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) {
      throw Error(ErrorKind::Schema, "edge {" + vertex_label(a) + "," + vertex_label(b) +
                                         "} has an endpoint out of range");
    }
    if (a == b) throw Error(ErrorKind::Schema, "loop at vertex " + vertex_label(a));
    const Edge e{std::min(a, b), std::max(a, b)};
    if (index_.contains(e)) {
      throw Error(ErrorKind::Schema,
                  "duplicate edge {" + vertex_label(e.u) + "," + vertex_label(e.v) + "}");
    }
    index_.emplace(e, edges_.size());
    edges_.push_back(e);
  }
}

Graph Graph::complete(int vertex_count) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < vertex_count; ++i) {
    for (int j = i + 1; j < vertex_count; ++j) edges.emplace_back(i, j);
  }
  return Graph(vertex_count, edges);
}

std::optional<std::size_t> Graph::edge_index(int u, int v) const {
  const auto it = index_.find(Edge{std::min(u, v), std::max(u, v)});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool is_injective(const Configuration& config, double tol) {
  for (int i = 0; i < config.size(); ++i) {
    for (int j = i + 1; j < config.size(); ++j) {
      if ((config.points.col(i) - config.points.col(j)).norm() <= tol) return false;
    }
  }
  return true;
}

bool affinely_spans(const Configuration& config, const Tolerance& tol) {
  if (config.size() == 0) return false;
  const Matrix centered = config.points.colwise() - config.points.col(0);
  return rank(centered, tol) == config.dim();
}

Action action_from_generators(const PointGroup& group, int vertex_count,
                              const std::vector<std::vector<int>>& generator_perms) {
  Action action;
  action.generator_perms = generator_perms;
  std::vector<int> identity(vertex_count);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<std::vector<int>> usable;
  for (std::size_t k = 0; k < group.generator_count(); ++k) {
    if (k < generator_perms.size() && is_permutation_of(generator_perms[k], vertex_count)) {
      usable.push_back(generator_perms[k]);
    } else {
      usable.push_back(identity);
    }
  }
  action.perms.reserve(group.order());
  for (std::size_t x = 0; x < group.order(); ++x) {
    std::vector<int> perm = identity;
    const auto& word = group.word(x);
    // matrix(x) = G_w0 * G_w1 * ..., so the rightmost letter acts first.
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      for (int& v : perm) v = usable[*it][v];
    }
    action.perms.push_back(std::move(perm));
  }
  return action;
}

std::vector<Violation> action_violations(const PointGroup& group, const Action& action,
                                         int vertex_count) {
  std::vector<Violation> out;
  auto structure = [&](std::string msg, int element) {
    Violation v{Violation::Kind::Structure, std::move(msg)};
    v.element = element;
    out.push_back(std::move(v));
  };

  const auto no_gens = std::vector<std::vector<int>>{};
  const auto& gens = action.generator_perms ? *action.generator_perms : no_gens;
  if (action.generator_perms && gens.size() != group.generator_count()) {
    structure("expected " + std::to_string(group.generator_count()) +
                  " generator permutations, got " + std::to_string(gens.size()),
              -1);
  }
  for (std::size_t k = 0; k < gens.size() && k < group.generator_count(); ++k) {
    if (!is_permutation_of(gens[k], vertex_count)) {
      structure("permutation for generator " + std::to_string(k + 1) + " is not a permutation of " +
                    std::to_string(vertex_count) + " vertices",
                static_cast<int>(group.generator_element(k)));
    }
  }
  if (action.perms.size() != group.order()) {
    structure("expected " + std::to_string(group.order()) + " element permutations, got " +
                  std::to_string(action.perms.size()),
              -1);
    return out;
  }
  bool shapes_ok = out.empty();
  for (std::size_t x = 0; x < action.perms.size(); ++x) {
    if (!is_permutation_of(action.perms[x], vertex_count)) {
      structure("permutation for element " + group.element(x).label + " is not a permutation of " +
                    std::to_string(vertex_count) + " vertices",
                static_cast<int>(x));
      shapes_ok = false;
    }
  }
  if (!shapes_ok) return out;

  for (int v = 0; v < vertex_count; ++v) {
    if (action.image(group.identity(), v) != v) {
      Violation viol{Violation::Kind::Homomorphism, "identity does not fix vertex " + vertex_label(v)};
      viol.element = static_cast<int>(group.identity());
      viol.vertex = v + 1;
      out.push_back(std::move(viol));
      break;
    }
  }
  for (std::size_t k = 0; k < gens.size() && k < group.generator_count(); ++k) {
    const std::size_t x = group.generator_element(k);
    if (gens[k] != action.perms[x]) {
      Violation viol{Violation::Kind::Homomorphism,
                     "generator " + std::to_string(k + 1) + " permutation disagrees with the one "
                     "implied for element " + group.element(x).label};
      viol.element = static_cast<int>(x);
      out.push_back(std::move(viol));
    }
  }
  for (std::size_t a = 0; a < group.order(); ++a) {
    for (std::size_t b = 0; b < group.order(); ++b) {
      const std::size_t ab = group.multiply(a, b);
      for (int v = 0; v < vertex_count; ++v) {
        if (action.image(a, action.image(b, v)) != action.image(ab, v)) {
          Violation viol{Violation::Kind::Homomorphism,
                         "Phi(" + group.element(a).label + ") o Phi(" + group.element(b).label +
                             ") differs from Phi(" + group.element(ab).label + ") at vertex " +
                             vertex_label(v)};
          viol.element = static_cast<int>(ab);
          viol.vertex = v + 1;
          out.push_back(std::move(viol));
          break;
        }
      }
    }
  }
  return out;
}

SymmetricFramework validate(Graph graph, Configuration config, PointGroup group, Action action,
                            const Tolerance& tol, bool generic) {
  tol.check();
  require_finite(config.points, "configuration");
  if (config.dim() != group.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "configuration has dimension " + std::to_string(config.dim()) +
                    " but the group acts on dimension " + std::to_string(group.dim()));
  }
  const int n = graph.vertex_count();
  std::vector<Violation> violations;
  if (config.size() != n) {
    Violation v{Violation::Kind::Structure, "configuration has " + std::to_string(config.size()) +
                                                " points for " + std::to_string(n) + " vertices"};
    violations.push_back(std::move(v));
    throw ValidationError(std::move(violations));
  }

  violations = action_violations(group, action, n);
  const bool action_usable =
      std::none_of(violations.begin(), violations.end(),
                   [](const Violation& v) { return v.kind == Violation::Kind::Structure; });

  if (action_usable) {
    for (std::size_t x = 0; x < group.order(); ++x) {
      for (const Edge& e : graph.edges()) {
        const int u = action.image(x, e.u);
        const int w = action.image(x, e.v);
        if (!graph.has_edge(u, w)) {
          Violation v{Violation::Kind::Automorphism,
                      "element " + group.element(x).label + " maps edge {" + vertex_label(e.u) +
                          "," + vertex_label(e.v) + "} to non-edge {" + vertex_label(u) + "," +
                          vertex_label(w) + "}"};
          v.element = static_cast<int>(x);
          v.edge_u = e.u + 1;
          v.edge_v = e.v + 1;
          violations.push_back(std::move(v));
        }
      }
    }
    for (std::size_t x = 0; x < group.order(); ++x) {
      for (int i = 0; i < n; ++i) {
        const Vector p = config.points.col(i);
        const int j = action.image(x, i);
        const double residual = (group.matrix(x) * p - config.points.col(j)).norm();
        if (residual > tol.abs * point_scale(p)) {
          Violation v{Violation::Kind::Equivariance,
                      "element " + group.element(x).label + " moves p_" + vertex_label(i) +
                          " away from p_" + vertex_label(j)};
          v.element = static_cast<int>(x);
          v.vertex = i + 1;
          v.residual = residual;
          violations.push_back(std::move(v));
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dist = (config.points.col(i) - config.points.col(j)).norm();
      if (dist <= tol.abs * point_scale(config.points.col(i))) {
        Violation v{Violation::Kind::NonInjective,
                    "vertices " + vertex_label(i) + " and " + vertex_label(j) + " coincide"};
        v.vertex = i + 1;
        v.edge_u = i + 1;
        v.edge_v = j + 1;
        v.residual = dist;
        violations.push_back(std::move(v));
      }
    }
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));

  SymmetricFramework fw;
  fw.spanning_ = affinely_spans(config, tol);
  fw.graph_ = std::move(graph);
  fw.config_ = std::move(config);
  fw.group_ = std::move(group);
  fw.action_ = std::move(action);
  fw.tol_ = tol;
  fw.generic_ = generic;
  return fw;
}

SymmetricFramework SymmetricFramework::with_configuration(Configuration config, bool generic) const {
  return validate(graph_, std::move(config), group_, action_, tol_, generic);
}

SymmetricFramework SymmetricFramework::with_graph(Graph graph) const {
  return validate(std::move(graph), config_, group_, action_, tol_, generic_);
}

std::vector<std::vector<int>> vertex_orbits(const Action& action) {
  const int n = action.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> orbits;
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    std::set<int> orbit;
    for (const auto& perm : action.perms) orbit.insert(perm[v]);
    for (int w : orbit) seen[w] = 1;
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  return orbits;
}

Eigen::Index OrbitStructure::columns() const {
  Eigen::Index total = 0;
  for (const auto& b : joint_bases) total += b.size();
  return total;
}

OrbitStructure orbit_structure(const SymmetricFramework& fw) {
  const PointGroup& group = fw.group();
  const Action& action = fw.action();
  const Graph& graph = fw.graph();
  const int n = fw.vertex_count();

  OrbitStructure s;
  s.rep_position.assign(n, -1);
  s.vertex_orbit_of.assign(n, {});
  for (const auto& orbit : vertex_orbits(action)) {
    const int rep = orbit.front();
    s.rep_position[rep] = static_cast<int>(s.vertex_reps.size());
    s.vertex_reps.push_back(rep);
    for (int v : orbit) s.vertex_orbit_of[v].rep = rep;
    for (std::size_t x = group.order(); x-- > 0;) {
      s.vertex_orbit_of[action.image(x, rep)].witness = x;
    }
  }

  Eigen::Index offset = 0;
  for (int rep : s.vertex_reps) {
    auto stab = stabilizer(group, action, rep);
    s.joint_bases.push_back(joint_subspace(group, stab, fw.config().point(rep), fw.tolerance()));
    s.stabilizers.push_back(std::move(stab));
    s.column_offset.push_back(offset);
    offset += s.joint_bases.back().size();
  }

  const std::size_t m = graph.edge_count();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  s.edge_orbit_of.assign(m, kUnassigned);
  std::vector<std::size_t> by_edge(m);
  std::iota(by_edge.begin(), by_edge.end(), 0);
  std::sort(by_edge.begin(), by_edge.end(),
            [&](std::size_t a, std::size_t b) { return graph.edge(a) < graph.edge(b); });

  for (std::size_t e : by_edge) {
    if (s.edge_orbit_of[e] != kUnassigned) continue;
    const Edge& base = graph.edge(e);
    std::set<std::pair<Edge, std::size_t>> members;
    for (std::size_t x = 0; x < group.order(); ++x) {
      const int u = action.image(x, base.u);
      const int w = action.image(x, base.v);
      const std::size_t idx = *graph.edge_index(u, w);
      members.emplace(graph.edge(idx), idx);
    }
    EdgeOrbit orbit;
    std::pair<int, int> best{n, n};
    for (const auto& [edge, idx] : members) {
      orbit.edges.push_back(idx);
      s.edge_orbit_of[idx] = s.edge_orbits.size();
      for (auto [a, w] : {std::pair{edge.u, edge.v}, std::pair{edge.v, edge.u}}) {
        if (s.rep_position[a] >= 0 && std::pair{a, w} < best) best = {a, w};
      }
    }
    orbit.a = best.first;
    orbit.b = s.vertex_orbit_of[best.second].rep;
    orbit.x = s.vertex_orbit_of[best.second].witness;
    orbit.same_orbit = orbit.a == orbit.b;
    s.edge_orbits.push_back(std::move(orbit));
  }
  return s;
}

std::vector<FixedCount> fixed_counts(const SymmetricFramework& fw) {
  const auto& action = fw.action();
  std::vector<FixedCount> out;
  for (std::size_t x = 0; x < fw.group().order(); ++x) {
    FixedCount c;
    for (int v = 0; v < fw.vertex_count(); ++v) {
      if (action.image(x, v) == v) ++c.joints;
    }
    for (const Edge& e : fw.graph().edges()) {
      const int u = action.image(x, e.u);
      const int w = action.image(x, e.v);
      if ((u == e.u && w == e.v) || (u == e.v && w == e.u)) ++c.bars;
    }
    out.push_back(c);
  }
  return out;
}

namespace {

// Fills every vertex of the orbit of `v` from p_v; returns false on a conflict.
bool propagate(const PointGroup& group, const Action& action, int v, const Vector& p,
               Matrix& points, std::vector<char>& placed, double tol) {
  for (std::size_t x = 0; x < group.order(); ++x) {
    const int w = action.image(x, v);
    const Vector q = group.matrix(x) * p;
    if (placed[w]) {
      if ((points.col(w) - q).norm() > tol * point_scale(q)) return false;
      continue;
    }
    points.col(w) = q;
    placed[w] = 1;
  }
  return true;
}

void require_usable_action(const PointGroup& group, const Action& action, int vertex_count) {
  auto violations = action_violations(group, action, vertex_count);
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

}  // namespace

Configuration complete_configuration(int vertex_count, const PointGroup& group,
                                     const Action& action,
                                     const std::map<int, Vector>& rep_positions,
                                     const Tolerance& tol) {
  tol.check();
  require_usable_action(group, action, vertex_count);
  const int d = group.dim();
  Matrix points = Matrix::Zero(d, vertex_count);
  std::vector<char> placed(vertex_count, 0);
  for (const auto& [v, p] : rep_positions) {
    if (v < 0 || v >= vertex_count) {
      throw Error(ErrorKind::InconsistentPlacement,
                  "representative " + vertex_label(v) + " is not a vertex");
    }
    if (p.size() != d) {
      throw Error(ErrorKind::DimensionMismatch, "position of vertex " + vertex_label(v) +
                                                    " has " + std::to_string(p.size()) +
                                                    " coordinates, expected " + std::to_string(d));
    }
    require_finite(p, "position");
    try {
      joint_subspace(group, stabilizer(group, action, v), p, tol);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InconsistentConfiguration) throw;
      throw Error(ErrorKind::InconsistentPlacement,
                  "position of vertex " + vertex_label(v) +
                      " is not fixed by the elements stabilizing it");
    }
    if (!propagate(group, action, v, p, points, placed, tol.abs)) {
      throw Error(ErrorKind::AmbiguousPlacement,
                  "positions given for the orbit of vertex " + vertex_label(v) + " disagree");
    }
  }
  for (int v = 0; v < vertex_count; ++v) {
    if (!placed[v]) {
      throw Error(ErrorKind::InconsistentPlacement,
                  "no position given for the orbit of vertex " + vertex_label(v));
    }
  }
  return Configuration{std::move(points)};
}

Configuration sample_symmetry_generic(int vertex_count, const PointGroup& group,
                                      const Action& action, std::uint64_t seed, double scale,
                                      const Tolerance& tol) {
  tol.check();
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorKind::SamplingFailed, "sampling scale must be positive");
  }
  require_usable_action(group, action, vertex_count);
  const int d = group.dim();
  const auto orbits = vertex_orbits(action);
  std::vector<Matrix> bases;
  for (const auto& orbit : orbits) {
    const int rep = orbit.front();
    bases.push_back(
        joint_subspace(group, stabilizer(group, action, rep), Vector::Zero(d), tol).matrix());
  }

  constexpr int kAttempts = 100;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-scale, scale);
  std::optional<Configuration> fallback;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Matrix points = Matrix::Zero(d, vertex_count);
    std::vector<char> placed(vertex_count, 0);
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      Vector c(bases[i].cols());
      for (Eigen::Index k = 0; k < c.size(); ++k) c[k] = coord(rng);
      propagate(group, action, orbits[i].front(), bases[i] * c, points, placed, tol.abs);
    }
    Configuration config{std::move(points)};
    if (!is_injective(config, 1e-6 * scale)) continue;
    if (affinely_spans(config, tol)) return config;
    if (!fallback) fallback = std::move(config);
  }
  if (fallback) return *fallback;
  throw Error(ErrorKind::SamplingFailed,
              "no injective symmetric configuration found in " + std::to_string(kAttempts) +
                  " draws");
}

SymmetricFramework resample(const SymmetricFramework& fw, std::uint64_t seed, double scale) {
  Configuration config = sample_symmetry_generic(fw.vertex_count(), fw.group(), fw.action(), seed,
                                                 scale, fw.tolerance());
  return fw.with_configuration(std::move(config), true);
}

}  // namespace orbitrig
