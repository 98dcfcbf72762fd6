#pragma once

#include "orbitrig/errors.hpp"
#include "orbitrig/linalg.hpp"
#include "orbitrig/symmetry.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace orbitrig {

// Vertices are 0-based internally; the JSON document and CLI use 1-based labels.
struct Edge {
  int u = 0;
  int v = 0;  // u < v
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;
  // Throws Schema on loops, duplicates or out-of-range endpoints.
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  static Graph complete(int vertex_count);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  std::optional<std::size_t> edge_index(int u, int v) const;
  bool has_edge(int u, int v) const { return edge_index(u, v).has_value(); }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::map<Edge, std::size_t> index_;
};

// Points stored column-wise: points.col(i) = p_i.
struct Configuration {
  Matrix points;

  int dim() const { return static_cast<int>(points.rows()); }
  int size() const { return static_cast<int>(points.cols()); }
  Vector point(int i) const { return points.col(i); }
};

bool is_injective(const Configuration& config, double tol);
bool affinely_spans(const Configuration& config, const Tolerance& tol = {});

// Extends per-generator permutations to every group element through the
// generator words. No consistency checks; `validate` does those.
Action action_from_generators(const PointGroup& group, int vertex_count,
                              const std::vector<std::vector<int>>& generator_perms);

class SymmetricFramework {
 public:
  const Graph& graph() const { return graph_; }
  const Configuration& config() const { return config_; }
  const PointGroup& group() const { return group_; }
  const Action& action() const { return action_; }
  const Tolerance& tolerance() const { return tol_; }
  int dim() const { return config_.dim(); }
  int vertex_count() const { return graph_.vertex_count(); }

  // True when the configuration came from symmetry-generic sampling or the
  // caller asserted genericity.
  bool generic() const { return generic_; }
  bool spanning() const { return spanning_; }

  SymmetricFramework with_configuration(Configuration config, bool generic) const;
  SymmetricFramework with_graph(Graph graph) const;

 private:
  friend SymmetricFramework validate(Graph, Configuration, PointGroup, Action,
                                     const Tolerance&, bool);
  Graph graph_;
  Configuration config_;
  PointGroup group_;
  Action action_;
  Tolerance tol_;
  bool generic_ = false;
  bool spanning_ = false;
};

// Shape, identity and homomorphism failures of an action; empty if it is a
// well-formed permutation representation of `group` on `vertex_count` labels.
std::vector<Violation> action_violations(const PointGroup& group, const Action& action,
                                         int vertex_count);

// Checks permutation shape, automorphism, homomorphism, equivariance and
// injectivity; throws ValidationError listing every violation found.
SymmetricFramework validate(Graph graph, Configuration config, PointGroup group, Action action,
                            const Tolerance& tol = {}, bool generic = false);

struct VertexOrbitRef {
  int rep = 0;
  std::size_t witness = 0;  // lowest-index x with Phi(x)(rep) = vertex
};

// Row normal form of one edge orbit: the edge {a, x(b)} with a, b vertex reps.
// same_orbit marks the a == b case.
struct EdgeOrbit {
  std::vector<std::size_t> edges;  // indices into Graph::edges(), by (u, v)
  int a = 0;
  int b = 0;
  std::size_t x = 0;
  bool same_orbit = false;
};

struct OrbitStructure {
  std::vector<int> vertex_reps;                 // ascending
  std::vector<int> rep_position;                // vertex -> position in vertex_reps, or -1
  std::vector<VertexOrbitRef> vertex_orbit_of;  // per vertex
  std::vector<std::vector<std::size_t>> stabilizers;  // per rep position
  std::vector<SubspaceBasis> joint_bases;       // M_i per rep position
  std::vector<Eigen::Index> column_offset;      // per rep position
  std::vector<EdgeOrbit> edge_orbits;           // ordered by smallest member edge
  std::vector<std::size_t> edge_orbit_of;       // per edge

  Eigen::Index columns() const;
  std::size_t rows() const { return edge_orbits.size(); }
  Eigen::Index width(std::size_t rep_pos) const { return joint_bases[rep_pos].size(); }
};

OrbitStructure orbit_structure(const SymmetricFramework& fw);

// Vertex orbits of the action, each ascending, ordered by smallest member.
std::vector<std::vector<int>> vertex_orbits(const Action& action);

struct FixedCount {
  int joints = 0;  // j_x
  int bars = 0;    // b_x
};

std::vector<FixedCount> fixed_counts(const SymmetricFramework& fw);

// Places every vertex from one position per vertex orbit. Keys are 0-based
// vertices, any member of an orbit may carry the position.
Configuration complete_configuration(int vertex_count, const PointGroup& group,
                                     const Action& action,
                                     const std::map<int, Vector>& rep_positions,
                                     const Tolerance& tol = {});

Configuration sample_symmetry_generic(int vertex_count, const PointGroup& group,
                                      const Action& action, std::uint64_t seed,
                                      double scale = 1.0, const Tolerance& tol = {});

// Convenience: resample `fw` symmetry-generically and revalidate.
SymmetricFramework resample(const SymmetricFramework& fw, std::uint64_t seed, double scale = 1.0);

}  // namespace orbitrig
