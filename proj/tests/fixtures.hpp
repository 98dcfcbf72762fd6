#pragma once

// Hand-built frameworks shared by the unit tests. Independent of the
// constructions catalog so the two can be checked against each other.

#include "orbitrig/framework.hpp"

#include <initializer_list>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace fixtures {

using namespace orbitrig;

inline PointGroup named(const char* name, int dim, std::optional<int> order = std::nullopt) {
  return PointGroup::schoenflies(SchoenfliesSpec::parse(name, order, dim));
}

// 0-based permutation from 1-based cycles.
inline std::vector<int> cycles(int n, std::initializer_list<std::initializer_list<int>> cs) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (const auto& c : cs) {
    std::vector<int> cyc(c);
    for (std::size_t i = 0; i < cyc.size(); ++i) p[cyc[i] - 1] = cyc[(i + 1) % cyc.size()] - 1;
  }
  return p;
}

// 1-based edge list.
inline Graph graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<std::pair<int, int>> zero;
  for (auto [u, v] : edges) zero.emplace_back(u - 1, v - 1);
  return Graph(n, zero);
}

inline Graph bipartite(int left, int right) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < left; ++i) {
    for (int j = 0; j < right; ++j) edges.emplace_back(i, left + j);
  }
  return Graph(left + right, edges);
}

inline Configuration points(int dim, std::initializer_list<std::initializer_list<double>> ps) {
  Matrix m(dim, static_cast<Eigen::Index>(ps.size()));
  Eigen::Index i = 0;
  for (const auto& p : ps) {
    Eigen::Index k = 0;
    for (double c : p) m(k++, i) = c;
    ++i;
  }
  return Configuration{m};
}

inline Graph k22() { return graph(4, {{1, 2}, {1, 4}, {2, 3}, {3, 4}}); }

inline SymmetricFramework k22_c2(double a = 1, double b = 2, double c = 3, double d = 4) {
  const auto g = named("C2", 2);
  auto act = action_from_generators(g, 4, {cycles(4, {{1, 3}, {2, 4}})});
  return validate(k22(), points(2, {{a, b}, {c, d}, {-a, -b}, {-c, -d}}), g, act);
}

// Mirror fixing joints 2 and 4.
inline SymmetricFramework k22_cs_a(double a = 1, double b = 2, double c = 3, double d = 4) {
  const auto g = named("Cs", 2);
  auto act = action_from_generators(g, 4, {cycles(4, {{1, 3}})});
  return validate(k22(), points(2, {{a, b}, {0, c}, {-a, b}, {0, d}}), g, act);
}

// Mirror swapping the end-vertices of {1,4} and {2,3}.
inline SymmetricFramework k22_cs_b(double a = 1, double b = 2, double c = 3, double d = 4) {
  const auto g = named("Cs", 2);
  auto act = action_from_generators(g, 4, {cycles(4, {{1, 4}, {2, 3}})});
  return validate(k22(), points(2, {{a, b}, {c, d}, {-c, d}, {-a, b}}), g, act);
}

inline Graph octahedron() {
  return graph(6, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}, {1, 6}, {2, 6},
                   {3, 6}, {4, 6}});
}

inline SymmetricFramework octahedron_c2(std::uint64_t seed = 1) {
  const auto g = named("C2", 3);
  auto act = action_from_generators(g, 6, {cycles(6, {{1, 3}, {2, 4}, {5, 6}})});
  return validate(octahedron(), sample_symmetry_generic(6, g, act, seed), g, act, {}, true);
}

inline SymmetricFramework octahedron_cs(std::uint64_t seed = 1) {
  const auto g = named("Cs", 3);
  auto act = action_from_generators(g, 6, {cycles(6, {{1, 3}, {5, 6}})});
  return validate(octahedron(), sample_symmetry_generic(6, g, act, seed), g, act, {}, true);
}

// K_{4,4} with C2 -> (13)(24)(57)(68) and s_h -> (14)(23)(58)(67).
inline SymmetricFramework k44_c2v_phi(std::uint64_t seed = 1) {
  const auto g = named("C2v", 2);
  auto act = action_from_generators(g, 8, {cycles(8, {{1, 3}, {2, 4}, {5, 7}, {6, 8}}),
                                           cycles(8, {{1, 4}, {2, 3}, {5, 8}, {6, 7}})});
  return validate(bipartite(4, 4), sample_symmetry_generic(8, g, act, seed), g, act, {}, true);
}

// K_{6,6} with C3 -> (123)(456)(789)(10 11 12), s -> (14)(25)(36)(7 10)(8 11)(9 12).
inline SymmetricFramework k66_c3h(std::uint64_t seed = 1) {
  const auto g = named("C3h", 3);
  auto act = action_from_generators(
      g, 12,
      {cycles(12, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}}),
       cycles(12, {{1, 4}, {2, 5}, {3, 6}, {7, 10}, {8, 11}, {9, 12}})});
  return validate(bipartite(6, 6), sample_symmetry_generic(12, g, act, seed), g, act, {}, true);
}

}  // namespace fixtures
