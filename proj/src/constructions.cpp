#include "orbitrig/constructions.hpp"

#include "orbitrig/errors.hpp"

#include <functional>
#include <initializer_list>
#include <numeric>

namespace orbitrig {

SymmetricFramework cone(const SymmetricFramework& fw, double height) {
  if (!std::isfinite(height)) throw Error(ErrorKind::InvalidMatrix, "apex height must be finite");
  const int n = fw.vertex_count();
  const int d = fw.dim();

  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : fw.graph().edges()) edges.emplace_back(e.u, e.v);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, n);

  Matrix points = Matrix::Zero(d + 1, n + 1);
  points.topLeftCorner(d, n) = fw.config().points;
  points(d, n) = height;

  Action action;
  for (const auto& perm : fw.action().perms) {
    auto extended = perm;
    extended.push_back(n);
    action.perms.push_back(std::move(extended));
  }
  if (fw.action().generator_perms) {
    std::vector<std::vector<int>> gens;
    for (const auto& perm : *fw.action().generator_perms) {
      auto extended = perm;
      extended.push_back(n);
      gens.push_back(std::move(extended));
    }
    action.generator_perms = std::move(gens);
  }
  return validate(Graph(n + 1, edges), Configuration{points}, fw.group().embedded_one_dimension_up(),
                  std::move(action), fw.tolerance(), false);
}

namespace {

std::vector<int> cycles(int n, std::initializer_list<std::initializer_list<int>> cs) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (const auto& c : cs) {
    std::vector<int> cyc(c);
    for (std::size_t i = 0; i < cyc.size(); ++i) p[cyc[i] - 1] = cyc[(i + 1) % cyc.size()] - 1;
  }
  return p;
}

Graph one_based(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<std::pair<int, int>> zero;
  for (auto [u, v] : edges) zero.emplace_back(u - 1, v - 1);
  return Graph(n, zero);
}

Graph bipartite(int left, int right) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < left; ++i) {
    for (int j = 0; j < right; ++j) edges.emplace_back(i, left + j);
  }
  return Graph(left + right, edges);
}

Matrix columns2(std::initializer_list<std::pair<double, double>> ps) {
  Matrix m(2, static_cast<Eigen::Index>(ps.size()));
  Eigen::Index i = 0;
  for (auto [x, y] : ps) {
    m(0, i) = x;
    m(1, i) = y;
    ++i;
  }
  return m;
}

PointGroup named(const char* name, int dim) {
  return PointGroup::schoenflies(SchoenfliesSpec::parse(name, std::nullopt, dim));
}

Graph k22() { return one_based(4, {{1, 2}, {1, 4}, {2, 3}, {3, 4}}); }

Graph octahedron() {
  return one_based(6, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}, {1, 6},
                       {2, 6}, {3, 6}, {4, 6}});
}

Graph cube() {
  return one_based(8, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {5, 6}, {6, 7}, {7, 8}, {5, 8}, {1, 5},
                       {2, 6}, {3, 7}, {4, 8}});
}

// Every pair except each joint and its own mirror image.
Graph crosspolytope4d() {
  std::vector<std::pair<int, int>> edges;
  auto mirror_pair = [](int i, int j) {
    return (i == 0 && j == 2) || (i == 1 && j == 3) || (i == 4 && j == 6) || (i == 5 && j == 7);
  };
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      if (!mirror_pair(i, j)) edges.emplace_back(i, j);
    }
  }
  return Graph(8, edges);
}

SymmetricFramework fixed(Graph graph, Matrix points, PointGroup group,
                         std::vector<std::vector<int>> gens) {
  const int n = graph.vertex_count();
  Action action = action_from_generators(group, n, gens);
  return validate(std::move(graph), Configuration{std::move(points)}, std::move(group),
                  std::move(action));
}

SymmetricFramework sampled(Graph graph, PointGroup group, std::vector<std::vector<int>> gens,
                           std::uint64_t seed) {
  const int n = graph.vertex_count();
  Action action = action_from_generators(group, n, gens);
  Configuration config = sample_symmetry_generic(n, group, action, seed);
  return validate(std::move(graph), std::move(config), std::move(group), std::move(action), {}, true);
}

using Builder = std::function<Example(const std::vector<double>&, std::uint64_t)>;

struct Registered {
  CatalogEntry entry;
  Builder build;
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> entries = [] {
    std::vector<Registered> r;
    const std::vector<std::string> abcd{"a", "b", "c", "d"};
    const std::vector<double> abcd_defaults{1, 2, 3, 4};

    r.push_back({{"k22-c2", "4-cycle in the plane with half-turn (1 3)(2 4)", abcd, abcd_defaults},
                 [](const std::vector<double>& p, std::uint64_t) {
                   const double a = p[0], b = p[1], c = p[2], d = p[3];
                   return Example{fixed(k22(), columns2({{a, b}, {c, d}, {-a, -b}, {-c, -d}}),
                                        named("C2", 2), {cycles(4, {{1, 3}, {2, 4}})}),
                                  std::nullopt};
                 }});
    r.push_back({{"k22-cs-a", "4-cycle in the plane with mirror (1 3), joints 2 and 4 on the mirror",
                  abcd, abcd_defaults},
                 [](const std::vector<double>& p, std::uint64_t) {
                   const double a = p[0], b = p[1], c = p[2], d = p[3];
                   return Example{fixed(k22(), columns2({{a, b}, {0, c}, {-a, b}, {0, d}}),
                                        named("Cs", 2), {cycles(4, {{1, 3}})}),
                                  std::nullopt};
                 }});
    r.push_back({{"k22-cs-b", "4-cycle in the plane with mirror (1 4)(2 3)", abcd, abcd_defaults},
                 [](const std::vector<double>& p, std::uint64_t) {
                   const double a = p[0], b = p[1], c = p[2], d = p[3];
                   return Example{fixed(k22(), columns2({{a, b}, {c, d}, {-c, d}, {-a, b}}),
                                        named("Cs", 2), {cycles(4, {{1, 4}, {2, 3}})}),
                                  std::nullopt};
                 }});
    r.push_back({{"k44-c2v-phi", "K4,4 in the plane, C2v acting freely on both parts", abcd,
                  abcd_defaults},
                 [](const std::vector<double>& p, std::uint64_t) {
                   const double a = p[0], b = p[1], c = p[2], d = p[3];
                   return Example{
                       fixed(bipartite(4, 4),
                             columns2({{a, b}, {-a, b}, {-a, -b}, {a, -b}, {c, d}, {-c, d}, {-c, -d},
                                       {c, -d}}),
                             named("C2v", 2),
                             {cycles(8, {{1, 3}, {2, 4}, {5, 7}, {6, 8}}),
                              cycles(8, {{1, 4}, {2, 3}, {5, 8}, {6, 7}})}),
                       std::nullopt};
                 }});
    r.push_back({{"k44-c2v-psi", "K4,4 in the plane, C2v with parts on the two mirror lines", abcd,
                  abcd_defaults},
                 [](const std::vector<double>& p, std::uint64_t) {
                   const double a = p[0], b = p[1], c = p[2], d = p[3];
                   return Example{
                       fixed(bipartite(4, 4),
                             columns2({{a, 0}, {b, 0}, {-b, 0}, {-a, 0}, {0, c}, {0, d}, {0, -d},
                                       {0, -c}}),
                             named("C2v", 2),
                             {cycles(8, {{1, 4}, {2, 3}, {5, 8}, {6, 7}}), cycles(8, {{5, 8}, {6, 7}})}),
                       std::nullopt};
                 }});
    r.push_back({{"k66-c3h", "K6,6 in space with C3h acting freely on both parts", {}, {}},
                 [](const std::vector<double>&, std::uint64_t seed) {
                   return Example{
                       sampled(bipartite(6, 6), named("C3h", 3),
                               {cycles(12, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}}),
                                cycles(12, {{1, 4}, {2, 5}, {3, 6}, {7, 10}, {8, 11}, {9, 12}})},
                               seed),
                       std::nullopt};
                 }});
    r.push_back({{"octahedron-c2", "octahedron with half-turn (1 3)(2 4)(5 6)", {}, {}},
                 [](const std::vector<double>&, std::uint64_t seed) {
                   return Example{sampled(octahedron(), named("C2", 3),
                                          {cycles(6, {{1, 3}, {2, 4}, {5, 6}})}, seed),
                                  std::nullopt};
                 }});
    r.push_back({{"octahedron-cs", "octahedron with mirror (1 3)(5 6), joints 2 and 4 on the mirror",
                  {}, {}},
                 [](const std::vector<double>&, std::uint64_t seed) {
                   return Example{
                       sampled(octahedron(), named("Cs", 3), {cycles(6, {{1, 3}, {5, 6}})}, seed),
                       std::nullopt};
                 }});
    r.push_back({{"crosspolytope4d-c2v",
                  "4-dimensional cross-polytope graph with two joints on each mirror", {}, {}},
                 [](const std::vector<double>&, std::uint64_t seed) {
                   return Example{sampled(crosspolytope4d(), named("C2v", 4),
                                          {cycles(8, {{1, 3}, {2, 4}, {5, 7}, {6, 8}}),
                                           cycles(8, {{5, 7}, {6, 8}})},
                                          seed),
                                  std::nullopt};
                 }});
    r.push_back({{"cube-c2", "planar cube graph with half-turn", {}, {}},
                 [](const std::vector<double>&, std::uint64_t seed) {
                   return Example{
                       sampled(cube(), named("C2", 2), {cycles(8, {{1, 3}, {2, 4}, {5, 7}, {6, 8}})},
                               seed),
                       std::nullopt};
                 }});
    r.push_back({{"cube-c2v", "planar cube graph as two nested rhombi with C2v", abcd, abcd_defaults},
                 [](const std::vector<double>& p, std::uint64_t) {
                   const double a = p[0], b = p[1], c = p[2], d = p[3];
                   return Example{
                       fixed(cube(),
                             columns2({{a, 0}, {0, b}, {-a, 0}, {0, -b}, {c, 0}, {0, d}, {-c, 0},
                                       {0, -d}}),
                             named("C2v", 2),
                             {cycles(8, {{1, 3}, {2, 4}, {5, 7}, {6, 8}}), cycles(8, {{2, 4}, {6, 8}})}),
                       std::nullopt};
                 }});
    r.push_back({{"cube-c4v",
                  "planar cube graph as two nested squares with C4v; inner square and spokes are cables",
                  {"a", "b"}, {2, 1}},
                 [](const std::vector<double>& p, std::uint64_t) {
                   const double a = p[0], b = p[1];
                   Example ex{fixed(cube(),
                                    columns2({{a, 0}, {0, a}, {-a, 0}, {0, -a}, {b, 0}, {0, b}, {-b, 0},
                                              {0, -b}}),
                                    named("C4v", 2),
                                    {cycles(8, {{1, 2, 3, 4}, {5, 6, 7, 8}}), cycles(8, {{2, 4}, {6, 8}})}),
                              TensegrityAssignment{}};
                   for (const Edge& e : ex.framework.graph().edges()) {
                     ex.tensegrity->roles.push_back(e.u < 4 && e.v < 4 ? EdgeRole::Bar : EdgeRole::Cable);
                   }
                   return ex;
                 }});
    return r;
  }();
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& r : registry()) out.push_back(r.entry);
    return out;
  }();
  return entries;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& r : registry()) out.push_back(r.entry.name);
  return out;
}

Example catalog(const std::string& name, const std::vector<double>& params, std::uint64_t seed) {
  for (const auto& r : registry()) {
    if (r.entry.name != name) continue;
    if (!params.empty() && params.size() != r.entry.parameters.size()) {
      throw Error(ErrorKind::Schema, "catalog entry '" + name + "' takes " +
                                         std::to_string(r.entry.parameters.size()) + " parameters");
    }
    return r.build(params.empty() ? r.entry.defaults : params, seed);
  }
  throw Error(ErrorKind::UnknownName, "unknown catalog entry '" + name + "'");
}

}  // namespace orbitrig
