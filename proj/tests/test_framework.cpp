#include "doctest.h"

#include "orbitrig/errors.hpp"
#include "orbitrig/framework.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace orbitrig;

namespace {

PointGroup named(const char* name, int dim, std::optional<int> order = std::nullopt) {
  return PointGroup::schoenflies(SchoenfliesSpec::parse(name, order, dim));
}

// 0-based permutation from 1-based cycles.
std::vector<int> cycles(int n, std::initializer_list<std::initializer_list<int>> cs) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (const auto& c : cs) {
    std::vector<int> cyc(c);
    for (std::size_t i = 0; i < cyc.size(); ++i) p[cyc[i] - 1] = cyc[(i + 1) % cyc.size()] - 1;
  }
  return p;
}

Graph k22() { return Graph(4, {{0, 1}, {0, 3}, {1, 2}, {2, 3}}); }

Configuration points2(std::initializer_list<std::pair<double, double>> ps) {
  Matrix m(2, static_cast<Eigen::Index>(ps.size()));
  Eigen::Index i = 0;
  for (auto [x, y] : ps) {
    m(0, i) = x;
    m(1, i) = y;
    ++i;
  }
  return Configuration{m};
}

SymmetricFramework k22_c2(double a = 1, double b = 2, double c = 3, double d = 4) {
  const auto g = named("C2", 2);
  auto action = action_from_generators(g, 4, {cycles(4, {{1, 3}, {2, 4}})});
  return validate(k22(), points2({{a, b}, {c, d}, {-a, -b}, {-c, -d}}), g, action);
}

bool has_violation(const ValidationError& e, Violation::Kind kind) {
  return std::any_of(e.violations().begin(), e.violations().end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

Graph octahedron() {
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  for (int apex : {4, 5}) {
    for (int i = 0; i < 4; ++i) edges.emplace_back(i, apex);
  }
  return Graph(6, edges);
}

}  // namespace

TEST_CASE("graph construction rejects malformed input") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);
  try {
    Graph(2, {{1, 1}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Schema);
  }
  CHECK(Graph::complete(5).edge_count() == 10);
}

TEST_CASE("half-turn symmetric K22 validates") {
  const auto fw = k22_c2();
  CHECK(fw.group().order() == 2);
  CHECK(fw.spanning());
}

TEST_CASE("perturbed joint breaks equivariance") {
  const auto g = named("C2", 2);
  auto action = action_from_generators(g, 4, {cycles(4, {{1, 3}, {2, 4}})});
  try {
    validate(k22(), points2({{1, 2}, {3, 4}, {0, -2}, {-3, -4}}), g, action);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    REQUIRE(has_violation(e, Violation::Kind::Equivariance));
    const auto& v = *std::find_if(e.violations().begin(), e.violations().end(), [](const Violation& v) {
      return v.kind == Violation::Kind::Equivariance;
    });
    CHECK(v.element == 1);
    CHECK(v.vertex == 1);
    CHECK(v.residual == doctest::Approx(1.0));
  }
}

TEST_CASE("non-automorphism is reported") {
  const auto g = named("Cs", 2);
  // (1 2) maps edge {1,4} to {2,4}, which is not an edge.
  auto action = action_from_generators(g, 4, {cycles(4, {{1, 2}})});
  try {
    validate(k22(), points2({{1, 2}, {-1, 2}, {5, 7}, {0, 3}}), g, action);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(has_violation(e, Violation::Kind::Automorphism));
  }
}

TEST_CASE("broken permutation and non-homomorphism are reported") {
  const auto g = named("C2", 2);
  auto bad_perm = action_from_generators(g, 4, {{0, 0, 1, 2}});
  try {
    validate(k22(), points2({{1, 2}, {3, 4}, {-1, -2}, {-3, -4}}), g, bad_perm);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(has_violation(e, Violation::Kind::Structure));
  }
  // A 4-cycle cannot represent an element of order two.
  auto not_hom = action_from_generators(g, 4, {cycles(4, {{1, 2, 3, 4}})});
  try {
    validate(k22(), points2({{1, 2}, {3, 4}, {-1, -2}, {-3, -4}}), g, not_hom);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(has_violation(e, Violation::Kind::Homomorphism));
  }
}

TEST_CASE("coincident joints are reported") {
  const auto g = PointGroup::trivial(2);
  Action id{{cycles(4, {})}};
  try {
    validate(k22(), points2({{1, 2}, {1, 2}, {5, 6}, {7, 9}}), g, id);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(has_violation(e, Violation::Kind::NonInjective));
  }
}

TEST_CASE("dimension mismatch between group and configuration") {
  const auto g = PointGroup::trivial(3);
  Action id{{cycles(4, {})}};
  try {
    validate(k22(), points2({{1, 2}, {3, 4}, {5, 6}, {7, 9}}), g, id);
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("orbit structure of half-turn K22") {
  const auto fw = k22_c2();
  const auto s = orbit_structure(fw);
  CHECK(s.vertex_reps == std::vector<int>{0, 1});
  REQUIRE(s.edge_orbits.size() == 2);
  CHECK(s.edge_orbits[0].a == 0);
  CHECK(s.edge_orbits[0].b == 1);
  CHECK(s.edge_orbits[0].x == 0);
  CHECK_FALSE(s.edge_orbits[0].same_orbit);
  CHECK(s.edge_orbits[1].a == 0);
  CHECK(s.edge_orbits[1].b == 1);
  CHECK(s.edge_orbits[1].x == 1);
  CHECK(s.columns() == 4);
  CHECK(s.vertex_orbit_of[3].rep == 1);
  CHECK(s.vertex_orbit_of[3].witness == 1);
}

TEST_CASE("mirror K22 with the end-vertex-swapping action has a same-orbit edge") {
  const auto g = named("Cs", 2);
  auto action = action_from_generators(g, 4, {cycles(4, {{1, 4}, {2, 3}})});
  const auto fw = validate(k22(), points2({{1, 2}, {3, 4}, {-3, 4}, {-1, 2}}), g, action);
  const auto s = orbit_structure(fw);
  REQUIRE(s.edge_orbits.size() == 3);
  // Orbit of {1,4}: Case 2 with witness s.
  CHECK(s.edge_orbits[1].a == 0);
  CHECK(s.edge_orbits[1].same_orbit);
  CHECK(s.edge_orbits[1].x == 1);
  CHECK(fw.graph().edge(s.edge_orbits[1].edges.front()) == Edge{0, 3});
}

TEST_CASE("trivial group gives singleton orbits") {
  Action id{{cycles(4, {})}};
  const auto fw = validate(k22(), points2({{0, 0}, {1, 0}, {1, 1}, {0, 2}}), PointGroup::trivial(2), id);
  const auto s = orbit_structure(fw);
  CHECK(s.vertex_reps.size() == 4);
  CHECK(s.edge_orbits.size() == 4);
  CHECK(s.columns() == 8);
}

TEST_CASE("octahedron fixed counts") {
  const auto graph = octahedron();
  const auto c2 = named("C2", 3);
  auto phi_a = action_from_generators(c2, 6, {cycles(6, {{1, 3}, {2, 4}, {5, 6}})});
  const auto fw_a = validate(graph, sample_symmetry_generic(6, c2, phi_a, 3), c2, phi_a);
  const auto fa = fixed_counts(fw_a);
  CHECK(fa[0].joints == 6);
  CHECK(fa[0].bars == 12);
  CHECK(fa[1].joints == 0);
  CHECK(fa[1].bars == 0);

  const auto cs = named("Cs", 3);
  auto phi_b = action_from_generators(cs, 6, {cycles(6, {{1, 3}, {5, 6}})});
  const auto fw_b = validate(graph, sample_symmetry_generic(6, cs, phi_b, 11), cs, phi_b);
  const auto fb = fixed_counts(fw_b);
  CHECK(fb[1].joints == 2);
  // Enumeration oracle: edges mapped onto themselves by (1 3)(5 6).
  int oracle = 0;
  for (const auto& e : graph.edges()) {
    const int u = phi_b.image(1, e.u), w = phi_b.image(1, e.v);
    if (std::minmax(u, w) == std::minmax(e.u, e.v)) ++oracle;
  }
  CHECK(fb[1].bars == oracle);
  CHECK(fb[1].bars == 0);
}

TEST_CASE("orbit partition and orbit-stabilizer relation") {
  const auto graph = octahedron();
  const auto c2v = named("C2v", 3);
  // C2 -> (1 3)(2 4)(5 6) is impossible with apexes on the axis, so use the
  // equatorial action with apexes fixed.
  auto action = action_from_generators(c2v, 6, {cycles(6, {{1, 3}, {2, 4}}), cycles(6, {{2, 4}})});
  const auto fw = validate(graph, sample_symmetry_generic(6, c2v, action, 5), c2v, action);
  const auto s = orbit_structure(fw);
  std::size_t vertex_total = 0;
  for (int rep : s.vertex_reps) {
    std::set<int> orbit;
    for (std::size_t x = 0; x < c2v.order(); ++x) orbit.insert(action.image(x, rep));
    vertex_total += orbit.size();
    CHECK(orbit.size() * s.stabilizers[s.rep_position[rep]].size() == c2v.order());
  }
  CHECK(vertex_total == 6);
  std::size_t edge_total = 0;
  for (const auto& o : s.edge_orbits) {
    edge_total += o.edges.size();
    // The normal form reconstructs an edge of the orbit.
    const int other = action.image(o.x, o.b);
    const auto idx = graph.edge_index(o.a, other);
    REQUIRE(idx.has_value());
    CHECK(std::find(o.edges.begin(), o.edges.end(), *idx) != o.edges.end());
  }
  CHECK(edge_total == graph.edge_count());
  // Apexes lie on the rotation axis.
  CHECK(s.width(s.rep_position[4]) == 1);
  const auto fc = fixed_counts(fw);
  CHECK(fc[0].joints == 6);
  CHECK(fc[0].bars == 12);
  for (std::size_t x = 0; x < c2v.order(); ++x) {
    int both_fixed = 0;
    for (const auto& e : graph.edges()) {
      if (action.image(x, e.u) == e.u && action.image(x, e.v) == e.v) ++both_fixed;
    }
    CHECK(fc[x].bars >= both_fixed);
  }
}

TEST_CASE("symmetric completion") {
  const auto c2 = named("C2", 2);
  auto half = action_from_generators(c2, 2, {cycles(2, {{1, 2}})});
  const auto done = complete_configuration(2, c2, half, {{0, (Vector(2) << 1, 2).finished()}});
  CHECK(done.point(1).isApprox((Vector(2) << -1, -2).finished()));

  const auto cs = named("Cs", 2);
  auto phi_a = action_from_generators(cs, 4, {cycles(4, {{1, 3}})});
  const auto mirror = complete_configuration(
      4, cs, phi_a,
      {{0, (Vector(2) << 1, 2).finished()}, {1, (Vector(2) << 0, 3).finished()},
       {3, (Vector(2) << 0, 4).finished()}});
  CHECK(mirror.point(2).isApprox((Vector(2) << -1, 2).finished()));
  CHECK(mirror.point(1).isApprox((Vector(2) << 0, 3).finished()));

  try {
    complete_configuration(4, cs, phi_a,
                           {{0, (Vector(2) << 1, 2).finished()}, {1, (Vector(2) << 0.5, 3).finished()},
                            {3, (Vector(2) << 0, 4).finished()}});
    FAIL("expected InconsistentPlacement");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InconsistentPlacement);
  }
  try {
    complete_configuration(4, cs, phi_a, {{0, (Vector(2) << 1, 2).finished()}});
    FAIL("expected InconsistentPlacement");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InconsistentPlacement);
  }
  try {
    complete_configuration(4, cs, phi_a,
                           {{0, (Vector(2) << 1, 2).finished()}, {2, (Vector(2) << 1, 2).finished()},
                            {1, (Vector(2) << 0, 3).finished()}, {3, (Vector(2) << 0, 4).finished()}});
    FAIL("expected AmbiguousPlacement");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AmbiguousPlacement);
  }
}

TEST_CASE("completion inverts restriction to representatives") {
  const auto c3v = named("C3v", 2);
  // Six joints: a free orbit of three pairs... use a generic orbit of size 6.
  auto action = action_from_generators(c3v, 6, {cycles(6, {{1, 2, 3}, {4, 5, 6}}), cycles(6, {{1, 4}, {2, 6}, {3, 5}})});
  const auto sampled = sample_symmetry_generic(6, c3v, action, 17);
  const auto again = complete_configuration(6, c3v, action, {{0, sampled.point(0)}});
  CHECK((again.points - sampled.points).norm() < 1e-12);
}

TEST_CASE("sampling is deterministic and respects joint subspaces") {
  const auto c2v = named("C2v", 2);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 4; ++i) {
    for (int j = 4; j < 8; ++j) edges.emplace_back(i, j);
  }
  const Graph k44(8, edges);
  // Type Psi: C2 -> (14)(23)(58)(67), s_h -> (58)(67).
  auto psi = action_from_generators(c2v, 8, {cycles(8, {{1, 4}, {2, 3}, {5, 8}, {6, 7}}),
                                             cycles(8, {{5, 8}, {6, 7}})});
  const auto p1 = sample_symmetry_generic(8, c2v, psi, 42);
  const auto p2 = sample_symmetry_generic(8, c2v, psi, 42);
  CHECK(p1.points == p2.points);
  const auto fw = validate(k44, p1, c2v, psi, {}, true);
  for (int i = 0; i < 4; ++i) CHECK(fw.config().point(i)(1) == doctest::Approx(0.0));
  for (int i = 4; i < 8; ++i) CHECK(fw.config().point(i)(0) == doctest::Approx(0.0));
  CHECK(fw.generic());
  CHECK_FALSE(sample_symmetry_generic(8, c2v, psi, 43).points.isApprox(p1.points));
}

TEST_CASE("sampling fails when injectivity is impossible") {
  const auto c2 = named("C2", 2);
  // Two orbits of fixed joints both pinned to the origin.
  Action fixed{{cycles(2, {}), cycles(2, {})}};
  try {
    sample_symmetry_generic(2, c2, fixed, 1);
    FAIL("expected SamplingFailed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SamplingFailed);
  }
}
