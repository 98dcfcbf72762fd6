#include "doctest.h"

#include "fixtures.hpp"
#include "orbitrig/errors.hpp"
#include "orbitrig/predict.hpp"
#include "orbitrig/rigidity.hpp"

#include <random>

using namespace orbitrig;
using namespace fixtures;

namespace {

const Verdict* find_rule(const std::vector<Verdict>& vs, const std::string& rule) {
  for (const auto& v : vs) {
    if (v.rule == rule) return &v;
  }
  return nullptr;
}

Graph cube() {
  return graph(8, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {5, 6}, {6, 7}, {7, 8}, {5, 8}, {1, 5}, {2, 6},
                   {3, 7}, {4, 8}});
}

SymmetricFramework cube_c4v(double a = 2, double b = 1) {
  const auto g = named("C4v", 2);
  auto act = action_from_generators(g, 8, {cycles(8, {{1, 2, 3, 4}, {5, 6, 7, 8}}), cycles(8, {{2, 4}, {6, 8}})});
  return validate(cube(), points(2, {{a, 0}, {0, a}, {-a, 0}, {0, -a}, {b, 0}, {0, b}, {-b, 0}, {0, -b}}), g, act);
}

}  // namespace

TEST_CASE("counts of the octahedron with a half-turn") {
  const auto k = counts(octahedron_c2());
  CHECK(k.r == 6);
  CHECK(k.c == 9);
  CHECK(k.m == 2);
}

TEST_CASE("maxwell verdicts") {
  const auto flex = maxwell_verdict(Counts{6, 9, 2, true}, true);
  CHECK(flex.conclusion == Conclusion::FlexCertified);
  CHECK(flex.finite_mechanism);
  CHECK_FALSE(maxwell_verdict(Counts{6, 9, 2, true}, false).finite_mechanism);

  const auto tight = maxwell_verdict(Counts{4, 4, 0, true});
  CHECK(tight.conclusion == Conclusion::Inconclusive);
  CHECK_FALSE(tight.stress_guaranteed);

  const auto over = maxwell_verdict(Counts{3, 2, 0, true});
  CHECK(over.conclusion == Conclusion::Inconclusive);
  CHECK(over.stress_guaranteed);
}

TEST_CASE("special counting rules") {
  {
    const auto fw = octahedron_c2();
    const auto vs = special_counting_verdicts(fw, counts(fw), fixed_counts(fw));
    const auto* v = find_rule(vs, "thm-3d-c2");
    REQUIRE(v != nullptr);
    CHECK(v->conclusion == Conclusion::FlexCertified);
    CHECK(v->finite_mechanism);
  }
  {
    const auto fw = octahedron_cs();
    const auto vs = special_counting_verdicts(fw, counts(fw), fixed_counts(fw));
    const auto* v = find_rule(vs, "thm-3d-cs");
    REQUIRE(v != nullptr);
    CHECK(v->conclusion == Conclusion::FlexCertified);
  }
  {
    // 2n - 4 = 4 edges on 4 joints, mirror fixing no bar.
    const auto fw = k22_cs_a();
    const auto vs = special_counting_verdicts(fw, counts(fw), fixed_counts(fw));
    const auto* v = find_rule(vs, "thm-2d-cs");
    REQUIRE(v != nullptr);
    CHECK(v->conclusion == Conclusion::FlexCertified);
    CHECK_FALSE(v->finite_mechanism);
  }
  {
    const auto fw = k44_c2v_phi();
    CHECK(special_counting_verdicts(fw, counts(fw), fixed_counts(fw)).empty());
  }
  {
    // Half-turn triangle: edge count differs from 2n - 4.
    const auto g = named("C2", 2);
    auto act = action_from_generators(g, 4, {cycles(4, {{1, 3}, {2, 4}})});
    const auto fw = validate(graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}}),
                             points(2, {{1, 2}, {3, -1}, {-1, -2}, {-3, 1}}), g, act);
    const auto vs = special_counting_verdicts(fw, counts(fw), fixed_counts(fw));
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].conclusion == Conclusion::NotApplicable);
  }
}

TEST_CASE("rank verdicts") {
  const auto phi = rank_verdict(k44_c2v_phi());
  CHECK(phi.verdict.conclusion == Conclusion::FlexCertified);
  REQUIRE(phi.verdict.certificate.has_value());
  CHECK(phi.verdict.certificate->norm() == doctest::Approx(1.0));

  const auto c3h = rank_verdict(k66_c3h());
  CHECK(c3h.verdict.conclusion == Conclusion::FlexCertified);
  CHECK(c3h.stress_dim == 2);

  const auto swap = rank_verdict(k22_cs_b(1, 2, 3, 5));
  CHECK(swap.verdict.conclusion == Conclusion::NoFlexAtThisConfig);
  CHECK_FALSE(swap.verdict.certificate.has_value());
}

TEST_CASE("maxwell never contradicts the rank verdict") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    for (const auto& fw : {octahedron_c2(seed), octahedron_cs(seed), k44_c2v_phi(seed), k66_c3h(seed)}) {
      const auto k = counts(fw);
      const auto rv = rank_verdict(fw);
      if (maxwell_verdict(k).conclusion == Conclusion::FlexCertified) {
        CHECK(rv.verdict.conclusion == Conclusion::FlexCertified);
      }
    }
  }
}

TEST_CASE("proper stresses") {
  SUBCASE("all bars: feasible iff a stress exists") {
    const auto fw = k44_c2v_phi();
    TensegrityAssignment bars{std::vector<EdgeRole>(fw.graph().edge_count(), EdgeRole::Bar)};
    const auto found = proper_stress_check(fw, bars);
    CHECK(found.outcome == StressSearch::Feasible);
    CHECK(found.lifted.size() == 16);

    const auto flexible = k22_c2();
    TensegrityAssignment bars4{std::vector<EdgeRole>(4, EdgeRole::Bar)};
    CHECK(proper_stress_check(flexible, bars4).outcome == StressSearch::Infeasible);
  }
  SUBCASE("spider web") {
    const auto fw = cube_c4v();
    TensegrityAssignment t;
    for (const Edge& e : fw.graph().edges()) t.roles.push_back(e.u < 4 && e.v < 4 ? EdgeRole::Bar : EdgeRole::Cable);
    const auto res = proper_stress_check(fw, t);
    REQUIRE(res.outcome == StressSearch::Feasible);
    CHECK(res.margin > 0);
    const Matrix r = rigidity_matrix(fw.graph(), fw.config());
    CHECK((r.transpose() * res.lifted).norm() < 1e-9);
    // Spoke-to-inner ratio 2b / (a - b) = 2 at a = 2, b = 1.
    const double inner = res.lifted(*fw.graph().edge_index(4, 5));
    const double spoke = res.lifted(*fw.graph().edge_index(0, 4));
    CHECK(spoke / inner == doctest::Approx(2.0));

    // Reversing every cable to a strut flips the witness sign.
    for (auto& role : t.roles) {
      if (role == EdgeRole::Cable) role = EdgeRole::Strut;
    }
    CHECK(proper_stress_check(fw, t).outcome == StressSearch::Feasible);

    // Inner cables with strut spokes contradict the single stress direction.
    for (std::size_t e = 0; e < t.roles.size(); ++e) {
      const Edge& edge = fw.graph().edge(e);
      if (edge.u >= 4) t.roles[e] = EdgeRole::Cable;
    }
    CHECK(proper_stress_check(fw, t).outcome == StressSearch::Infeasible);
  }
  SUBCASE("alternating pattern on K44") {
    const auto fw = k44_c2v_phi();
    const auto os = orbit_structure(fw);
    TensegrityAssignment t;
    for (std::size_t e = 0; e < fw.graph().edge_count(); ++e) {
      t.roles.push_back(os.edge_orbit_of[e] % 2 == 0 ? EdgeRole::Cable : EdgeRole::Strut);
    }
    const auto res = proper_stress_check(fw, t);
    REQUIRE(res.outcome == StressSearch::Feasible);
    Vector alt(4);
    alt << 1, -1, 1, -1;
    CHECK((res.reduced - alt.normalized()).norm() < 1e-9);
  }
  SUBCASE("non-orbit-constant assignments are rejected") {
    const auto fw = k22_c2();
    TensegrityAssignment t{{EdgeRole::Cable, EdgeRole::Bar, EdgeRole::Bar, EdgeRole::Bar}};
    try {
      proper_stress_check(fw, t);
      FAIL("expected InvalidAssignment");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidAssignment);
    }
  }
}

TEST_CASE("symmetrizing stresses") {
  const auto fw = k44_c2v_phi(3);
  const auto os = orbit_structure(fw);
  const auto o = orbit_matrix(fw, os);
  const Matrix r = rigidity_matrix(fw.graph(), fw.config());
  const auto full = left_nullspace(r);
  REQUIRE(full.size() >= 1);

  std::mt19937_64 rng(8);
  std::normal_distribution<double> dist;
  Vector coeffs(full.size());
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) coeffs(i) = dist(rng);
  const Vector omega = full.matrix() * coeffs;
  const Vector sym = symmetrize_stress(fw, omega);
  CHECK((r.transpose() * sym).norm() < 1e-9 * std::max(1.0, sym.norm()));
  for (const auto& orbit : os.edge_orbits) {
    for (std::size_t e : orbit.edges) CHECK(sym(e) == doctest::Approx(sym(orbit.edges.front())));
  }
  const auto ls = reduced_stresses(o);
  Matrix lifted(sym.size(), ls.size());
  for (Eigen::Index j = 0; j < ls.size(); ++j) lifted.col(j) = lift_stress(o, os, ls.vector(j));
  CHECK(column_span(lifted).residual(sym) <= 1e-8 * std::max(1.0, sym.norm()));

  // Orbit-constant input scales by |S|; twice scales by |S|^2.
  const Vector twice = symmetrize_stress(fw, sym);
  CHECK((twice - 4.0 * sym).norm() < 1e-9 * std::max(1.0, twice.norm()));
  CHECK(symmetrize_stress(fw, Vector::Zero(16)).norm() == 0.0);

  try {
    symmetrize_stress(fw, Vector::Ones(16));
    FAIL("expected NotASelfStress");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotASelfStress);
  }
}
