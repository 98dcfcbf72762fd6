#pragma once

#include "orbitrig/orbit_matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orbitrig {

struct Counts {
  Eigen::Index r = 0;  // edge orbits
  Eigen::Index c = 0;  // sum of dim U(p_i) over vertex reps
  Eigen::Index m = 0;  // fully symmetric motions of K_n
  bool spanning = true;
};

Counts counts(const SymmetricFramework& fw);
Counts counts(const OrbitStructure& os, const Mobility& mob);

enum class Conclusion { FlexCertified, NoFlexAtThisConfig, Inconclusive, NotApplicable };

const char* to_string(Conclusion c);

struct Verdict {
  std::string rule;
  Conclusion conclusion = Conclusion::Inconclusive;
  std::string detail;
  // Integer quantities the rule was evaluated on, in evaluation order.
  std::vector<std::pair<std::string, long>> hypotheses;
  // Maxwell only: r > c - m forces a fully symmetric self-stress.
  bool stress_guaranteed = false;
  // Set when a flex is certified at a configuration that is generic by
  // construction or assertion; a finite symmetry-preserving mechanism follows.
  bool finite_mechanism = false;
  std::optional<Vector> certificate;  // reduced flex, unit norm
};

Verdict maxwell_verdict(const Counts& counts, bool generic = false);

// The rule whose group shape and dimension match `fw`, if any; not-applicable
// when the edge count differs from the rule's.
std::vector<Verdict> special_counting_verdicts(const SymmetricFramework& fw, const Counts& counts,
                                               const std::vector<FixedCount>& fixed);

struct RankReport {
  Verdict verdict;
  FlexSummary flexes;
  Eigen::Index rank = 0;
  Eigen::Index stress_dim = 0;  // dim ker O^T
  SubspaceBasis stresses;       // ker O^T
};

RankReport rank_verdict(const SymmetricFramework& fw, const OrbitMatrix& o, const Mobility& mob);
RankReport rank_verdict(const SymmetricFramework& fw);

enum class EdgeRole { Bar, Cable, Strut };

const char* to_string(EdgeRole r);

// One role per edge of the graph, in Graph::edges() order.
struct TensegrityAssignment {
  std::vector<EdgeRole> roles;
};

enum class StressSearch { Feasible, Infeasible, NotFound };

const char* to_string(StressSearch s);

struct ProperStress {
  StressSearch outcome = StressSearch::Infeasible;
  std::string method;       // "vertex-enumeration", "sampling" or "unconstrained"
  Eigen::Index kernel_dim = 0;
  double margin = 0.0;      // min over constrained edges of sign * omega_e / ||omega||_inf
  Vector reduced;           // witness in ker O^T, empty unless feasible
  Vector lifted;            // witness on every edge
  bool underlying_rigid = false;
};

// Looks for a fully symmetric self-stress positive on cables and negative on
// struts. Throws InvalidAssignment unless roles are constant on edge orbits.
ProperStress proper_stress_check(const SymmetricFramework& fw, const TensegrityAssignment& assignment,
                                 std::uint64_t seed = 1);

// (sigma omega)_e = sum_x omega_{Phi(x)(e)}. Throws NotASelfStress unless
// omega^T R vanishes within tolerance.
Vector symmetrize_stress(const SymmetricFramework& fw, const Vector& omega);

}  // namespace orbitrig
