#pragma once

#include "orbitrig/framework.hpp"

namespace orbitrig {

// |E| x dn; row k holds (p_i - p_j)^T in block i and (p_j - p_i)^T in block j
// for edge k = {i, j}. Throws DegenerateEdge if p_i and p_j coincide.
Matrix rigidity_matrix(const Graph& graph, const Configuration& config, const Tolerance& tol = {});

// Translations and infinitesimal rotations evaluated at p, orthonormalized.
SubspaceBasis trivial_motions(const Configuration& config, const Tolerance& tol = {});

enum class Isostatic { Yes, No, Unsupported };

// Unsupported when n < d + 1, where only the complete-graph special case applies.
Isostatic is_isostatic(const Graph& graph, const Configuration& config, const Tolerance& tol = {});

// Averaging operator (P u)_i = (1/|S|) sum_x X^{-1} u_{Phi(x)(i)} on R^{dn}.
Matrix symmetrizer(const SymmetricFramework& fw);

// 0/1 matrix |E| x r with entry (e, k) = 1 iff edge e lies in edge orbit k.
Matrix orbit_indicator(const SymmetricFramework& fw, const OrbitStructure& os);

// ker R intersected with the fixed space of the symmetrizer. Brute-force
// reference for the orbit-matrix kernel lift.
SubspaceBasis symmetric_motion_space(const SymmetricFramework& fw);

// Orbit-constant self-stresses. Brute-force reference for the left-kernel lift.
SubspaceBasis symmetric_stress_space(const SymmetricFramework& fw);

}  // namespace orbitrig
