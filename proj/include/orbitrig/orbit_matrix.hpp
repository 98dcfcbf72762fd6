#pragma once

#include "orbitrig/framework.hpp"

#include <string>

namespace orbitrig {

enum class RowCase { DistinctOrbits, SameOrbit, SameOrbitPalindromic };

const char* to_string(RowCase c);

struct RowMeta {
  EdgeOrbit orbit;
  RowCase kind = RowCase::DistinctOrbits;
  int alpha = 1;  // lifted stress on the orbit = alpha * reduced entry
};

struct ColumnMeta {
  int rep = 0;
  Eigen::Index offset = 0;
  Eigen::Index width = 0;
  SubspaceBasis basis;
};

struct OrbitMatrix {
  Matrix matrix;
  std::vector<RowMeta> row_meta;
  std::vector<ColumnMeta> column_meta;

  Eigen::Index rows() const { return matrix.rows(); }
  Eigen::Index cols() const { return matrix.cols(); }
};

// One row per edge orbit, one column block of width c_i = dim U(p_i) per
// vertex rep, built from the normal forms and bases stored in `os`.
OrbitMatrix orbit_matrix(const SymmetricFramework& fw, const OrbitStructure& os);

// ker O.
SubspaceBasis reduced_flexes(const OrbitMatrix& o, const Tolerance& tol = {});

// ker O^T.
SubspaceBasis reduced_stresses(const OrbitMatrix& o, const Tolerance& tol = {});

// u_rep = M_rep u~_rep, then u_{Phi(x)(rep)} = X u_rep. Returns a dn-vector.
Vector lift_motion(const SymmetricFramework& fw, const OrbitStructure& os, const Vector& reduced);

// omega_e = alpha_k * (omega~)_k for every edge e in orbit k.
Vector lift_stress(const OrbitMatrix& o, const OrbitStructure& os, const Vector& reduced);

// Fully symmetric motions of the complete graph on the same joints, in the
// same reduced coordinates as the framework's orbit matrix.
struct Mobility {
  Eigen::Index m = 0;
  SubspaceBasis kernel;  // ker O(K_n)
  bool spanning = true;  // false: kernel holds K_n motions that are not all trivial
};

Mobility mobility(const SymmetricFramework& fw);

struct FlexSummary {
  Eigen::Index kernel_dim = 0;
  Eigen::Index mobility = 0;
  Eigen::Index flex_dim = 0;  // max(0, kernel_dim - mobility)
  bool clamped = false;       // kernel_dim < mobility: tolerance noise
  // ker O intersected with the orthogonal complement of ker O(K_n).
  SubspaceBasis certificates;
};

FlexSummary flex_summary(const OrbitMatrix& o, const Mobility& mob, const Tolerance& tol = {});

}  // namespace orbitrig
