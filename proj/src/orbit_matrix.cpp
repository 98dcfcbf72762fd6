#include "orbitrig/orbit_matrix.hpp"

#include "orbitrig/errors.hpp"

#include <algorithm>

namespace orbitrig {

const char* to_string(RowCase c) {
  switch (c) {
    case RowCase::DistinctOrbits: return "distinct-orbits";
    case RowCase::SameOrbit: return "same-orbit";
    case RowCase::SameOrbitPalindromic: return "same-orbit-palindromic";
  }
  return "?";
}

namespace {

int common_stabilizer_size(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  int count = 0;
  for (std::size_t x : a) {
    if (std::binary_search(b.begin(), b.end(), x)) ++count;
  }
  return count;
}

}  // namespace

OrbitMatrix orbit_matrix(const SymmetricFramework& fw, const OrbitStructure& os) {
  const auto& group = fw.group();
  const auto& action = fw.action();
  const auto& tol = fw.tolerance();

  OrbitMatrix o;
  for (std::size_t i = 0; i < os.vertex_reps.size(); ++i) {
    o.column_meta.push_back({os.vertex_reps[i], os.column_offset[i], os.joint_bases[i].size(),
                             os.joint_bases[i]});
  }
  o.matrix = Matrix::Zero(static_cast<Eigen::Index>(os.rows()), os.columns());

  for (std::size_t k = 0; k < os.edge_orbits.size(); ++k) {
    const EdgeOrbit& eo = os.edge_orbits[k];
    const auto row = static_cast<Eigen::Index>(k);
    const int pa = os.rep_position[eo.a];
    const int pb = os.rep_position[eo.b];
    const Matrix& x = group.matrix(eo.x);
    const Vector p_a = fw.config().point(eo.a);
    const Vector p_b = fw.config().point(eo.b);
    const auto& stab_a = os.stabilizers[pa];
    const int partner = action.image(eo.x, eo.b);
    const auto stab_partner = stabilizer(group, action, partner);

    RowMeta meta;
    meta.orbit = eo;
    meta.alpha = common_stabilizer_size(stab_a, stab_partner);
    if (!eo.same_orbit) {
      const Vector block_a = p_a - x * p_b;
      const Vector block_b = p_b - x.transpose() * p_a;
      o.matrix.block(row, os.column_offset[pa], 1, os.width(pa)) =
          block_a.transpose() * os.joint_bases[pa].matrix();
      o.matrix.block(row, os.column_offset[pb], 1, os.width(pb)) =
          block_b.transpose() * os.joint_bases[pb].matrix();
      meta.kind = RowCase::DistinctOrbits;
    } else {
      const Vector forward = x * p_a;
      const Vector backward = x.transpose() * p_a;
      const Vector block = 2.0 * p_a - forward - backward;
      o.matrix.block(row, os.column_offset[pa], 1, os.width(pa)) =
          block.transpose() * os.joint_bases[pa].matrix();
      const double scale = std::max(1.0, p_a.norm());
      meta.kind = (forward - backward).norm() <= tol.abs * scale ? RowCase::SameOrbitPalindromic
                                                                 : RowCase::SameOrbit;
      // The bar families {a, x(a)} and {a, x^{-1}(a)} coincide iff some
      // stabilizer element of a carries x(a) to x^{-1}(a).
      const int back = action.image(group.inverse(eo.x), eo.a);
      const bool merged = std::any_of(stab_a.begin(), stab_a.end(), [&](std::size_t y) {
        return action.image(y, partner) == back;
      });
      if (merged) meta.alpha *= 2;
    }
    o.row_meta.push_back(std::move(meta));
  }
  return o;
}

SubspaceBasis reduced_flexes(const OrbitMatrix& o, const Tolerance& tol) {
  return nullspace(o.matrix, tol);
}

SubspaceBasis reduced_stresses(const OrbitMatrix& o, const Tolerance& tol) {
  return left_nullspace(o.matrix, tol);
}

Vector lift_motion(const SymmetricFramework& fw, const OrbitStructure& os, const Vector& reduced) {
  if (reduced.size() != os.columns()) {
    throw Error(ErrorKind::DimensionMismatch, "reduced motion length differs from column count");
  }
  const int d = fw.dim();
  const int n = fw.vertex_count();
  const auto& group = fw.group();
  Vector u = Vector::Zero(static_cast<Eigen::Index>(d) * n);
  std::vector<char> set(n, 0);
  for (std::size_t i = 0; i < os.vertex_reps.size(); ++i) {
    const int rep = os.vertex_reps[i];
    const Vector u_rep =
        os.joint_bases[i].matrix() * reduced.segment(os.column_offset[i], os.width(i));
    for (std::size_t x = 0; x < group.order(); ++x) {
      const int v = fw.action().image(x, rep);
      const Vector image = group.matrix(x) * u_rep;
      auto block = u.segment(static_cast<Eigen::Index>(v) * d, d);
      if (set[v]) {
        const double scale = std::max(1.0, image.norm());
        if ((block - image).norm() > 1e-6 * scale) {
          throw Error(ErrorKind::Internal, "lifted motion disagrees across witnesses");
        }
        continue;
      }
      block = image;
      set[v] = 1;
    }
  }
  return u;
}

Vector lift_stress(const OrbitMatrix& o, const OrbitStructure& os, const Vector& reduced) {
  if (reduced.size() != o.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "reduced stress length differs from row count");
  }
  Vector w(static_cast<Eigen::Index>(os.edge_orbit_of.size()));
  for (std::size_t e = 0; e < os.edge_orbit_of.size(); ++e) {
    const std::size_t k = os.edge_orbit_of[e];
    w(static_cast<Eigen::Index>(e)) = o.row_meta[k].alpha * reduced(static_cast<Eigen::Index>(k));
  }
  return w;
}

Mobility mobility(const SymmetricFramework& fw) {
  const auto complete = fw.with_graph(Graph::complete(fw.vertex_count()));
  const auto os = orbit_structure(complete);
  const auto o = orbit_matrix(complete, os);
  Mobility mob;
  mob.kernel = reduced_flexes(o, fw.tolerance());
  mob.m = mob.kernel.size();
  mob.spanning = fw.spanning();
  return mob;
}

FlexSummary flex_summary(const OrbitMatrix& o, const Mobility& mob, const Tolerance& tol) {
  FlexSummary s;
  s.kernel_dim = reduced_flexes(o, tol).size();
  s.mobility = mob.m;
  s.clamped = s.kernel_dim < mob.m;
  s.flex_dim = s.clamped ? 0 : s.kernel_dim - mob.m;
  if (mob.kernel.ambient_dim() != o.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "mobility kernel does not match orbit matrix columns");
  }
  if (mob.kernel.empty()) {
    s.certificates = reduced_flexes(o, tol);
  } else {
    const Matrix kt = mob.kernel.matrix().transpose();
    // Scale the orthogonality rows to the orbit matrix so the relative cutoff
    // treats both constraints alike.
    const double weight = std::max(1.0, spectral_norm(o.matrix));
    const Matrix stacked[] = {o.matrix, weight * kt};
    s.certificates = nullspace(vstack(stacked), tol);
  }
  return s;
}

}  // namespace orbitrig
