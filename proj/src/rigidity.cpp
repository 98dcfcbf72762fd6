#include "orbitrig/rigidity.hpp"

#include "orbitrig/errors.hpp"

#include <string>

namespace orbitrig {

Matrix rigidity_matrix(const Graph& graph, const Configuration& config, const Tolerance& tol) {
  const int d = config.dim();
  if (config.size() != graph.vertex_count()) {
    throw Error(ErrorKind::DimensionMismatch, "configuration size differs from vertex count");
  }
  Matrix r = Matrix::Zero(static_cast<Eigen::Index>(graph.edge_count()),
                          static_cast<Eigen::Index>(d) * graph.vertex_count());
  for (std::size_t k = 0; k < graph.edge_count(); ++k) {
    const Edge& e = graph.edge(k);
    const Vector diff = config.points.col(e.u) - config.points.col(e.v);
    const double scale = std::max({1.0, config.points.col(e.u).norm(), config.points.col(e.v).norm()});
    if (diff.norm() <= tol.abs * scale) {
      throw Error(ErrorKind::DegenerateEdge, "edge {" + std::to_string(e.u + 1) + "," +
                                                 std::to_string(e.v + 1) +
                                                 "} joins coincident points");
    }
    const auto row = static_cast<Eigen::Index>(k);
    r.block(row, static_cast<Eigen::Index>(e.u) * d, 1, d) = diff.transpose();
    r.block(row, static_cast<Eigen::Index>(e.v) * d, 1, d) = -diff.transpose();
  }
  return r;
}

SubspaceBasis trivial_motions(const Configuration& config, const Tolerance& tol) {
  const int d = config.dim();
  const int n = config.size();
  const Eigen::Index dn = static_cast<Eigen::Index>(d) * n;
  Matrix fields = Matrix::Zero(dn, d + d * (d - 1) / 2);
  Eigen::Index col = 0;
  for (int k = 0; k < d; ++k, ++col) {
    for (int i = 0; i < n; ++i) fields(static_cast<Eigen::Index>(i) * d + k, col) = 1.0;
  }
  for (int k = 0; k < d; ++k) {
    for (int l = k + 1; l < d; ++l, ++col) {
      for (int i = 0; i < n; ++i) {
        const Eigen::Index base = static_cast<Eigen::Index>(i) * d;
        fields(base + k, col) = config.points(l, i);
        fields(base + l, col) = -config.points(k, i);
      }
    }
  }
  return column_span(fields, tol);
}

Isostatic is_isostatic(const Graph& graph, const Configuration& config, const Tolerance& tol) {
  const long d = config.dim();
  const long n = graph.vertex_count();
  if (n < d + 1) return Isostatic::Unsupported;
  const long target = d * n - d * (d + 1) / 2;
  if (static_cast<long>(graph.edge_count()) != target) return Isostatic::No;
  return rank(rigidity_matrix(graph, config, tol), tol) == target ? Isostatic::Yes : Isostatic::No;
}

Matrix symmetrizer(const SymmetricFramework& fw) {
  const int d = fw.dim();
  const int n = fw.vertex_count();
  const auto& group = fw.group();
  Matrix p = Matrix::Zero(static_cast<Eigen::Index>(d) * n, static_cast<Eigen::Index>(d) * n);
  const double weight = 1.0 / static_cast<double>(group.order());
  for (std::size_t x = 0; x < group.order(); ++x) {
    const Matrix inv = group.matrix(x).transpose() * weight;
    for (int i = 0; i < n; ++i) {
      const int j = fw.action().image(x, i);
      p.block(static_cast<Eigen::Index>(i) * d, static_cast<Eigen::Index>(j) * d, d, d) += inv;
    }
  }
  return p;
}

Matrix orbit_indicator(const SymmetricFramework& fw, const OrbitStructure& os) {
  Matrix e = Matrix::Zero(static_cast<Eigen::Index>(fw.graph().edge_count()),
                          static_cast<Eigen::Index>(os.rows()));
  for (std::size_t k = 0; k < fw.graph().edge_count(); ++k) {
    e(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(os.edge_orbit_of[k])) = 1.0;
  }
  return e;
}

SubspaceBasis symmetric_motion_space(const SymmetricFramework& fw) {
  const Matrix r = rigidity_matrix(fw.graph(), fw.config(), fw.tolerance());
  const Matrix p = symmetrizer(fw);
  const Matrix stacked[] = {r, p - Matrix::Identity(p.rows(), p.cols())};
  return nullspace(vstack(stacked), fw.tolerance());
}

SubspaceBasis symmetric_stress_space(const SymmetricFramework& fw) {
  const Matrix r = rigidity_matrix(fw.graph(), fw.config(), fw.tolerance());
  const Matrix e = orbit_indicator(fw, orbit_structure(fw));
  const Matrix reduced = r.transpose() * e;
  const SubspaceBasis w = nullspace(reduced, fw.tolerance());
  if (w.empty()) return SubspaceBasis(r.rows());
  return column_span(e * w.matrix(), fw.tolerance());
}

}  // namespace orbitrig
