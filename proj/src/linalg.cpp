#include "orbitrig/linalg.hpp"

#include "orbitrig/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace orbitrig {

void Tolerance::check() const {
  if (!(rel > 0.0 && rel < 1.0) || !(abs > 0.0)) {
    throw Error(ErrorKind::InvalidMatrix, "tolerance must satisfy 0 < rel < 1 and abs > 0");
  }
}

SubspaceBasis::SubspaceBasis(Eigen::Index ambient_dim)
    : ambient_dim_(ambient_dim), basis_(ambient_dim, 0) {}

SubspaceBasis::SubspaceBasis(Eigen::Index ambient_dim, Matrix columns)
    : ambient_dim_(ambient_dim), basis_(std::move(columns)) {
  if (basis_.rows() != ambient_dim_) {
    if (basis_.cols() == 0) {
      basis_.resize(ambient_dim_, 0);
    } else {
      throw Error(ErrorKind::DimensionMismatch, "basis rows differ from ambient dimension");
    }
  }
}

SubspaceBasis SubspaceBasis::full(Eigen::Index ambient_dim) {
  return SubspaceBasis(ambient_dim, Matrix::Identity(ambient_dim, ambient_dim));
}

Matrix SubspaceBasis::projector() const {
  if (basis_.cols() == 0) return Matrix::Zero(ambient_dim_, ambient_dim_);
  return basis_ * basis_.transpose();
}

double SubspaceBasis::residual(const Vector& v) const {
  if (basis_.cols() == 0) return v.norm();
  return (v - basis_ * (basis_.transpose() * v)).norm();
}

bool SubspaceBasis::contains(const Vector& v, double tol) const {
  return residual(v) <= tol;
}

void require_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) {
    throw Error(ErrorKind::InvalidMatrix, std::string(what) + " has non-finite entries");
  }
}

namespace {

// Matrices made only of rounding residue (e.g. X - I for a product that
// landed on the identity) must not be promoted to full rank by the relative
// cutoff.
constexpr double kNoiseFloor = 1e-13;

struct Decomposition {
  Vector singular;
  Matrix u;
  Matrix v;
  Eigen::Index rank = 0;
};

Decomposition decompose(const Matrix& m, const Tolerance& tol, bool want_u, bool want_v) {
  require_finite(m);
  Decomposition d;
  if (m.rows() == 0 || m.cols() == 0) {
    if (want_u) d.u = Matrix::Identity(m.rows(), m.rows());
    if (want_v) d.v = Matrix::Identity(m.cols(), m.cols());
    return d;
  }
  unsigned options = 0;
  if (want_u) options |= Eigen::ComputeFullU;
  if (want_v) options |= Eigen::ComputeFullV;
  Eigen::JacobiSVD<Matrix> svd(m, options);
  d.singular = svd.singularValues();
  if (want_u) d.u = svd.matrixU();
  if (want_v) d.v = svd.matrixV();
  const double largest = d.singular.size() > 0 ? d.singular(0) : 0.0;
  if (largest > kNoiseFloor) {
    const double cutoff = std::max(tol.rel * largest, kNoiseFloor);
    for (Eigen::Index i = 0; i < d.singular.size(); ++i) {
      if (d.singular(i) > cutoff) ++d.rank;
    }
  }
  return d;
}

}  // namespace

Eigen::Index rank(const Matrix& m, const Tolerance& tol) {
  return decompose(m, tol, false, false).rank;
}

SubspaceBasis nullspace(const Matrix& m, const Tolerance& tol) {
  const auto d = decompose(m, tol, false, true);
  const Eigen::Index n = m.cols();
  return SubspaceBasis(n, d.v.rightCols(n - d.rank));
}

SubspaceBasis left_nullspace(const Matrix& m, const Tolerance& tol) {
  const auto d = decompose(m, tol, true, false);
  const Eigen::Index n = m.rows();
  return SubspaceBasis(n, d.u.rightCols(n - d.rank));
}

SubspaceBasis column_span(const Matrix& m, const Tolerance& tol) {
  const auto d = decompose(m, tol, true, false);
  return SubspaceBasis(m.rows(), d.u.leftCols(d.rank));
}

SubspaceBasis intersect(std::span<const SubspaceBasis> subspaces, const Tolerance& tol) {
  if (subspaces.empty()) {
    throw Error(ErrorKind::DimensionMismatch, "intersect needs at least one subspace");
  }
  const Eigen::Index n = subspaces.front().ambient_dim();
  std::vector<Matrix> complements;
  complements.reserve(subspaces.size());
  for (const auto& s : subspaces) {
    if (s.ambient_dim() != n) {
      throw Error(ErrorKind::DimensionMismatch, "intersect: subspaces live in different spaces");
    }
    complements.push_back(Matrix::Identity(n, n) - s.projector());
  }
  const Matrix stacked = vstack(complements);
  // Projectors of orthonormal bases have unit spectral norm, so an exact
  // intersection shows up as singular values at rounding level.
  if (stacked.norm() == 0.0) return SubspaceBasis::full(n);
  return nullspace(stacked, tol);
}

SubspaceBasis canonical_basis(const SubspaceBasis& s, const Tolerance& tol) {
  const Eigen::Index n = s.ambient_dim();
  const Matrix projector = s.projector();
  Matrix out(n, s.size());
  Eigen::Index found = 0;
  for (Eigen::Index axis = 0; axis < n && found < s.size(); ++axis) {
    Vector v = projector.col(axis);
    for (Eigen::Index k = 0; k < found; ++k) v -= out.col(k).dot(v) * out.col(k);
    for (Eigen::Index k = 0; k < found; ++k) v -= out.col(k).dot(v) * out.col(k);
    const double norm = v.norm();
    if (norm > std::sqrt(tol.rel)) {
      v /= norm;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(v(i)) < 1e-15) v(i) = 0.0;
      }
      out.col(found++) = v.normalized();
    }
  }
  if (found != s.size()) {
    throw Error(ErrorKind::Internal, "canonical_basis lost a direction");
  }
  return SubspaceBasis(n, out);
}

double spectral_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double subspace_distance(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.size() != b.size()) {
    return std::numeric_limits<double>::infinity();
  }
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) worst = std::max(worst, b.residual(a.vector(i)));
  for (Eigen::Index i = 0; i < b.size(); ++i) worst = std::max(worst, a.residual(b.vector(i)));
  return worst;
}

Matrix vstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) return Matrix(0, 0);
  const Eigen::Index cols = blocks.front().cols();
  Eigen::Index rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error(ErrorKind::DimensionMismatch, "vstack: column counts differ");
    rows += b.rows();
  }
  Matrix out(rows, cols);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  return out;
}

Vector normalized_certificate(const Vector& v, double cutoff) {
  const double norm = v.norm();
  if (norm == 0.0) return v;
  Vector out = v / norm;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (std::abs(out(i)) > cutoff) {
      if (out(i) < 0.0) out = -out;
      break;
    }
  }
  return out;
}

}  // namespace orbitrig
