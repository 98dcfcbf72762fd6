#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace orbitrig {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Cutoffs shared by every rank and comparison decision in the library.
// `rel` scales the largest singular value; `abs` bounds entrywise comparisons
// of coordinates and matrices.
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-9;

  // Throws InvalidMatrix unless 0 < rel < 1 and abs > 0.
  void check() const;
};

// An orthonormal basis, stored as the columns of an ambient_dim x size matrix.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  explicit SubspaceBasis(Eigen::Index ambient_dim);
  SubspaceBasis(Eigen::Index ambient_dim, Matrix columns);

  static SubspaceBasis full(Eigen::Index ambient_dim);

  Eigen::Index ambient_dim() const { return ambient_dim_; }
  Eigen::Index size() const { return basis_.cols(); }
  bool empty() const { return basis_.cols() == 0; }
  const Matrix& matrix() const { return basis_; }
  Vector vector(Eigen::Index i) const { return basis_.col(i); }

  // Orthogonal projector onto the subspace.
  Matrix projector() const;
  // ||v - P v|| for the orthogonal projector P.
  double residual(const Vector& v) const;
  bool contains(const Vector& v, double tol) const;

 private:
  Eigen::Index ambient_dim_ = 0;
  Matrix basis_;
};

// Throws InvalidMatrix if any entry is NaN or infinite.
void require_finite(const Matrix& m, const char* what = "matrix");

Eigen::Index rank(const Matrix& m, const Tolerance& tol = {});
SubspaceBasis nullspace(const Matrix& m, const Tolerance& tol = {});
SubspaceBasis left_nullspace(const Matrix& m, const Tolerance& tol = {});

// Orthonormal basis of the intersection of subspaces sharing an ambient dimension.
// Throws DimensionMismatch otherwise.
SubspaceBasis intersect(std::span<const SubspaceBasis> subspaces, const Tolerance& tol = {});

// Orthonormal basis of the column span of `m`.
SubspaceBasis column_span(const Matrix& m, const Tolerance& tol = {});

// Re-expresses a subspace with a deterministic basis: the canonical axes are
// projected onto it and orthonormalized in order. Coordinate subspaces come out
// as their own coordinate axes.
SubspaceBasis canonical_basis(const SubspaceBasis& s, const Tolerance& tol = {});

// Largest singular value (spectral norm); 0 for empty matrices.
double spectral_norm(const Matrix& m);

// Largest principal-angle residual between two subspaces: max over basis
// vectors of each of the distance to the other. Returns +inf if dims differ.
double subspace_distance(const SubspaceBasis& a, const SubspaceBasis& b);

// Stack matrices vertically; all must share a column count.
Matrix vstack(std::span<const Matrix> blocks);

// Scale to unit norm and flip so the first entry with |x| > cutoff is positive.
Vector normalized_certificate(const Vector& v, double cutoff = 1e-12);

}  // namespace orbitrig
