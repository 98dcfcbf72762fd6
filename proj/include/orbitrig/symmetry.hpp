#pragma once

#include "orbitrig/linalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace orbitrig {

struct GroupElement {
  Matrix matrix;
  std::string label;
};

enum class SchoenfliesFamily { Trivial, Cs, Cm, Cmv, Cmh };

struct SchoenfliesSpec {
  SchoenfliesFamily family = SchoenfliesFamily::Trivial;
  int order = 1;  // rotation order m; unused for Cs and Trivial
  int dim = 2;

  // Accepts "C1", "Cs", "Cm"/"Cmv"/"Cmh" (order from `order`), or the
  // concrete forms "C3", "C2v", "C3h". Throws Schema on malformed names.
  static SchoenfliesSpec parse(const std::string& name, std::optional<int> order, int dim);
  std::string name() const;
};

// A finite subgroup of O(d), closed under products, element 0 is the identity.
// Elements are enumerated breadth-first from the generators; `word(i)` lists
// generator positions g_0 g_1 ... with matrix(i) = G_0 * G_1 * ...
class PointGroup {
 public:
  static constexpr std::size_t kMaxOrder = 10000;

  static PointGroup from_generators(int dim, std::vector<GroupElement> generators,
                                    const Tolerance& tol = {});
  static PointGroup schoenflies(const SchoenfliesSpec& spec, const Tolerance& tol = {});
  static PointGroup trivial(int dim);

  int dim() const { return dim_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t identity() const { return 0; }

  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(std::size_t i) const { return elements_.at(i); }
  const Matrix& matrix(std::size_t i) const { return elements_.at(i).matrix; }

  // Index of X_a * X_b.
  std::size_t multiply(std::size_t a, std::size_t b) const { return mult_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }

  std::size_t generator_count() const { return generators_.size(); }
  // Generators as supplied (before deduplication), with their element index.
  const std::vector<GroupElement>& generators() const { return generators_; }
  std::size_t generator_element(std::size_t g) const { return generator_index_[g]; }
  const std::vector<std::size_t>& word(std::size_t i) const { return words_.at(i); }

  std::optional<std::size_t> find(const Matrix& m) const;

  // This group with every matrix extended by a trailing 1 on the diagonal.
  PointGroup embedded_one_dimension_up() const;

 private:
  int dim_ = 0;
  double abs_tol_ = 1e-9;
  std::vector<GroupElement> elements_;
  std::vector<GroupElement> generators_;
  std::vector<std::size_t> generator_index_;
  std::vector<std::vector<std::size_t>> words_;
  std::vector<std::vector<std::size_t>> mult_;
  std::vector<std::size_t> inverse_;
};

// Rotation by 2*pi/m in the (x1, x2) plane of R^d.
Matrix rotation_matrix(int dim, int m);
// Reflection negating coordinate `axis` (0-based).
Matrix reflection_matrix(int dim, int axis);

bool is_orthogonal(const Matrix& m, double tol);
// Orthogonal involution acting as -1 on exactly a 2-plane.
bool is_half_turn(const Matrix& m, const Tolerance& tol = {});
// Orthogonal involution acting as -1 on exactly one direction.
bool is_reflection(const Matrix& m, const Tolerance& tol = {});

// F_x = { a : X a = a }.
SubspaceBasis fixed_subspace(const Matrix& x, const Tolerance& tol = {});

// Permutations of 0-based vertex labels, one per group element (index aligned
// with PointGroup::elements()).
struct Action {
  std::vector<std::vector<int>> perms;
  // Per-generator permutations as supplied, when the action was built from
  // generators; checked against `perms` during validation.
  std::optional<std::vector<std::vector<int>>> generator_perms;

  int image(std::size_t element, int vertex) const { return perms[element][vertex]; }
  int vertex_count() const { return perms.empty() ? 0 : static_cast<int>(perms.front().size()); }
};

// Elements x with Phi(x)(vertex) = vertex, ascending; always starts with the identity.
std::vector<std::size_t> stabilizer(const PointGroup& group, const Action& action, int vertex);

// Basis M_i of U(p_i): the intersection of F_x over `stabilizer_elements`.
// A trivial stabilizer gives the canonical basis of R^d. Throws
// InconsistentConfiguration when `point` is not inside U.
SubspaceBasis joint_subspace(const PointGroup& group,
                             const std::vector<std::size_t>& stabilizer_elements,
                             const Vector& point, const Tolerance& tol = {});

}  // namespace orbitrig
