#include "orbitrig/symmetry.hpp"

#include "orbitrig/errors.hpp"

#include <cctype>
#include <cmath>
#include <deque>
#include <numbers>

namespace orbitrig {

namespace {

double snap(double v) {
  for (double target : {0.0, 1.0, -1.0, 0.5, -0.5}) {
    if (std::abs(v - target) < 1e-15) return target;
  }
  return v;
}

std::string label_from_word(const std::vector<std::size_t>& word,
                            const std::vector<GroupElement>& generators) {
  if (word.empty()) return "Id";
  std::string out;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t run = 1;
    while (i + run < word.size() && word[i + run] == word[i]) ++run;
    out += generators[word[i]].label;
    if (run > 1) out += "^" + std::to_string(run);
    i += run;
  }
  return out;
}

}  // namespace

SchoenfliesSpec SchoenfliesSpec::parse(const std::string& name, std::optional<int> order, int dim) {
  SchoenfliesSpec spec;
  spec.dim = dim;
  if (dim < 1) throw Error(ErrorKind::Schema, "dimension must be positive");
  if (name == "C1" || name == "trivial" || name == "Id") {
    spec.family = SchoenfliesFamily::Trivial;
    return spec;
  }
  if (name == "Cs") {
    spec.family = SchoenfliesFamily::Cs;
    spec.order = 2;
    return spec;
  }
  if (name.size() < 2 || name[0] != 'C') {
    throw Error(ErrorKind::Schema, "unrecognized Schoenflies name '" + name + "'");
  }
  std::size_t pos = 1;
  int m = 0;
  if (name[pos] == 'm') {
    if (!order) throw Error(ErrorKind::Schema, "group '" + name + "' needs an \"order\"");
    m = *order;
    ++pos;
  } else {
    while (pos < name.size() && std::isdigit(static_cast<unsigned char>(name[pos]))) {
      m = m * 10 + (name[pos] - '0');
      ++pos;
      if (m > 100000) throw Error(ErrorKind::Schema, "rotation order too large");
    }
    if (pos == 1) throw Error(ErrorKind::Schema, "unrecognized Schoenflies name '" + name + "'");
    if (order && *order != m) {
      throw Error(ErrorKind::Schema, "\"order\" disagrees with group name '" + name + "'");
    }
  }
  const std::string suffix = name.substr(pos);
  if (suffix.empty()) {
    spec.family = SchoenfliesFamily::Cm;
  } else if (suffix == "v") {
    spec.family = SchoenfliesFamily::Cmv;
  } else if (suffix == "h") {
    spec.family = SchoenfliesFamily::Cmh;
  } else {
    throw Error(ErrorKind::Schema, "unrecognized Schoenflies name '" + name + "'");
  }
  if (m < 1) throw Error(ErrorKind::Schema, "rotation order must be at least 1");
  if (m == 1 && spec.family == SchoenfliesFamily::Cm) {
    spec.family = SchoenfliesFamily::Trivial;
    return spec;
  }
  if (m < 2) throw Error(ErrorKind::Schema, "rotation order must be at least 2");
  spec.order = m;
  if (dim < 2) throw Error(ErrorKind::Schema, "rotational groups need dimension >= 2");
  if (spec.family == SchoenfliesFamily::Cmh && dim < 3) {
    throw Error(ErrorKind::Schema, "Cmh needs dimension >= 3");
  }
  return spec;
}

std::string SchoenfliesSpec::name() const {
  switch (family) {
    case SchoenfliesFamily::Trivial: return "C1";
    case SchoenfliesFamily::Cs: return "Cs";
    case SchoenfliesFamily::Cm: return "C" + std::to_string(order);
    case SchoenfliesFamily::Cmv: return "C" + std::to_string(order) + "v";
    case SchoenfliesFamily::Cmh: return "C" + std::to_string(order) + "h";
  }
  return "?";
}

Matrix rotation_matrix(int dim, int m) {
  if (dim < 2) throw Error(ErrorKind::InvalidGenerator, "rotation needs dimension >= 2");
  Matrix r = Matrix::Identity(dim, dim);
  const double angle = 2.0 * std::numbers::pi / m;
  r(0, 0) = snap(std::cos(angle));
  r(0, 1) = snap(-std::sin(angle));
  r(1, 0) = snap(std::sin(angle));
  r(1, 1) = snap(std::cos(angle));
  return r;
}

Matrix reflection_matrix(int dim, int axis) {
  Matrix s = Matrix::Identity(dim, dim);
  s(axis, axis) = -1.0;
  return s;
}

bool is_orthogonal(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m.transpose() * m - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

namespace {
bool is_involution_with_minus_block(const Matrix& m, Eigen::Index minus_dim, const Tolerance& tol) {
  const Eigen::Index d = m.rows();
  if (d != m.cols() || d < minus_dim) return false;
  if (!is_orthogonal(m, tol.abs)) return false;
  const Matrix id = Matrix::Identity(d, d);
  if ((m * m - id).cwiseAbs().maxCoeff() > tol.abs) return false;
  return rank(m - id, tol) == minus_dim && rank(m + id, tol) == d - minus_dim;
}
}  // namespace

bool is_half_turn(const Matrix& m, const Tolerance& tol) {
  return is_involution_with_minus_block(m, 2, tol);
}

bool is_reflection(const Matrix& m, const Tolerance& tol) {
  return is_involution_with_minus_block(m, 1, tol);
}

PointGroup PointGroup::trivial(int dim) {
  return from_generators(dim, {});
}

PointGroup PointGroup::schoenflies(const SchoenfliesSpec& spec, const Tolerance& tol) {
  const int d = spec.dim;
  std::vector<GroupElement> gens;
  const std::string rot = "C" + std::to_string(spec.order);
  switch (spec.family) {
    case SchoenfliesFamily::Trivial:
      break;
    case SchoenfliesFamily::Cs:
      gens.push_back({reflection_matrix(d, 0), "s"});
      break;
    case SchoenfliesFamily::Cm:
      gens.push_back({rotation_matrix(d, spec.order), rot});
      break;
    case SchoenfliesFamily::Cmv:
      gens.push_back({rotation_matrix(d, spec.order), rot});
      gens.push_back({reflection_matrix(d, 1), "s"});
      break;
    case SchoenfliesFamily::Cmh:
      if (d < 3) throw Error(ErrorKind::InvalidGenerator, "Cmh needs dimension >= 3");
      gens.push_back({rotation_matrix(d, spec.order), rot});
      gens.push_back({reflection_matrix(d, 2), "s"});
      break;
  }
  return from_generators(d, std::move(gens), tol);
}

PointGroup PointGroup::from_generators(int dim, std::vector<GroupElement> generators,
                                       const Tolerance& tol) {
  tol.check();
  if (dim < 1) throw Error(ErrorKind::InvalidGenerator, "dimension must be positive");
  PointGroup g;
  g.dim_ = dim;
  g.abs_tol_ = tol.abs;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    auto& gen = generators[i];
    require_finite(gen.matrix, "generator");
    if (gen.matrix.rows() != dim || gen.matrix.cols() != dim) {
      throw Error(ErrorKind::InvalidGenerator, "generator " + std::to_string(i) + " is not " +
                                                   std::to_string(dim) + "x" + std::to_string(dim));
    }
    if (!is_orthogonal(gen.matrix, tol.abs)) {
      throw Error(ErrorKind::InvalidGenerator, "generator " + std::to_string(i) + " is not orthogonal");
    }
    if (gen.label.empty()) gen.label = "g" + std::to_string(i + 1);
  }
  g.generators_ = generators;
  g.elements_.push_back({Matrix::Identity(dim, dim), "Id"});
  g.words_.push_back({});

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t e = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < generators.size(); ++k) {
      Matrix candidate = generators[k].matrix * g.elements_[e].matrix;
      if (g.find(candidate)) continue;
      if (g.elements_.size() >= kMaxOrder) {
        throw Error(ErrorKind::GroupNotFinite, "generated group exceeds " +
                                                   std::to_string(kMaxOrder) + " elements");
      }
      std::vector<std::size_t> word{k};
      word.insert(word.end(), g.words_[e].begin(), g.words_[e].end());
      g.elements_.push_back({std::move(candidate), label_from_word(word, generators)});
      g.words_.push_back(std::move(word));
      queue.push_back(g.elements_.size() - 1);
    }
  }

  for (const auto& gen : generators) g.generator_index_.push_back(*g.find(gen.matrix));

  const std::size_t n = g.elements_.size();
  g.mult_.assign(n, std::vector<std::size_t>(n, 0));
  g.inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto idx = g.find(g.elements_[a].matrix * g.elements_[b].matrix);
      if (!idx) throw Error(ErrorKind::GroupNotFinite, "product left the generated set");
      g.mult_[a][b] = *idx;
    }
    const auto inv = g.find(g.elements_[a].matrix.transpose());
    if (!inv) throw Error(ErrorKind::GroupNotFinite, "inverse left the generated set");
    g.inverse_[a] = *inv;
  }
  return g;
}

std::optional<std::size_t> PointGroup::find(const Matrix& m) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if ((elements_[i].matrix - m).cwiseAbs().maxCoeff() <= abs_tol_) return i;
  }
  return std::nullopt;
}

PointGroup PointGroup::embedded_one_dimension_up() const {
  PointGroup up = *this;
  up.dim_ = dim_ + 1;
  auto extend = [this](const Matrix& m) {
    Matrix out = Matrix::Identity(dim_ + 1, dim_ + 1);
    out.topLeftCorner(dim_, dim_) = m;
    return out;
  };
  for (auto& e : up.elements_) e.matrix = extend(e.matrix);
  for (auto& e : up.generators_) e.matrix = extend(e.matrix);
  return up;
}

SubspaceBasis fixed_subspace(const Matrix& x, const Tolerance& tol) {
  const Eigen::Index d = x.rows();
  return canonical_basis(nullspace(x - Matrix::Identity(d, d), tol), tol);
}

std::vector<std::size_t> stabilizer(const PointGroup& group, const Action& action, int vertex) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < group.order(); ++x) {
    if (action.image(x, vertex) == vertex) out.push_back(x);
  }
  return out;
}

SubspaceBasis joint_subspace(const PointGroup& group,
                             const std::vector<std::size_t>& stabilizer_elements,
                             const Vector& point, const Tolerance& tol) {
  const int d = group.dim();
  SubspaceBasis u = SubspaceBasis::full(d);
  if (stabilizer_elements.size() > 1) {
    std::vector<SubspaceBasis> fixed;
    for (std::size_t x : stabilizer_elements) {
      if (x == group.identity()) continue;
      fixed.push_back(fixed_subspace(group.matrix(x), tol));
    }
    u = canonical_basis(intersect(fixed, tol), tol);
  }
  const double scale = std::max(1.0, point.norm());
  if (!u.contains(point, tol.abs * scale)) {
    throw Error(ErrorKind::InconsistentConfiguration,
                "joint does not lie in the subspace fixed by its stabilizer");
  }
  return u;
}

}  // namespace orbitrig
