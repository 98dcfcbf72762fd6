#include "orbitrig/document.hpp"

#include "orbitrig/errors.hpp"
#include "orbitrig/rigidity.hpp"

#include "json.hpp"

#include <charconv>
#include <cmath>
#include <set>

namespace orbitrig {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void schema(const std::string& message) { throw Error(ErrorKind::Schema, message); }

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema(where + " must be an object");
  const auto it = obj.find(key);
  if (it == obj.end()) schema(where + " is missing \"" + key + "\"");
  return *it;
}

long as_integer(const json& j, const std::string& what) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (std::isfinite(v) && std::floor(v) == v && std::abs(v) < 1e15) return static_cast<long>(v);
  }
  schema(what + " must be an integer");
}

double as_number(const json& j, const std::string& what) {
  if (!j.is_number()) schema(what + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) schema(what + " must be finite");
  return v;
}

const json& as_array(const json& j, const std::string& what) {
  if (!j.is_array()) schema(what + " must be an array");
  return j;
}

Vector as_point(const json& j, int dim, const std::string& what) {
  as_array(j, what);
  if (static_cast<int>(j.size()) != dim) {
    schema(what + " must have " + std::to_string(dim) + " coordinates");
  }
  Vector p(dim);
  for (int k = 0; k < dim; ++k) p(k) = as_number(j[k], what);
  return p;
}

Matrix as_matrix(const json& j, int dim, const std::string& what) {
  as_array(j, what);
  if (static_cast<int>(j.size()) != dim) schema(what + " must have " + std::to_string(dim) + " rows");
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const Vector row = as_point(j[i], dim, what + " row " + std::to_string(i + 1));
    m.row(i) = row.transpose();
  }
  return m;
}

std::vector<int> as_permutation(const json& j, const std::string& what) {
  as_array(j, what);
  std::vector<int> perm;
  for (const auto& v : j) perm.push_back(static_cast<int>(as_integer(v, what)) - 1);
  return perm;
}

std::pair<int, int> as_edge(const json& j, const std::string& what) {
  as_array(j, what);
  if (j.size() != 2) schema(what + " must be a pair of vertices");
  return {static_cast<int>(as_integer(j[0], what)) - 1, static_cast<int>(as_integer(j[1], what)) - 1};
}

Tolerance parse_tolerance(const json& j) {
  Tolerance tol;
  if (j.is_number()) {
    tol.rel = tol.abs = as_number(j, "tolerance");
  } else if (j.is_object()) {
    if (j.contains("rel")) tol.rel = as_number(j["rel"], "tolerance.rel");
    if (j.contains("abs")) tol.abs = as_number(j["abs"], "tolerance.abs");
  } else {
    schema("tolerance must be a number or an object");
  }
  if (!(tol.rel > 0.0 && tol.rel < 1.0) || !(tol.abs > 0.0)) {
    schema("tolerance must satisfy 0 < rel < 1 and abs > 0");
  }
  return tol;
}

PointGroup parse_group(const json& j, int dim, const Tolerance& tol) {
  if (!j.is_object()) schema("group must be an object");
  const bool named = j.contains("schoenflies");
  const bool explicit_gens = j.contains("generators");
  if (named == explicit_gens) schema("group needs exactly one of \"schoenflies\" or \"generators\"");
  if (named) {
    if (!j["schoenflies"].is_string()) schema("group.schoenflies must be a string");
    std::optional<int> order;
    if (j.contains("order")) order = static_cast<int>(as_integer(j["order"], "group.order"));
    return PointGroup::schoenflies(SchoenfliesSpec::parse(j["schoenflies"].get<std::string>(), order, dim),
                                   tol);
  }
  const auto& gens = as_array(j["generators"], "group.generators");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : as_array(j["labels"], "group.labels")) {
      if (!l.is_string()) schema("group.labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    if (labels.size() != gens.size()) schema("group.labels must match group.generators");
  }
  std::vector<GroupElement> elements;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    elements.push_back({as_matrix(gens[k], dim, "group generator " + std::to_string(k + 1)),
                        labels.empty() ? "" : labels[k]});
  }
  return PointGroup::from_generators(dim, std::move(elements), tol);
}

Action parse_action(const json& j, const PointGroup& group, int n) {
  if (!j.is_object()) schema("action must be an object");
  const bool by_gens = j.contains("generators");
  const bool by_elems = j.contains("elements");
  if (by_gens == by_elems) schema("action needs exactly one of \"generators\" or \"elements\"");
  if (by_gens) {
    std::vector<std::vector<int>> perms;
    const auto& gens = as_array(j["generators"], "action.generators");
    for (std::size_t k = 0; k < gens.size(); ++k) {
      perms.push_back(as_permutation(gens[k], "action generator " + std::to_string(k + 1)));
    }
    return action_from_generators(group, n, perms);
  }
  Action action;
  action.perms.assign(group.order(), {});
  std::vector<char> seen(group.order(), 0);
  const auto& elems = as_array(j["elements"], "action.elements");
  for (std::size_t k = 0; k < elems.size(); ++k) {
    const std::string where = "action element " + std::to_string(k + 1);
    const Matrix m = as_matrix(require(elems[k], "matrix", where), group.dim(), where + " matrix");
    const auto idx = group.find(m);
    if (!idx) schema(where + " matrix is not an element of the group");
    if (seen[*idx]) schema(where + " repeats a group element");
    seen[*idx] = 1;
    action.perms[*idx] = as_permutation(require(elems[k], "permutation", where), where);
  }
  for (std::size_t x = 0; x < group.order(); ++x) {
    if (!seen[x]) schema("action.elements has no entry for group element " + group.element(x).label);
  }
  return action;
}

Configuration parse_configuration(const json& j, int dim, int n, const PointGroup& group,
                                  const Action& action, const Tolerance& tol) {
  if (!j.is_object()) schema("configuration must be an object");
  const bool full = j.contains("full");
  const bool reps = j.contains("representatives");
  if (full == reps) schema("configuration needs exactly one of \"full\" or \"representatives\"");
  if (full) {
    const auto& pts = as_array(j["full"], "configuration.full");
    if (static_cast<int>(pts.size()) != n) {
      schema("configuration.full must list " + std::to_string(n) + " points");
    }
    Matrix m(dim, n);
    for (int i = 0; i < n; ++i) m.col(i) = as_point(pts[i], dim, "point " + std::to_string(i + 1));
    return Configuration{m};
  }
  const auto& obj = j["representatives"];
  if (!obj.is_object()) schema("configuration.representatives must be an object");
  std::map<int, Vector> positions;
  for (const auto& [key, value] : obj.items()) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
    if (ec != std::errc() || ptr != key.data() + key.size()) {
      schema("representative key '" + key + "' is not a vertex number");
    }
    positions[v - 1] = as_point(value, dim, "representative " + key);
  }
  return complete_configuration(n, group, action, positions, tol);
}

TensegrityAssignment parse_tensegrity(const json& j, const Graph& graph) {
  if (!j.is_object()) schema("tensegrity must be an object");
  TensegrityAssignment t{std::vector<EdgeRole>(graph.edge_count(), EdgeRole::Bar)};
  std::vector<Violation> violations;
  for (const auto& [key, role] : {std::pair{"cables", EdgeRole::Cable}, std::pair{"struts", EdgeRole::Strut}}) {
    if (!j.contains(key)) continue;
    for (const auto& e : as_array(j[key], std::string("tensegrity.") + key)) {
      const auto [u, v] = as_edge(e, std::string("tensegrity.") + key + " entry");
      const auto idx = (u >= 0 && v >= 0 && u < graph.vertex_count() && v < graph.vertex_count())
                           ? graph.edge_index(u, v)
                           : std::nullopt;
      Violation viol{Violation::Kind::Structure, ""};
      viol.edge_u = u + 1;
      viol.edge_v = v + 1;
      if (!idx) {
        viol.message = std::string("tensegrity ") + key + " entry {" + std::to_string(u + 1) + "," +
                       std::to_string(v + 1) + "} is not an edge";
        violations.push_back(std::move(viol));
      } else if (t.roles[*idx] != EdgeRole::Bar) {
        viol.message = "edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                       "} is listed more than once in the tensegrity";
        violations.push_back(std::move(viol));
      } else {
        t.roles[*idx] = role;
      }
    }
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return t;
}

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  double out = 0.0;
  std::from_chars(buf, res.ptr, out);
  return out == 0.0 ? 0.0 : out;
}

ojson rounded(const Vector& v) {
  ojson a = ojson::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(round12(v(i)));
  return a;
}

ojson rounded_rows(const Matrix& m) {
  ojson a = ojson::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(rounded(m.row(i).transpose()));
  return a;
}

ojson edge_json(const Edge& e) { return ojson::array({e.u + 1, e.v + 1}); }

}  // namespace

Document parse_document(const std::string& text, const std::optional<Tolerance>& tolerance) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    schema(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) schema("document must be a JSON object");

  const long dim = as_integer(require(root, "dimension", "document"), "dimension");
  if (dim < 1 || dim > 64) schema("dimension must be between 1 and 64");
  const long n = as_integer(require(root, "vertices", "document"), "vertices");
  if (n < 1 || n > 100000) schema("vertices must be between 1 and 100000");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : as_array(require(root, "edges", "document"), "edges")) {
    edges.push_back(as_edge(e, "edge"));
  }
  Graph graph(static_cast<int>(n), edges);

  Tolerance tol;
  if (root.contains("tolerance")) tol = parse_tolerance(root["tolerance"]);
  if (tolerance) tol = *tolerance;
  tol.check();

  PointGroup group = parse_group(require(root, "group", "document"), static_cast<int>(dim), tol);
  Action action = parse_action(require(root, "action", "document"), group, static_cast<int>(n));
  Configuration config = parse_configuration(require(root, "configuration", "document"),
                                             static_cast<int>(dim), static_cast<int>(n), group,
                                             action, tol);
  bool generic = false;
  if (root.contains("generic")) {
    if (!root["generic"].is_boolean()) schema("generic must be a boolean");
    generic = root["generic"].get<bool>();
  }

  Document doc{validate(std::move(graph), std::move(config), std::move(group), std::move(action), tol,
                        generic),
               std::nullopt};
  if (root.contains("tensegrity")) doc.tensegrity = parse_tensegrity(root["tensegrity"], doc.framework.graph());
  return doc;
}

std::string serialize_document(const Document& doc) {
  const auto& fw = doc.framework;
  const auto& group = fw.group();
  ojson out;
  out["dimension"] = fw.dim();
  out["vertices"] = fw.vertex_count();
  ojson edges = ojson::array();
  for (const Edge& e : fw.graph().edges()) edges.push_back(edge_json(e));
  out["edges"] = std::move(edges);

  ojson gens = ojson::array();
  ojson labels = ojson::array();
  ojson perms = ojson::array();
  for (std::size_t k = 0; k < group.generator_count(); ++k) {
    const Matrix& m = group.generators()[k].matrix;
    ojson rows = ojson::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      ojson row = ojson::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(i, c) == 0.0 ? 0.0 : m(i, c));
      rows.push_back(std::move(row));
    }
    gens.push_back(std::move(rows));
    labels.push_back(group.generators()[k].label);
    ojson perm = ojson::array();
    for (int v : fw.action().perms[group.generator_element(k)]) perm.push_back(v + 1);
    perms.push_back(std::move(perm));
  }
  out["group"] = {{"generators", std::move(gens)}, {"labels", std::move(labels)}};
  out["action"] = {{"generators", std::move(perms)}};

  ojson pts = ojson::array();
  for (int i = 0; i < fw.vertex_count(); ++i) {
    ojson p = ojson::array();
    for (int k = 0; k < fw.dim(); ++k) {
      const double c = fw.config().points(k, i);
      p.push_back(c == 0.0 ? 0.0 : c);
    }
    pts.push_back(std::move(p));
  }
  out["configuration"] = {{"full", std::move(pts)}};
  out["tolerance"] = {{"rel", fw.tolerance().rel}, {"abs", fw.tolerance().abs}};
  if (fw.generic()) out["generic"] = true;

  if (doc.tensegrity) {
    ojson cables = ojson::array();
    ojson struts = ojson::array();
    for (std::size_t e = 0; e < doc.tensegrity->roles.size(); ++e) {
      const auto role = doc.tensegrity->roles[e];
      if (role == EdgeRole::Cable) cables.push_back(edge_json(fw.graph().edge(e)));
      if (role == EdgeRole::Strut) struts.push_back(edge_json(fw.graph().edge(e)));
    }
    out["tensegrity"] = {{"cables", std::move(cables)}, {"struts", std::move(struts)}};
  }
  return out.dump(2) + "\n";
}

namespace {

ojson verdict_json(const Verdict& v) {
  ojson out;
  out["rule"] = v.rule;
  out["conclusion"] = to_string(v.conclusion);
  out["detail"] = v.detail;
  ojson hyp = ojson::object();
  for (const auto& [name, value] : v.hypotheses) hyp[name] = value;
  out["hypotheses"] = std::move(hyp);
  if (v.conclusion == Conclusion::FlexCertified) out["finite_mechanism"] = v.finite_mechanism;
  if (v.rule == "maxwell") out["stress_guaranteed"] = v.stress_guaranteed;
  return out;
}

}  // namespace

std::string analyze_report(const Document& input, const AnalyzeOptions& options) {
  std::vector<std::string> warnings;
  SymmetricFramework fw = input.framework;
  if (options.tolerance) fw = validate(fw.graph(), fw.config(), fw.group(), fw.action(), *options.tolerance, fw.generic());
  if (options.generic) {
    fw = resample(fw, options.seed);
    warnings.push_back("configuration resampled symmetry-generically with seed " +
                       std::to_string(options.seed));
  }
  if (!fw.spanning()) {
    warnings.push_back(
        "joints do not affinely span the space; m counts fully symmetric motions of the complete "
        "graph rather than trivial motions only");
  }

  const auto os = orbit_structure(fw);
  const auto o = orbit_matrix(fw, os);
  const auto mob = mobility(fw);
  const auto k = counts(os, mob);
  const auto fixed = fixed_counts(fw);
  const auto rank_report = rank_verdict(fw, o, mob);
  if (rank_report.flexes.clamped) {
    warnings.push_back("dim ker O is below m; fully symmetric flex dimension clamped to 0");
  }

  ojson out;
  out["framework"] = {{"dimension", fw.dim()},
                      {"vertices", fw.vertex_count()},
                      {"edges", fw.graph().edge_count()},
                      {"group_order", fw.group().order()},
                      {"generic", fw.generic()},
                      {"spanning", fw.spanning()}};
  out["counts"] = {{"r", k.r}, {"c", k.c}, {"m", k.m}};
  out["rank"] = rank_report.rank;
  out["dims"] = {{"kernel", rank_report.flexes.kernel_dim},
                 {"fully_symmetric_flexes", rank_report.flexes.flex_dim},
                 {"fully_symmetric_stresses", rank_report.stress_dim}};

  ojson fixed_json = ojson::array();
  for (std::size_t x = 0; x < fixed.size(); ++x) {
    fixed_json.push_back({{"element", fw.group().element(x).label},
                          {"joints", fixed[x].joints},
                          {"bars", fixed[x].bars}});
  }
  out["fixed_counts"] = std::move(fixed_json);

  ojson reps = ojson::array();
  for (std::size_t i = 0; i < os.vertex_reps.size(); ++i) {
    reps.push_back({{"vertex", os.vertex_reps[i] + 1}, {"columns", os.width(i)}});
  }
  ojson rows = ojson::array();
  for (const auto& meta : o.row_meta) {
    ojson members = ojson::array();
    for (std::size_t e : meta.orbit.edges) members.push_back(edge_json(fw.graph().edge(e)));
    rows.push_back({{"a", meta.orbit.a + 1},
                    {"x", fw.group().element(meta.orbit.x).label},
                    {"b", meta.orbit.b + 1},
                    {"case", to_string(meta.kind)},
                    {"alpha", meta.alpha},
                    {"edges", std::move(members)}});
  }
  out["orbits"] = {{"vertex_representatives", std::move(reps)}, {"edge_orbits", std::move(rows)}};
  out["orbit_matrix"] = rounded_rows(o.matrix);

  ojson verdicts = ojson::array();
  verdicts.push_back(verdict_json(maxwell_verdict(k, fw.generic())));
  for (const auto& v : special_counting_verdicts(fw, k, fixed)) verdicts.push_back(verdict_json(v));
  verdicts.push_back(verdict_json(rank_report.verdict));
  out["verdicts"] = std::move(verdicts);

  ojson flexes = ojson::array();
  const auto flex_basis = canonical_basis(rank_report.flexes.certificates, fw.tolerance());
  for (Eigen::Index j = 0; j < flex_basis.size(); ++j) {
    const Vector reduced = normalized_certificate(flex_basis.vector(j));
    flexes.push_back({{"reduced", rounded(reduced)},
                      {"lifted", rounded(normalized_certificate(lift_motion(fw, os, reduced)))}});
  }
  ojson stresses = ojson::array();
  const auto stress_basis = canonical_basis(rank_report.stresses, fw.tolerance());
  for (Eigen::Index j = 0; j < stress_basis.size(); ++j) {
    const Vector reduced = normalized_certificate(stress_basis.vector(j));
    stresses.push_back({{"reduced", rounded(reduced)},
                        {"lifted", rounded(normalized_certificate(lift_stress(o, os, reduced)))}});
  }
  out["certificates"] = {{"flexes", std::move(flexes)}, {"stresses", std::move(stresses)}};

  if (options.tensegrity) {
    TensegrityAssignment assignment =
        input.tensegrity ? *input.tensegrity
                         : TensegrityAssignment{std::vector<EdgeRole>(fw.graph().edge_count(), EdgeRole::Bar)};
    if (!input.tensegrity) warnings.push_back("no tensegrity in the document; every edge treated as a bar");
    const auto ps = proper_stress_check(fw, assignment, options.seed);
    ojson t;
    t["outcome"] = to_string(ps.outcome);
    t["method"] = ps.method;
    t["kernel_dim"] = ps.kernel_dim;
    t["margin"] = round12(ps.margin);
    t["underlying_rigid"] = ps.underlying_rigid;
    t["tensegrity_rigid"] = ps.underlying_rigid && ps.outcome == StressSearch::Feasible;
    if (ps.outcome == StressSearch::Feasible) {
      t["witness"] = {{"reduced", rounded(ps.reduced)}, {"lifted", rounded(ps.lifted)}};
    }
    out["tensegrity"] = std::move(t);
  }
  out["warnings"] = warnings;
  return out.dump(2) + "\n";
}

std::optional<Vector> flex_motion(const SymmetricFramework& fw) {
  const auto os = orbit_structure(fw);
  const auto o = orbit_matrix(fw, os);
  const auto summary = flex_summary(o, mobility(fw), fw.tolerance());
  if (summary.flex_dim == 0 || summary.certificates.empty()) return std::nullopt;
  const auto basis = canonical_basis(summary.certificates, fw.tolerance());
  // Strip the rigid-motion component; the trivial space is group invariant, so the
  // projection stays fully symmetric and remains a non-trivial flex.
  const Vector lifted = lift_motion(fw, os, normalized_certificate(basis.vector(0)));
  const auto trivial = trivial_motions(fw.config(), fw.tolerance());
  return normalized_certificate(lifted - trivial.projector() * lifted);
}

namespace {

std::string num(double v) {
  if (std::abs(v) < 5e-7) v = 0.0;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 6);
  std::string s(buf, res.ptr);
  // Trim trailing zeros for compactness; the output stays locale-neutral.
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s == "-0" ? "0" : s;
}

}  // namespace

std::string draw_svg(const SymmetricFramework& fw, const std::optional<Vector>& motion) {
  if (fw.dim() != 2) throw Error(ErrorKind::Unsupported, "drawing needs a planar framework");
  const int n = fw.vertex_count();
  const Matrix& p = fw.config().points;
  if (motion && motion->size() != 2 * n) {
    throw Error(ErrorKind::DimensionMismatch, "motion length differs from 2n");
  }

  // Model coordinates with y flipped so the picture reads like a plot.
  Eigen::Vector2d lo(0, 0), hi(0, 0);
  if (n > 0) {
    lo = p.rowwise().minCoeff();
    hi = p.rowwise().maxCoeff();
  }
  lo = lo.cwiseMin(Eigen::Vector2d::Zero());
  hi = hi.cwiseMax(Eigen::Vector2d::Zero());
  double diag = (hi - lo).norm();
  if (!(diag > 0.0)) diag = 1.0;
  const double pad = 0.2 * diag;
  const double x0 = lo(0) - pad, y0 = -hi(1) - pad;
  const double w = hi(0) - lo(0) + 2 * pad, h = hi(1) - lo(1) + 2 * pad;
  const double stroke = 0.006 * diag;
  const double radius = 0.018 * diag;
  const double width_px = 480.0;
  const double height_px = width_px * h / w;

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width_px) +
       "\" height=\"" + num(height_px) + "\" viewBox=\"" + num(x0) + " " + num(y0) + " " + num(w) +
       " " + num(h) + "\">\n";
  s += "<style>.bar{stroke:#222;stroke-width:" + num(stroke) +
       "}.mirror{stroke:#888;stroke-width:" + num(stroke * 0.6) + ";stroke-dasharray:" +
       num(4 * stroke) + " " + num(3 * stroke) + "}.velocity{stroke:#999;stroke-width:" +
       num(stroke) + "}.joint{fill:#fff;stroke:#222;stroke-width:" + num(stroke * 0.8) +
       "}.center{fill:#222}.label{font-family:sans-serif;font-size:" + num(3 * radius) +
       "px;fill:#444}</style>\n";

  std::vector<std::pair<Eigen::Vector2d, Eigen::Vector2d>> arrows;
  if (motion) {
    double longest = 0.0;
    for (int i = 0; i < n; ++i) longest = std::max(longest, motion->segment(2 * i, 2).norm());
    if (longest > 1e-12) {
      const double scale = 0.15 * diag / longest;
      for (int i = 0; i < n; ++i) {
        const Eigen::Vector2d u = motion->segment(2 * i, 2);
        if (u.norm() <= 1e-9 * longest) continue;
        arrows.emplace_back(p.col(i), Eigen::Vector2d(p.col(i)) + scale * u);
      }
    }
  }
  if (!arrows.empty()) {
    s += "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"5\" "
         "markerHeight=\"5\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#999\"/></marker></defs>\n";
  }

  const auto& group = fw.group();
  const double reach = diag + pad;
  bool rotation = false;
  for (std::size_t x = 0; x < group.order(); ++x) {
    const Matrix& m = group.matrix(x);
    if (x == group.identity()) continue;
    if (is_reflection(m, fw.tolerance())) {
      const Vector dir = fixed_subspace(m, fw.tolerance()).vector(0);
      s += "<line class=\"mirror\" x1=\"" + num(-reach * dir(0)) + "\" y1=\"" + num(reach * dir(1)) +
           "\" x2=\"" + num(reach * dir(0)) + "\" y2=\"" + num(-reach * dir(1)) + "\"/>\n";
    } else if (m.determinant() > 0) {
      rotation = true;
    }
  }
  for (const Edge& e : fw.graph().edges()) {
    s += "<line class=\"bar\" x1=\"" + num(p(0, e.u)) + "\" y1=\"" + num(-p(1, e.u)) + "\" x2=\"" +
         num(p(0, e.v)) + "\" y2=\"" + num(-p(1, e.v)) + "\"/>\n";
  }
  for (const auto& [from, to] : arrows) {
    s += "<line class=\"velocity\" x1=\"" + num(from(0)) + "\" y1=\"" + num(-from(1)) + "\" x2=\"" +
         num(to(0)) + "\" y2=\"" + num(-to(1)) + "\" marker-end=\"url(#arrow)\"/>\n";
  }
  if (rotation) {
    s += "<circle class=\"center\" cx=\"0\" cy=\"0\" r=\"" + num(radius * 0.6) + "\"/>\n";
  }
  for (int i = 0; i < n; ++i) {
    s += "<circle class=\"joint\" cx=\"" + num(p(0, i)) + "\" cy=\"" + num(-p(1, i)) + "\" r=\"" +
         num(radius) + "\"/>\n";
    s += "<text class=\"label\" x=\"" + num(p(0, i) + 1.5 * radius) + "\" y=\"" +
         num(-p(1, i) - 1.5 * radius) + "\">" + std::to_string(i + 1) + "</text>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace orbitrig
