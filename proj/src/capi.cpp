#include "orbitrig/orbitrig.h"

#include "orbitrig/constructions.hpp"
#include "orbitrig/document.hpp"
#include "orbitrig/errors.hpp"

#include "json.hpp"

#include <cstring>
#include <new>

struct orbitrig_framework {
  orbitrig::Document doc;
};

namespace {

using orbitrig::ErrorKind;
using ojson = nlohmann::ordered_json;

thread_local std::string last_message;
thread_local std::string last_detail = "{}";

orbitrig_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Schema:
    case ErrorKind::InvalidMatrix:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::InvalidGenerator:
    case ErrorKind::GroupNotFinite:
    case ErrorKind::InvalidAssignment:
      return ORBITRIG_SCHEMA;
    case ErrorKind::Validation:
    case ErrorKind::InconsistentConfiguration:
    case ErrorKind::InconsistentPlacement:
    case ErrorKind::AmbiguousPlacement:
    case ErrorKind::DegenerateEdge:
    case ErrorKind::NotASelfStress:
      return ORBITRIG_VALIDATION;
    case ErrorKind::Unsupported:
      return ORBITRIG_UNSUPPORTED;
    case ErrorKind::UnknownName:
      return ORBITRIG_NOT_FOUND;
    case ErrorKind::SamplingFailed:
    case ErrorKind::Internal:
      return ORBITRIG_INTERNAL;
  }
  return ORBITRIG_INTERNAL;
}

const char* status_name(orbitrig_status s) {
  switch (s) {
    case ORBITRIG_OK: return "ok";
    case ORBITRIG_SCHEMA: return "schema";
    case ORBITRIG_VALIDATION: return "validation";
    case ORBITRIG_INTERNAL: return "internal";
    case ORBITRIG_UNSUPPORTED: return "unsupported";
    case ORBITRIG_NOT_FOUND: return "not-found";
    case ORBITRIG_ARGUMENT: return "argument";
  }
  return "internal";
}

orbitrig_status fail(orbitrig_status status, const char* kind, const std::string& message,
                     ojson violations = ojson::array()) {
  last_message = message;
  ojson detail;
  detail["status"] = status_name(status);
  detail["kind"] = kind;
  detail["message"] = message;
  detail["violations"] = std::move(violations);
  last_detail = detail.dump();
  return status;
}

orbitrig_status succeed() {
  last_message.clear();
  last_detail = "{}";
  return ORBITRIG_OK;
}

// Runs body and converts every exception into a status with recorded detail.
template <typename F>
orbitrig_status guarded(F&& body) {
  try {
    body();
    return succeed();
  } catch (const orbitrig::ValidationError& e) {
    ojson list = ojson::array();
    for (const auto& v : e.violations()) {
      ojson item;
      item["kind"] = orbitrig::to_string(v.kind);
      item["message"] = v.message;
      if (v.element >= 0) item["element"] = v.element;
      if (v.vertex >= 0) item["vertex"] = v.vertex;
      if (v.edge_u >= 0) item["edge"] = ojson::array({v.edge_u, v.edge_v});
      if (v.residual != 0.0) item["residual"] = v.residual;
      list.push_back(std::move(item));
    }
    return fail(ORBITRIG_VALIDATION, orbitrig::to_string(e.kind()), e.what(), std::move(list));
  } catch (const orbitrig::Error& e) {
    return fail(status_of(e.kind()), orbitrig::to_string(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ORBITRIG_INTERNAL, "OutOfMemory", "out of memory");
  } catch (const std::exception& e) {
    return fail(ORBITRIG_INTERNAL, "Internal", e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

orbitrig_status null_argument(const char* name) {
  return fail(ORBITRIG_ARGUMENT, "Argument", std::string(name) + " must not be null");
}

}  // namespace

extern "C" {

const char* orbitrig_version(void) { return "1.0.0"; }

void orbitrig_analyze_options_init(orbitrig_analyze_options* options) {
  if (!options) return;
  options->tolerance = 0.0;
  options->seed = 0;
  options->generic = 0;
  options->tensegrity = 0;
}

orbitrig_status orbitrig_parse(const char* json, orbitrig_framework** out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new orbitrig_framework{orbitrig::parse_document(json)}; });
}

orbitrig_status orbitrig_example(const char* name, uint64_t seed, orbitrig_framework** out) {
  if (!name) return null_argument("name");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    auto ex = orbitrig::catalog(name, {}, seed);
    *out = new orbitrig_framework{orbitrig::Document{std::move(ex.framework), std::move(ex.tensegrity)}};
  });
}

void orbitrig_free(orbitrig_framework* fw) { delete fw; }

orbitrig_status orbitrig_to_json(const orbitrig_framework* fw, char** out) {
  if (!fw) return null_argument("framework");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = copy_string(orbitrig::serialize_document(fw->doc)); });
}

orbitrig_status orbitrig_cone(const orbitrig_framework* fw, double height, orbitrig_framework** out) {
  if (!fw) return null_argument("framework");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    orbitrig::Document coned{orbitrig::cone(fw->doc.framework, height), fw->doc.tensegrity};
    // Apex edges are appended after the original ones and act as bars.
    if (coned.tensegrity) {
      coned.tensegrity->roles.resize(coned.framework.graph().edge_count(), orbitrig::EdgeRole::Bar);
    }
    *out = new orbitrig_framework{std::move(coned)};
  });
}

orbitrig_status orbitrig_counts_of(const orbitrig_framework* fw, orbitrig_counts* out) {
  if (!fw) return null_argument("framework");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto k = orbitrig::counts(fw->doc.framework);
    out->r = k.r;
    out->c = k.c;
    out->m = k.m;
    out->spanning = k.spanning ? 1 : 0;
  });
}

orbitrig_status orbitrig_analyze(const orbitrig_framework* fw, const orbitrig_analyze_options* options,
                                 char** out) {
  if (!fw) return null_argument("framework");
  if (!out) return null_argument("out");
  *out = nullptr;
  orbitrig::AnalyzeOptions opts;
  if (options) {
    if (options->tolerance > 0.0) {
      if (!(options->tolerance < 1.0)) {
        return fail(ORBITRIG_ARGUMENT, "Argument", "tolerance must lie in (0, 1)");
      }
      opts.tolerance = orbitrig::Tolerance{options->tolerance, options->tolerance};
    }
    opts.seed = options->seed;
    opts.generic = options->generic != 0;
    opts.tensegrity = options->tensegrity != 0;
  }
  return guarded([&] { *out = copy_string(orbitrig::analyze_report(fw->doc, opts)); });
}

orbitrig_status orbitrig_draw_svg(const orbitrig_framework* fw, int with_flex, char** out) {
  if (!fw) return null_argument("framework");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const auto& framework = fw->doc.framework;
    if (framework.dim() != 2) {
      throw orbitrig::Error(ErrorKind::Unsupported, "drawing needs a planar framework");
    }
    const auto motion = with_flex ? orbitrig::flex_motion(framework) : std::nullopt;
    *out = copy_string(orbitrig::draw_svg(framework, motion));
  });
}

orbitrig_status orbitrig_catalog_list(char** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    ojson list = ojson::array();
    for (const auto& entry : orbitrig::catalog_entries()) {
      list.push_back({{"name", entry.name},
                      {"summary", entry.summary},
                      {"parameters", entry.parameters},
                      {"defaults", entry.defaults}});
    }
    *out = copy_string(list.dump(2) + "\n");
  });
}

void orbitrig_string_free(char* s) { std::free(s); }

const char* orbitrig_last_error(void) { return last_message.c_str(); }

const char* orbitrig_last_error_detail(void) { return last_detail.c_str(); }

}  // extern "C"
