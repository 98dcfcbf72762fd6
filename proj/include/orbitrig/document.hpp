#pragma once

#include "orbitrig/constructions.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace orbitrig {

// A framework as read from or written to the JSON document format
// (1-based vertex labels, row-major matrices).
struct Document {
  SymmetricFramework framework;
  std::optional<TensegrityAssignment> tensegrity;
};

// Throws Schema for malformed JSON or missing fields, ValidationError and the
// placement errors for inconsistent content. `tolerance` overrides the
// document's own tolerance when set.
Document parse_document(const std::string& text, const std::optional<Tolerance>& tolerance = {});

std::string serialize_document(const Document& doc);

struct AnalyzeOptions {
  std::optional<Tolerance> tolerance;
  std::uint64_t seed = 0;
  bool generic = false;     // resample symmetry-generically before analysis
  bool tensegrity = false;  // run the proper-stress search
};

// JSON report; numbers rounded to 12 significant digits.
std::string analyze_report(const Document& doc, const AnalyzeOptions& options);

// Deterministic SVG of a planar framework, with optional joint velocities
// (a dn-vector). Throws Unsupported unless d = 2.
std::string draw_svg(const SymmetricFramework& fw, const std::optional<Vector>& motion = {});

// First certified fully symmetric flex lifted to every joint, if any.
std::optional<Vector> flex_motion(const SymmetricFramework& fw);

}  // namespace orbitrig
