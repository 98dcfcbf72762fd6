#pragma once

#include "orbitrig/predict.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbitrig {

// Embeds fw in R^{d+1} (new coordinate 0), extends every group matrix by a 1
// on the new diagonal slot and adds an apex at (0, ..., 0, height) joined to
// every joint and fixed by every group element.
SymmetricFramework cone(const SymmetricFramework& fw, double height = 1.0);

struct CatalogEntry {
  std::string name;
  std::string summary;
  std::vector<std::string> parameters;  // symbolic coordinates; empty for sampled entries
  std::vector<double> defaults;
};

const std::vector<CatalogEntry>& catalog_entries();
std::vector<std::string> catalog_names();

struct Example {
  SymmetricFramework framework;
  std::optional<TensegrityAssignment> tensegrity;
};

// Throws UnknownName for unknown entries and Schema when `params` has the
// wrong length. Sampled entries use `seed` and are marked generic.
Example catalog(const std::string& name, const std::vector<double>& params = {},
                std::uint64_t seed = 1);

}  // namespace orbitrig
