#pragma once

/// \file catalog.hpp
/// Named test fields: H-convex C^2 fields used by the verification suites and a few
/// non-convex ones for negative checks.

#include <string>
#include <vector>

#include "hma/field.hpp"

namespace hma {

struct CatalogEntry {
  std::string name;
  ScalarField field;
  bool h_convex = false;
  /// True when the field has a singular point (excluded from its domain).
  bool singular = false;
};

/// The full registry, in a fixed order.
const std::vector<CatalogEntry>& catalog();

/// Entries with h_convex == true and no singular point.
std::vector<CatalogEntry> h_convex_catalog();

/// h_convex_catalog() plus a translated and rescaled copy of each member: twice as many
/// H-convex fields.
std::vector<CatalogEntry> extended_h_convex_catalog();

/// Lookup by name; throws std::out_of_range for unknown names.
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace hma
