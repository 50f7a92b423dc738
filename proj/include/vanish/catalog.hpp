#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vanish/factcheck.hpp"
#include "vanish/perm.hpp"
#include "vanish/theorems.hpp"

namespace vanish {

struct FactorisationSpec {
  std::vector<std::string> a;
  std::vector<std::string> b;
};

struct CatalogEntry {
  std::string name;
  std::size_t degree = 1;
  std::vector<std::string> generators;
  std::vector<FactorisationSpec> factorisation_specs;
  std::vector<std::string> tags;

  Group group;
  std::vector<Factorisation> factorisations;
  /// Set when the group exceeded the order cap; group is then left trivial.
  std::optional<std::string> skipped;

  bool has_tag(const std::string& tag) const;
};

struct CatalogOptions {
  std::size_t max_order = kDefaultOrderCap;
};

/// Parses and validates a catalog document. `source` names the input in
/// error messages.
std::vector<CatalogEntry> parse_catalog(const std::string& text, const std::string& source = "<catalog>",
                                        const CatalogOptions& options = {});
/// Reads a catalog file; "default" resolves to the catalog shipped with the
/// repository.
std::vector<CatalogEntry> load_catalog(const std::string& path, const CatalogOptions& options = {});
std::filesystem::path default_catalog_path();

/// Throws Error naming the entry when absent or skipped.
const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, const std::string& name);

/// Entries that were not skipped.
std::vector<HarnessEntry> harness_entries(const std::vector<CatalogEntry>& catalog);

}  // namespace vanish
