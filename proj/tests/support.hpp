#pragma once

#include <string>
#include <vector>

#include "vanish/catalog.hpp"

namespace testing {

inline const std::vector<vanish::CatalogEntry>& shipped() {
  static const auto catalog = vanish::load_catalog("default");
  return catalog;
}

inline const vanish::CatalogEntry& entry(const std::string& name) { return vanish::find_entry(shipped(), name); }

inline vanish::Group group(const std::string& name) { return entry(name).group; }

inline vanish::Perm perm(const std::string& text, std::size_t degree) { return vanish::parse_perm(text, degree); }

}  // namespace testing
