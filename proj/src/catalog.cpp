#include "vanish/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#ifndef VANISH_DEFAULT_CATALOG
#define VANISH_DEFAULT_CATALOG "catalog/default.json"
#endif

namespace vanish {

using nlohmann::json;

bool CatalogEntry::has_tag(const std::string& tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

namespace {

std::string line_context(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n');
  const auto start = text.rfind('\n', byte == 0 ? 0 : byte - 1);
  const auto from = start == std::string::npos ? 0 : start + 1;
  auto to = text.find('\n', from);
  if (to == std::string::npos) to = text.size();
  return "line " + std::to_string(line) + ", column " + std::to_string(byte - from + 1) + ": " +
         text.substr(from, to - from);
}

std::vector<std::string> string_list(const json& node, const std::string& field) {
  if (!node.is_array()) throw Error("field '" + field + "' must be a list of strings");
  std::vector<std::string> out;
  for (const auto& item : node) {
    if (!item.is_string()) throw Error("field '" + field + "' must be a list of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<Perm> parse_all(const std::vector<std::string>& texts, std::size_t degree) {
  std::vector<Perm> out;
  for (const auto& t : texts) out.push_back(parse_perm(t, degree));
  return out;
}

CatalogEntry parse_entry(const json& node, const CatalogOptions& options) {
  CatalogEntry e;
  if (!node.is_object()) throw Error("entry must be an object");
  if (!node.contains("name") || !node["name"].is_string()) throw Error("entry without a string 'name'");
  e.name = node["name"].get<std::string>();
  try {
    if (!node.contains("degree") || !node["degree"].is_number_unsigned() || node["degree"].get<std::size_t>() == 0)
      throw Error("'degree' must be a positive integer");
    e.degree = node["degree"].get<std::size_t>();
    e.generators = string_list(node.value("generators", json::array()), "generators");
    if (node.contains("tags")) e.tags = string_list(node["tags"], "tags");
    if (node.contains("factorisations")) {
      if (!node["factorisations"].is_array()) throw Error("'factorisations' must be a list");
      for (const auto& f : node["factorisations"]) {
        if (!f.is_object() || !f.contains("A") || !f.contains("B"))
          throw Error("factorisation needs fields 'A' and 'B'");
        e.factorisation_specs.push_back({string_list(f["A"], "A"), string_list(f["B"], "B")});
      }
    }
    e.group = Group::generate(parse_all(e.generators, e.degree), e.degree, options.max_order);
    for (std::size_t i = 0; i < e.factorisation_specs.size(); ++i) {
      const auto& spec = e.factorisation_specs[i];
      const auto a = subgroup_generated(e.group, parse_all(spec.a, e.degree));
      const auto b = subgroup_generated(e.group, parse_all(spec.b, e.degree));
      try {
        e.factorisations.push_back(make_factorisation(e.group, a, b));
      } catch (const Error& ex) {
        throw Error("factorisation " + std::to_string(i) + ": " + ex.what());
      }
    }
  } catch (const CapExceeded& ex) {
    e.group = Group();
    e.factorisations.clear();
    e.skipped = ex.what();
  } catch (const Error& ex) {
    throw Error("entry '" + e.name + "': " + ex.what());
  }
  return e;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(const std::string& text, const std::string& source,
                                        const CatalogOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw ParseError(source + ": JSON parse error at " + line_context(text, ex.byte == 0 ? 0 : ex.byte - 1));
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
    throw ParseError(source + ": expected an object with an 'entries' list");
  std::vector<CatalogEntry> out;
  std::set<std::string> names;
  for (const auto& node : doc["entries"]) {
    auto e = parse_entry(node, options);
    if (!names.insert(e.name).second) throw Error(source + ": duplicate entry name '" + e.name + "'");
    out.push_back(std::move(e));
  }
  return out;
}

std::filesystem::path default_catalog_path() { return VANISH_DEFAULT_CATALOG; }

std::vector<CatalogEntry> load_catalog(const std::string& path, const CatalogOptions& options) {
  const std::filesystem::path file = path == "default" ? default_catalog_path() : std::filesystem::path(path);
  std::ifstream in(file);
  if (!in) throw Error("cannot open catalog " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str(), file.filename().string(), options);
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, const std::string& name) {
  for (const auto& e : catalog) {
    if (e.name != name) continue;
    if (e.skipped) throw CapExceeded("entry '" + name + "' skipped: " + *e.skipped);
    return e;
  }
  throw Error("unknown catalog entry '" + name + "'");
}

std::vector<HarnessEntry> harness_entries(const std::vector<CatalogEntry>& catalog) {
  std::vector<HarnessEntry> out;
  for (const auto& e : catalog)
    if (!e.skipped) out.push_back({e.name, e.group, e.factorisations});
  return out;
}

}  // namespace vanish
