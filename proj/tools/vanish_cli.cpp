#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vanish/catalog.hpp"
#include "vanish/chartab.hpp"
#include "vanish/factcheck.hpp"
#include "vanish/numtheory.hpp"
#include "vanish/report.hpp"
#include "vanish/structure.hpp"
#include "vanish/theorems.hpp"

using namespace vanish;
using nlohmann::json;

namespace {

struct Options {
  std::string catalog = "default";
  std::size_t max_order = kDefaultOrderCap;
  std::size_t max_subgroups = kDefaultSubgroupCap;
  std::string json_path;
  std::string entry;
  std::string fact = "0";
  std::vector<std::string> theorems{"all"};
  std::vector<std::string> entries;
  bool audit = false;
  bool timings = false;
};

struct Result {
  std::string text;
  json payload;
  int exit_code = 0;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_sizes(const std::vector<std::size_t>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

Factorisation select_fact(const CatalogEntry& e, const std::string& which) {
  if (which == "trivial") return trivial_factorisation(e.group);
  std::size_t i = 0;
  try {
    i = std::stoul(which);
  } catch (const std::exception&) {
    throw Error("--fact expects an index or 'trivial', got '" + which + "'");
  }
  if (i >= e.factorisations.size())
    throw Error("entry '" + e.name + "' has " + std::to_string(e.factorisations.size()) + " factorisations");
  return e.factorisations[i];
}

Result cmd_info(const CatalogEntry& e) {
  const auto classes = conjugacy_classes(e.group);
  const auto r = predicates(e.group);
  std::ostringstream out;
  out << "entry: " << e.name << "\norder: " << e.group.order() << "\ndegree: " << e.degree
      << "\nclasses: " << classes.count() << "\nexponent: " << classes.exponent << "\nabelian: " << yes_no(r.is_abelian)
      << "\nnilpotent: " << yes_no(r.is_nilpotent) << "\nsupersoluble: " << yes_no(r.is_supersoluble)
      << "\nsoluble: " << yes_no(r.is_soluble) << "\n|Z(G)|: " << r.center.order() << "\n|G'|: " << r.derived.order()
      << "\n|F(G)|: " << r.fitting.order() << "\n|F2(G)|: " << r.fitting2.order()
      << "\nchief factors: " << join_sizes(r.chief.factor_orders, " ") << '\n';
  for (const auto& p : r.primes) {
    out << "p=" << p.p << ": |P|=" << p.sylow.order() << " |O_p|=" << p.o_p.order() << " |O_p'|=" << p.o_pprime.order()
        << " p-nilpotent=" << yes_no(p.is_p_nilpotent) << " p-supersoluble=" << yes_no(p.is_p_supersoluble)
        << " p-length=" << (p.p_length ? std::to_string(*p.p_length) : "-") << '\n';
  }
  json payload = to_json(r);
  payload["entry"] = e.name;
  payload["order"] = e.group.order();
  payload["class_count"] = classes.count();
  return {out.str(), payload, 0};
}

Result cmd_chartab(const CatalogEntry& e) {
  const auto t = character_table(e.group);
  return {render_table(t), to_json(t), 0};
}

Result cmd_vanishing(const CatalogEntry& e) {
  const auto classes = conjugacy_classes(e.group);
  const auto t = character_table(e.group, classes);
  const auto prof = vanishing_profile(e.group, t);
  const auto primes = prime_divisors(e.group.order());
  std::vector<std::array<std::string, 6>> rows{{"class", "rep", "order", "index", "ppo", "p-regular for"}};
  for (std::size_t k = 0; k < classes.count(); ++k) {
    if (!prof.class_vanishing(k)) continue;
    const auto ord = classes.rep_orders[k];
    std::vector<std::size_t> regular;
    for (auto p : primes)
      if (ord % p != 0) regular.push_back(p);
    rows.push_back({std::to_string(k), classes.reps[k].to_cycles(), std::to_string(ord), std::to_string(classes.sizes[k]),
                    is_prime_power(ord) ? "yes" : "no", regular.empty() ? "-" : join_sizes(regular, ",")});
  }
  std::array<std::size_t, 6> width{};
  for (const auto& r : rows)
    for (std::size_t c = 0; c < 6; ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream out;
  out << "entry: " << e.name << "\nvanishing classes: " << rows.size() - 1 << " of " << classes.count()
      << "\nvanishing elements: " << prof.vanishing_elements.size() << " of " << e.group.order() << "\n\n";
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < 6; ++c) {
      out << r[c];
      if (c < 5) out << std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << '\n';
  }
  auto payload = to_json(e.group, classes, prof);
  payload["entry"] = e.name;
  return {out.str(), payload, 0};
}

Result cmd_check_core(const CatalogEntry& e, const Options& opt) {
  const auto f = select_fact(e, opt.fact);
  const auto v = is_core_factorisation(f);
  const auto w = chief_witness(f);
  std::ostringstream out;
  out << "entry: " << e.name << "\nfactorisation: " << opt.fact << "\n|G|=" << f.g.order() << " |A|=" << f.a.order()
      << " |B|=" << f.b.order() << " |A n B|=" << intersection(f.a, f.b).order()
      << "\ncore-factorisation: " << yes_no(v.holds) << '\n';
  if (w) {
    out << "witness labels: " << std::string(w->labels.begin(), w->labels.end())
        << "\nwitness factor orders: " << join_sizes(w->series.factor_orders, " ") << '\n';
  }
  if (v.failing_k) out << "failing K: order " << v.failing_k->order() << " generated by " << [&] {
      std::string gens;
      for (const auto& x : v.failing_k->generators()) gens += (gens.empty() ? "" : " ") + x.to_cycles();
      return gens.empty() ? std::string("()") : gens;
    }() << '\n';
  auto payload = to_json(v, w);
  payload["entry"] = e.name;
  payload["factorisation"] = opt.fact;
  return {out.str(), payload, 0};
}

Result cmd_permutability(const CatalogEntry& e, const Options& opt) {
  const auto f = select_fact(e, opt.fact);
  const auto p = permutability(f, opt.max_subgroups);
  std::ostringstream out;
  out << "entry: " << e.name << "\nfactorisation: " << opt.fact << "\nmutually permutable: " << yes_no(p.mutual)
      << "\ntotally permutable: " << yes_no(p.total) << "\ntcc-permutable: " << yes_no(p.tcc) << '\n';
  auto payload = to_json(p);
  payload["entry"] = e.name;
  payload["factorisation"] = opt.fact;
  return {out.str(), payload, 0};
}

Result cmd_verify(const std::vector<CatalogEntry>& catalog, const Options& opt) {
  std::vector<CatalogEntry> chosen;
  if (opt.entries.empty()) {
    chosen = catalog;
  } else {
    for (const auto& name : opt.entries) {
      const auto it = std::find_if(catalog.begin(), catalog.end(), [&](const CatalogEntry& e) { return e.name == name; });
      if (it == catalog.end()) throw Error("unknown catalog entry '" + name + "'");
      chosen.push_back(*it);
    }
  }
  auto report = run_harness(harness_entries(chosen), opt.theorems, {opt.audit, opt.timings});
  for (const auto& e : chosen)
    if (e.skipped) report.skipped.emplace_back(e.name, *e.skipped);
  return {render_report(report), to_json(report), report.failures.empty() ? 0 : 1};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Core-factorisations and vanishing elements of finite permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--catalog", opt.catalog, "Catalog file, or 'default'")->capture_default_str();
  app.add_option("--max-order", opt.max_order, "Largest group order accepted")->capture_default_str();
  app.add_option("--max-subgroup-order", opt.max_subgroups, "Largest group whose subgroups are enumerated")
      ->capture_default_str();
  app.add_option("--json", opt.json_path, "Also write a JSON report to this path");

  auto add_entry_cmd = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("entry", opt.entry, "Catalog entry name")->required();
    return sub;
  };
  add_entry_cmd("info", "Order, classes and structural predicates");
  add_entry_cmd("chartab", "Character table");
  add_entry_cmd("vanishing", "Vanishing classes with their indices");
  auto* core = add_entry_cmd("check-core", "Decide core-factorisation and emit a chief witness");
  core->add_option("--fact", opt.fact, "Factorisation index or 'trivial'")->capture_default_str();
  auto* perm = add_entry_cmd("permutability", "Mutual, total and tcc-permutability");
  perm->add_option("--fact", opt.fact, "Factorisation index or 'trivial'")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "Run the theorem harness over the catalog");
  verify->add_option("--theorems", opt.theorems, "Theorem ids, or 'all'")->delimiter(',')->capture_default_str();
  verify->add_option("--entries", opt.entries, "Restrict to these entries")->delimiter(',');
  verify->add_flag("--audit", opt.audit, "Evaluate conclusions even when the hypothesis fails");
  verify->add_flag("--timings", opt.timings, "Record per-check wall time (output no longer deterministic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Result result;
  try {
    const auto catalog = load_catalog(opt.catalog, {opt.max_order});
    const auto* sub = app.get_subcommands().front();
    const auto name = sub->get_name();
    if (name == "verify") {
      result = cmd_verify(catalog, opt);
    } else {
      const auto& e = find_entry(catalog, opt.entry);
      if (name == "info") result = cmd_info(e);
      if (name == "chartab") result = cmd_chartab(e);
      if (name == "vanishing") result = cmd_vanishing(e);
      if (name == "check-core") result = cmd_check_core(e, opt);
      if (name == "permutability") result = cmd_permutability(e, opt);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  std::cout << result.text;
  if (!opt.json_path.empty()) {
    ReportDoc doc;
    doc.command.assign(argv + 1, argv + argc);
    doc.payload = result.payload;
    doc.exit_code = result.exit_code;
    std::ofstream out(opt.json_path);
    if (!out) {
      std::cerr << "error: cannot write " << opt.json_path << '\n';
      return 2;
    }
    out << to_json(doc).dump(2) << '\n';
  }
  return result.exit_code;
}
