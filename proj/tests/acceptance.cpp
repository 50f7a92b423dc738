// One line per acceptance criterion; exit status is the number of failures.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracle/brute_chartab.hpp"
#include "vanish/catalog.hpp"
#include "vanish/chartab.hpp"
#include "vanish/factcheck.hpp"
#include "vanish/numtheory.hpp"
#include "vanish/report.hpp"
#include "vanish/structure.hpp"
#include "vanish/theorems.hpp"

using namespace vanish;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

const std::vector<CatalogEntry>& catalog() {
  static const auto c = load_catalog("default");
  return c;
}

std::vector<Factorisation> every_factorisation() {
  std::vector<Factorisation> out;
  for (const auto& e : catalog()) {
    out.push_back(trivial_factorisation(e.group));
    for (const auto& f : e.factorisations) out.push_back(f);
  }
  return out;
}

Perm pt(const std::string& s, std::size_t degree) { return parse_perm(s, degree); }

void sym4_c2_fixture(Check& c) {
  const auto& f = find_entry(catalog(), "example-2.4").factorisations.at(0);
  c.require(f.g.order() == 48 && f.a.order() == 8 && f.b.order() == 12 && intersection(f.a, f.b).order() == 2,
            "orders 48/8/12/2");
  c.require(is_core_factorisation(f).holds, "core-factorisation");
  const auto w = chief_witness(f);
  c.require(w.has_value() && verify_witness(f, *w).ok(), "verified chief witness");
  const auto n = subgroup_generated(f.g, {pt("(1,2,3,4)", 6), pt("(1,2)", 6)});
  const auto na = intersection(n, f.a).with_parent(n);
  const auto nb = intersection(n, f.b).with_parent(n);
  c.require(is_prefactorised(f, n) && na.order() == 4 && nb.order() == 6, "Sym(4) prefactorised 4*6");
  const auto v = is_core_factorisation(make_factorisation(n, na, nb));
  c.require(!v.holds && v.failing_k && v.failing_k->order() == 1, "inner factorisation fails at K = 1");
  const auto p = permutability(f);
  c.require(!p.mutual && !p.tcc, "neither mutually nor tcc-permutable");
}

void factor_vanishing(Check& c) {
  const auto& e = find_entry(catalog(), "example-2.4");
  const auto& f = e.factorisations.at(0);
  const auto prof = vanishing_profile(e.group);
  const auto x = pt("(5,6)", 6);
  c.require(is_vanishing_in(f.a, pt("(3,4)(5,6)", 6)), "((3,4),x) vanishing in A");
  c.require(is_vanishing_in(f.b, pt("(3,4)", 6)), "((3,4),1) vanishing in B");
  c.require(center(e.group).contains(x) && !prof.is_vanishing[e.group.at(x)], "(1,x) central, non-vanishing");
  const auto y = pt("(2,3,4)", 6);
  c.require(!is_vanishing_in(f.b, y) && prof.is_vanishing[e.group.at(y)], "((2,3,4),1) non-vanishing in B, vanishing in G");
}

void c5_c4_fixture(Check& c) {
  const auto& e = find_entry(catalog(), "example-5.7");
  const auto& f = e.factorisations.at(0);
  c.require(f.a.order() == 5 && f.b.order() == 4, "A = C5, B = C4");
  c.require(is_core_factorisation(f).holds, "core-factorisation");
  const auto prof = vanishing_profile(e.group);
  bool all_five = !prof.vanishing_elements.empty();
  for (auto x : prof.vanishing_elements) all_five = all_five && prof.element_index[x] == 5;
  c.require(all_five, "every vanishing index equals 5");
  c.require(o_p(e.group, 2).is_trivial(), "O_2(G) = 1");
  const auto p = sylow(e.group, 2);
  c.require(p.order() == 4 && p.generators().size() == 1 && p.generators()[0].order() == 4 && !is_elementary_abelian(p),
            "Sylow 2-subgroup cyclic of order 4");
}

void oracle_equivalence(Check& c) {
  std::size_t compared = 0;
  for (const auto& e : catalog()) {
    if (e.group.order() > 60) continue;
    const auto cls = conjugacy_classes(e.group);
    const auto dixon = character_table(e.group, cls);
    const auto brute = oracle::brute_character_table(e.group, cls);
    c.require(dixon.values == brute.rows && dixon.degrees == brute.degrees, e.name + " tables differ");
    c.require(oracle::rows_orthogonal(dixon.values, cls, e.group.order()) &&
                  oracle::columns_orthogonal(dixon.values, cls, e.group.order()),
              e.name + " Dixon table not orthogonal");
    c.require(oracle::rows_orthogonal(brute.rows, cls, e.group.order()) &&
                  oracle::columns_orthogonal(brute.rows, cls, e.group.order()),
              e.name + " brute table not orthogonal");
    ++compared;
  }
  c.require(compared >= 15, "too few groups compared");
  c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(compared) + " groups";
}

void burnside(Check& c) {
  for (const auto& e : catalog()) {
    const auto t = character_table(e.group);
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (t.degrees[i] == 1) continue;
      bool zero = false;
      bool ppo = false;
      for (std::size_t k = 0; k < t.classes.count(); ++k) {
        if (!(t(i, k) == Cyc(0))) continue;
        zero = true;
        ppo = ppo || is_prime_power(t.classes.rep_orders[k]);
      }
      c.require(zero && ppo, e.name + " row " + std::to_string(i));
    }
  }
}

void witness_equivalence(Check& c) {
  std::size_t negatives = 0;
  for (const auto& f : every_factorisation()) {
    const auto holds = is_core_factorisation(f).holds;
    const auto w = chief_witness(f);
    c.require(holds == w.has_value(), "verdict and witness disagree");
    if (w) {
      const auto check = verify_witness(f, *w);
      c.require(check.cover && check.prefactorised && check.chief, "witness fails verification");
    }
    negatives += holds ? 0 : 1;
  }
  c.require(negatives > 0, "no non-core factorisation exercised");
  c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(negatives) + " non-core";
}

void quotient_inheritance(Check& c) {
  std::size_t quotients = 0;
  for (const auto& f : every_factorisation()) {
    if (!is_core_factorisation(f).holds) continue;
    for (const auto& m : all_normals(f.g)) {
      if (m.order() == f.g.order()) continue;
      c.require(is_core_factorisation(quotient_factorisation(f, m)).holds, "quotient not core");
      ++quotients;
    }
  }
  c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(quotients) + " quotients";
}

void harness(Check& c) {
  const auto report = run_harness(harness_entries(catalog()), {"all"});
  c.require(report.failures.empty(), std::to_string(report.failures.size()) + " failures");
  c.require(report.skipped.empty(), "entries skipped");
  for (const auto& id : report.vacuous()) c.require(false, id + " vacuous");
  c.require(report.coverage.size() == theorem_registry().size(), "coverage incomplete");
}

void structural(Check& c) {
  const std::vector<std::string> ids{"L4.1", "P4.2", "L4.4", "L3.3", "P3.9", "P3.5"};
  const auto report = run_harness(harness_entries(catalog()), ids);
  c.require(report.failures.empty(), "failures");
  for (const auto& id : report.vacuous()) c.require(false, id + " vacuous");
  bool s5 = false;
  for (const auto& o : report.outcomes)
    if (o.theorem == "P3.5" && o.instance == "s5" && o.hypothesis && o.conclusion == true) s5 = true;
  c.require(s5, "P3.5 not exercised on S5");
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(VANISH_CLI_PATH) + " " + args + " 2>&1";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  out += "\n<exit " + std::to_string(pclose(pipe)) + ">";
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void determinism(Check& c) {
  const std::string dir = VANISH_SCRATCH_DIR;
  for (const std::string& args :
       {std::string("verify --theorems all"), std::string("chartab a5"), std::string("vanishing example-5.7"),
        std::string("check-core example-2.4 --fact 0"), std::string("info s5")}) {
    const auto a = run_cli(args + " --json " + dir + "/det_a.json");
    const auto ja = slurp(dir + "/det_a.json");
    std::remove((dir + "/det_a.json").c_str());
    const auto b = run_cli(args + " --json " + dir + "/det_a.json");
    const auto jb = slurp(dir + "/det_a.json");
    c.require(a == b && !ja.empty(), "'" + args + "' text differs");
    c.require(ja == jb, "'" + args + "' json differs");
    c.require(a.find("<exit 0>") != std::string::npos, "'" + args + "' nonzero exit");
  }
  const auto r1 = run_harness(harness_entries(catalog()), {"all"});
  const auto r2 = run_harness(harness_entries(catalog()), {"all"});
  c.require(to_json(r1).dump() == to_json(r2).dump(), "in-process reports differ");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"Sym(4) x C2 fixture: orders, core verdict, witness, inner factorisation, permutability", sym4_c2_fixture},
      {"vanishing in the factors versus in G", factor_vanishing},
      {"C5:C4 fixture: vanishing indices, O_2, Sylow 2-subgroup", c5_c4_fixture},
      {"character table oracle equivalence (|G| <= 60)", oracle_equivalence},
      {"Burnside and prime-power zeros", burnside},
      {"core verdict iff chief witness", witness_equivalence},
      {"quotient inheritance", quotient_inheritance},
      {"theorem harness: zero failures, full coverage", harness},
      {"structural lemma suite", structural},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& ex) {
      c.require(false, std::string("exception: ") + ex.what());
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2zu %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                c.detail.empty() ? "" : ": ", c.detail.c_str());
    failed += c.ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed;
}
