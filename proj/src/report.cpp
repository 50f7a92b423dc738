#include "vanish/report.hpp"

#include "vanish/numtheory.hpp"

namespace vanish {

using nlohmann::json;

json to_json(const ReportDoc& doc) {
  return {{"command", doc.command}, {"tool_version", doc.tool_version}, {"payload", doc.payload},
          {"exit_code", doc.exit_code}};
}

ReportDoc report_doc_from_json(const json& j) {
  ReportDoc doc;
  doc.command = j.at("command").get<std::vector<std::string>>();
  doc.tool_version = j.at("tool_version").get<std::string>();
  doc.payload = j.at("payload");
  doc.exit_code = j.at("exit_code").get<int>();
  return doc;
}

json to_json(const Cyc& c) {
  json coeffs = json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(q.get_str());
  return {{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

Cyc cyc_from_json(const json& j) {
  std::vector<Rational> coeffs;
  for (const auto& s : j.at("coeffs")) {
    Rational q(s.get<std::string>());
    q.canonicalize();
    coeffs.push_back(q);
  }
  return Cyc::from_powers(j.at("conductor").get<std::size_t>(), coeffs);
}

json to_json(const Group& g) {
  json gens = json::array();
  for (const auto& x : g.generators()) gens.push_back(x.to_cycles());
  return {{"order", g.order()}, {"degree", g.degree()}, {"generators", gens}};
}

json to_json(const CharTable& t) {
  json classes = json::array();
  for (std::size_t k = 0; k < t.classes.count(); ++k)
    classes.push_back({{"representative", t.classes.reps[k].to_cycles()},
                       {"size", t.classes.sizes[k]},
                       {"order", t.classes.rep_orders[k]}});
  json rows = json::array();
  for (std::size_t i = 0; i < t.rows(); ++i) {
    json values = json::array();
    for (std::size_t k = 0; k < t.classes.count(); ++k) values.push_back(to_json(t(i, k).reduced()));
    rows.push_back({{"degree", t.degrees[i]}, {"values", values}});
  }
  return {{"group_order", t.group_order}, {"exponent", t.exponent}, {"prime", t.prime},
          {"classes", classes}, {"characters", rows}};
}

json to_json(const Group& g, const ClassData& classes, const VanishingProfile& prof) {
  json out = json::array();
  for (std::size_t k = 0; k < classes.count(); ++k) {
    if (!prof.class_vanishing(k)) continue;
    const auto x = g.at(classes.reps[k]);
    out.push_back({{"representative", classes.reps[k].to_cycles()},
                   {"order", prof.element_order[x]},
                   {"index", prof.element_index[x]},
                   {"prime_power_order", is_prime_power(prof.element_order[x])},
                   {"witnesses", prof.witnesses[k]}});
  }
  return {{"group_order", g.order()}, {"classes", classes.count()}, {"vanishing_classes", out},
          {"vanishing_elements", prof.vanishing_elements}, {"vanishing_prime_power_order", prof.vanishing_ppo}};
}

json to_json(const StructReport& r) {
  json primes = json::array();
  for (const auto& p : r.primes) {
    json entry = {{"p", p.p},
                  {"sylow_order", p.sylow.order()},
                  {"o_p_order", p.o_p.order()},
                  {"o_pprime_order", p.o_pprime.order()},
                  {"p_nilpotent", p.is_p_nilpotent},
                  {"p_soluble", p.is_p_soluble},
                  {"p_supersoluble", p.is_p_supersoluble},
                  {"p_length", nullptr}};
    if (p.p_length) entry["p_length"] = *p.p_length;
    primes.push_back(entry);
  }
  return {{"abelian", r.is_abelian},
          {"nilpotent", r.is_nilpotent},
          {"soluble", r.is_soluble},
          {"supersoluble", r.is_supersoluble},
          {"center_order", r.center.order()},
          {"derived_order", r.derived.order()},
          {"fitting_order", r.fitting.order()},
          {"fitting2_order", r.fitting2.order()},
          {"chief_factors", r.chief.factor_orders},
          {"primes", primes}};
}

json to_json(const CoreVerdict& v, const std::optional<CoreWitness>& w) {
  json out = {{"core_factorisation", v.holds}, {"failing_k", nullptr}, {"witness", nullptr}};
  if (v.failing_k) out["failing_k"] = to_json(*v.failing_k);
  if (w) {
    out["witness"] = {{"labels", std::string(w->labels.begin(), w->labels.end())},
                      {"factor_orders", w->series.factor_orders},
                      {"alternatives", w->alternatives},
                      {"backtracked", w->backtracked}};
  }
  return out;
}

json to_json(const Permutability& p) { return {{"mutual", p.mutual}, {"total", p.total}, {"tcc", p.tcc}}; }

json to_json(const CheckOutcome& o) {
  json clauses = json::array();
  for (const auto& c : o.subclauses) clauses.push_back({{"name", c.name}, {"holds", c.holds}});
  json out = {{"theorem", o.theorem},   {"instance", o.instance},     {"parameter", o.parameter},
              {"hypothesis", o.hypothesis}, {"conclusion", nullptr}, {"subclauses", clauses},
              {"notes", o.notes},        {"time", nullptr}};
  if (o.conclusion) out["conclusion"] = *o.conclusion;
  if (o.elapsed_ms) out["time"] = *o.elapsed_ms;
  return out;
}

CheckOutcome outcome_from_json(const json& j) {
  CheckOutcome o;
  o.theorem = j.at("theorem").get<std::string>();
  o.instance = j.at("instance").get<std::string>();
  o.parameter = j.at("parameter").get<std::string>();
  o.hypothesis = j.at("hypothesis").get<bool>();
  if (!j.at("conclusion").is_null()) o.conclusion = j["conclusion"].get<bool>();
  for (const auto& c : j.at("subclauses")) o.subclauses.push_back({c.at("name"), c.at("holds")});
  o.notes = j.at("notes").get<std::string>();
  if (!j.at("time").is_null()) o.elapsed_ms = j["time"].get<double>();
  return o;
}

json to_json(const HarnessReport& r) {
  json outcomes = json::array();
  for (const auto& o : r.outcomes) outcomes.push_back(to_json(o));
  json failures = json::array();
  for (const auto& o : r.failures) failures.push_back(to_json(o));
  json skipped = json::array();
  for (const auto& [name, why] : r.skipped) skipped.push_back({{"entry", name}, {"reason", why}});
  return {{"outcomes", outcomes}, {"coverage", r.coverage}, {"failures", failures},
          {"skipped", skipped},   {"vacuous", r.vacuous()}};
}

HarnessReport harness_report_from_json(const json& j) {
  HarnessReport r;
  for (const auto& o : j.at("outcomes")) r.outcomes.push_back(outcome_from_json(o));
  for (const auto& o : j.at("failures")) r.failures.push_back(outcome_from_json(o));
  r.coverage = j.at("coverage").get<std::map<std::string, std::size_t>>();
  for (const auto& s : j.at("skipped")) r.skipped.emplace_back(s.at("entry"), s.at("reason"));
  return r;
}

}  // namespace vanish
