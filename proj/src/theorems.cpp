#include "vanish/theorems.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>

#include "vanish/numtheory.hpp"

namespace vanish {

GroupContext::GroupContext(Group g) : g_(std::move(g)) {}

const std::vector<std::size_t>& GroupContext::primes() {
  if (!primes_) primes_ = prime_divisors(g_.order());
  return *primes_;
}

const ClassData& GroupContext::classes() {
  if (!classes_) classes_ = conjugacy_classes(g_);
  return *classes_;
}

const CharTable& GroupContext::table() {
  if (!table_) table_ = character_table(g_, classes());
  return *table_;
}

const VanishingProfile& GroupContext::profile() {
  if (!profile_) profile_ = vanishing_profile(g_, table());
  return *profile_;
}

const std::vector<Group>& GroupContext::normals() {
  if (!normals_) normals_ = all_normals(g_);
  return *normals_;
}

const std::vector<Group>& GroupContext::minimal_normals() {
  if (!minimal_normals_) minimal_normals_ = g_.is_trivial() ? std::vector<Group>{} : vanish::minimal_normals(g_);
  return *minimal_normals_;
}

const StructReport& GroupContext::report() {
  if (!report_) report_ = predicates(g_);
  return *report_;
}

const CharTable& GroupContext::normal_table(std::size_t i) {
  auto it = normal_tables_.find(i);
  if (it == normal_tables_.end()) it = normal_tables_.emplace(i, character_table(normals().at(i))).first;
  return it->second;
}

IndexMode parse_index_mode(const std::string& text) {
  const auto colon = text.find(':');
  const auto kind = text.substr(0, colon);
  const std::size_t p = colon == std::string::npos ? 0 : std::stoul(text.substr(colon + 1));
  if (kind == "prime_power") return {IndexMode::PrimePower, 0};
  if (kind == "square_free") return {IndexMode::SquareFree, 0};
  if (p == 0 || !is_prime(p)) throw Error("index mode '" + text + "' needs a prime, e.g. p_number:2");
  if (kind == "p_number") return {IndexMode::PNumber, p};
  if (kind == "not_div_p2") return {IndexMode::NotDivP2, p};
  if (kind == "p_coprime") return {IndexMode::PCoprime, p};
  throw Error("unknown index mode '" + text + "'");
}

namespace {

using Indices = std::vector<std::size_t>;

bool index_ok(std::size_t idx, IndexMode mode) {
  switch (mode.kind) {
    case IndexMode::PrimePower:
      return idx == 1 || is_prime_power(idx);
    case IndexMode::PNumber:
      return is_p_power(idx, mode.p);
    case IndexMode::SquareFree:
      return is_square_free(idx);
    case IndexMode::NotDivP2:
      return idx % (mode.p * mode.p) != 0;
    case IndexMode::PCoprime:
      return idx % mode.p != 0;
  }
  return false;
}

bool filter_ok(std::size_t order, ElementFilter filter) {
  switch (filter.kind) {
    case ElementFilter::AllPpo:
      return is_prime_power(order);
    case ElementFilter::PElements:
      return order > 1 && is_p_power(order, filter.p);
    case ElementFilter::PRegularPpo:
      return is_prime_power(order) && order % filter.p != 0;
  }
  return false;
}

std::string prime_label(std::size_t p) { return "p=" + std::to_string(p); }

std::string set_label(const std::string& name, const std::vector<std::size_t>& s) {
  std::string out = name + "={";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

Group quotient(const Group& g, const Group& n) { return CosetAction(g, n).quotient(); }

bool all_in(const Group& g, const Group& h, const Indices& elems) {
  for (auto x : elems)
    if (!h.contains(g.element(x))) return false;
  return true;
}

/// Evaluation state shared by the checks of one factorisation instance.
struct FactRun {
  GroupContext& gc;
  const FactInstance& inst;
  std::optional<bool> core_;
  std::optional<Indices> elems_;

  const Factorisation& f() const { return inst.f; }
  bool core() {
    if (!core_) core_ = is_core_factorisation(inst.f).holds;
    return *core_;
  }
  const Indices& elems() {
    if (!elems_) elems_ = factor_elements(inst.f);
    return *elems_;
  }
  bool index_hyp(IndexMode mode, ElementFilter filter) {
    return hyp_vanishing_ppo_index(inst.f, gc.profile(), mode, filter);
  }
};

CheckOutcome outcome(const std::string& id, const std::string& instance, std::string parameter = {}) {
  CheckOutcome o;
  o.theorem = id;
  o.instance = instance;
  o.parameter = std::move(parameter);
  return o;
}

template <class F>
void conclude(CheckOutcome& o, bool hypothesis, bool audit, F&& clauses) {
  o.hypothesis = hypothesis;
  if (!hypothesis && !audit) return;
  o.subclauses = clauses();
  o.conclusion = std::all_of(o.subclauses.begin(), o.subclauses.end(), [](const Clause& c) { return c.holds; });
}

std::vector<Clause> pgroup_clauses(const Group& p_group, std::size_t p) {
  const auto d = derived(p_group);
  const auto phi = frattini_of_pgroup(p_group, p);
  const auto z = center(p_group);
  return {{"P' <= Phi(P)", phi.contains_subgroup(d)},
          {"Phi(P) <= Z(P)", z.contains_subgroup(phi)},
          {"P' elementary abelian", is_elementary_abelian(d)},
          {"|P'| <= p^2", d.order() <= p * p}};
}

std::vector<Clause> supersoluble_clauses(const Group& g) {
  const auto d = derived(g);
  bool sylows = true;
  for (auto q : prime_divisors(d.order())) sylows = sylows && is_elementary_abelian(sylow(d, q));
  const auto fd = derived(fitting(g));
  bool small = true;
  for (auto q : prime_divisors(fd.order())) small = small && p_part(fd.order(), q) <= q * q;
  return {{"G' abelian", is_abelian(d)},
          {"Sylow subgroups of G' elementary abelian", sylows},
          {"Sylow p-subgroups of F(G)' of order <= p^2", small}};
}

std::set<std::size_t> index_primes(GroupContext& gc, const Group& factor, std::size_t p) {
  std::set<std::size_t> out;
  const auto& prof = gc.profile();
  for (const auto& x : factor.elements()) {
    const auto i = gc.at(x);
    if (!prof.is_vanishing[i] || !filter_ok(prof.element_order[i], {ElementFilter::PElements, p})) continue;
    for (auto q : prime_divisors(prof.element_index[i])) out.insert(q);
  }
  return out;
}

std::string format_set(const std::set<std::size_t>& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) out += (it == s.begin() ? "" : ",") + std::to_string(*it);
  return out + "}";
}

// ---- factorisation-scope checks

using FactFn = std::vector<CheckOutcome> (*)(FactRun&, const std::string&, bool);
using GroupFn = std::vector<CheckOutcome> (*)(GroupContext&, const std::string&, const std::string&, bool);

std::vector<CheckOutcome> quotients_inherit(FactRun& run, const std::string& id, bool audit) {
  auto o = outcome(id, run.inst.name);
  const auto& g = run.f().g;
  conclude(o, !g.is_trivial() && run.core(), audit, [&] {
    std::size_t count = 0;
    bool ok = true;
    for (const auto& m : run.gc.normals()) {
      if (m.order() == g.order()) continue;
      ok = ok && is_core_factorisation(quotient_factorisation(run.f(), m)).holds;
      ++count;
    }
    o.notes = "quotients=" + std::to_string(count);
    return std::vector<Clause>{{"G/M is a core-factorisation for every proper normal M", ok}};
  });
  return {o};
}

std::vector<CheckOutcome> chief_characterisation(FactRun& run, const std::string& id, bool audit) {
  auto o = outcome(id, run.inst.name);
  conclude(o, !run.f().g.is_trivial(), audit, [&] {
    const auto w = chief_witness(run.f());
    std::vector<Clause> out{{"core-factorisation <=> covered chief series", run.core() == w.has_value()}};
    if (w) {
      const auto check = verify_witness(run.f(), *w);
      out.push_back({"witness is a chief series", check.chief});
      out.push_back({"witness cover condition", check.cover});
      out.push_back({"witness terms prefactorised", check.prefactorised});
      out.push_back({"witness terms core-factorisations", check.inner_core});
      out.push_back({"greedy ascent without backtracking", !w->backtracked});
      std::string labels(w->labels.begin(), w->labels.end());
      o.notes = "labels=" + labels;
    }
    return out;
  });
  return {o};
}

std::vector<CheckOutcome> normal_sylow_nonvanishing(FactRun& run, const std::string& id, bool audit) {
  std::vector<CheckOutcome> out;
  for (auto p : run.gc.primes()) {
    auto o = outcome(id, run.inst.name, prime_label(p));
    conclude(o, run.core() && hyp_no_vanishing_p_elements(run.f(), run.gc.profile(), p), audit, [&] {
      return std::vector<Clause>{{"normal Sylow p-subgroup", has_normal_sylow(run.f().g, p)}};
    });
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<CheckOutcome> nilpotent_hall(FactRun& run, const std::string& id, bool audit) {
  std::vector<CheckOutcome> out;
  const auto& primes = run.gc.primes();
  const auto& prof = run.gc.profile();
  for (std::size_t mask = 1; mask < (std::size_t{1} << primes.size()); ++mask) {
    std::vector<std::size_t> sigma;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask & (std::size_t{1} << i)) sigma.push_back(primes[i]);
    bool hyp = run.core();
    for (auto x : run.elems()) {
      const auto ord = prof.element_order[x];
      if (prof.is_vanishing[x] && is_prime_power(ord) && is_sigma_number(ord, sigma)) hyp = false;
    }
    auto o = outcome(id, run.inst.name, set_label("sigma", sigma));
    conclude(o, hyp, audit, [&] {
      return std::vector<Clause>{{"nilpotent normal Hall sigma-subgroup", normal_hall_nilpotent(run.f().g, sigma).holds}};
    });
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<CheckOutcome> two_prime_soluble(FactRun& run, const std::string& id, bool audit) {
  std::vector<CheckOutcome> out;
  const auto& primes = run.gc.primes();
  const auto& prof = run.gc.profile();
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const std::vector<std::size_t> pq{primes[i], primes[j]};
      bool hyp = run.core();
      for (auto x : run.elems())
        if (prof.is_vanishing[x] && !is_sigma_number(prof.element_order[x], pq)) hyp = false;
      auto o = outcome(id, run.inst.name, set_label("pq", pq));
      conclude(o, hyp, audit, [&] { return std::vector<Clause>{{"G soluble", run.gc.report().is_soluble}}; });
      out.push_back(std::move(o));
    }
  return out;
}

std::vector<CheckOutcome> abelian_criterion(FactRun& run, const std::string& id, bool audit) {
  auto o = outcome(id, run.inst.name);
  conclude(o, run.core(), audit, [&] {
    const auto& prof = run.gc.profile();
    bool none = true;
    bool none_ppo = true;
    for (auto x : run.elems()) {
      if (!prof.is_vanishing[x]) continue;
      none = false;
      if (is_prime_power(prof.element_order[x])) none_ppo = false;
    }
    const bool abelian = run.gc.report().is_abelian;
    o.notes = std::string("(1)=") + (none ? "1" : "0") + " (2)=" + (none_ppo ? "1" : "0") + " (3)=" + (abelian ? "1" : "0");
    return std::vector<Clause>{{"(1) <=> (2)", none == none_ppo}, {"(2) <=> (3)", none_ppo == abelian}};
  });
  return {o};
}

std::vector<CheckOutcome> p_number_indices(FactRun& run, const std::string& id, bool audit) {
  std::vector<CheckOutcome> out;
  for (auto p : run.gc.primes()) {
    auto o = outcome(id, run.inst.name, prime_label(p));
    conclude(o, run.core() && run.index_hyp({IndexMode::PNumber, p}, {ElementFilter::PElements, p}), audit, [&] {
      return std::vector<Clause>{{"normal Sylow p-subgroup", has_normal_sylow(run.f().g, p)}};
    });
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<CheckOutcome> prime_power_indices(FactRun& run, const std::string& id, bool audit) {
  std::vector<CheckOutcome> out;
  const auto& g = run.f().g;
  for (auto p : run.gc.primes()) {
    auto o = outcome(id, run.inst.name, prime_label(p));
    o.notes = "index primes of vanishing p-elements: A=" + format_set(index_primes(run.gc, run.f().a, p)) +
              " B=" + format_set(index_primes(run.gc, run.f().b, p));
    conclude(o, run.core() && run.index_hyp({IndexMode::PrimePower, 0}, {ElementFilter::PElements, p}), audit, [&] {
      const auto& pr = run.gc.report().prime(p);
      const auto c = centralizer_of(g, pr.o_p);
      return std::vector<Clause>{
          {"(2) G/C_G(O_p(G)) has a normal Sylow p-subgroup", has_normal_sylow(quotient(g, c), p)},
          {"(3) G/F(G) has a normal Sylow p-subgroup", has_normal_sylow(quotient(g, run.gc.report().fitting), p)},
          {"(4) G/O_p'(G) has a normal Sylow p-subgroup", has_normal_sylow(quotient(g, pr.o_pprime), p)},
          {"(4) p-soluble of p-length 1", pr.is_p_soluble && pr.p_length == std::size_t{1}}};
    });
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<CheckOutcome> fitting_quotient_abelian(FactRun& run, const std::string& id, bool audit) {
  auto o = outcome(id, run.inst.name);
  const auto& g = run.f().g;
  conclude(o, run.core() && run.index_hyp({IndexMode::PrimePower, 0}, {ElementFilter::AllPpo, 0}), audit, [&] {
    std::vector<Clause> out{{"G/F(G) abelian", is_abelian(quotient(g, run.gc.report().fitting))}};
    for (auto p : run.gc.primes()) {
      if (!run.index_hyp({IndexMode::PNumber, p}, {ElementFilter::AllPpo, 0})) continue;
      bool holds = has_normal_sylow(g, p);
      if (holds) holds = is_abelian(quotient(g, sylow(g, p)));
      out.push_back({prime_label(p) + ": normal Sylow p and abelian Hall p'-subgroups", holds});
    }
    return out;
  });
  return {o};
}

std::vector<CheckOutcome> p_nilpotent_regular(FactRun& run, const std::string& id, bool audit) {
  std::vector<CheckOutcome> out;
  for (auto p : run.gc.primes()) {
    auto o = outcome(id, run.inst.name, prime_label(p));
    conclude(o, run.core() && run.index_hyp({IndexMode::PCoprime, p}, {ElementFilter::PRegularPpo, p}), audit, [&] {
      return std::vector<Clause>{{"p-nilpotent", run.gc.report().prime(p).is_p_nilpotent}};
    });
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<CheckOutcome> p_nilpotent_abelian_sylow(FactRun& run, const std::string& id, bool audit) {
  std::vector<CheckOutcome> out;
  for (auto p : run.gc.primes()) {
    auto o = outcome(id, run.inst.name, prime_label(p));
    conclude(o, run.core() && run.index_hyp({IndexMode::PCoprime, p}, {ElementFilter::AllPpo, 0}), audit, [&] {
      const auto& pr = run.gc.report().prime(p);
      return std::vector<Clause>{{"p-nilpotent", pr.is_p_nilpotent}, {"abelian Sylow p-subgroups", is_abelian(pr.sylow)}};
    });
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<CheckOutcome> pgroup_product(FactRun& run, const std::string& id, bool audit) {
  std::vector<CheckOutcome> out;
  const auto& g = run.f().g;
  const auto& prof = run.gc.profile();
  for (auto p : run.gc.primes()) {
    bool hyp = is_p_group(g, p);
    for (auto x : run.elems())
      if (prof.is_vanishing[x] && prof.element_index[x] % (p * p) == 0) hyp = false;
    auto o = outcome(id, run.inst.name, prime_label(p));
    conclude(o, hyp, audit, [&] { return pgroup_clauses(sylow(g, p), p); });
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<CheckOutcome> p_squared_indices(FactRun& run, const std::string& id, bool audit) {
  std::vector<CheckOutcome> out;
  const auto& g = run.f().g;
  for (auto p : run.gc.primes()) {
    const bool coprime = std::gcd(p - 1, g.order()) == 1;
    auto o = outcome(id, run.inst.name, prime_label(p));
    conclude(o, run.core() && coprime && run.index_hyp({IndexMode::NotDivP2, p}, {ElementFilter::AllPpo, 0}), audit,
             [&] {
               const auto& pr = run.gc.report().prime(p);
               std::vector<Clause> c{{"(1) G soluble", run.gc.report().is_soluble}, {"(2) p-nilpotent", pr.is_p_nilpotent}};
               for (auto& k : pgroup_clauses(pr.sylow, p)) c.push_back({"(3) " + k.name, k.holds});
               return c;
             });
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<CheckOutcome> p_supersoluble(FactRun& run, const std::string& id, bool audit) {
  std::vector<CheckOutcome> out;
  for (auto p : run.gc.primes()) {
    const auto& pr = run.gc.report().prime(p);
    auto o = outcome(id, run.inst.name, prime_label(p));
    conclude(o,
             run.core() && pr.is_p_soluble &&
                 run.index_hyp({IndexMode::NotDivP2, p}, {ElementFilter::PRegularPpo, p}),
             audit, [&] { return std::vector<Clause>{{"p-supersoluble", pr.is_p_supersoluble}}; });
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<CheckOutcome> square_free_core(FactRun& run, const std::string& id, bool audit) {
  auto o = outcome(id, run.inst.name);
  conclude(o, run.core() && run.index_hyp({IndexMode::SquareFree, 0}, {ElementFilter::AllPpo, 0}), audit, [&] {
    std::vector<Clause> c{{"(1) G supersoluble", run.gc.report().is_supersoluble}};
    const auto rest = supersoluble_clauses(run.f().g);
    for (std::size_t i = 0; i < rest.size(); ++i) c.push_back({"(" + std::to_string(i + 2) + ") " + rest[i].name, rest[i].holds});
    return c;
  });
  return {o};
}

std::vector<CheckOutcome> square_free_supersoluble(FactRun& run, const std::string& id, bool audit) {
  auto o = outcome(id, run.inst.name);
  conclude(o,
           run.gc.report().is_supersoluble && run.index_hyp({IndexMode::SquareFree, 0}, {ElementFilter::AllPpo, 0}),
           audit, [&] {
             auto c = supersoluble_clauses(run.f().g);
             for (std::size_t i = 0; i < c.size(); ++i) c[i].name = "(" + std::to_string(i + 1) + ") " + c[i].name;
             return c;
           });
  return {o};
}

// ---- group-scope checks

/// All of M \ N vanishing in G.
bool difference_vanishing(GroupContext& gc, const Group& m, const Group& n) {
  const auto& prof = gc.profile();
  for (const auto& x : m.elements())
    if (!n.contains(x) && !prof.is_vanishing[gc.at(x)]) return false;
  return true;
}

bool quotient_abelian(const Group& m, const Group& n) {
  const auto gens = m.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!n.contains(commutator(gens[i], gens[j]))) return false;
  return true;
}

bool strictly_below(const Group& n, const Group& m) { return n.order() < m.order() && m.contains_subgroup(n); }

/// (N, M) with N < M normal and M/N a chief factor.
std::vector<std::pair<std::size_t, std::size_t>> chief_factors(GroupContext& gc) {
  const auto& normals = gc.normals();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < normals.size(); ++i)
    for (std::size_t j = 0; j < normals.size(); ++j) {
      if (!strictly_below(normals[i], normals[j])) continue;
      const bool between = std::any_of(normals.begin(), normals.end(), [&](const Group& l) {
        return strictly_below(normals[i], l) && strictly_below(l, normals[j]);
      });
      if (!between) out.emplace_back(i, j);
    }
  return out;
}

std::vector<CheckOutcome> coprime_abelian_section(GroupContext& gc, const std::string& id, const std::string& name,
                                                  bool audit) {
  auto o = outcome(id, name);
  std::vector<std::pair<Group, Group>> hyp_pairs;
  std::vector<std::pair<Group, Group>> all_pairs;
  for (const auto& n : gc.minimal_normals())
    for (const auto& m : gc.normals()) {
      if (!strictly_below(n, m)) continue;
      all_pairs.emplace_back(n, m);
      const auto quot = m.order() / n.order();
      if (std::gcd(n.order(), quot) == 1 && n.contains_subgroup(centralizer_of(m, n)) && quotient_abelian(m, n))
        hyp_pairs.emplace_back(n, m);
    }
  conclude(o, !hyp_pairs.empty(), audit, [&] {
    const auto& pairs = hyp_pairs.empty() ? all_pairs : hyp_pairs;
    bool ok = true;
    for (const auto& [n, m] : pairs) ok = ok && difference_vanishing(gc, m, n);
    o.notes = "pairs=" + std::to_string(pairs.size());
    return std::vector<Clause>{{"every element of M \\ N vanishing in G", ok}};
  });
  return {o};
}

std::vector<CheckOutcome> centralizer_chief_factor(GroupContext& gc, const std::string& id, const std::string& name,
                                                   bool audit) {
  auto o = outcome(id, name);
  const auto& normals = gc.normals();
  std::vector<std::pair<std::size_t, std::size_t>> hyp_pairs;
  const auto factors = chief_factors(gc);
  for (const auto& k : gc.minimal_normals()) {
    if (!is_abelian(k)) continue;
    for (const auto& [ni, mi] : factors) {
      const auto& n = normals[ni];
      const auto& m = normals[mi];
      if (std::gcd(k.order(), m.order() / n.order()) == 1 && centralizer_of(m, k) == n) hyp_pairs.emplace_back(ni, mi);
    }
  }
  conclude(o, !hyp_pairs.empty(), audit, [&] {
    const auto& pairs = hyp_pairs.empty() ? factors : hyp_pairs;
    bool ok = true;
    for (const auto& [ni, mi] : pairs) ok = ok && difference_vanishing(gc, normals[mi], normals[ni]);
    o.notes = "factors=" + std::to_string(pairs.size());
    return std::vector<Clause>{{"every element of M \\ N vanishing in G", ok}};
  });
  return {o};
}

std::vector<CheckOutcome> defect_zero_normal(GroupContext& gc, const std::string& id, const std::string& name,
                                             bool audit) {
  std::vector<CheckOutcome> out;
  const auto& normals = gc.normals();
  for (auto p : gc.primes()) {
    std::vector<std::size_t> with_defect_zero;
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < normals.size(); ++i) {
      if (normals[i].order() % p != 0) continue;
      candidates.push_back(i);
      if (has_p_defect_zero(gc.normal_table(i), p)) with_defect_zero.push_back(i);
    }
    auto o = outcome(id, name, prime_label(p));
    conclude(o, !with_defect_zero.empty(), audit, [&] {
      const auto& use = with_defect_zero.empty() ? candidates : with_defect_zero;
      const auto& prof = gc.profile();
      bool ok = true;
      for (auto i : use)
        for (const auto& x : normals[i].elements()) {
          const auto k = gc.at(x);
          if (prof.element_order[k] % p == 0 && !prof.is_vanishing[k]) ok = false;
        }
      o.notes = "normals=" + std::to_string(use.size());
      return std::vector<Clause>{{"elements of N of order divisible by p vanish in G", ok}};
    });
    out.push_back(std::move(o));
  }
  return out;
}

bool vanishing_p_element_in(GroupContext& gc, const Group& n, std::size_t p) {
  const auto& prof = gc.profile();
  for (const auto& x : n.elements()) {
    const auto k = gc.at(x);
    if (prof.is_vanishing[k] && filter_ok(prof.element_order[k], {ElementFilter::PElements, p})) return true;
  }
  return false;
}

std::vector<CheckOutcome> simple_defect_or_zero(GroupContext& gc, const std::string& id, const std::string& name,
                                                bool audit) {
  std::vector<CheckOutcome> out;
  const auto& g = gc.group();
  const bool hyp = !gc.report().is_abelian && gc.normals().size() == 2;
  for (auto p : gc.primes()) {
    auto o = outcome(id, name, prime_label(p));
    conclude(o, hyp, audit, [&] {
      const bool defect = has_p_defect_zero(gc.table(), p);
      o.notes = std::string("defect zero=") + (defect ? "1" : "0");
      return std::vector<Clause>{
          {"p-defect zero character or vanishing p-element", defect || vanishing_p_element_in(gc, g, p)}};
    });
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<CheckOutcome> nonabelian_minimal_normal(GroupContext& gc, const std::string& id, const std::string& name,
                                                    bool audit) {
  std::vector<CheckOutcome> out;
  for (auto p : gc.primes()) {
    std::vector<Group> ns;
    for (const auto& n : gc.minimal_normals())
      if (!is_abelian(n) && n.order() % p == 0) ns.push_back(n);
    auto o = outcome(id, name, prime_label(p));
    conclude(o, !ns.empty(), audit, [&] {
      bool ok = true;
      for (const auto& n : ns) ok = ok && vanishing_p_element_in(gc, n, p);
      return std::vector<Clause>{{"some p-element of N vanishing in G", ok}};
    });
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<CheckOutcome> supersoluble_vanishing(GroupContext& gc, const std::string& id, const std::string& name,
                                                 bool audit) {
  auto o = outcome(id, name);
  conclude(o, gc.report().is_supersoluble, audit, [&] {
    const auto z = center(gc.report().fitting);
    const auto& prof = gc.profile();
    bool ok = true;
    for (std::size_t x = 0; x < gc.group().order(); ++x)
      if (!z.contains(gc.group().element(x)) && !prof.is_vanishing[x]) ok = false;
    return std::vector<Clause>{{"every element outside Z(F(G)) vanishing", ok}};
  });
  return {o};
}

std::vector<CheckOutcome> wielandt(GroupContext& gc, const std::string& id, const std::string& name, bool audit) {
  std::vector<CheckOutcome> out;
  const auto& g = gc.group();
  const auto& prof = gc.profile();
  for (auto p : gc.primes()) {
    Indices xs;
    for (std::size_t x = 1; x < g.order(); ++x)
      if (is_p_power(prof.element_order[x], p) && is_p_power(prof.element_index[x], p)) xs.push_back(x);
    auto o = outcome(id, name, prime_label(p));
    conclude(o, !xs.empty(), audit, [&] {
      return std::vector<Clause>{{"x in O_p(G)", all_in(g, gc.report().prime(p).o_p, xs)}};
    });
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<CheckOutcome> prime_power_index_f2(GroupContext& gc, const std::string& id, const std::string& name,
                                               bool audit) {
  auto o = outcome(id, name);
  const auto& g = gc.group();
  const auto& prof = gc.profile();
  Indices xs;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (is_prime_power(prof.element_index[x])) xs.push_back(x);
  conclude(o, !xs.empty(), audit, [&] {
    return std::vector<Clause>{{"elements of prime power index lie in F2(G)", all_in(g, gc.report().fitting2, xs)}};
  });
  return {o};
}

std::vector<CheckOutcome> normal_p_subgroup_nonvanishing(GroupContext& gc, const std::string& id,
                                                         const std::string& name, bool audit) {
  std::vector<CheckOutcome> out;
  const auto& prof = gc.profile();
  for (auto p : gc.primes()) {
    const auto& op = gc.report().prime(p).o_p;
    auto o = outcome(id, name, prime_label(p));
    conclude(o, !op.is_trivial(), audit, [&] {
      bool ok = true;
      for (const auto& x : op.elements()) {
        const auto k = gc.at(x);
        if (prof.element_index[k] % p != 0 && prof.is_vanishing[k]) ok = false;
      }
      return std::vector<Clause>{{"x in O_p(G) with p not dividing i_G(x) is non-vanishing", ok}};
    });
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<CheckOutcome> index_divisibility(GroupContext& gc, const std::string& id, const std::string& name,
                                             bool audit) {
  auto o = outcome(id, name);
  const auto& g = gc.group();
  conclude(o, true, audit, [&] {
    const auto& prof = gc.profile();
    bool a = true;
    bool b = true;
    for (const auto& n : gc.normals()) {
      const auto cls = conjugacy_classes(n);
      for (std::size_t i = 0; i < n.order(); ++i)
        if (prof.element_index[g.at(n.element(i))] % cls.sizes[cls.class_of[i]] != 0) a = false;
      const CosetAction action(g, n);
      const auto& q = action.quotient();
      const auto qcls = conjugacy_classes(q);
      for (std::size_t x = 0; x < g.order(); ++x) {
        const auto qi = qcls.class_of[q.at(action.project(g.element(x)))];
        if (prof.element_index[x] % qcls.sizes[qi] != 0) b = false;
      }
    }
    o.notes = "normals=" + std::to_string(gc.normals().size());
    return std::vector<Clause>{{"(a) i_N(x) divides i_G(x)", a}, {"(b) i_G/N(xN) divides i_G(x)", b}};
  });
  return {o};
}

/// A factorisation-scope check run on the trivial factorisation of G.
template <FactFn Parent>
std::vector<CheckOutcome> on_trivial(GroupContext& gc, const std::string& id, const std::string& name, bool audit) {
  const FactInstance inst{name, trivial_factorisation(gc.group())};
  FactRun run{gc, inst, {}, {}};
  return Parent(run, id, audit);
}

struct Registered {
  TheoremSpec spec;
  FactFn fact = nullptr;
  GroupFn group = nullptr;
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> entries = {
      {{"L2.2", Scope::Factorisation, "quotients of a core-factorisation are core-factorisations"}, quotients_inherit},
      {{"L2.4", Scope::Factorisation, "core-factorisation iff a chief series has covered factors"}, chief_characterisation},
      {{"L3.1", Scope::Group, "coprime abelian section over a self-centralising minimal normal vanishes"}, nullptr, coprime_abelian_section},
      {{"L3.2", Scope::Group, "chief factor centralising an abelian minimal normal vanishes"}, nullptr, centralizer_chief_factor},
      {{"L3.3", Scope::Group, "defect zero character of a normal subgroup forces zeros"}, nullptr, defect_zero_normal},
      {{"P3.4", Scope::Group, "non-abelian simple group: defect zero or vanishing p-element"}, nullptr, simple_defect_or_zero},
      {{"P3.5", Scope::Group, "non-abelian minimal normal subgroup has a vanishing p-element"}, nullptr, nonabelian_minimal_normal},
      {{"T3.6", Scope::Factorisation, "non-vanishing p-elements in the factors give a normal Sylow p"}, normal_sylow_nonvanishing},
      {{"C3.7", Scope::Factorisation, "non-vanishing sigma-elements give a nilpotent normal Hall subgroup"}, nilpotent_hall},
      {{"C3.8", Scope::Factorisation, "vanishing orders in two primes give solubility"}, two_prime_soluble},
      {{"P3.9", Scope::Group, "supersoluble: everything outside Z(F(G)) vanishes"}, nullptr, supersoluble_vanishing},
      {{"C3.10", Scope::Factorisation, "no vanishing elements in the factors iff abelian"}, abelian_criterion},
      {{"L4.1", Scope::Group, "p-element of p-power index lies in O_p"}, nullptr, wielandt},
      {{"P4.2", Scope::Group, "elements of prime power index lie in F2"}, nullptr, prime_power_index_f2},
      {{"P4.3", Scope::Group, "normal p-subgroup elements of p'-index are non-vanishing"}, nullptr, normal_p_subgroup_nonvanishing},
      {{"L4.4", Scope::Group, "indices divide along normal subgroups and quotients"}, nullptr, index_divisibility},
      {{"T4.5(1)", Scope::Factorisation, "p-power vanishing indices give a normal Sylow p"}, p_number_indices},
      {{"T4.5", Scope::Factorisation, "prime power vanishing indices of p-elements"}, prime_power_indices},
      {{"C4.6", Scope::Factorisation, "prime power vanishing indices give G/F(G) abelian"}, fitting_quotient_abelian},
      {{"T5.1(1)", Scope::Factorisation, "p'-vanishing indices of p-regular elements give p-nilpotence"}, p_nilpotent_regular},
      {{"T5.1(2)", Scope::Factorisation, "p'-vanishing indices give p-nilpotence with abelian Sylow p"}, p_nilpotent_abelian_sylow},
      {{"C5.1", Scope::Group, "T5.1(2) for the trivial factorisation"}, nullptr, on_trivial<p_nilpotent_abelian_sylow>},
      {{"P5.2", Scope::Factorisation, "p-group product with vanishing indices not divisible by p^2"}, pgroup_product},
      {{"T5.4", Scope::Factorisation, "vanishing indices not divisible by p^2 with (p-1, |G|) = 1"}, p_squared_indices},
      {{"C5.5", Scope::Group, "T5.4 for the trivial factorisation"}, nullptr, on_trivial<p_squared_indices>},
      {{"T5.6", Scope::Factorisation, "p-soluble with p-regular indices not divisible by p^2 is p-supersoluble"}, p_supersoluble},
      {{"T5.8", Scope::Factorisation, "square-free vanishing indices give supersolubility"}, square_free_core},
      {{"T5.9", Scope::Factorisation, "supersoluble product with square-free vanishing indices"}, square_free_supersoluble},
      {{"C5.10", Scope::Group, "T5.8 for the trivial factorisation"}, nullptr, on_trivial<square_free_core>},
  };
  return entries;
}

const Registered& find_registered(const std::string& id) {
  for (const auto& r : registry())
    if (r.spec.id == id) return r;
  throw Error("unknown theorem id '" + id + "'");
}

}  // namespace

std::vector<std::size_t> factor_elements(const Factorisation& f) {
  std::vector<char> mark(f.g.order(), 0);
  for (const auto& x : f.a.elements()) mark[f.g.at(x)] = 1;
  for (const auto& x : f.b.elements()) mark[f.g.at(x)] = 1;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mark.size(); ++i)
    if (mark[i]) out.push_back(i);
  return out;
}

bool hyp_no_vanishing_p_elements(const Factorisation& f, const VanishingProfile& prof, std::size_t p) {
  for (auto x : factor_elements(f))
    if (prof.is_vanishing[x] && is_p_power(prof.element_order[x], p)) return false;
  return true;
}

bool hyp_no_vanishing_p_elements(const Factorisation& f, std::size_t p) {
  return hyp_no_vanishing_p_elements(f, vanishing_profile(f.g), p);
}

bool hyp_vanishing_ppo_index(const Factorisation& f, const VanishingProfile& prof, IndexMode mode,
                             ElementFilter filter) {
  for (auto x : factor_elements(f)) {
    if (!prof.is_vanishing[x] || !filter_ok(prof.element_order[x], filter)) continue;
    if (!index_ok(prof.element_index[x], mode)) return false;
  }
  return true;
}

bool hyp_vanishing_ppo_index(const Factorisation& f, IndexMode mode, ElementFilter filter) {
  return hyp_vanishing_ppo_index(f, vanishing_profile(f.g), mode, filter);
}

const std::vector<TheoremSpec>& theorem_registry() {
  static const std::vector<TheoremSpec> specs = [] {
    std::vector<TheoremSpec> out;
    for (const auto& r : registry()) out.push_back(r.spec);
    return out;
  }();
  return specs;
}

const TheoremSpec& find_theorem(const std::string& id) { return find_registered(id).spec; }

std::vector<CheckOutcome> run_theorem(const TheoremSpec& spec, GroupContext& gc, const FactInstance& inst,
                                      const RunOptions& options) {
  const auto& r = find_registered(spec.id);
  if (!r.fact) throw Error(spec.id + " is a group-scope check");
  FactRun run{gc, inst, {}, {}};
  return r.fact(run, spec.id, options.audit);
}

std::vector<CheckOutcome> run_theorem(const TheoremSpec& spec, GroupContext& gc, const std::string& name,
                                      const RunOptions& options) {
  const auto& r = find_registered(spec.id);
  if (!r.group) throw Error(spec.id + " is a factorisation-scope check");
  return r.group(gc, spec.id, name, options.audit);
}

std::vector<std::string> HarnessReport::vacuous() const {
  std::vector<std::string> out;
  for (const auto& [id, n] : coverage)
    if (n == 0) out.push_back(id);
  return out;
}

std::vector<std::string> resolve_selection(const std::vector<std::string>& ids) {
  std::vector<std::string> out;
  const bool all = std::find(ids.begin(), ids.end(), "all") != ids.end();
  for (const auto& id : ids)
    if (id != "all") find_registered(id);
  for (const auto& r : registry())
    if (all || std::find(ids.begin(), ids.end(), r.spec.id) != ids.end()) out.push_back(r.spec.id);
  return out;
}

HarnessReport run_harness(const std::vector<HarnessEntry>& entries, const std::vector<std::string>& ids,
                          const HarnessOptions& options) {
  const auto selection = resolve_selection(ids);
  std::vector<std::vector<CheckOutcome>> per_entry(entries.size());
  std::vector<std::string> errors(entries.size());
  const RunOptions run_options{options.audit};
  const auto n = static_cast<long long>(entries.size());
#pragma omp parallel for schedule(dynamic)
  for (long long e = 0; e < n; ++e) {
    const auto& entry = entries[e];
    try {
      GroupContext gc(entry.g);
      std::vector<FactInstance> instances{{entry.name + "#trivial", trivial_factorisation(entry.g)}};
      for (std::size_t i = 0; i < entry.factorisations.size(); ++i)
        instances.push_back({entry.name + "#f" + std::to_string(i), entry.factorisations[i]});
      for (const auto& id : selection) {
        const auto& spec = find_theorem(id);
        auto run_one = [&](auto&& call) {
          const auto start = std::chrono::steady_clock::now();
          auto outs = call();
          const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
          for (auto& o : outs) {
            if (options.timings) o.elapsed_ms = ms;
            per_entry[e].push_back(std::move(o));
          }
        };
        if (spec.scope == Scope::Group) {
          run_one([&] { return run_theorem(spec, gc, entry.name, run_options); });
        } else {
          for (const auto& inst : instances) run_one([&] { return run_theorem(spec, gc, inst, run_options); });
        }
      }
    } catch (const CapExceeded& ex) {
      per_entry[e].clear();
      errors[e] = ex.what();
    }
  }
  HarnessReport report;
  for (const auto& id : selection) report.coverage[id] = 0;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    if (!errors[e].empty()) report.skipped.emplace_back(entries[e].name, errors[e]);
    for (auto& o : per_entry[e]) {
      if (o.hypothesis) ++report.coverage[o.theorem];
      if (o.failed()) report.failures.push_back(o);
      report.outcomes.push_back(std::move(o));
    }
  }
  return report;
}

std::string render_report(const HarnessReport& report) {
  std::vector<std::array<std::string, 5>> rows{{"theorem", "instance", "parameter", "hyp", "concl"}};
  for (const auto& o : report.outcomes)
    rows.push_back({o.theorem, o.instance, o.parameter.empty() ? "-" : o.parameter, o.hypothesis ? "yes" : "no",
                    o.conclusion ? (*o.conclusion ? "yes" : "NO") : "-"});
  std::array<std::size_t, 5> width{};
  for (const auto& r : rows)
    for (std::size_t c = 0; c < 5; ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream out;
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < 5; ++c) {
      out << r[c];
      if (c < 4) out << std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << '\n';
  }
  out << "\ncoverage\n";
  for (const auto& spec : theorem_registry()) {
    auto it = report.coverage.find(spec.id);
    if (it == report.coverage.end()) continue;
    out << "  " << spec.id << std::string(10 - std::min<std::size_t>(spec.id.size(), 9), ' ') << it->second
        << (it->second == 0 ? "  (vacuous)" : "") << '\n';
  }
  for (const auto& [name, why] : report.skipped) out << "skipped " << name << ": " << why << '\n';
  out << "failures: " << report.failures.size() << '\n';
  for (const auto& f : report.failures) {
    out << "  FAIL " << f.theorem << ' ' << f.instance << ' ' << f.parameter << ':';
    for (const auto& c : f.subclauses)
      if (!c.holds) out << " [" << c.name << ']';
    out << '\n';
  }
  return out.str();
}

}  // namespace vanish
