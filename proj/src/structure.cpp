#include "vanish/structure.hpp"

#include <algorithm>
#include <unordered_set>

#include "vanish/kernels.hpp"
#include "vanish/numtheory.hpp"

namespace vanish {

namespace {

void require_prime(std::size_t p) {
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not a prime");
}

bool is_sigma_group(const Group& h, const std::vector<std::size_t>& sigma) {
  return is_sigma_number(h.order(), sigma);
}

/// Distinct normal closures of nontrivial elements, in canonical order.
std::vector<Group> element_closures(const Group& g) {
  const auto classes = conjugacy_classes(g);
  auto closures = class_normal_closures(g, classes);
  std::vector<Group> out;
  for (std::size_t i = 1; i < closures.size(); ++i)
    if (std::find(out.begin(), out.end(), closures[i]) == out.end()) out.push_back(closures[i]);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Group join_all(const Group& g, const std::vector<Group>& parts) {
  std::vector<Perm> gens;
  for (const auto& h : parts) gens.insert(gens.end(), h.generators().begin(), h.generators().end());
  return subgroup_generated(g, std::move(gens));
}

Group largest_normal_sigma_subgroup(const Group& g, const std::vector<std::size_t>& sigma) {
  std::vector<Group> parts;
  for (const auto& n : element_closures(g))
    if (is_sigma_group(n, sigma)) parts.push_back(n);
  return join_all(g, parts);
}

std::vector<std::size_t> complement_primes(const Group& g, std::size_t p) {
  std::vector<std::size_t> out;
  for (auto q : prime_divisors(g.order()))
    if (q != p) out.push_back(q);
  return out;
}

const Perm& least_nontrivial(const Group& h) { return h.element(1); }

}  // namespace

Group normal_closure(const Group& g, const std::vector<Perm>& s) {
  for (const auto& x : s)
    if (!g.contains(x)) throw Error("normal_closure: " + x.to_cycles() + " is not in the group");
  std::vector<Perm> gens;
  for (const auto& x : s)
    if (!x.is_identity()) gens.push_back(x);
  auto h = Group::generate(gens, g.degree(), g.order() + 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < gens.size() && !changed; ++i) {
      for (const auto& t : g.generators()) {
        auto c = conjugate(gens[i], t);
        if (!h.contains(c)) {
          gens.push_back(std::move(c));
          h = Group::generate(gens, g.degree(), g.order() + 1);
          changed = true;
          break;
        }
      }
    }
  }
  return h.with_parent(g);
}

Group core(const Group& g, const Group& h) {
  if (!g.contains_subgroup(h)) throw Error("core: H is not a subgroup of G");
  std::vector<bool> seen(g.order(), false);
  std::vector<Perm> current(h.elements().begin(), h.elements().end());
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (seen[i]) continue;
    const auto& t = g.element(i);
    for (const auto& x : h.elements()) seen[g.at(x * t)] = true;
    // x lies in h^t iff t x t^-1 lies in h
    const auto t_inv = t.inverse();
    std::erase_if(current, [&](const Perm& x) { return !h.contains(conjugate(x, t_inv)); });
  }
  return Group::from_elements(std::move(current), g.degree()).with_parent(g);
}

std::vector<Group> all_normals(const Group& g) {
  std::vector<Group> found{Group::trivial(g.degree()).with_parent(g)};
  for (const auto& n : element_closures(g)) found.push_back(n);
  for (std::size_t a = 0; a < found.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      auto j = join(found[a], found[b]);
      if (std::find(found.begin(), found.end(), j) == found.end()) found.push_back(j.with_parent(g));
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

std::vector<Group> minimal_normals(const Group& g) {
  if (g.is_trivial()) throw Error("minimal_normals: trivial group");
  const auto closures = element_closures(g);
  std::vector<Group> out;
  for (const auto& n : closures) {
    const bool minimal = std::none_of(closures.begin(), closures.end(), [&](const Group& m) {
      return m.order() < n.order() && n.contains_subgroup(m);
    });
    if (minimal) out.push_back(n);
  }
  std::sort(out.begin(), out.end(),
            [](const Group& a, const Group& b) { return least_nontrivial(a) < least_nontrivial(b); });
  return out;
}

Group canonical_minimal_normal(const Group& g) { return minimal_normals(g).front(); }

NormalSeries chief_series(const Group& g) {
  NormalSeries series;
  auto n = Group::trivial(g.degree()).with_parent(g);
  series.terms.push_back(n);
  while (n.order() < g.order()) {
    const CosetAction action(g, n);
    auto next = action.preimage(canonical_minimal_normal(action.quotient()));
    series.factor_orders.push_back(next.order() / n.order());
    series.terms.push_back(next);
    n = next;
  }
  return series;
}

Group o_p(const Group& g, std::size_t p) {
  require_prime(p);
  return largest_normal_sigma_subgroup(g, {p});
}

Group o_pprime(const Group& g, std::size_t p) {
  require_prime(p);
  return largest_normal_sigma_subgroup(g, complement_primes(g, p));
}

Group fitting(const Group& g) {
  std::vector<Group> parts;
  for (auto p : prime_divisors(g.order())) parts.push_back(o_p(g, p));
  return join_all(g, parts);
}

Group fitting2(const Group& g) {
  const CosetAction action(g, fitting(g));
  return action.preimage(fitting(action.quotient()));
}

Group normalizer(const Group& g, const Group& h) {
  std::vector<Perm> els;
  for (const auto& t : g.elements()) {
    const bool normalizes = std::all_of(h.generators().begin(), h.generators().end(),
                                        [&](const Perm& s) { return h.contains(conjugate(s, t)); });
    if (normalizes) els.push_back(t);
  }
  return Group::from_elements(std::move(els), g.degree()).with_parent(g);
}

Group centralizer_of(const Group& g, const Group& h) {
  std::vector<Perm> elems;
  for (const auto& x : g.elements()) {
    const bool commutes = std::all_of(h.generators().begin(), h.generators().end(),
                                      [&](const Perm& y) { return x * y == y * x; });
    if (commutes) elems.push_back(x);
  }
  return Group::from_elements(std::move(elems), g.degree()).with_parent(g);
}

Group sylow(const Group& g, std::size_t p) {
  require_prime(p);
  const auto target = p_part(g.order(), p);
  auto s = Group::trivial(g.degree()).with_parent(g);
  while (s.order() < target) {
    const auto n = normalizer(g, s);
    bool extended = false;
    for (const auto& x : n.elements()) {
      if (s.contains(x) || !is_p_power(x.order(), p)) continue;
      std::vector<Perm> gens(s.generators().begin(), s.generators().end());
      gens.push_back(x);
      s = subgroup_generated(g, std::move(gens));
      extended = true;
      break;
    }
    if (!extended) throw Error("sylow: no p-element in the normaliser extends the p-subgroup");
  }
  return s;
}

Group derived(const Group& g) {
  std::vector<Perm> comms;
  const auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) comms.push_back(commutator(gens[i], gens[j]));
  return normal_closure(g, comms);
}

Group center(const Group& g) {
  std::vector<Perm> els;
  for (const auto& x : g.elements()) {
    const bool central = std::all_of(g.generators().begin(), g.generators().end(),
                                     [&](const Perm& s) { return x * s == s * x; });
    if (central) els.push_back(x);
  }
  return Group::from_elements(std::move(els), g.degree()).with_parent(g);
}

Group frattini_of_pgroup(const Group& p_group, std::size_t p) {
  require_prime(p);
  if (!is_p_power(p_group.order(), p)) throw Error("frattini_of_pgroup: not a p-group");
  const auto d = derived(p_group);
  std::vector<Perm> gens(d.generators().begin(), d.generators().end());
  std::unordered_set<Perm, PermHash> powers;
  for (const auto& x : p_group.elements()) {
    auto y = x.pow(static_cast<long long>(p));
    if (!y.is_identity() && powers.insert(y).second) gens.push_back(std::move(y));
  }
  return subgroup_generated(p_group, std::move(gens));
}

bool is_abelian(const Group& g) {
  const auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

bool is_nilpotent(const Group& g) {
  auto term = g;
  while (!term.is_trivial()) {
    std::vector<Perm> comms;
    for (const auto& x : term.generators())
      for (const auto& s : g.generators()) comms.push_back(commutator(x, s));
    auto next = normal_closure(g, comms);
    if (next.order() == term.order()) return false;
    term = next;
  }
  return true;
}

bool is_soluble(const Group& g) {
  auto term = g;
  while (!term.is_trivial()) {
    auto next = derived(term);
    if (next.order() == term.order()) return false;
    term = next;
  }
  return true;
}

bool is_p_group(const Group& g, std::size_t p) { return is_p_power(g.order(), p); }

bool is_elementary_abelian(const Group& g) {
  if (g.is_trivial()) return true;
  const auto primes = prime_divisors(g.order());
  if (primes.size() != 1 || !is_abelian(g)) return false;
  return std::all_of(g.elements().begin(), g.elements().end(),
                     [&](const Perm& x) { return x.order() == 1 || x.order() == primes[0]; });
}

bool has_normal_sylow(const Group& g, std::size_t p) {
  require_prime(p);
  const auto count = std::count_if(g.elements().begin(), g.elements().end(),
                                   [&](const Perm& x) { return is_p_power(x.order(), p); });
  return static_cast<std::uint64_t>(count) == p_part(g.order(), p);
}

bool is_simple(const Group& g) { return !g.is_trivial() && all_normals(g).size() == 2; }

std::vector<Perm> sigma_elements(const Group& g, const std::vector<std::size_t>& sigma) {
  std::vector<Perm> out;
  for (const auto& x : g.elements())
    if (is_sigma_number(x.order(), sigma)) out.push_back(x);
  return out;
}

namespace {

/// The sigma-elements form a subgroup of order |G|_sigma; returns it.
std::optional<Group> sigma_element_subgroup(const Group& g, const std::vector<std::size_t>& sigma) {
  auto s = sigma_elements(g, sigma);
  if (s.size() != sigma_part(g.order(), sigma)) return std::nullopt;
  try {
    auto h = Group::generate(s, g.degree(), s.size() + 1);
    if (h.order() != s.size()) return std::nullopt;
    return Group::from_elements(std::move(s), g.degree()).with_parent(g);
  } catch (const CapExceeded&) {
    return std::nullopt;
  }
}

}  // namespace

HallVerdict normal_hall_nilpotent(const Group& g, const std::vector<std::size_t>& sigma) {
  for (auto p : sigma) require_prime(p);
  auto h = sigma_element_subgroup(g, sigma);
  if (!h || !is_nilpotent(*h)) return {};
  return {true, std::move(h)};
}

bool is_p_nilpotent(const Group& g, std::size_t p) {
  require_prime(p);
  return sigma_element_subgroup(g, complement_primes(g, p)).has_value();
}

bool is_p_soluble(const NormalSeries& chief, std::size_t p) {
  return std::all_of(chief.factor_orders.begin(), chief.factor_orders.end(),
                     [&](std::size_t n) { return is_p_power(n, p) || n % p != 0; });
}

bool is_supersoluble(const NormalSeries& chief) {
  return std::all_of(chief.factor_orders.begin(), chief.factor_orders.end(),
                     [](std::size_t n) { return is_prime(n); });
}

bool is_p_supersoluble(const NormalSeries& chief, std::size_t p) {
  if (!is_p_soluble(chief, p)) return false;
  return std::all_of(chief.factor_orders.begin(), chief.factor_orders.end(),
                     [&](std::size_t n) { return n % p != 0 || n == p; });
}

std::optional<std::size_t> p_length(const Group& g, std::size_t p) {
  require_prime(p);
  auto n = o_pprime(g, p);
  std::size_t length = 0;
  while (n.order() < g.order()) {
    const CosetAction to_p(g, n);
    const auto pbar = o_p(to_p.quotient(), p);
    if (pbar.is_trivial()) return std::nullopt;
    const auto m = to_p.preimage(pbar);
    ++length;
    if (m.order() == g.order()) break;
    const CosetAction to_pprime(g, m);
    n = to_pprime.preimage(o_pprime(to_pprime.quotient(), p));
  }
  return length;
}

const PrimeReport& StructReport::prime(std::size_t p) const {
  for (const auto& r : primes)
    if (r.p == p) return r;
  throw Error("no structural record for prime " + std::to_string(p));
}

StructReport predicates(const Group& g) {
  StructReport rep;
  rep.is_abelian = is_abelian(g);
  rep.is_nilpotent = is_nilpotent(g);
  rep.is_soluble = is_soluble(g);
  rep.chief = chief_series(g);
  rep.is_supersoluble = is_supersoluble(rep.chief);
  rep.center = center(g);
  rep.derived = derived(g);
  rep.fitting = fitting(g);
  rep.fitting2 = fitting2(g);
  for (auto p : prime_divisors(g.order())) {
    PrimeReport pr;
    pr.p = p;
    pr.sylow = sylow(g, p);
    pr.o_p = o_p(g, p);
    pr.o_pprime = o_pprime(g, p);
    pr.is_p_nilpotent = is_p_nilpotent(g, p);
    pr.is_p_soluble = is_p_soluble(rep.chief, p);
    pr.p_length = pr.is_p_soluble ? p_length(g, p) : std::nullopt;
    pr.is_p_supersoluble = is_p_supersoluble(rep.chief, p);
    rep.primes.push_back(std::move(pr));
  }
  return rep;
}

}  // namespace vanish
