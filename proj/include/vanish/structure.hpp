#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "vanish/perm.hpp"

namespace vanish {

/// Ascending series 1 = terms[0] < terms[1] < ... < terms.back() = G of
/// normal subgroups of G.
struct NormalSeries {
  std::vector<Group> terms;
  std::vector<std::size_t> factor_orders;
};

Group normal_closure(const Group& g, const std::vector<Perm>& s);
/// Intersection of the conjugates of h over a right transversal.
Group core(const Group& g, const Group& h);
/// Normal subgroups in canonical order (trivial group first, G last).
std::vector<Group> all_normals(const Group& g);
/// Inclusion-minimal nontrivial normal subgroups in canonical order.
std::vector<Group> minimal_normals(const Group& g);
/// Minimal normal subgroup whose least nontrivial element is smallest.
Group canonical_minimal_normal(const Group& g);
NormalSeries chief_series(const Group& g);

/// Largest normal p-subgroup.
Group o_p(const Group& g, std::size_t p);
/// Largest normal p'-subgroup.
Group o_pprime(const Group& g, std::size_t p);
Group fitting(const Group& g);
Group fitting2(const Group& g);
Group sylow(const Group& g, std::size_t p);
Group normalizer(const Group& g, const Group& h);
/// Elements of g commuting with every element of h.
Group centralizer_of(const Group& g, const Group& h);

Group derived(const Group& g);
Group center(const Group& g);
/// Frattini subgroup of a p-group, as P' times the p-th powers.
Group frattini_of_pgroup(const Group& p_group, std::size_t p);

bool is_abelian(const Group& g);
bool is_nilpotent(const Group& g);
bool is_soluble(const Group& g);
bool is_p_group(const Group& g, std::size_t p);
bool is_elementary_abelian(const Group& g);
/// Set of p-elements (identity included) has exactly |G|_p members.
bool has_normal_sylow(const Group& g, std::size_t p);
bool is_simple(const Group& g);

/// Set of all sigma-elements of G (identity included), canonical order.
std::vector<Perm> sigma_elements(const Group& g, const std::vector<std::size_t>& sigma);

struct HallVerdict {
  bool holds = false;
  std::optional<Group> witness;
};

/// Decides whether G has a nilpotent normal Hall sigma-subgroup.
HallVerdict normal_hall_nilpotent(const Group& g, const std::vector<std::size_t>& sigma);

struct PrimeReport {
  std::size_t p = 0;
  Group sylow;
  Group o_p;
  Group o_pprime;
  bool is_p_nilpotent = false;
  bool is_p_soluble = false;
  std::optional<std::size_t> p_length;
  bool is_p_supersoluble = false;
};

struct StructReport {
  bool is_abelian = false;
  bool is_nilpotent = false;
  bool is_soluble = false;
  bool is_supersoluble = false;
  Group center;
  Group derived;
  Group fitting;
  Group fitting2;
  NormalSeries chief;
  std::vector<PrimeReport> primes;

  const PrimeReport& prime(std::size_t p) const;
};

bool is_p_nilpotent(const Group& g, std::size_t p);
bool is_p_soluble(const NormalSeries& chief, std::size_t p);
bool is_supersoluble(const NormalSeries& chief);
bool is_p_supersoluble(const NormalSeries& chief, std::size_t p);
std::optional<std::size_t> p_length(const Group& g, std::size_t p);

StructReport predicates(const Group& g);

}  // namespace vanish
