#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vanish/perm.hpp"
#include "vanish/structure.hpp"

namespace vanish {

inline constexpr std::size_t kDefaultSubgroupCap = 512;

/// G = AB with A and B carrying G as parent.
struct Factorisation {
  Group g;
  Group a;
  Group b;
};

/// Throws Error("not a factorisation") unless |A||B| = |G||A n B|.
Factorisation make_factorisation(const Group& g, const Group& a, const Group& b);
Factorisation trivial_factorisation(const Group& g);

struct CoreVerdict {
  bool holds = true;
  /// First proper normal K (canonical order) with no covered section above it.
  std::optional<Group> failing_k;
};

CoreVerdict is_core_factorisation(const Factorisation& f);
CoreVerdict is_core_factorisation_serial(const Factorisation& f);

struct CoreWitness {
  NormalSeries series;
  /// labels[i] is 'A' or 'B': the factor covering terms[i+1]/terms[i].
  std::vector<char> labels;
  /// Number of covered minimal normal subgroups offered at each stage.
  std::vector<std::size_t> alternatives;
  /// Set when the greedy choice had to be revised.
  bool backtracked = false;
};

std::optional<CoreWitness> chief_witness(const Factorisation& f);

struct WitnessCheck {
  bool chief = false;
  bool cover = false;
  bool prefactorised = false;
  /// Each term N_i = (N_i n A)(N_i n B) is itself a core-factorisation.
  bool inner_core = false;
  bool ok() const { return chief && cover && prefactorised && inner_core; }
};

WitnessCheck verify_witness(const Factorisation& f, const CoreWitness& w);

/// |S n A| |S n B| = |S| |S n A n B|.
bool is_prefactorised(const Factorisation& f, const Group& s);

/// G/M = (AM/M)(BM/M) realised by the coset action on M.
Factorisation quotient_factorisation(const Factorisation& f, const Group& m);

/// All subgroups of h in canonical order, built up from cyclic subgroups.
/// Throws CapExceeded when |h| > cap.
std::vector<Group> all_subgroups(const Group& h, std::size_t cap = kDefaultSubgroupCap);

struct Permutability {
  bool mutual = false;
  bool total = false;
  bool tcc = false;
};

Permutability permutability(const Factorisation& f, std::size_t cap = kDefaultSubgroupCap);
Permutability permutability_serial(const Factorisation& f, std::size_t cap = kDefaultSubgroupCap);

}  // namespace vanish
