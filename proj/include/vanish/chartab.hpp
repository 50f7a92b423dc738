#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vanish/cyclo.hpp"
#include "vanish/perm.hpp"

namespace vanish {

struct CharTable {
  std::size_t group_order = 1;
  ClassData classes;
  std::size_t exponent = 1;
  /// values[row][class], every entry stored at conductor `exponent`.
  std::vector<std::vector<Cyc>> values;
  std::vector<long long> degrees;
  /// The prime field the eigenspaces were separated over.
  std::uint64_t prime = 0;

  std::size_t rows() const { return values.size(); }
  const Cyc& operator()(std::size_t row, std::size_t cls) const { return values[row][cls]; }
};

struct DixonOptions {
  /// Primes below this are skipped; lets tests force a different field.
  std::uint64_t min_prime = 0;
  std::size_t max_attempts = 32;
};

/// Exact irreducible characters by Dixon-Schneider. Rows are sorted by
/// degree, then by their value sequence.
CharTable character_table(const Group& g, const DixonOptions& options = {});
CharTable character_table(const Group& g, const ClassData& classes, const DixonOptions& options = {});

/// Smallest prime q = 1 (mod e) with q > max(2 sqrt(order), floor - 1).
std::uint64_t dixon_prime(std::size_t order, std::size_t exponent, std::uint64_t floor = 0);

/// Strict row order used for the final table.
bool row_less(const std::vector<Cyc>& a, long long da, const std::vector<Cyc>& b, long long db);

struct VanishingProfile {
  /// Per class: rows of the table that are zero on the class.
  std::vector<std::vector<std::size_t>> witnesses;
  /// Per element index of the group.
  std::vector<bool> is_vanishing;
  /// Element indices, ascending.
  std::vector<std::size_t> vanishing_elements;
  std::vector<std::size_t> vanishing_ppo;
  /// i_G(x) for every element, from the class sizes.
  std::vector<std::size_t> element_index;
  std::vector<std::size_t> element_order;

  bool class_vanishing(std::size_t cls) const { return !witnesses[cls].empty(); }
  /// Vanishing elements of prime power order whose order is coprime to p.
  std::vector<std::size_t> vanishing_p_regular_ppo(std::size_t p) const;
};

VanishingProfile vanishing_profile(const Group& g, const CharTable& table);
VanishingProfile vanishing_profile(const Group& g);

/// Whether x is a zero of some irreducible character of H itself.
bool is_vanishing_in(const Group& h, const Perm& x);

bool has_p_defect_zero(const CharTable& table, std::size_t p);
bool has_p_defect_zero(const Group& g, std::size_t p);

/// Fixed-width text table; columns are headed by class representative,
/// size and order.
std::string render_table(const CharTable& table);

}  // namespace vanish
