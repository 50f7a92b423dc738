#pragma once

// Reference character tables computed exactly over Q(zeta_e) from the class
// algebra, with no modular arithmetic. Slow; meant for |G| <= 60.

#include <vector>

#include "vanish/cyclo.hpp"
#include "vanish/perm.hpp"

namespace oracle {

using vanish::ClassData;
using vanish::Cyc;
using vanish::Group;

struct BruteTable {
  /// rows[i][k], lifted to conductor = exponent and sorted with row_less.
  std::vector<std::vector<Cyc>> rows;
  std::vector<long long> degrees;
};

/// Conjugacy classes by direct conjugation, as a class_of array.
std::vector<std::size_t> brute_class_of(const Group& g);

/// a(i, j, k) = #{(x, y) in C_i x C_j : xy = g_k} by multiplying all pairs.
std::vector<long long> brute_coefficients(const Group& g, const ClassData& classes);

BruteTable brute_character_table(const Group& g, const ClassData& classes);

Cyc inverse(const Cyc& c);

/// Sum_k h_k a(g_k) conj(b(g_k)) = |G| delta(a, b) for all row pairs.
bool rows_orthogonal(const std::vector<std::vector<Cyc>>& rows, const ClassData& classes, std::size_t order);
/// Sum_chi chi(g_k) conj(chi(g_l)) = |C_G(g_k)| delta(k, l).
bool columns_orthogonal(const std::vector<std::vector<Cyc>>& rows, const ClassData& classes, std::size_t order);

}  // namespace oracle
