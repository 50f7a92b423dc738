#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace vanish {

bool is_prime(std::uint64_t n);
/// Distinct prime divisors in ascending order.
std::vector<std::size_t> prime_divisors(std::uint64_t n);
bool is_prime_power(std::uint64_t n);  // false for 1
/// n is a power of p, including p^0 = 1.
bool is_p_power(std::uint64_t n, std::uint64_t p);
bool is_square_free(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
/// Product of the prime-power parts of n for primes in `primes`.
std::uint64_t sigma_part(std::uint64_t n, const std::vector<std::size_t>& primes);
/// Every prime divisor of n lies in `primes` (true for n = 1).
bool is_sigma_number(std::uint64_t n, const std::vector<std::size_t>& primes);
std::uint64_t euler_phi(std::uint64_t n);
int moebius(std::uint64_t n);
std::vector<std::size_t> divisors(std::size_t n);

}  // namespace vanish
