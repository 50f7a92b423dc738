#include "vanish/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace vanish {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::size_t> prime_divisors(std::uint64_t n) {
  std::vector<std::size_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime_power(std::uint64_t n) { return n > 1 && prime_divisors(n).size() == 1; }

bool is_p_power(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_square_free(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

std::uint64_t sigma_part(std::uint64_t n, const std::vector<std::size_t>& primes) {
  std::uint64_t r = 1;
  for (auto p : primes) r *= p_part(n, p);
  return r;
}

bool is_sigma_number(std::uint64_t n, const std::vector<std::size_t>& primes) {
  return sigma_part(n, primes) == n;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto p : prime_divisors(n)) r = r / p * (p - 1);
  return r;
}

int moebius(std::uint64_t n) {
  if (!is_square_free(n)) return 0;
  return prime_divisors(n).size() % 2 == 0 ? 1 : -1;
}

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace vanish
