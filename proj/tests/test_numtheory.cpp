#include <doctest.h>

#include "vanish/numtheory.hpp"

using namespace vanish;

TEST_CASE("primes and prime powers") {
  CHECK(is_prime(2));
  CHECK(is_prime(31));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_divisors(360) == std::vector<std::size_t>{2, 3, 5});
  CHECK(prime_divisors(1).empty());
  CHECK_FALSE(is_prime_power(1));
  CHECK(is_prime_power(27));
  CHECK_FALSE(is_prime_power(12));
  CHECK(is_p_power(1, 5));
  CHECK(is_p_power(125, 5));
  CHECK_FALSE(is_p_power(10, 5));
}

TEST_CASE("arithmetic functions") {
  CHECK(is_square_free(30));
  CHECK_FALSE(is_square_free(12));
  CHECK(is_square_free(1));
  CHECK(p_part(48, 2) == 16);
  CHECK(p_part(48, 5) == 1);
  CHECK(sigma_part(360, {2, 5}) == 40);
  CHECK(is_sigma_number(12, {2, 3}));
  CHECK_FALSE(is_sigma_number(10, {2, 3}));
  CHECK(is_sigma_number(1, {}));
  CHECK(euler_phi(30) == 8);
  CHECK(moebius(30) == -1);
  CHECK(moebius(12) == 0);
  CHECK(divisors(12) == std::vector<std::size_t>{1, 2, 3, 4, 6, 12});
}
