#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace charvar {

// Raised when a requested computation exceeds the configured work bound;
// callers may retry with an explicit override.
struct WorkBoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace charvar

namespace charvar::num {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// Trial division; fine for the magnitudes this project handles (< 2^40 or so).
bool is_prime(u64 n);

// Prime factorization as (prime, exponent) pairs, ascending.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

// Distinct prime divisors, ascending.
std::vector<u64> prime_divisors(u64 n);

// q = p^k with p prime, k >= 1. Returns nothing if q is not a prime power.
std::optional<std::pair<u64, unsigned>> prime_power(u64 q);

// All prime powers p^k <= bound, ascending (2, 3, 4, 5, 7, 8, 9, ...).
std::vector<u64> prime_powers_upto(u64 bound);

std::vector<u64> primes_upto(u64 bound);

// a^e with overflow check; throws std::overflow_error if the result
// does not fit in 64 bits.
u64 checked_pow(u64 a, unsigned e);

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 a, u64 e, u64 m);

}  // namespace charvar::num
