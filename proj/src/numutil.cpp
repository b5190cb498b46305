#include "charvar/numutil.hpp"

#include <cmath>

namespace charvar::num {

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d : {2ull, 3ull, 5ull}) {
    if (n % d == 0) return n == d;
  }
  // 30-wheel
  static const unsigned wheel[] = {1, 7, 11, 13, 17, 19, 23, 29};
  for (u64 base = 0;; base += 30) {
    for (unsigned off : wheel) {
      u64 d = base + off;
      if (d < 2) continue;
      if (d * d > n) return true;
      if (n % d == 0) return n == d;
    }
  }
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  if (n < 2) return out;
  for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) { n /= d; ++e; }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::optional<std::pair<u64, unsigned>> prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return std::make_pair(f[0].first, f[0].second);
}

std::vector<u64> prime_powers_upto(u64 bound) {
  std::vector<u64> out;
  for (u64 p : primes_upto(bound)) {
    u64 q = p;
    while (q <= bound) {
      out.push_back(q);
      if (q > bound / p) break;
      q *= p;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> primes_upto(u64 bound) {
  std::vector<u64> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(bound + 1, true);
  for (u64 i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= bound; j += i) sieve[j] = false;
  }
  return out;
}

u64 checked_pow(u64 a, unsigned e) {
  u64 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (a != 0 && r > UINT64_MAX / a) throw std::overflow_error("checked_pow: 64-bit overflow");
    r *= a;
  }
  return r;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 pow_mod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace charvar::num
