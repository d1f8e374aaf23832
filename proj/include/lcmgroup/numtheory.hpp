#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace lcmgroup {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime divisors, ascending.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Largest power of p dividing n.
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

/// Prime p when n = p^k with k >= 1, else 0. n = 1 yields 0.
inline std::uint64_t prime_power_base(std::uint64_t n) {
  const auto ps = prime_divisors(n);
  return ps.size() == 1 ? ps.front() : 0;
}

inline bool is_squarefree(std::uint64_t n) {
  for (auto p : prime_divisors(n))
    if ((n / p) % p == 0) return false;
  return true;
}

}  // namespace lcmgroup
