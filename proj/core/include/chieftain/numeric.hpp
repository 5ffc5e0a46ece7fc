#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace chieftain {

/// Trial-division factorization; all orders here are at most the element
/// cap, so nothing cleverer is warranted.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(static_cast<std::uint32_t>(p), e);
  }
  if (n > 1) out.emplace_back(static_cast<std::uint32_t>(n), 1u);
  return out;
}

inline std::vector<std::uint32_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint32_t> ps;
  for (auto [p, e] : factorize(n)) ps.push_back(p);
  return ps;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

/// Largest power of p dividing n.
inline std::uint64_t p_part(std::uint64_t n, std::uint32_t p) {
  std::uint64_t pk = 1;
  while (n % p == 0) {
    n /= p;
    pk *= p;
  }
  return pk;
}

inline bool is_p_power(std::uint64_t n, std::uint32_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

inline bool is_prime_power(std::uint64_t n) {
  return n > 1 && factorize(n).size() == 1;
}

/// True iff every prime divisor of n lies in pi (n = 1 passes vacuously).
inline bool is_pi_number(std::uint64_t n, const std::vector<std::uint32_t>& pi) {
  for (std::uint32_t p : prime_divisors(n)) {
    bool found = false;
    for (std::uint32_t q : pi)
      if (p == q) found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace chieftain
