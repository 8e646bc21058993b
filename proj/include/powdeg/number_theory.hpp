#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "powdeg/bigint.hpp"

namespace powdeg {

struct PrimePower {
  std::uint64_t p = 0;
  unsigned e = 0;

  friend bool operator==(PrimePower const&, PrimePower const&) = default;
  friend auto operator<=>(PrimePower const&, PrimePower const&) = default;
};

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b %
                                    mod);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                             std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1U;
  }
  return result;
}

// Brent's variant of Pollard rho. n must be odd, composite and not a
// perfect prime power of a small prime (trial division removes those).
inline std::uint64_t pollard_rho(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

}  // namespace detail

/// Deterministic Miller-Rabin; the witness set is exact for all n < 2^64.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = detail::pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Prime factorization of n >= 1, ascending by prime.
inline std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d < 1000 && d * d <= n; ++d) {
    while (n % d == 0) {
      primes.push_back(d);
      n /= d;
    }
  }
  std::vector<std::uint64_t> stack;
  if (n > 1) stack.push_back(n);
  while (!stack.empty()) {
    std::uint64_t m = stack.back();
    stack.pop_back();
    if (is_prime(m)) {
      primes.push_back(m);
      continue;
    }
    std::uint64_t d = detail::pollard_rho(m);
    stack.push_back(d);
    stack.push_back(m / d);
  }
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> out;
  for (std::uint64_t p : primes) {
    if (!out.empty() && out.back().p == p) {
      ++out.back().e;
    } else {
      out.push_back({p, 1});
    }
  }
  return out;
}

/// p^e in 64 bits; throws std::overflow_error when it does not fit.
inline std::uint64_t checked_pow(std::uint64_t p, unsigned e) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (result > UINT64_MAX / p) throw std::overflow_error("p^e exceeds 64 bits");
    result *= p;
  }
  return result;
}

/// Exponent of p in i, for i != 0.
inline unsigned valuation(std::uint64_t p, std::uint64_t i) {
  unsigned v = 0;
  while (i % p == 0) {
    i /= p;
    ++v;
  }
  return v;
}

/// Euler's totient of p^t.
inline BigInt phi_prime_power(std::uint64_t p, unsigned t) {
  if (t == 0) return 1;
  return pow(p, t) - pow(p, t - 1);
}

}  // namespace powdeg
