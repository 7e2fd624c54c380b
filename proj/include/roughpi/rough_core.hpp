#pragma once

// k-rough numbers, primorials, totients and the groups M(P_k).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace roughpi {

using u64 = std::uint64_t;

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline void require_prime(u64 k) {
  if (k == 1) throw DomainError("S_1 is undefined: rough index must be a prime >= 2");
  if (!is_prime(k)) throw DomainError("rough index " + std::to_string(k) + " is not prime");
}

/// Smallest prime strictly greater than k.
inline u64 next_prime(u64 k) {
  u64 n = k + 1;
  while (!is_prime(n)) ++n;
  return n;
}

/// Primes strictly below k, ascending.
inline std::vector<u64> primes_below(u64 k) {
  std::vector<u64> out;
  for (u64 p = 2; p < k; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

/// Product of all primes strictly below k; primorial(2) = 1.
inline u64 primorial(u64 k) {
  require_prime(k);
  u64 value = 1;
  for (u64 p : primes_below(k)) {
    if (value > std::numeric_limits<u64>::max() / p)
      throw DomainError("primorial of " + std::to_string(k) + " overflows 64 bits");
    value *= p;
  }
  return value;
}

inline u64 gcd(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Euler's totient by trial-division factorization.
inline u64 totient(u64 n) {
  if (n == 0) throw DomainError("totient of 0");
  u64 result = n;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Ascending prefix of S_k: every n <= limit with no prime factor below k.
struct RoughSet {
  u64 k = 2;
  u64 limit = 0;
  std::vector<u64> elements;

  bool contains(u64 n) const { return std::binary_search(elements.begin(), elements.end(), n); }
  bool operator==(const RoughSet&) const = default;
};

inline bool is_rough(u64 n, const std::vector<u64>& small_primes) {
  return std::none_of(small_primes.begin(), small_primes.end(), [n](u64 p) { return n % p == 0; });
}

inline RoughSet rough_prefix(u64 k, u64 limit) {
  require_prime(k);
  if (limit < 1) throw DomainError("rough_prefix limit must be >= 1");
  const auto small = primes_below(k);
  RoughSet s{k, limit, {}};
  for (u64 n = 1; n <= limit; ++n)
    if (is_rough(n, small)) s.elements.push_back(n);
  return s;
}

/// S_{k'} = S_k - k S_k, valid on the same prefix limit.
inline RoughSet refine(const RoughSet& s, u64 k) {
  require_prime(k);
  if (s.k != k)
    throw IntegrityError("refine: set is S_" + std::to_string(s.k) + ", not S_" + std::to_string(k));
  const auto small = primes_below(k);
  if (s.elements.empty() || s.elements.front() != 1)
    throw IntegrityError("refine: rough prefix must start at 1");
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    u64 n = s.elements[i];
    if (n > s.limit || (i > 0 && n <= s.elements[i - 1]) || !is_rough(n, small))
      throw IntegrityError("refine: element " + std::to_string(n) + " is not in S_" + std::to_string(k));
  }

  std::vector<u64> multiples;
  for (u64 m : s.elements) {
    if (m > s.limit / k) break;
    multiples.push_back(k * m);
  }
  RoughSet out{next_prime(k), s.limit, {}};
  std::set_difference(s.elements.begin(), s.elements.end(), multiples.begin(), multiples.end(),
                      std::back_inserter(out.elements));
  return out;
}

/// The modulo multiplication group M(P_k), i.e. residues coprime to P_k.
struct Mmg {
  u64 k = 2;
  u64 modulus = 1;
  std::vector<u64> elements;

  u64 order() const { return elements.size(); }
  bool contains(u64 r) const { return std::binary_search(elements.begin(), elements.end(), r); }
};

/// Brute-force closure check, O(order^2). Feasible through k = 17.
inline bool is_closed(const Mmg& g) {
  std::vector<bool> member(g.modulus, false);
  for (u64 e : g.elements) member[e % g.modulus] = true;
  for (u64 a : g.elements)
    for (u64 b : g.elements)
      if (!member[(a * b) % g.modulus]) return false;
  return true;
}

inline constexpr u64 kMmgClosureCheckLimit = 500000;

/// Group elements are the first phi(P_k) rough numbers reduced mod P_k.
inline Mmg mmg(u64 k) {
  const u64 modulus = primorial(k);
  if (modulus > 100'000'000) throw DomainError("mmg: modulus P_k too large to enumerate");
  const u64 order = totient(modulus);
  const auto prefix = rough_prefix(k, modulus);
  if (prefix.elements.size() < order)
    throw IntegrityError("mmg: fewer rough numbers below P_k than phi(P_k)");

  Mmg g{k, modulus, {}};
  for (u64 i = 0; i < order; ++i) g.elements.push_back(prefix.elements[i] % modulus);
  std::sort(g.elements.begin(), g.elements.end());
  g.elements.erase(std::unique(g.elements.begin(), g.elements.end()), g.elements.end());
  if (g.order() != order) throw IntegrityError("mmg: reduced elements are not distinct");
  if (!g.contains(1 % modulus)) throw IntegrityError("mmg: identity missing");
  if (modulus <= kMmgClosureCheckLimit && order <= 1000 && !is_closed(g))
    throw IntegrityError("mmg: not closed under multiplication");
  return g;
}

/// OEIS b-file text: "index value" per line, 1-based.
inline std::string to_bfile(const std::vector<u64>& values, u64 offset = 1) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (offset + i) << ' ' << values[i] << '\n';
  return os.str();
}

}  // namespace roughpi
