#pragma once

// Binary necklace counting: Moebius and totient functions, Moreau's count of
// primitive necklaces, the total necklace count, and a brute-force
// rotation-class enumerator used as an oracle.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rmac/common.hpp"
#include "rmac/complex_core.hpp"

namespace rmac {

/// Default brute-force ceiling on necklace length.
inline constexpr int kDefaultBruteCap = 16;
/// Largest length the enumerator will ever accept.
inline constexpr int kMaxBruteLength = 24;

/// Prime factorization by trial division as (prime, exponent) pairs.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t d) {
  if (d < 1) throw DomainError("factorize: argument must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    int e = 0;
    while (d % p == 0) {
      d /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (d > 1) out.emplace_back(d, 1);
  return out;
}

inline int mobius(std::int64_t d) {
  if (d < 1) throw DomainError("mobius: argument must be positive");
  int mu = 1;
  for (const auto& [p, e] : factorize(d)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

inline std::int64_t totient(std::int64_t d) {
  if (d < 1) throw DomainError("totient: argument must be positive");
  std::int64_t phi = d;
  for (const auto& [p, e] : factorize(d)) phi = phi / p * (p - 1);
  return phi;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw DomainError("divisors: argument must be positive");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// M(k, n) = (1/n) sum_{d|n} mu(d) k^{n/d}: primitive necklaces of length n over k letters.
inline std::int64_t moreau_aperiodic(std::int64_t k, int n) {
  if (k < 1 || n < 1) throw DomainError("moreau_aperiodic: k and n must be positive");
  std::int64_t sum = 0;
  for (auto d : divisors(n)) sum += mobius(d) * checked_pow(k, static_cast<int>(n / d));
  if (sum % n != 0) throw InternalError("moreau_aperiodic: inexact division");
  return sum / n;
}

/// (1/n) sum_{d|n} phi(d) k^{n/d}, without the cross-check.
inline std::int64_t necklace_total_totient(std::int64_t k, int n) {
  if (k < 1 || n < 1) throw DomainError("necklace_total: k and n must be positive");
  std::int64_t sum = 0;
  for (auto d : divisors(n)) sum += totient(d) * checked_pow(k, static_cast<int>(n / d));
  if (sum % n != 0) throw InternalError("necklace_total: inexact division");
  return sum / n;
}

/// Total number of necklaces; the totient form must equal sum_{d|n} M(k, d).
inline std::int64_t necklace_total(std::int64_t k, int n) {
  const std::int64_t by_totient = necklace_total_totient(k, n);
  std::int64_t by_moreau = 0;
  for (auto d : divisors(n)) by_moreau += moreau_aperiodic(k, static_cast<int>(d));
  if (by_moreau != by_totient)
    throw InternalError("necklace_total: totient form " + std::to_string(by_totient) + " != Moreau sum " +
                        std::to_string(by_moreau));
  return by_totient;
}

struct NecklaceTally {
  int n = 0;
  std::int64_t k = 0;
  std::map<std::int64_t, std::int64_t> aperiodic_by_divisor;
  std::int64_t total = 0;
};

inline NecklaceTally necklace_tally(std::int64_t k, int n) {
  NecklaceTally t{n, k, {}, 0};
  for (auto d : divisors(n)) {
    const auto m = moreau_aperiodic(k, static_cast<int>(d));
    t.aperiodic_by_divisor[d] = m;
    t.total += m;
  }
  if (t.total != necklace_total_totient(k, n)) throw InternalError("necklace tally disagrees with totient form");
  return t;
}

/// Rotate a length-n word so the letter at position i moves to i+k.
inline Mask rotate_word(Mask w, int n, int k) {
  k %= n;
  if (k < 0) k += n;
  if (k == 0) return w;
  return ((w << k) | (w >> (n - k))) & low_mask(n);
}

/// Smallest d with w equal to its rotation by d (d always divides n).
inline int word_period(Mask w, int n) {
  for (int d = 1; d < n; ++d)
    if (n % d == 0 && rotate_word(w, n, d) == w) return d;
  return n;
}

inline int period(const std::string& w) {
  if (w.empty()) throw DomainError("period: empty word");
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    if (w.substr(d) + w.substr(0, d) == w) return static_cast<int>(d);
  }
  return static_cast<int>(n);
}

struct NecklaceClass {
  std::string representative;  // lexicographically minimal rotation
  int period = 0;              // also the class size
};

/// All rotation classes of binary words of length n, by brute force over 2^n words.
inline std::vector<NecklaceClass> enumerate_necklaces(int n, int cap = kMaxBruteLength) {
  if (n < 1) throw DomainError("enumerate_necklaces: n must be positive");
  if (n > cap || n > kMaxBruteLength)
    throw ResourceLimitError("enumerate_necklaces: n=" + std::to_string(n) + " exceeds brute-force cap");
  std::vector<NecklaceClass> out;
  const Mask count = Mask{1} << n;
  for (Mask w = 0; w < count; ++w) {
    // canonical iff no rotation is lexicographically smaller as a string
    bool minimal = true;
    for (int r = 1; r < n && minimal; ++r)
      if (eps_less(rotate_word(w, n, r), w)) minimal = false;
    if (minimal) out.push_back({vertex_string(w, n), word_period(w, n)});
  }
  std::sort(out.begin(), out.end(),
            [](const NecklaceClass& a, const NecklaceClass& b) { return a.representative < b.representative; });
  return out;
}

}  // namespace rmac
