#pragma once

#include <cstdint>
#include <vector>

#include "schur/lemma_report.hpp"

namespace schur {

// All primes up to `limit`, with O(1) membership for values in range.
struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;
  std::vector<bool> is_prime;  // index up to limit

  bool contains(std::uint64_t x) const {
    return x <= limit && is_prime[x];
  }
};

// Parameter chain for the W-trick: W the primorial of w, M = floor(n/W),
// N the smallest prime in [(2+kappa)M, (2+2kappa)M].
struct WTrickParams {
  std::uint64_t n = 0;
  std::uint64_t w = 0;
  std::uint64_t W = 1;
  std::uint64_t M = 0;
  std::uint64_t N = 0;
  double kappa = 0.0;
  std::uint64_t phiW = 1;
};

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

PrimeTable sieve_primes(std::uint64_t limit);

std::uint64_t euler_phi(std::uint64_t m);

WTrickParams build_w_trick(std::uint64_t n, std::uint64_t w, double kappa);

// {x in [1, M] : W*x + b prime}. Requires gcd(b, W) = 1 and
// pt.limit >= W*M + b.
std::vector<std::uint64_t> residue_class_elements(const PrimeTable& pt,
                                                  const WTrickParams& params,
                                                  std::uint64_t b);

// Sum of log x over primes x <= n with x = b (mod W), compared against
// (1 - kappa) * n / phi(W). The comparison may fail at small n; report only.
LemmaReport siegel_walfisz_mass(const PrimeTable& pt, const WTrickParams& params,
                                std::uint64_t b);

// Policy helpers matching the published parameter choices. Both degenerate
// at desk scale (w <= 1, kappa astronomically small); callers normally
// override them.
std::uint64_t default_w_policy(std::uint64_t n);
double default_kappa_policy(int k);

}  // namespace schur
