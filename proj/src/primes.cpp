#include "schur/primes.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace schur {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
  __uint128_t p = static_cast<__uint128_t>(a) * b;
  if (p > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error(std::string("64-bit overflow in ") + what);
  return static_cast<std::uint64_t>(p);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This base set is deterministic for all n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeTable sieve_primes(std::uint64_t limit) {
  if (limit < 2) throw std::invalid_argument("sieve_primes: limit must be >= 2");
  PrimeTable pt;
  pt.limit = limit;
  pt.is_prime.assign(limit + 1, true);
  pt.is_prime[0] = pt.is_prime[1] = false;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (!pt.is_prime[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) pt.is_prime[j] = false;
  }
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (pt.is_prime[i]) pt.primes.push_back(i);
  return pt;
}

std::uint64_t euler_phi(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("euler_phi: m must be >= 1");
  std::uint64_t result = m;
  std::uint64_t x = m;
  for (std::uint64_t p = 2; p * p <= x; ++p) {
    if (x % p != 0) continue;
    while (x % p == 0) x /= p;
    result -= result / p;
  }
  if (x > 1) result -= result / x;
  return result;
}

WTrickParams build_w_trick(std::uint64_t n, std::uint64_t w, double kappa) {
  if (n == 0) throw std::invalid_argument("build_w_trick: n must be positive");
  if (!(kappa > 0.0 && kappa < 0.5))
    throw std::invalid_argument("build_w_trick: kappa must lie in (0, 1/2)");

  WTrickParams params;
  params.n = n;
  params.w = w;
  params.kappa = kappa;
  params.W = 1;
  for (std::uint64_t p = 2; p <= w; ++p) {
    if (!is_prime_u64(p)) continue;
    params.W = checked_mul(params.W, p, "primorial W");
    if (params.W > n)
      throw std::invalid_argument(
          "build_w_trick: W = primorial(w) exceeds n; decrease w or increase n");
  }
  params.M = n / params.W;
  params.phiW = euler_phi(params.W);

  const double lo = (2.0 + kappa) * static_cast<double>(params.M);
  const double hi = (2.0 + 2.0 * kappa) * static_cast<double>(params.M);
  std::uint64_t cand = static_cast<std::uint64_t>(std::ceil(lo));
  for (; static_cast<double>(cand) <= hi; ++cand) {
    if (is_prime_u64(cand)) {
      params.N = cand;
      return params;
    }
  }
  throw std::invalid_argument(
      "build_w_trick: no prime in [(2+kappa)M, (2+2kappa)M]; "
      "increase n or decrease kappa");
}

std::vector<std::uint64_t> residue_class_elements(const PrimeTable& pt,
                                                  const WTrickParams& params,
                                                  std::uint64_t b) {
  if (std::gcd(b, params.W) != 1)
    throw std::invalid_argument("residue_class_elements: gcd(b, W) != 1");
  const std::uint64_t top = checked_mul(params.W, params.M, "W*M") + b;
  if (pt.limit < top)
    throw std::invalid_argument(
        "residue_class_elements: prime table too small (need limit >= W*M+b)");
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 1; x <= params.M; ++x) {
    if (pt.contains(params.W * x + b)) out.push_back(x);
  }
  return out;
}

LemmaReport siegel_walfisz_mass(const PrimeTable& pt, const WTrickParams& params,
                                std::uint64_t b) {
  if (std::gcd(b, params.W) != 1)
    throw std::invalid_argument("siegel_walfisz_mass: gcd(b, W) != 1");
  double sum = 0.0;
  for (std::uint64_t p : pt.primes) {
    if (p > params.n) break;
    if (p % params.W == b % params.W) sum += std::log(static_cast<double>(p));
  }
  const double bound =
      (1.0 - params.kappa) * static_cast<double>(params.n) /
      static_cast<double>(params.phiW);
  return make_report("siegel_walfisz_mass", sum, bound, ">=",
                     "sum of log x over primes x = b (mod W), x <= n; "
                     "asymptotic bound, report only");
}

std::uint64_t default_w_policy(std::uint64_t n) {
  if (n < 3) return 1;
  const double ll = std::log(std::log(static_cast<double>(n)));
  if (ll <= 0.0) return 1;
  const auto w = static_cast<std::uint64_t>(std::floor(0.25 * ll));
  return w == 0 ? 1 : w;
}

double default_kappa_policy(int k) {
  if (k < 1) throw std::invalid_argument("default_kappa_policy: k must be >= 1");
  // C1(k) from the triangle recursion: 1/6 * prod_{j=2..k} 1/(6 j^3).
  double c1 = 1.0 / 6.0;
  for (int j = 2; j <= k; ++j) c1 /= 6.0 * j * j * j;
  return c1 / (10000.0 * k);
}

}  // namespace schur
