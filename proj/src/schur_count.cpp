#include "schur/schur_count.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "schur/fourier.hpp"

namespace schur {

namespace {

void require_interval(const Coloring& c, const char* who) {
  if (c.kind() != DomainKind::Interval)
    throw std::invalid_argument(std::string(who) +
                                ": coloring must be over an interval");
}

}  // namespace

TripleCount count_schur_triples(const Coloring& c) {
  require_interval(c, "count_schur_triples");
  const std::uint64_t n = c.n();
  TripleCount tc;
  tc.n = n;
  tc.per_color.assign(static_cast<std::size_t>(c.k()) + 1, 0);
  for (std::uint64_t z = 2; z <= n; ++z) {
    const int cz = c.color_of(z);
    for (std::uint64_t x = 1; x < z; ++x) {
      const std::uint64_t y = z - x;
      if (c.color_of(x) == cz && c.color_of(y) == cz) {
        ++tc.per_color[cz];
        if (x == y) ++tc.degenerate;
      }
    }
  }
  for (std::size_t i = 1; i < tc.per_color.size(); ++i) tc.total += tc.per_color[i];
  return tc;
}

TripleCount count_schur_triples_fft(const Coloring& c) {
  require_interval(c, "count_schur_triples_fft");
  const std::uint64_t n = c.n();
  std::size_t len = 1;
  while (len < 2 * n + 1) len <<= 1;

  TripleCount tc;
  tc.n = n;
  tc.per_color.assign(static_cast<std::size_t>(c.k()) + 1, 0);

  for (int color = 1; color <= c.k(); ++color) {
    std::vector<std::complex<double>> v(len, {0.0, 0.0});
    bool any = false;
    for (std::uint64_t x = 1; x <= n; ++x) {
      if (c.color_of(x) == color) {
        v[x] = {1.0, 0.0};
        any = true;
      }
    }
    if (!any) continue;
    fft::radix2(v, -1);
    for (auto& z : v) z *= z;
    fft::radix2(v, +1);
    const double scale = 1.0 / static_cast<double>(len);
    std::uint64_t count = 0;
    for (std::uint64_t z = 2; z <= n; ++z) {
      if (c.color_of(z) != color) continue;
      const double raw = v[z].real() * scale;
      const double rounded = std::round(raw);
      if (std::abs(raw - rounded) >= 1e-3)
        throw std::runtime_error(
            "count_schur_triples_fft: convolution residual " +
            std::to_string(std::abs(raw - rounded)) + " at z = " +
            std::to_string(z));
      count += static_cast<std::uint64_t>(rounded);
      // degenerate (x = y = z/2) contributions, tracked separately
      if (z % 2 == 0 && c.color_of(z / 2) == color) ++tc.degenerate;
    }
    tc.per_color[color] = count;
  }
  for (std::size_t i = 1; i < tc.per_color.size(); ++i) tc.total += tc.per_color[i];
  return tc;
}

SchurConstant schur_constants(int k) {
  if (k < 1 || k > 20)
    throw std::invalid_argument("schur_constants: k must lie in [1, 20]");
  SchurConstant sc;
  sc.k = k;
  sc.c1_prime = Rational(1, 6);
  for (int j = 2; j <= k; ++j)
    sc.c1_prime /= Rational(6) * j * j * j;
  sc.c1 = sc.c1_prime;
  // 1 / (2^(2k-3) * 11); for k = 1 the exponent is negative: 2/11.
  if (2 * k - 3 >= 0) {
    boost::multiprecision::cpp_int pow2 = 1;
    pow2 <<= (2 * k - 3);
    sc.rz_claim = Rational(1, pow2 * 11);
  } else {
    sc.rz_claim = Rational(2, 11);
  }
  return sc;
}

TripleCount count_schur_triples_subset(const Coloring& c,
                                       const std::vector<std::uint8_t>& in_A) {
  require_interval(c, "count_schur_triples_subset");
  const std::uint64_t n = c.n();
  if (in_A.size() < n + 1)
    throw std::invalid_argument("count_schur_triples_subset: mask too short");
  TripleCount tc;
  tc.n = n;
  tc.per_color.assign(static_cast<std::size_t>(c.k()) + 1, 0);
  for (std::uint64_t z = 2; z <= n; ++z) {
    if (!in_A[z]) continue;
    const int cz = c.color_of(z);
    for (std::uint64_t x = 1; x < z; ++x) {
      const std::uint64_t y = z - x;
      if (in_A[x] && in_A[y] && c.color_of(x) == cz && c.color_of(y) == cz) {
        ++tc.per_color[cz];
        if (x == y) ++tc.degenerate;
      }
    }
  }
  for (std::size_t i = 1; i < tc.per_color.size(); ++i) tc.total += tc.per_color[i];
  return tc;
}

LemmaReport check_corollary(const Coloring& c, const std::vector<std::uint8_t>& in_A,
                            const Rational& c_used, const std::string& variant) {
  require_interval(c, "check_corollary");
  const std::uint64_t n = c.n();
  std::uint64_t size_A = 0;
  for (std::uint64_t x = 1; x <= n; ++x)
    if (x < in_A.size() && in_A[x]) ++size_A;

  const auto tc = count_schur_triples_subset(c, in_A);
  const double cd = static_cast<double>(c_used);
  const double threshold = 0.5 * cd * static_cast<double>(n) * static_cast<double>(n);
  const bool density_ok =
      static_cast<double>(size_A) >= (1.0 - cd / 6.0) * static_cast<double>(n);

  std::string note = "constant variant: " + variant + "; |A| = " +
                     std::to_string(size_A);
  if (!density_ok) note += "; precondition-unmet (|A| < (1 - c/6) n)";
  return make_report("dense_subset_corollary", static_cast<double>(tc.total),
                     threshold, ">=", note);
}

}  // namespace schur
