#include "schur/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace schur {

double WeightVector::sum() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

namespace fft {

void radix2(std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fft::radix2: size must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        auto u = a[i + j];
        auto v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

std::vector<std::complex<double>> bluestein(
    const std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("fft::bluestein: empty input");
  std::size_t m = 1;
  while (m < 2 * n - 1) m <<= 1;

  // chirp[j] = exp(sign * pi i j^2 / n), with j^2 reduced mod 2n so the
  // angle stays small for large n.
  std::vector<std::complex<double>> chirp(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t jsq =
        static_cast<std::uint64_t>((static_cast<__uint128_t>(j) * j) %
                                   (2 * static_cast<__uint128_t>(n)));
    const double ang =
        sign * std::numbers::pi * static_cast<double>(jsq) / static_cast<double>(n);
    chirp[j] = {std::cos(ang), std::sin(ang)};
  }

  std::vector<std::complex<double>> p(m, {0.0, 0.0}), q(m, {0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) p[j] = a[j] * chirp[j];
  for (std::size_t j = 0; j < n; ++j) {
    q[j] = std::conj(chirp[j]);
    if (j != 0) q[m - j] = std::conj(chirp[j]);
  }
  radix2(p, -1);
  radix2(q, -1);
  for (std::size_t j = 0; j < m; ++j) p[j] *= q[j];
  radix2(p, +1);
  const double scale = 1.0 / static_cast<double>(m);

  std::vector<std::complex<double>> out(n);
  for (std::size_t r = 0; r < n; ++r) out[r] = p[r] * scale * chirp[r];
  return out;
}

std::vector<std::complex<double>> transform(
    const std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  if (n != 0 && (n & (n - 1)) == 0) {
    auto copy = a;
    radix2(copy, sign);
    return copy;
  }
  return bluestein(a, sign);
}

}  // namespace fft

FourierTable dft(const WeightVector& f) {
  std::vector<std::complex<double>> a(f.values.begin(), f.values.end());
  return FourierTable{f.N, fft::transform(a, -1)};
}

WeightVector idft(const FourierTable& F) {
  auto a = fft::transform(F.coefficients, +1);
  WeightVector out;
  out.N = F.N;
  out.values.resize(F.N);
  const double scale = 1.0 / static_cast<double>(F.N);
  for (std::uint64_t x = 0; x < F.N; ++x) out.values[x] = a[x].real() * scale;
  return out;
}

FourierTable dft_direct(const WeightVector& f) {
  FourierTable F;
  F.N = f.N;
  F.coefficients.resize(f.N);
  for (std::uint64_t r = 0; r < f.N; ++r) {
    std::complex<double> acc(0.0, 0.0);
    for (std::uint64_t x = 0; x < f.N; ++x) {
      const double ang = -2.0 * std::numbers::pi *
                         static_cast<double>((static_cast<__uint128_t>(x) * r) % f.N) /
                         static_cast<double>(f.N);
      acc += f.values[x] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    F.coefficients[r] = acc;
  }
  return F;
}

WeightVector convolve(const WeightVector& f, const WeightVector& g) {
  if (f.N != g.N)
    throw std::invalid_argument("convolve: mismatched moduli");
  auto F = dft(f);
  auto G = dft(g);
  for (std::uint64_t r = 0; r < f.N; ++r) F.coefficients[r] *= G.coefficients[r];
  return idft(F);
}

WeightVector lambda_weight(const WTrickParams& params, std::uint64_t b) {
  if (std::gcd(b, params.W) != 1)
    throw std::invalid_argument("lambda_weight: gcd(b, W) != 1");
  const __uint128_t top = static_cast<__uint128_t>(params.W) * params.N + b;
  if (top > static_cast<__uint128_t>(UINT64_MAX))
    throw std::invalid_argument("lambda_weight: W*N+b overflows 64 bits");
  WeightVector lam = WeightVector::zeros(params.N);
  const double norm = static_cast<double>(params.phiW) /
                      (static_cast<double>(params.W) * static_cast<double>(params.N));
  for (std::uint64_t x = 1; x < params.N; ++x) {
    const std::uint64_t v = params.W * x + b;
    if (is_prime_u64(v)) lam.values[x] = norm * std::log(static_cast<double>(v));
  }
  return lam;
}

LemmaReport lambda_mass(const WeightVector& lambda, const WTrickParams& params) {
  double mass = 0.0;
  for (std::uint64_t x = 1; x <= params.M && x < lambda.N; ++x)
    mass += lambda.values[x];
  const double bound1 = (1.0 - params.kappa) * static_cast<double>(params.M) /
                        static_cast<double>(params.N);
  const double bound2 = 0.5 - 3.0 * params.kappa;
  auto r = make_report("lambda_mass", mass, bound1, ">=",
                       "sum over x <= M; secondary bound 1/2 - 3 kappa = " +
                           std::to_string(bound2) + ", full-range sum = " +
                           std::to_string(lambda.sum()));
  return r;
}

std::vector<WeightVector> build_a_functions(
    const std::vector<std::vector<std::uint64_t>>& classes,
    const WeightVector& lambda) {
  std::vector<char> owner(lambda.N, 0);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::uint64_t x : classes[i]) {
      if (x >= lambda.N)
        throw std::invalid_argument("build_a_functions: element outside Z_N");
      if (owner[x] != 0)
        throw std::invalid_argument(
            "build_a_functions: classes overlap at x = " + std::to_string(x));
      owner[x] = static_cast<char>(i + 1);
    }
  }
  std::vector<WeightVector> a(classes.size() + 1, WeightVector::zeros(lambda.N));
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::uint64_t x : classes[i]) a[i + 1].values[x] = lambda.values[x];
  // a_0 accumulated in color order so a_0 = a_1 + ... + a_k holds bit-exactly.
  for (std::size_t i = 1; i <= classes.size(); ++i)
    for (std::uint64_t x = 0; x < lambda.N; ++x)
      a[0].values[x] += a[i].values[x];
  return a;
}

Spectrum large_spectrum(const std::vector<FourierTable>& a_hat, double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("large_spectrum: delta must lie in (0, 1)");
  if (a_hat.empty()) throw std::invalid_argument("large_spectrum: no transforms");
  const std::uint64_t N = a_hat[0].N;
  Spectrum spec;
  spec.delta = delta;
  double c2_3 = 0.0;
  for (const auto& F : a_hat) c2_3 = std::max(c2_3, restriction_sum(F, 3.0));
  for (std::uint64_t r = 0; r < N; ++r) {
    double best = 0.0;
    int best_color = 0;
    for (std::size_t i = 0; i < a_hat.size(); ++i) {
      const double mag = std::abs(a_hat[i].coefficients[r]);
      if (mag > best) {
        best = mag;
        best_color = static_cast<int>(i) + 1;
      }
    }
    if (best >= delta) {
      spec.frequencies.push_back(r);
      spec.witness_color.push_back(best_color);
      spec.witness_magnitude.push_back(best);
    }
  }
  const double bound = c2_3 * std::pow(delta, -3.0) *
                       static_cast<double>(a_hat.size());
  spec.size_report = make_report(
      "spectrum_size", static_cast<double>(spec.frequencies.size()), bound, "<=",
      "|R| vs C2(3) delta^-3 k with empirical C2(3) = " + std::to_string(c2_3));
  return spec;
}

double restriction_sum(const FourierTable& F, double rho) {
  if (!(rho > 2.0))
    throw std::domain_error("restriction_sum: rho must exceed 2");
  double s = 0.0;
  for (const auto& c : F.coefficients) s += std::pow(std::abs(c), rho);
  return s;
}

LemmaReport sup_offzero_lambda(const WeightVector& lambda, std::uint64_t w) {
  auto F = dft(lambda);
  double sup = 0.0;
  for (std::uint64_t r = 1; r < lambda.N; ++r)
    sup = std::max(sup, std::abs(F.coefficients[r]));
  const double lw = std::log(std::log(static_cast<double>(w)));
  const double bound = 2.0 * lw / static_cast<double>(w);
  return make_report("lambda_sup_offzero", sup, bound, "<=",
                     "needs w sufficiently large; report only");
}

}  // namespace schur
