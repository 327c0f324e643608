#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "schur/fourier.hpp"

using namespace schur;

namespace {

WeightVector random_vector(std::uint64_t N, std::uint64_t seed,
                           bool nonneg = false) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(nonneg ? 0.0 : -1.0, 1.0);
  WeightVector f = WeightVector::zeros(N);
  for (auto& v : f.values) v = dist(gen);
  return f;
}

double rel_err(double a, double b) {
  const double denom = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / denom;
}

}  // namespace

TEST_CASE("dft of canonical vectors") {
  SUBCASE("delta at 0") {
    auto f = WeightVector::zeros(101);
    f.values[0] = 1.0;
    auto F = dft(f);
    for (auto c : F.coefficients) CHECK(std::abs(c - 1.0) < 1e-12);
  }
  SUBCASE("uniform 1/N") {
    const std::uint64_t N = 113;
    WeightVector f{N, std::vector<double>(N, 1.0 / N)};
    auto F = dft(f);
    CHECK(std::abs(F.coefficients[0] - 1.0) < 1e-12);
    for (std::uint64_t r = 1; r < N; ++r)
      CHECK(std::abs(F.coefficients[r]) < 1e-12);
  }
}

TEST_CASE("bluestein matches the literal definition") {
  for (std::uint64_t N : {113ull, 128ull, 1009ull}) {
    auto f = random_vector(N, N);
    auto fast = dft(f);
    auto slow = dft_direct(f);
    for (std::uint64_t r = 0; r < N; ++r)
      CHECK(std::abs(fast.coefficients[r] - slow.coefficients[r]) < 1e-8);
  }
}

TEST_CASE("idft inverts dft") {
  for (std::uint64_t N : {113ull, 1009ull, 10007ull}) {
    auto f = random_vector(N, 2 * N);
    auto back = idft(dft(f));
    double scale = 0.0;
    for (double v : f.values) scale = std::max(scale, std::abs(v));
    // normwise error: entrywise relative error is meaningless near zeros
    for (std::uint64_t x = 0; x < N; ++x)
      CHECK(std::abs(back.values[x] - f.values[x]) < 1e-9 * scale);
  }
}

TEST_CASE("parseval") {
  for (std::uint64_t N : {113ull, 1009ull, 10007ull}) {
    auto f = random_vector(N, 31 + N);
    auto F = dft(f);
    double lhs = 0.0, rhs = 0.0;
    for (auto c : F.coefficients) lhs += std::norm(c);
    for (double v : f.values) rhs += v * v;
    CHECK(rel_err(lhs, static_cast<double>(N) * rhs) < 1e-9);
  }
}

TEST_CASE("convolution") {
  const std::uint64_t N = 113;
  SUBCASE("delta_0 is the identity") {
    auto f = random_vector(N, 7);
    auto d = WeightVector::zeros(N);
    d.values[0] = 1.0;
    auto conv = convolve(f, d);
    for (std::uint64_t x = 0; x < N; ++x)
      CHECK(std::abs(conv.values[x] - f.values[x]) < 1e-10);
  }
  SUBCASE("indicator self-convolution at 0 counts |B cap -B|") {
    WeightVector b = WeightVector::zeros(N);
    for (std::uint64_t x : {0ull, 1ull, 5ull, 108ull, 112ull}) b.values[x] = 1.0;
    // (1_B * 1_B)(0) = #{y : y in B, -y in B}
    std::uint64_t expected = 0;
    for (std::uint64_t y = 0; y < N; ++y)
      if (b.values[y] != 0.0 && b.values[(N - y) % N] != 0.0) ++expected;
    CHECK(std::abs(convolve(b, b).values[0] - static_cast<double>(expected)) <
          1e-9);
  }
  SUBCASE("direct O(N^2) sum agrees with the transform route") {
    auto f = random_vector(N, 8);
    auto g = random_vector(N, 9);
    auto fast = convolve(f, g);
    for (std::uint64_t x = 0; x < N; ++x) {
      double direct = 0.0;
      for (std::uint64_t y = 0; y < N; ++y)
        direct += f.values[y] * g.values[(x + N - y) % N];
      CHECK(rel_err(fast.values[x], direct) < 1e-9);
    }
  }
  SUBCASE("mismatched moduli") {
    CHECK_THROWS_AS(convolve(random_vector(8, 1), random_vector(16, 1)),
                    std::invalid_argument);
  }
}

TEST_CASE("lambda_weight") {
  WTrickParams params;
  params.n = 100;
  params.w = 2;
  params.W = 2;
  params.M = 50;
  params.N = 113;
  params.kappa = 0.25;
  params.phiW = 1;

  SUBCASE("pointwise formula") {
    auto lam = lambda_weight(params, 1);
    CHECK(lam.values[0] == 0.0);
    CHECK(lam.values[1] == doctest::Approx(std::log(3.0) / 226.0).epsilon(1e-14));
    CHECK(lam.values[4] == 0.0);  // 9 is not prime
    for (std::uint64_t x = 0; x < params.N; ++x) {
      if (lam.values[x] == 0.0) continue;
      CHECK(is_prime_u64(params.W * x + 1));
    }
  }
  SUBCASE("gcd precondition") {
    CHECK_THROWS_AS(lambda_weight(params, 2), std::invalid_argument);
  }
  SUBCASE("mass report") {
    auto lam = lambda_weight(params, 1);
    auto r = lambda_mass(lam, params);
    double expected = 0.0;
    for (std::uint64_t x = 1; x <= params.M; ++x) expected += lam.values[x];
    CHECK(r.measured == doctest::Approx(expected).epsilon(1e-14));
    CHECK(r.bound == doctest::Approx(0.75 * 50.0 / 113.0));
  }
}

TEST_CASE("build_a_functions") {
  WeightVector lam = WeightVector::zeros(20);
  for (std::uint64_t x = 1; x < 20; ++x) lam.values[x] = 1.0 / (1.0 + x);

  SUBCASE("k=1 restriction") {
    auto a = build_a_functions({{1, 3, 5}}, lam);
    REQUIRE(a.size() == 2);
    for (std::uint64_t x = 0; x < 20; ++x) {
      CHECK(a[0].values[x] == a[1].values[x]);
      const bool in = x == 1 || x == 3 || x == 5;
      CHECK(a[1].values[x] == (in ? lam.values[x] : 0.0));
    }
  }
  SUBCASE("overlap rejected") {
    CHECK_THROWS_AS(build_a_functions({{1, 3}, {3, 5}}, lam),
                    std::invalid_argument);
  }
  SUBCASE("a_0 is the exact color-ordered sum") {
    auto a = build_a_functions({{1, 4}, {2, 9}, {3, 7}}, lam);
    for (std::uint64_t x = 0; x < 20; ++x)
      CHECK(a[0].values[x] ==
            a[1].values[x] + a[2].values[x] + a[3].values[x]);
  }
}

TEST_CASE("large_spectrum") {
  const std::uint64_t N = 113;
  auto f = random_vector(N, 55, /*nonneg=*/true);
  const double mass = f.sum();
  for (auto& v : f.values) v /= 2.0 * mass;  // a~(0) = 1/2
  auto F = dft(f);

  SUBCASE("threshold above the max gives empty R") {
    double maxmag = 0.0;
    for (auto c : F.coefficients) maxmag = std::max(maxmag, std::abs(c));
    auto spec = large_spectrum({F}, std::min(0.999, maxmag * 1.01));
    CHECK(spec.frequencies.empty());
  }
  SUBCASE("0 enters R when the mass clears delta") {
    auto spec = large_spectrum({F}, 0.4);
    REQUIRE(!spec.frequencies.empty());
    CHECK(spec.frequencies.front() == 0);
  }
  SUBCASE("membership is the exact threshold condition") {
    const double delta = 0.05;
    auto spec = large_spectrum({F}, delta);
    std::vector<bool> in(N, false);
    for (std::uint64_t r : spec.frequencies) in[r] = true;
    for (std::uint64_t r = 0; r < N; ++r)
      CHECK(in[r] == (std::abs(F.coefficients[r]) >= delta));
  }
}

TEST_CASE("restriction_sum") {
  SUBCASE("single point mass") {
    const std::uint64_t N = 101;
    const double v = 0.3;
    auto f = WeightVector::zeros(N);
    f.values[17] = v;
    auto F = dft(f);
    CHECK(restriction_sum(F, 3.0) ==
          doctest::Approx(static_cast<double>(N) * v * v * v).epsilon(1e-9));
  }
  SUBCASE("monotone in rho when coefficients are <= 1") {
    auto f = random_vector(113, 4, true);
    const double mass = f.sum();
    for (auto& v : f.values) v /= mass;  // sup |f~| <= f~(0) = 1
    auto F = dft(f);
    CHECK(restriction_sum(F, 3.0) <= restriction_sum(F, 2.5));
  }
  SUBCASE("rho domain") {
    auto F = dft(random_vector(16, 1));
    CHECK_THROWS_AS(restriction_sum(F, 2.0), std::domain_error);
  }
}

TEST_CASE("sup_offzero_lambda") {
  SUBCASE("constant vector has zero off-zero spectrum") {
    WeightVector f{128, std::vector<double>(128, 0.25)};
    auto r = sup_offzero_lambda(f, 10);
    CHECK(r.measured < 1e-12);
    CHECK(r.pass);
  }
  SUBCASE("w=3 threshold value") {
    WeightVector f{16, std::vector<double>(16, 0.0)};
    auto r = sup_offzero_lambda(f, 3);
    CHECK(r.bound ==
          doctest::Approx(2.0 * std::log(std::log(3.0)) / 3.0).epsilon(1e-12));
    CHECK(r.bound == doctest::Approx(0.0626).epsilon(1e-2));
  }
}
