#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <random>

#include "schur/bohr_transfer.hpp"

using namespace schur;

namespace {

// direct membership oracle, written independently of BohrSet::contains
bool member_oracle(std::uint64_t x, std::uint64_t N, double kappa,
                   double epsilon, const std::vector<std::uint64_t>& R) {
  const double rep = x <= N / 2 ? static_cast<double>(x)
                                : static_cast<double>(x) - static_cast<double>(N);
  if (std::abs(rep) > kappa * static_cast<double>(N)) return false;
  for (std::uint64_t r : R) {
    const double frac = static_cast<double>((x * r) % N) / static_cast<double>(N);
    if (std::min(frac, 1.0 - frac) > 2.0 * epsilon) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("build_bohr_set") {
  SUBCASE("empty R is the plain interval") {
    const std::uint64_t N = 113;
    const double kappa = 0.25;
    auto b = build_bohr_set({}, kappa, 0.1, N);
    CHECK(b.elements.size() ==
          2 * static_cast<std::uint64_t>(std::floor(kappa * N)) + 1);
  }
  SUBCASE("R = {0} changes nothing") {
    auto b0 = build_bohr_set({}, 0.25, 0.1, 113);
    auto b1 = build_bohr_set({0}, 0.25, 0.1, 113);
    CHECK(b0.elements == b1.elements);
  }
  SUBCASE("N=113, R={1}: matches the scan oracle") {
    const std::uint64_t N = 113;
    auto b = build_bohr_set({1}, 0.25, 0.1, N);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t x = 0; x < N; ++x)
      if (member_oracle(x, N, 0.25, 0.1, {1})) expected.push_back(x);
    CHECK(b.elements == expected);
  }
  SUBCASE("structural invariants: 0 in B, B = -B, beta normalized") {
    for (std::uint64_t N : {113ull, 1009ull}) {
      auto b = build_bohr_set({3, 17}, 0.2, 0.15, N);
      CHECK(std::find(b.elements.begin(), b.elements.end(), 0) !=
            b.elements.end());
      for (std::uint64_t x : b.elements)
        CHECK(std::find(b.elements.begin(), b.elements.end(), (N - x) % N) !=
              b.elements.end());
      CHECK(b.beta.sum() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("bohr_size_lemma holds on constructed instances") {
  SUBCASE("R empty") {
    auto b = build_bohr_set({}, 0.2, 0.1, 1009);
    CHECK(bohr_size_lemma(b).pass);
  }
  SUBCASE("N=113 derived case") {
    auto b = build_bohr_set({1}, 0.25, 0.1, 113);
    CHECK(bohr_size_lemma(b).pass);
  }
  SUBCASE("adversarial R of size 3, N=1009") {
    auto b = build_bohr_set({1, 2, 504}, 0.2, 0.1, 1009);
    CHECK(bohr_size_lemma(b).pass);
  }
}

TEST_CASE("pigeonhole_box_witness") {
  SUBCASE("R empty: one box holding the half interval") {
    const std::uint64_t N = 113;
    auto w = pigeonhole_box_witness({}, 0.25, 0.1, N);
    CHECK(w.box_index.empty());
    CHECK(w.occupancy ==
          2 * static_cast<std::uint64_t>(std::floor(0.25 * N / 2.0)) + 1);
    CHECK(w.translation_verified);
  }
  SUBCASE("N=1009, |R|=2: occupancy bound and translation") {
    auto w = pigeonhole_box_witness({5, 37}, 0.25, 0.1, 1009);
    CHECK(static_cast<double>(w.occupancy) >= w.occupancy_bound);
    CHECK(w.translation_verified);
  }
  SUBCASE("grid of instances") {
    for (double eps : {0.05, 0.1, 0.2})
      for (std::uint64_t N : {113ull, 1009ull}) {
        auto w = pigeonhole_box_witness({2, 7, 11}, 0.3, eps, N);
        CHECK(static_cast<double>(w.occupancy) >= w.occupancy_bound);
        CHECK(w.translation_verified);
      }
  }
}

TEST_CASE("smooth") {
  const std::uint64_t N = 113;
  WeightVector a = WeightVector::zeros(N);
  for (std::uint64_t x = 1; x <= 50; ++x)
    a.values[x] = (x % 3 == 1) ? 1.0 / N : 0.0;

  SUBCASE("delta_0 smoothing is the identity") {
    WeightVector d = WeightVector::zeros(N);
    d.values[0] = 1.0;
    auto s = smooth(a, d);
    for (std::uint64_t x = 0; x < N; ++x)
      CHECK(s.values[x] == doctest::Approx(a.values[x]).epsilon(1e-12));
  }
  SUBCASE("mass preserved") {
    auto b = build_bohr_set({1}, 0.25, 0.1, N);
    auto s = smooth(a, b.beta);
    CHECK(s.sum() == doctest::Approx(a.sum()).epsilon(1e-9));
  }
  SUBCASE("support window") {
    const double kappa = 0.1;
    auto b = build_bohr_set({}, kappa, 0.1, N);
    auto s = smooth(a, b.beta);
    const auto shift = static_cast<std::int64_t>(
        std::floor(2.0 * kappa * static_cast<double>(N)));
    // window = residues of the integer interval [-2 kappa N, 50 + 2 kappa N]
    for (std::uint64_t x = 0; x < N; ++x) {
      const bool in_window =
          x <= 50 + static_cast<std::uint64_t>(shift) ||
          x >= N - static_cast<std::uint64_t>(shift);
      if (!in_window) CHECK(s.values[x] == 0.0);
    }
  }
}

TEST_CASE("beta and upper lemmas") {
  const std::uint64_t N = 1009;
  auto b = build_bohr_set({3, 10, 77}, 0.2, 0.1, N);

  SUBCASE("beta lemma inequalities") {
    auto reports = beta_lemma(b);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].pass);  // |1 - beta~(r)| <= 64 eps^2
    CHECK(reports[1].pass);  // |1 - beta~(r)^4 beta~(-r)^2| <= 384 eps^2
  }
  SUBCASE("|beta~(r)| <= beta~(0) = 1") {
    auto F = dft(b.beta);
    CHECK(std::abs(F.coefficients[0] - 1.0) < 1e-12);
    for (std::uint64_t r = 0; r < N; ++r)
      CHECK(std::abs(F.coefficients[r]) <= 1.0 + 1e-12);
  }
  SUBCASE("uniform toy passes the upper conclusion") {
    WTrickParams params;
    params.N = N;
    params.M = N / 3;
    params.kappa = 0.2;
    params.w = 3;
    WeightVector a0{N, std::vector<double>(N, 0.5 / static_cast<double>(N))};
    auto a0p = smooth(a0, b.beta);
    auto reports = upper_lemma(a0p, params, b);
    REQUIRE(reports.size() == 2);
    CHECK(reports[1].name == "upper_conclusion");
    CHECK(reports[1].pass);
  }
}

TEST_CASE("triple_sum") {
  SUBCASE("all delta_0") {
    const std::uint64_t N = 113;
    WeightVector d = WeightVector::zeros(N);
    d.values[0] = 1.0;
    auto ts = triple_sum(d, d, d);
    CHECK(ts.fourier == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ts.direct_computed);
    CHECK(ts.direct == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("uniform vectors give 1/N") {
    const std::uint64_t N = 113;
    WeightVector u{N, std::vector<double>(N, 1.0 / N)};
    auto ts = triple_sum(u, u, u);
    CHECK(ts.fourier == doctest::Approx(1.0 / N).epsilon(1e-12));
    CHECK(ts.direct == doctest::Approx(1.0 / N).epsilon(1e-12));
  }
  SUBCASE("mismatched moduli") {
    CHECK_THROWS_AS(
        triple_sum(WeightVector::zeros(8), WeightVector::zeros(8),
                   WeightVector::zeros(16)),
        std::invalid_argument);
  }
  SUBCASE("random nonnegative vectors, two routes") {
    std::mt19937_64 gen(77);
    for (std::uint64_t N : {113ull, 1009ull}) {
      WeightVector f = WeightVector::zeros(N), g = WeightVector::zeros(N),
                   h = WeightVector::zeros(N);
      for (std::uint64_t x = 0; x < N; ++x) {
        f.values[x] = static_cast<double>(gen() % 1000) / 1e6;
        g.values[x] = static_cast<double>(gen() % 1000) / 1e6;
        h.values[x] = static_cast<double>(gen() % 1000) / 1e6;
      }
      auto ts = triple_sum(f, g, h);  // throws on route disagreement
      CHECK(ts.direct_computed);
    }
  }
}

TEST_CASE("difference_lemma degenerate cases") {
  const std::uint64_t N = 113;
  WeightVector d = WeightVector::zeros(N);
  d.values[0] = 1.0;
  WeightVector a1 = WeightVector::zeros(N);
  for (std::uint64_t x = 1; x <= 30; x += 2) a1.values[x] = 1.0 / N;
  std::vector<WeightVector> a = {a1, a1};
  std::vector<WeightVector> ap = {smooth(a1, d), smooth(a1, d)};
  auto r = difference_lemma(a, ap, 0.1, 0.1, 1, 1.0, 1.0);
  CHECK(r.measured < 1e-12);
  CHECK(r.pass);
}

TEST_CASE("extract_dense_model") {
  WTrickParams params;
  params.N = 113;
  params.M = 50;
  params.kappa = 0.1;
  const std::uint64_t N = params.N;

  WeightVector a1 = WeightVector::zeros(N), a2 = WeightVector::zeros(N);
  for (std::uint64_t x = 1; x <= params.M; ++x) {
    if (x % 2 == 0)
      a1.values[x] = 2.0 * params.kappa / N;
    else
      a2.values[x] = 3.0 * params.kappa / N;
  }
  WeightVector a0 = WeightVector::zeros(N);
  for (std::uint64_t x = 0; x < N; ++x)
    a0.values[x] = a1.values[x] + a2.values[x];

  SUBCASE("k=1: A_1' = A_0'") {
    auto m = extract_dense_model({a0, a0}, params);
    CHECK(m.partition[1] == m.A0prime);
  }
  SUBCASE("partition is exact and argmax-consistent") {
    auto m = extract_dense_model({a0, a1, a2}, params);
    std::vector<std::uint64_t> merged;
    for (std::size_t i = 1; i < m.partition.size(); ++i)
      merged.insert(merged.end(), m.partition[i].begin(), m.partition[i].end());
    std::sort(merged.begin(), merged.end());
    CHECK(merged == m.A0prime);
    for (std::uint64_t x : m.partition[1]) CHECK(a1.values[x] >= a2.values[x]);
    for (std::uint64_t x : m.partition[2]) CHECK(a2.values[x] > a1.values[x]);
    CHECK(m.offending.empty());
  }
  SUBCASE("ties go to the lowest color") {
    auto m = extract_dense_model({a0, a1, a1}, params);
    CHECK(m.partition[2].empty());
  }
}
