#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schur/coloring.hpp"
#include "schur/lemma_report.hpp"

namespace schur {

using Rational = boost::multiprecision::cpp_rational;

// Ordered monochromatic Schur triples (x, y, z) with x + y = z in [1, n].
struct TripleCount {
  std::vector<std::uint64_t> per_color;  // index 1..k (index 0 unused)
  std::uint64_t total = 0;
  std::uint64_t degenerate = 0;  // triples with x = y
  std::uint64_t n = 0;
};

// The constant ladder. c1_prime follows the triangle recursion
// c1'(1) = 1/6, c1'(k) = c1'(k-1) / (6 k^3); c1 is the Schur constant it
// induces (the per-triple multiplicity factor n cancels n^3 -> n^2, so
// c1 = c1_prime; derived, never quoted numerically in the source result).
// rz_claim = 1 / (2^(2k-3) * 11) is the sharper published claim.
struct SchurConstant {
  int k = 0;
  Rational c1_prime;
  Rational c1;
  Rational rz_claim;
};

TripleCount count_schur_triples(const Coloring& c);

// Same result via FFT convolution of per-color indicators, embedded in a
// power-of-two length >= 2n+1 so there is no wraparound. Throws if any
// rounded coefficient has residual >= 1e-3.
TripleCount count_schur_triples_fft(const Coloring& c);

SchurConstant schur_constants(int k);  // 1 <= k <= 20

// Dense-subset corollary: monochromatic triples fully inside A against
// (c_used/2) n^2. `in_A` is a membership mask over [0, n]. If
// |A| < (1 - c_used/6) n the report is flagged precondition-unmet but
// still computed.
LemmaReport check_corollary(const Coloring& c, const std::vector<std::uint8_t>& in_A,
                            const Rational& c_used, const std::string& variant);

// Triple count restricted to A (all of x, y, z in A), brute force.
TripleCount count_schur_triples_subset(const Coloring& c,
                                       const std::vector<std::uint8_t>& in_A);

}  // namespace schur
