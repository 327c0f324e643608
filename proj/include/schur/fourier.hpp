#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "schur/lemma_report.hpp"
#include "schur/primes.hpp"

namespace schur {

// Real-valued function on Z_N, indexed by residues 0..N-1.
struct WeightVector {
  std::uint64_t N = 0;
  std::vector<double> values;

  static WeightVector zeros(std::uint64_t N) {
    return WeightVector{N, std::vector<double>(N, 0.0)};
  }
  double sum() const;
};

// f~(r) = sum_x f(x) e(-xr/N).
struct FourierTable {
  std::uint64_t N = 0;
  std::vector<std::complex<double>> coefficients;
};

// Frequencies r with max_i |a_i~(r)| >= delta, with the attaining color.
struct Spectrum {
  double delta = 0.0;
  std::vector<std::uint64_t> frequencies;
  std::vector<int> witness_color;        // parallel to frequencies
  std::vector<double> witness_magnitude; // parallel to frequencies
  LemmaReport size_report;               // |R| vs C2(3) delta^-3 k, empirical C2
};

namespace fft {

// In-place radix-2 FFT; size must be a power of two. sign = -1 gives the
// e(-xr/N) convention used throughout, +1 its inverse (unnormalized).
void radix2(std::vector<std::complex<double>>& a, int sign);

// Arbitrary-length DFT via Bluestein's chirp embedding in a power-of-two FFT.
std::vector<std::complex<double>> bluestein(
    const std::vector<std::complex<double>>& a, int sign);

// Dispatches to radix2 for power-of-two sizes, bluestein otherwise.
std::vector<std::complex<double>> transform(
    const std::vector<std::complex<double>>& a, int sign);

}  // namespace fft

FourierTable dft(const WeightVector& f);
WeightVector idft(const FourierTable& F);

// Test oracle: the definition evaluated literally, O(N^2).
FourierTable dft_direct(const WeightVector& f);

// Cyclic convolution (f*g)(x) = sum_y f(y) g(x-y), via the transform identity.
WeightVector convolve(const WeightVector& f, const WeightVector& g);

// lambda(x) = phi(W) log(Wx+b) / (W N) when Wx+b is prime, 0 otherwise,
// for residues x = 1..N-1 (x = 0 carries weight 0).
WeightVector lambda_weight(const WTrickParams& params, std::uint64_t b);

// Mass of lambda over [1, M] against (1-kappa) M/N and 1/2 - 3 kappa.
LemmaReport lambda_mass(const WeightVector& lambda, const WTrickParams& params);

// a_i = 1_{A_i} * lambda. Returns a[0] = a_1 + ... + a_k, a[i] = a_i.
// Classes must be pairwise disjoint subsets of [1, M].
std::vector<WeightVector> build_a_functions(
    const std::vector<std::vector<std::uint64_t>>& classes,
    const WeightVector& lambda);

// a_hat holds the transforms of a_1..a_k.
Spectrum large_spectrum(const std::vector<FourierTable>& a_hat, double delta);

// sum_r |F(r)|^rho; requires rho > 2. When F is the transform of some a_i,
// the value itself is an empirical candidate for the restriction constant.
double restriction_sum(const FourierTable& F, double rho);

// sup_{r != 0} |lambda~(r)| against 2 log log w / w (asymptotic; report only).
LemmaReport sup_offzero_lambda(const WeightVector& lambda, std::uint64_t w);

}  // namespace schur
