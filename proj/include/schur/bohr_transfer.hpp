#pragma once

#include <cstdint>
#include <vector>

#include "schur/fourier.hpp"
#include "schur/lemma_report.hpp"
#include "schur/primes.hpp"
#include "schur/schur_count.hpp"

namespace schur {

// B = {x in Z_N : rep(x) in [-kappa N, kappa N], ||x r / N|| <= 2 eps for all
// r in R}, with beta = 1_B / |B|.
struct BohrSet {
  std::uint64_t N = 0;
  double kappa = 0.0;
  double epsilon = 0.0;
  std::vector<std::uint64_t> frequencies;
  std::vector<std::uint64_t> elements;  // residues in [0, N)
  WeightVector beta;

  bool contains(std::uint64_t x) const;
};

BohrSet build_bohr_set(const std::vector<std::uint64_t>& frequencies,
                       double kappa, double epsilon, std::uint64_t N);

// |B| >= eps^|R| kappa N; non-asymptotic, expected to pass everywhere.
LemmaReport bohr_size_lemma(const BohrSet& b);

// The proof's pigeonhole box: occupancy certificate plus the translation
// check G - x0 subset of B.
struct BoxWitness {
  std::vector<std::uint64_t> box_index;  // t_j per frequency
  std::vector<std::int64_t> coset;       // signed representatives of G
  std::uint64_t occupancy = 0;
  double occupancy_bound = 0.0;  // d^-|R| * (number of boxed points ~ kappa N)
  bool translation_verified = false;
};

BoxWitness pigeonhole_box_witness(const std::vector<std::uint64_t>& frequencies,
                                  double kappa, double epsilon, std::uint64_t N);

// a' = a * beta * beta (double cyclic convolution).
WeightVector smooth(const WeightVector& a, const WeightVector& beta);

// Hypothesis eps^|R| >= kappa^-2 log log w / w and conclusion
// sup_x a0'(x) <= (1 + 3 kappa) / N, recorded separately.
std::vector<LemmaReport> upper_lemma(const WeightVector& a0_prime,
                                     const WTrickParams& params,
                                     const BohrSet& bohr);

// |1 - beta~(r)^4 beta~(-r)^2| <= 384 eps^2 and |1 - beta~(r)| <= 64 eps^2
// over all r in R; worst margins reported.
std::vector<LemmaReport> beta_lemma(const BohrSet& bohr);

// sum_{x+y=z} f1(x) f2(y) f3(z), computed by the transform identity and,
// when feasible, by the direct double loop over supports; the two routes
// must agree within 1e-9 relative.
struct TripleSum {
  double fourier = 0.0;
  double direct = 0.0;
  bool direct_computed = false;
};
TripleSum triple_sum(const WeightVector& f1, const WeightVector& f2,
                     const WeightVector& f3);

LemmaReport difference_lemma(const std::vector<WeightVector>& a,
                             const std::vector<WeightVector>& a_prime,
                             double delta, double epsilon, int k, double c2_3,
                             double c2_52);

// X, A_0' = X cap [1, M], and the argmax partition A_1'..A_k' with
// lowest-color-index tie break.
struct DenseModel {
  std::vector<std::uint64_t> X;
  std::vector<std::uint64_t> A0prime;
  std::vector<std::vector<std::uint64_t>> partition;  // index 1..k
  std::vector<LemmaReport> reports;
  std::vector<std::uint64_t> offending;  // x in A_i' failing a_i'(x) >= kappa/(kN)
};

DenseModel extract_dense_model(const std::vector<WeightVector>& a_prime,
                               const WTrickParams& params);

struct TransferReport {
  std::vector<LemmaReport> reports;
  DenseModel model;
  double final_lhs = 0.0;         // sum_i triple_sum(a_i, a_i, a_i)
  double smoothed_sum = 0.0;      // sum_i triple_sum(a_i', a_i', a_i')
  std::vector<double> final_rhs_terms;
  double remark_degenerate_mass = 0.0;  // sum_i sum_{2x=z} a_i(x)^2 a_i(z)
};

// The final positivity chain, each link evaluated with empirical constants.
TransferReport positivity_chain(const std::vector<WeightVector>& a,
                                const std::vector<WeightVector>& a_prime,
                                const DenseModel& model,
                                const WTrickParams& params, double delta,
                                double epsilon, int k, double c2_3,
                                double c2_52, const Rational& c1);

}  // namespace schur
