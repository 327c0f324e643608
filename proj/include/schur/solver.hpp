#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schur/bohr_transfer.hpp"
#include "schur/coloring.hpp"
#include "schur/primes.hpp"

namespace schur {

// A certified solution p1 + p2 = p3 + 1 with all three primes one color.
struct Witness {
  std::uint64_t p1 = 0, p2 = 0, p3 = 0;
  int color = 0;
  bool distinct = false;  // |{p1, p2, p3}| == 3
};

enum class RunMode { Search, Pipeline, Both, Conjecture };

struct RunConfig {
  std::uint64_t n = 0;
  std::uint64_t w = 1;
  int k = 1;
  double kappa = 0.1;
  double delta = 0.05;
  double epsilon = 0.1;
  std::string coloring_spec;  // "file:<path>" | "residue:<m>:<r>=<c>,..." | "random:<seed>"
  std::string output_path;
  std::string format = "json";  // json | csv
  RunMode mode = RunMode::Search;
  bool paper_defaults = false;
  bool include_timings = false;  // wall-clock times make reports non-reproducible
  std::uint64_t max_witnesses = 1000;  // cap on *stored* witnesses; counts stay exact
};

struct WitnessSearchResult {
  std::vector<Witness> witnesses;  // ordered by (p3, p1), p1 <= p2; capped
  std::uint64_t total_count = 0;
  std::uint64_t distinct_count = 0;
  std::optional<Witness> first;
  std::optional<Witness> first_distinct;
};

// All witnesses with p3 <= pt-covered n; exact counts, stored list capped at
// max_stored.
WitnessSearchResult search_witnesses(const PrimeTable& pt, const Coloring& c,
                                     std::uint64_t max_stored = UINT64_MAX);

// Monochromatic (p0; p1, p2, p3) with p2 = p1 + (p0-1), p3 = p1 + 2(p0-1).
struct ProgressionQuad {
  std::uint64_t p0 = 0, p1 = 0, p2 = 0, p3 = 0;
  int color = 0;
};

std::vector<ProgressionQuad> conjecture_search_l3(const PrimeTable& pt,
                                                  const Coloring& c,
                                                  std::uint64_t max_stored =
                                                      UINT64_MAX,
                                                  std::uint64_t* total = nullptr);

struct PipelineResult {
  WTrickParams params;
  std::vector<LemmaReport> lemma_reports;
  TransferReport transfer;
  std::uint64_t spectrum_size = 0;
  std::uint64_t bohr_size = 0;
  double c2_3 = 0.0;   // empirical restriction constants from this run
  double c2_52 = 0.0;
  double triple_sum_fourier = 0.0;
  double triple_sum_direct = 0.0;
  bool triple_sum_direct_available = false;
  std::vector<Witness> lifted_witnesses;  // capped
  std::uint64_t lifted_total = 0;
  std::uint64_t lifting_failures = 0;  // must be 0
};

// primes -> coloring -> fourier -> bohr/transference, plus witness lifting.
PipelineResult run_pipeline(const RunConfig& cfg, const Coloring& coloring);

Coloring coloring_from_spec(const RunConfig& cfg);

struct RunResults {
  RunConfig cfg;
  std::optional<WitnessSearchResult> search;
  std::optional<PipelineResult> pipeline;
  std::vector<ProgressionQuad> quads;
  std::uint64_t quad_total = 0;
  std::vector<std::pair<std::string, double>> timings_ms;
};

// Writes the JSON report (and CSV side tables when format == csv).
// Reports are byte-stable for a fixed config unless include_timings is set.
void emit_report(const RunResults& results, const std::string& path);
std::string render_report(const RunResults& results);

}  // namespace schur
