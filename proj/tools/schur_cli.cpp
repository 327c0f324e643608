// Command-line driver: witness search, the transference pipeline, the l=3
// progression explorer, and lemma verification over a prime coloring.
//
// Exit codes: 0 = witnesses found / lemmas all evaluated, 2 = no witness at
// this n, 1 = error.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "schur/schur_count.hpp"
#include "schur/solver.hpp"

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(schur::RunResults& results, std::string stage)
      : results_(results), stage_(std::move(stage)),
        start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    const auto end = std::chrono::steady_clock::now();
    results_.timings_ms.emplace_back(
        stage_, std::chrono::duration<double, std::milli>(end - start_).count());
  }

 private:
  schur::RunResults& results_;
  std::string stage_;
  std::chrono::steady_clock::time_point start_;
};

void apply_paper_defaults(schur::RunConfig& cfg) {
  cfg.w = schur::default_w_policy(cfg.n);
  cfg.kappa = schur::default_kappa_policy(cfg.k);
  std::cerr << "warning: --paper-defaults gives w = " << cfg.w
            << " and kappa = " << cfg.kappa
            << "; these degenerate at desk scale (kappa may be too small to "
               "admit a prime in [(2+kappa)M, (2+2kappa)M])\n";
}

int finish(const schur::RunResults& results, bool found) {
  if (!results.cfg.output_path.empty())
    schur::emit_report(results, results.cfg.output_path);
  else
    std::cout << schur::render_report(results);
  return found ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monochromatic prime Schur triples: search and transference pipeline"};
  app.require_subcommand(1);

  schur::RunConfig cfg;
  auto add_common = [&](CLI::App* sub, bool needs_pipeline_params) {
    sub->add_option("--n", cfg.n, "ambient bound")->required();
    sub->add_option("--k", cfg.k, "number of colors");
    sub->add_option("--coloring", cfg.coloring_spec,
                    "file:<path> | residue:<m>:<r>=<c>,... | random:<seed>")
        ->required();
    sub->add_option("--out", cfg.output_path, "report output path");
    sub->add_option("--format", cfg.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--max-witnesses", cfg.max_witnesses,
                    "cap on witnesses stored in the report");
    sub->add_flag("--timings", cfg.include_timings,
                  "embed wall-clock timings (breaks byte-reproducibility)");
    sub->add_flag("--paper-defaults", cfg.paper_defaults,
                  "apply w(n) = floor(log log n / 4), kappa = C1(k)/(10000 k)");
    if (needs_pipeline_params) {
      sub->add_option("--w", cfg.w, "primorial cutoff for the W-trick");
      sub->add_option("--kappa", cfg.kappa, "interval/threshold parameter");
      sub->add_option("--delta", cfg.delta, "large-spectrum threshold");
      sub->add_option("--epsilon", cfg.epsilon, "Bohr set radius");
    }
  };

  auto* search = app.add_subcommand("search", "brute-force witness search");
  add_common(search, false);
  auto* pipeline = app.add_subcommand("pipeline", "full transference pipeline");
  add_common(pipeline, true);
  auto* conjecture =
      app.add_subcommand("conjecture", "l=3 progression explorer");
  add_common(conjecture, false);
  auto* verify =
      app.add_subcommand("verify-lemmas", "pipeline lemma checks only");
  add_common(verify, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cfg.paper_defaults) apply_paper_defaults(cfg);
    schur::RunResults results;

    if (search->parsed()) cfg.mode = schur::RunMode::Search;
    if (pipeline->parsed()) cfg.mode = schur::RunMode::Pipeline;
    if (conjecture->parsed()) cfg.mode = schur::RunMode::Conjecture;

    schur::Coloring coloring = [&] {
      Stopwatch sw(results, "coloring");
      return schur::coloring_from_spec(cfg);
    }();
    cfg.k = coloring.k();
    results.cfg = cfg;

    if (search->parsed() || conjecture->parsed()) {
      schur::PrimeTable pt = [&] {
        Stopwatch sw(results, "sieve");
        return schur::sieve_primes(cfg.n);
      }();
      if (search->parsed()) {
        Stopwatch sw(results, "search");
        results.search = schur::search_witnesses(pt, coloring, cfg.max_witnesses);
        return finish(results, results.search->total_count > 0);
      }
      Stopwatch sw(results, "conjecture");
      results.quads = schur::conjecture_search_l3(pt, coloring, cfg.max_witnesses,
                                                  &results.quad_total);
      return finish(results, results.quad_total > 0);
    }

    // pipeline / verify-lemmas
    {
      Stopwatch sw(results, "pipeline");
      results.pipeline = schur::run_pipeline(cfg, coloring);
    }
    if (verify->parsed()) return finish(results, true);
    return finish(results, results.pipeline->lifted_total > 0 &&
                               results.pipeline->lifting_failures == 0);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
