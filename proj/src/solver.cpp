#include "schur/solver.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "schur/fourier.hpp"
#include "schur/schur_count.hpp"

namespace schur {

WitnessSearchResult search_witnesses(const PrimeTable& pt, const Coloring& c,
                                     std::uint64_t max_stored) {
  if (c.kind() != DomainKind::PrimesUpTo)
    throw std::invalid_argument("search_witnesses: coloring must be over primes");
  const std::uint64_t n = std::min<std::uint64_t>(pt.limit, c.n());
  WitnessSearchResult res;
  for (std::uint64_t p3 : pt.primes) {
    if (p3 > n) break;
    const std::uint64_t s = p3 + 1;
    const int c3 = c.color_of(p3);
    for (std::uint64_t p1 : pt.primes) {
      if (2 * p1 > s) break;
      const std::uint64_t p2 = s - p1;
      if (!pt.contains(p2)) continue;
      if (c.color_of(p1) != c3 || c.color_of(p2) != c3) continue;
      Witness wit{p1, p2, p3, c3, p1 != p2};
      ++res.total_count;
      if (wit.distinct) ++res.distinct_count;
      if (!res.first) res.first = wit;
      if (wit.distinct && !res.first_distinct) res.first_distinct = wit;
      if (res.witnesses.size() < max_stored) res.witnesses.push_back(wit);
    }
  }
  return res;
}

std::vector<ProgressionQuad> conjecture_search_l3(const PrimeTable& pt,
                                                  const Coloring& c,
                                                  std::uint64_t max_stored,
                                                  std::uint64_t* total) {
  if (c.kind() != DomainKind::PrimesUpTo)
    throw std::invalid_argument("conjecture_search_l3: coloring must be over primes");
  const std::uint64_t n = std::min<std::uint64_t>(pt.limit, c.n());
  std::vector<ProgressionQuad> out;
  std::uint64_t count = 0;
  for (std::uint64_t p0 : pt.primes) {
    if (p0 > n) break;
    const std::uint64_t d = p0 - 1;
    const int c0 = c.color_of(p0);
    for (std::uint64_t p1 : pt.primes) {
      if (p1 + 2 * d > n) break;
      const std::uint64_t p2 = p1 + d;
      const std::uint64_t p3 = p1 + 2 * d;
      if (!pt.contains(p2) || !pt.contains(p3)) continue;
      if (c.color_of(p1) != c0 || c.color_of(p2) != c0 || c.color_of(p3) != c0)
        continue;
      ++count;
      if (out.size() < max_stored) out.push_back({p0, p1, p2, p3, c0});
    }
  }
  if (total) *total = count;
  return out;
}

Coloring coloring_from_spec(const RunConfig& cfg) {
  const std::string& spec = cfg.coloring_spec;
  const DomainKind kind = DomainKind::PrimesUpTo;
  if (spec.rfind("file:", 0) == 0) return load_coloring(spec.substr(5));
  if (spec.rfind("random:", 0) == 0) {
    const std::uint64_t seed = std::stoull(spec.substr(7));
    return random_coloring(kind, cfg.n, cfg.k, seed);
  }
  if (spec.rfind("residue:", 0) == 0) {
    // residue:<m>:<r>=<c>,<r>=<c>,...
    const std::string rest = spec.substr(8);
    const auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("coloring spec: expected residue:<m>:<map>");
    const std::uint64_t m = std::stoull(rest.substr(0, colon));
    std::map<std::uint64_t, int> map;
    std::istringstream ss(rest.substr(colon + 1));
    std::string pair;
    while (std::getline(ss, pair, ',')) {
      const auto eq = pair.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("coloring spec: expected <residue>=<color>");
      map[std::stoull(pair.substr(0, eq))] = std::stoi(pair.substr(eq + 1));
    }
    return residue_coloring(kind, cfg.n, m, map);
  }
  if (!spec.empty() && spec.find(':') == std::string::npos)
    return load_coloring(spec);  // bare path
  throw std::invalid_argument("unrecognized coloring spec '" + spec + "'");
}

PipelineResult run_pipeline(const RunConfig& cfg, const Coloring& coloring) {
  if (coloring.kind() != DomainKind::PrimesUpTo)
    throw std::invalid_argument("run_pipeline: coloring must be over primes");
  PipelineResult res;
  try {
    res.params = build_w_trick(cfg.n, cfg.w, cfg.kappa);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("pipeline stage w-trick: ") + e.what());
  }
  const auto& params = res.params;
  if (params.M < 10)
    throw std::runtime_error("pipeline stage w-trick: M < 10, increase n");
  if (2 * params.M >= params.N)
    throw std::runtime_error("pipeline stage w-trick: M < N/2 violated");

  const std::uint64_t sieve_top =
      std::max<std::uint64_t>(cfg.n, params.W * params.M + 1);
  PrimeTable pt;
  std::vector<std::uint64_t> a0_set;
  std::vector<std::vector<std::uint64_t>> classes(static_cast<std::size_t>(cfg.k));
  try {
    pt = sieve_primes(sieve_top);
    a0_set = residue_class_elements(pt, params, 1);
    for (std::uint64_t x : a0_set) {
      const std::uint64_t p = params.W * x + 1;
      const int color = coloring.color_of(p);
      classes[static_cast<std::size_t>(color) - 1].push_back(x);
    }
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("pipeline stage primes: ") + e.what());
  }
  res.lemma_reports.push_back(siegel_walfisz_mass(pt, params, 1));

  WeightVector lambda;
  std::vector<WeightVector> a;
  std::vector<FourierTable> a_hat;
  try {
    lambda = lambda_weight(params, 1);
    res.lemma_reports.push_back(lambda_mass(lambda, params));
    res.lemma_reports.push_back(sup_offzero_lambda(lambda, params.w));
    a = build_a_functions(classes, lambda);
    for (int i = 1; i <= cfg.k; ++i) a_hat.push_back(dft(a[i]));
    for (const auto& F : a_hat) {
      res.c2_3 = std::max(res.c2_3, restriction_sum(F, 3.0));
      res.c2_52 = std::max(res.c2_52, restriction_sum(F, 2.5));
    }
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("pipeline stage fourier: ") + e.what());
  }

  Spectrum spec;
  BohrSet bohr;
  std::vector<WeightVector> a_prime;
  DenseModel model;
  try {
    spec = large_spectrum(a_hat, cfg.delta);
    res.spectrum_size = spec.frequencies.size();
    res.lemma_reports.push_back(spec.size_report);
    bohr = build_bohr_set(spec.frequencies, cfg.kappa, cfg.epsilon, params.N);
    res.bohr_size = bohr.elements.size();
    res.lemma_reports.push_back(bohr_size_lemma(bohr));
    for (auto& r : beta_lemma(bohr)) res.lemma_reports.push_back(r);
    a_prime.reserve(a.size());
    for (const auto& ai : a) a_prime.push_back(smooth(ai, bohr.beta));

    // Smoothing contracts, enforced on every run: mass preservation and
    // support containment in [-2 kappa N, M + 2 kappa N].
    const auto shift = static_cast<std::int64_t>(
        std::floor(2.0 * cfg.kappa * static_cast<double>(params.N)));
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double s0 = a[i].sum(), s1 = a_prime[i].sum();
      if (std::abs(s0 - s1) > 1e-9 * std::max(1.0, std::abs(s0)))
        throw std::runtime_error("smoothing changed the mass of a_" +
                                 std::to_string(i));
      // window = residues of the integer interval [-2 kappa N, M + 2 kappa N]
      const std::uint64_t hi = params.M + static_cast<std::uint64_t>(shift);
      const std::uint64_t lo = params.N - static_cast<std::uint64_t>(shift);
      for (std::uint64_t x = 0; x < params.N; ++x) {
        if (a_prime[i].values[x] == 0.0) continue;
        if (hi >= lo) break;  // window covers all of Z_N
        if (x > hi && x < lo)
          throw std::runtime_error("smoothed a_" + std::to_string(i) +
                                   " supported outside the window at " +
                                   std::to_string(x));
      }
    }

    for (auto& r : upper_lemma(a_prime[0], params, bohr))
      res.lemma_reports.push_back(r);
    model = extract_dense_model(a_prime, params);
    for (auto& r : model.reports) res.lemma_reports.push_back(r);

    // Partition exactness: the classes are disjoint and cover A_0'.
    std::size_t covered = 0;
    for (std::size_t i = 1; i < model.partition.size(); ++i)
      covered += model.partition[i].size();
    if (covered != model.A0prime.size())
      throw std::runtime_error("dense-model partition does not cover A_0'");
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("pipeline stage bohr: ") + e.what());
  }

  try {
    res.transfer =
        positivity_chain(a, a_prime, model, params, cfg.delta, cfg.epsilon,
                         cfg.k, res.c2_3, res.c2_52, schur_constants(cfg.k).c1);
    for (auto& r : res.transfer.reports) res.lemma_reports.push_back(r);
    const auto ts = triple_sum(a[1], a[1], a[1]);  // representative color
    res.triple_sum_fourier = res.transfer.final_lhs;
    res.triple_sum_direct_available = ts.direct_computed;
    if (ts.direct_computed) {
      double direct = 0.0;
      for (int i = 1; i <= cfg.k; ++i)
        direct += triple_sum(a[i], a[i], a[i]).direct;
      res.triple_sum_direct = direct;
    }
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("pipeline stage transfer: ") + e.what());
  }

  // Lifting: every Z_N solution x + y = z with x, y, z in A_i and <= M maps
  // to the integer identity (Wx+1) + (Wy+1) = (Wz+1) + 1. Re-verify each.
  try {
    std::vector<std::uint8_t> member(params.M + 1, 0);
    for (int i = 1; i <= cfg.k; ++i) {
      std::fill(member.begin(), member.end(), 0);
      for (std::uint64_t x : classes[static_cast<std::size_t>(i) - 1]) member[x] = 1;
      const auto& cls = classes[static_cast<std::size_t>(i) - 1];
      for (std::size_t xi = 0; xi < cls.size(); ++xi)
        for (std::size_t yi = xi; yi < cls.size(); ++yi) {
          const std::uint64_t x = cls[xi], y = cls[yi];
          const std::uint64_t z = x + y;
          if (z > params.M || !member[z]) continue;
          const std::uint64_t p1 = params.W * x + 1;
          const std::uint64_t p2 = params.W * y + 1;
          const std::uint64_t p3 = params.W * z + 1;
          const bool ok = is_prime_u64(p1) && is_prime_u64(p2) &&
                          is_prime_u64(p3) && p1 + p2 == p3 + 1 &&
                          coloring.color_of(p1) == i &&
                          coloring.color_of(p2) == i &&
                          coloring.color_of(p3) == i;
          if (!ok) {
            ++res.lifting_failures;
            continue;
          }
          ++res.lifted_total;
          if (res.lifted_witnesses.size() < cfg.max_witnesses)
            res.lifted_witnesses.push_back({p1, p2, p3, i, p1 != p2});
        }
    }
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("pipeline stage lifting: ") + e.what());
  }
  return res;
}

namespace {

using json = nlohmann::ordered_json;

json report_to_json(const LemmaReport& r) {
  return json{{"name", r.name},       {"measured", r.measured},
              {"bound", r.bound},     {"relation", r.relation},
              {"pass", r.pass},       {"margin", r.margin},
              {"note", r.note}};
}

json witness_to_json(const Witness& w) {
  return json{{"p1", w.p1}, {"p2", w.p2}, {"p3", w.p3},
              {"color", w.color}, {"distinct", w.distinct}};
}

const char* mode_name(RunMode m) {
  switch (m) {
    case RunMode::Search: return "search";
    case RunMode::Pipeline: return "pipeline";
    case RunMode::Both: return "both";
    case RunMode::Conjecture: return "conjecture";
  }
  return "?";
}

}  // namespace

std::string render_report(const RunResults& results) {
  const RunConfig& cfg = results.cfg;
  json doc;
  doc["config"] = json{{"n", cfg.n},         {"w", cfg.w},
                       {"k", cfg.k},         {"kappa", cfg.kappa},
                       {"delta", cfg.delta}, {"epsilon", cfg.epsilon},
                       {"coloring", cfg.coloring_spec},
                       {"mode", mode_name(cfg.mode)},
                       {"paper_defaults", cfg.paper_defaults}};

  doc["witnesses"] = json::array();
  if (results.search) {
    for (const auto& w : results.search->witnesses)
      doc["witnesses"].push_back(witness_to_json(w));
    doc["witness_summary"] = json{
        {"total", results.search->total_count},
        {"distinct", results.search->distinct_count},
        {"first", results.search->first ? witness_to_json(*results.search->first)
                                        : json(nullptr)},
        {"first_distinct", results.search->first_distinct
                               ? witness_to_json(*results.search->first_distinct)
                               : json(nullptr)}};
  }

  doc["lemma_reports"] = json::array();
  doc["triple_sums"] = json{{"direct", nullptr}, {"fourier", nullptr}};
  doc["constants"] = json{{"c2_empirical", json{{"rho_3", nullptr}, {"rho_5_2", nullptr}}},
                          {"c3", nullptr}};
  if (results.pipeline) {
    const auto& p = *results.pipeline;
    for (const auto& r : p.lemma_reports)
      doc["lemma_reports"].push_back(report_to_json(r));
    doc["triple_sums"]["fourier"] = p.triple_sum_fourier;
    if (p.triple_sum_direct_available)
      doc["triple_sums"]["direct"] = p.triple_sum_direct;
    doc["constants"]["c2_empirical"]["rho_3"] = p.c2_3;
    doc["constants"]["c2_empirical"]["rho_5_2"] = p.c2_52;
    doc["constants"]["c3"] =
        384.0 * p.c2_3 + 2.0 * std::pow(p.c2_52, 2.0 / 3.0) *
                             std::pow(p.c2_3, 1.0 / 3.0);
    doc["pipeline"] = json{
        {"W", p.params.W},
        {"M", p.params.M},
        {"N", p.params.N},
        {"phiW", p.params.phiW},
        {"spectrum_size", p.spectrum_size},
        {"bohr_size", p.bohr_size},
        {"X_size", p.transfer.model.X.size()},
        {"A0prime_size", p.transfer.model.A0prime.size()},
        {"lifted_total", p.lifted_total},
        {"lifting_failures", p.lifting_failures},
        {"final_lhs", p.transfer.final_lhs},
        {"smoothed_sum", p.transfer.smoothed_sum},
        {"final_rhs_terms", p.transfer.final_rhs_terms},
        {"remark_degenerate_mass", p.transfer.remark_degenerate_mass}};
    doc["lifted_witnesses"] = json::array();
    for (const auto& w : p.lifted_witnesses)
      doc["lifted_witnesses"].push_back(witness_to_json(w));
  }

  if (!results.quads.empty() || cfg.mode == RunMode::Conjecture) {
    doc["progressions"] = json::array();
    for (const auto& q : results.quads)
      doc["progressions"].push_back(json{{"p0", q.p0}, {"p1", q.p1},
                                         {"p2", q.p2}, {"p3", q.p3},
                                         {"color", q.color}});
    doc["progression_total"] = results.quad_total;
  }

  // Wall-clock timings are only embedded on request; by default the report
  // is a pure function of the config, so identical configs give identical
  // bytes.
  doc["timings"] = json::object();
  for (const auto& [stage, ms] : results.timings_ms)
    doc["timings"][stage] = cfg.include_timings ? json(ms) : json(0.0);

  return doc.dump(2) + "\n";
}

void emit_report(const RunResults& results, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit_report: cannot open " + path);
  out << render_report(results);
  if (!out) throw std::runtime_error("emit_report: write failed for " + path);

  if (results.cfg.format == "csv") {
    const std::string base =
        path.size() > 5 && path.substr(path.size() - 5) == ".json"
            ? path.substr(0, path.size() - 5)
            : path;
    if (results.pipeline) {
      std::ofstream csv(base + ".lemmas.csv");
      if (!csv) throw std::runtime_error("emit_report: cannot open lemma CSV");
      csv << "name,measured,bound,relation,pass,margin\n";
      for (const auto& r : results.pipeline->lemma_reports)
        csv << r.name << ',' << r.measured << ',' << r.bound << ','
            << r.relation << ',' << (r.pass ? 1 : 0) << ',' << r.margin << "\n";
    }
    if (results.search) {
      std::ofstream csv(base + ".witnesses.csv");
      if (!csv) throw std::runtime_error("emit_report: cannot open witness CSV");
      csv << "p1,p2,p3,color,distinct\n";
      for (const auto& w : results.search->witnesses)
        csv << w.p1 << ',' << w.p2 << ',' << w.p3 << ',' << w.color << ','
            << (w.distinct ? 1 : 0) << "\n";
    }
  }
}

}  // namespace schur
