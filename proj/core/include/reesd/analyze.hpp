#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reesd/oracles.hpp"

namespace reesd {

// One analysis run: ideal source, range, enabled checks, budgets.
struct RunConfig {
  // Explicit polynomials (three expressions) take precedence; otherwise the
  // random spec below is used.
  std::vector<std::string> ideal_text;
  std::optional<std::uint64_t> random_seed;
  long random_mu = 0, random_d = 0;
  long random_bound = 5;

  long pmax = 5;
  bool thA = true, thB = true, thC = false, thD = true, duality = true;
  long bcap = 0;            // 0: default 4(d+p) per level
  long derham_budget = 64;  // max truncation degree
  int jobs = 1;
};

struct BFunctionReport {
  long p = 0;
  std::string factored;
  std::vector<std::string> coeffs;      // ascending powers of s, "num/den"
  std::vector<std::string> components;  // factored display per component ideal
  bool support_match = false;
  bool product_match = false;
};

// Everything computed for one T-degree p.
struct PReport {
  long p = 0;
  bool holonomic = true;
  std::optional<BFunctionReport> bf;
  std::optional<DeRhamResult> derham;
  bool thA_ok = true, thB_ok = true, thC_ok = true, thD_ok = true, duality_ok = true;
  std::vector<std::string> failures;  // tagged diagnostics, e.g. "thB: ..."

  bool ok() const { return failures.empty(); }
};

struct ReesAnalysis {
  RunConfig cfg;
  bool valid = false;
  std::string error;  // validation / input failure (analysis not performed)

  std::vector<std::string> f_str;
  long d = 0, mu = 0;
  std::vector<std::vector<std::string>> phi_str;  // 3 rows x 2 columns
  std::vector<std::string> g_str;                 // g1, g2
  std::vector<std::string> L_str;                 // L1, L2

  BigradedTable table;
  bool routes_match = false;  // elimination REQ == saturation REQ
  bool cor26_ok = false;      // vanishing above q=d-2 and top dimension C(p,2)
  std::vector<std::string> global_failures;
  std::vector<PReport> per_p;

  std::map<std::string, double> timings_sec;
  bool all_passed = false;
};

ReesAnalysis run_analyze(const RunConfig& cfg);

// Corpus: independent runs; failures are collected, never abort the batch.
struct CorpusSummary {
  long total = 0;
  long passed = 0;
  std::vector<std::string> lines;  // one line per run, deterministic

  bool all_passed() const { return total > 0 && passed == total; }
};

CorpusSummary corpus_runner(const std::vector<RunConfig>& specs);

// JSON corpus spec: {"runs": [ {..}, ... ]} with per-run keys
// ideal (array of three strings) or random {mu,d,seed,bound}, and optional
// pmax, oracles (array), bcap, derham_budget, jobs.
std::vector<RunConfig> parse_corpus_spec(const std::string& json_text);

}  // namespace reesd
