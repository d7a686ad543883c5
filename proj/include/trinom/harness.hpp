#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trinom/congruences.hpp"

namespace trinom {

// All primes in [lo, hi], ascending.  Plain sieve for small ranges; switches
// to a segmented sieve once hi goes past 10^7 to keep memory flat.
std::vector<uint64_t> sieve_primes(uint64_t lo, uint64_t hi);

enum class DMode { all, stride, sample };
enum class OutputFormat { text, json, csv };

struct SweepConfig {
  std::vector<ResultId> results;
  uint64_t p_min = 5;
  uint64_t p_max = 97;
  DMode d_mode = DMode::all;
  uint64_t d_stride = 1;  // stride mode: keep every d_stride-th parameter
  uint64_t d_sample = 0;  // sample mode: how many parameters per (result, p)
  uint64_t d_seed = 0;    // sample mode: base seed
  unsigned jobs = 1;
  bool fail_fast = false;
  bool keep_cases = false;  // retain every case, not just failures (csv needs it)
};

struct ResultTotals {
  uint64_t cases = 0;
  uint64_t passes = 0;
  uint64_t mismatches = 0;
  uint64_t divisibility_failures = 0;
};

struct VerificationReport {
  SweepConfig config;
  // Ascending by id; ids with zero cases are omitted.
  std::vector<std::pair<ResultId, ResultTotals>> totals;
  std::vector<CongruenceCase> failures;
  std::vector<CongruenceCase> cases;  // only when config.keep_cases
  // Seconds per result family, in catalog order, families with work only.
  std::vector<std::pair<std::string, double>> timings;
  double total_seconds = 0.0;
  bool stopped_early = false;
  std::string version;

  bool all_passed() const;
};

// Evaluates every selected checker over the configured range.  Primes at or
// below 3 never appear (every result assumes p > 3); the LEM21 family ranges
// over all integers n in [p_min, p_max] instead of primes.  Case ordering in
// the report is (result, p, parameter) regardless of worker count.
VerificationReport run_sweep(const SweepConfig& config);

std::string emit_report(const VerificationReport& report, OutputFormat format);

// CLI argument helpers.
std::optional<std::vector<ResultId>> parse_results_arg(const std::string& arg);
bool parse_d_mode_arg(const std::string& arg, SweepConfig& config);
std::string d_mode_string(const SweepConfig& config);
std::optional<OutputFormat> parse_format_arg(const std::string& arg);

}  // namespace trinom
