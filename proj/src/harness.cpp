#include "trinom/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "trinom/version.hpp"

namespace trinom {

namespace {

int id_index(ResultId id) { return static_cast<int>(id); }

// One evaluation group per checker entry point; the three d-fixed alternating
// results share a group because one call produces all of them.
enum class Group {
  psc, pscc, stc, sdcc, thm11_odd, thm11_even, thm12, thm13, thm14,
  lem21, lem22, lem23, lem24, catalan_aux, frobenius,
};
constexpr int kGroupCount = 15;

Group group_of(ResultId id) {
  switch (id) {
    case ResultId::psc: return Group::psc;
    case ResultId::pscc: return Group::pscc;
    case ResultId::stc: return Group::stc;
    case ResultId::sdcc: return Group::sdcc;
    case ResultId::thm11_odd: return Group::thm11_odd;
    case ResultId::thm11_even: return Group::thm11_even;
    case ResultId::thm12: return Group::thm12;
    case ResultId::thm13_d0:
    case ResultId::thm13_d1:
    case ResultId::thm13_d2: return Group::thm13;
    case ResultId::thm14: return Group::thm14;
    case ResultId::lem21: return Group::lem21;
    case ResultId::lem22: return Group::lem22;
    case ResultId::lem23: return Group::lem23;
    case ResultId::lem24: return Group::lem24;
    case ResultId::catalan_aux: return Group::catalan_aux;
    case ResultId::frobenius: return Group::frobenius;
  }
  return Group::psc;
}

std::string_view group_label(Group g) {
  switch (g) {
    case Group::psc: return "PSC";
    case Group::pscc: return "PSCC";
    case Group::stc: return "STC";
    case Group::sdcc: return "SDCC";
    case Group::thm11_odd: return "THM11_ODD";
    case Group::thm11_even: return "THM11_EVEN";
    case Group::thm12: return "THM12";
    case Group::thm13: return "THM13";
    case Group::thm14: return "THM14";
    case Group::lem21: return "LEM21";
    case Group::lem22: return "LEM22";
    case Group::lem23: return "LEM23";
    case Group::lem24: return "LEM24";
    case Group::catalan_aux: return "CATALAN_AUX";
    case Group::frobenius: return "FROBENIUS";
  }
  return "?";
}

struct Unit {
  Group group;
  uint64_t index;  // prime, or n for the exact row identity
};

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Parameter selection under the configured d-mode.  Sampling is seeded per
// (group, index) so reports are reproducible at any worker count.
std::vector<uint64_t> apply_d_mode(const SweepConfig& cfg, Group g,
                                   uint64_t index,
                                   std::vector<uint64_t> params) {
  switch (cfg.d_mode) {
    case DMode::all:
      return params;
    case DMode::stride: {
      std::vector<uint64_t> out;
      for (size_t i = 0; i < params.size(); i += cfg.d_stride)
        out.push_back(params[i]);
      return out;
    }
    case DMode::sample: {
      if (cfg.d_sample >= params.size()) return params;
      uint64_t seed = splitmix64(
          cfg.d_seed ^ splitmix64((static_cast<uint64_t>(g) << 32) ^ index));
      std::mt19937_64 rng(seed);
      for (uint64_t i = 0; i < cfg.d_sample; ++i) {
        size_t j = i + rng() % (params.size() - i);
        std::swap(params[i], params[j]);
      }
      params.resize(cfg.d_sample);
      std::sort(params.begin(), params.end());
      return params;
    }
  }
  return params;
}

std::vector<uint64_t> range_params(uint64_t lo, uint64_t hi, uint64_t step) {
  std::vector<uint64_t> v;
  if (lo > hi) return v;
  for (uint64_t x = lo; x <= hi; x += step) v.push_back(x);
  return v;
}

std::vector<CongruenceCase> eval_unit(
    const Unit& unit, const SweepConfig& cfg,
    const std::array<bool, kResultIdCount>& wanted) {
  std::vector<CongruenceCase> out;
  if (unit.group == Group::lem21) {
    std::vector<CongruenceCase> all = check_lem21_all(unit.index);
    std::vector<uint64_t> ds(all.size());
    std::iota(ds.begin(), ds.end(), 0);
    for (uint64_t d : apply_d_mode(cfg, unit.group, unit.index, std::move(ds)))
      out.push_back(std::move(all[d]));
    return out;
  }

  uint64_t p = unit.index;
  PrimeChecker checker(p);
  auto selected = [&](std::vector<uint64_t> params) {
    return apply_d_mode(cfg, unit.group, p, std::move(params));
  };
  switch (unit.group) {
    case Group::psc:
      for (uint64_t d : selected(range_params(0, p - 1, 1)))
        out.push_back(checker.psc(d));
      break;
    case Group::pscc:
      for (uint64_t d : selected(range_params(0, p - 1, 1)))
        out.push_back(checker.pscc(d));
      break;
    case Group::stc:
      for (uint64_t d : selected(range_params(0, p - 1, 1)))
        out.push_back(checker.stc(d));
      break;
    case Group::sdcc:
      for (uint64_t d : selected(range_params(0, p - 1, 1)))
        out.push_back(checker.sdcc(d));
      break;
    case Group::thm11_odd:
      for (uint64_t d : selected(range_params(1, p - 2, 2)))
        out.push_back(checker.thm11_odd(d));
      break;
    case Group::thm11_even:
      for (uint64_t d : selected(range_params(0, p - 1, 2)))
        out.push_back(checker.thm11_even(d));
      break;
    case Group::thm12:
      for (uint64_t d : selected(range_params(0, p - 1, 1)))
        out.push_back(checker.thm12(d));
      break;
    case Group::thm13: {
      for (CongruenceCase& c : checker.thm13())
        if (wanted[id_index(c.id)]) out.push_back(std::move(c));
      break;
    }
    case Group::thm14:
      out.push_back(checker.thm14());
      break;
    case Group::lem21:
      break;  // handled above
    case Group::lem22: {
      uint64_t half = (p - 1) / 2;
      for (uint64_t m : selected(range_params(1, half - 1, 1)))
        out.push_back(checker.lem22(m));
      break;
    }
    case Group::lem23:
      out.push_back(checker.lem23());
      break;
    case Group::lem24:
      out.push_back(checker.lem24());
      break;
    case Group::catalan_aux:
      out.push_back(checker.catalan_aux());
      break;
    case Group::frobenius:
      out.push_back(checker.frobenius());
      break;
  }
  return out;
}

std::vector<uint64_t> simple_sieve(uint64_t lo, uint64_t hi) {
  std::vector<char> composite(hi + 1, 0);
  for (uint64_t i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (uint64_t j = i * i; j <= hi; j += i) composite[j] = 1;
  }
  std::vector<uint64_t> primes;
  for (uint64_t x = std::max<uint64_t>(lo, 2); x <= hi; ++x)
    if (!composite[x]) primes.push_back(x);
  return primes;
}

bool case_order(const CongruenceCase& a, const CongruenceCase& b) {
  if (a.id != b.id) return id_index(a.id) < id_index(b.id);
  if (a.p != b.p) return a.p < b.p;
  return a.parameter.value_or(0) < b.parameter.value_or(0);
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::istringstream in(s);
  std::string token;
  while (std::getline(in, token, sep)) parts.push_back(token);
  return parts;
}

bool parse_u64(const std::string& s, uint64_t& out) {
  if (s.empty()) return false;
  uint64_t value = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    if (value > (UINT64_MAX - (c - '0')) / 10) return false;
    value = value * 10 + static_cast<uint64_t>(c - '0');
  }
  out = value;
  return true;
}

}  // namespace

std::vector<uint64_t> sieve_primes(uint64_t lo, uint64_t hi) {
  if (lo < 2 || lo > hi)
    throw std::invalid_argument("sieve_primes: requires 2 <= lo <= hi");
  constexpr uint64_t kSimpleLimit = 10'000'000;
  if (hi <= kSimpleLimit) return simple_sieve(lo, hi);

  uint64_t root = 2;
  while ((root + 1) * (root + 1) <= hi) ++root;
  std::vector<uint64_t> base = simple_sieve(2, root);
  std::vector<uint64_t> primes;
  constexpr uint64_t kSegment = 1 << 20;
  for (uint64_t start = lo; start <= hi; start += kSegment) {
    uint64_t end = std::min(hi, start + kSegment - 1);
    std::vector<char> composite(end - start + 1, 0);
    for (uint64_t b : base) {
      uint64_t first = std::max(b * b, (start + b - 1) / b * b);
      for (uint64_t x = first; x <= end; x += b) composite[x - start] = 1;
    }
    for (uint64_t x = std::max<uint64_t>(start, 2); x <= end; ++x)
      if (!composite[x - start]) primes.push_back(x);
    if (end == hi) break;
  }
  return primes;
}

bool VerificationReport::all_passed() const { return failures.empty(); }

VerificationReport run_sweep(const SweepConfig& config) {
  if (config.p_min <= 3)
    throw std::invalid_argument("run_sweep: p_min must be above 3");
  if (config.p_min > config.p_max)
    throw std::invalid_argument("run_sweep: p_min must not exceed p_max");
  if (config.p_max > 3037000499ULL)
    throw std::invalid_argument("run_sweep: p_max exceeds the supported range");
  if (config.d_mode == DMode::stride && config.d_stride < 1)
    throw std::invalid_argument("run_sweep: stride must be >= 1");
  if (config.d_mode == DMode::sample && config.d_sample < 1)
    throw std::invalid_argument("run_sweep: sample count must be >= 1");

  auto started = std::chrono::steady_clock::now();

  std::array<bool, kResultIdCount> wanted{};
  for (ResultId id : config.results) wanted[id_index(id)] = true;
  std::array<bool, kGroupCount> group_wanted{};
  for (ResultId id : config.results)
    group_wanted[static_cast<int>(group_of(id))] = true;

  std::vector<uint64_t> primes;
  bool primes_ready = false;
  std::vector<Unit> units;
  for (int g = 0; g < kGroupCount; ++g) {
    if (!group_wanted[g]) continue;
    Group group = static_cast<Group>(g);
    if (group == Group::lem21) {
      for (uint64_t n = config.p_min; n <= config.p_max; ++n)
        units.push_back({group, n});
    } else {
      if (!primes_ready) {
        primes = sieve_primes(config.p_min, config.p_max);
        primes_ready = true;
      }
      for (uint64_t p : primes) units.push_back({group, p});
    }
  }

  std::vector<std::vector<CongruenceCase>> slots(units.size());
  std::vector<double> unit_seconds(units.size(), 0.0);
  std::vector<char> unit_done(units.size(), 0);
  std::atomic<size_t> next{0};
  std::atomic<bool> stop{false};
  unsigned jobs = std::max(1u, config.jobs);
  std::vector<std::exception_ptr> worker_errors(jobs);

  auto worker = [&](unsigned wi) {
    try {
      for (;;) {
        if (stop.load(std::memory_order_relaxed)) break;
        size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= units.size()) break;
        auto unit_started = std::chrono::steady_clock::now();
        slots[i] = eval_unit(units[i], config, wanted);
        unit_seconds[i] = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - unit_started)
                              .count();
        unit_done[i] = 1;
        if (config.fail_fast) {
          for (const CongruenceCase& c : slots[i])
            if (!c.pass) {
              stop.store(true, std::memory_order_relaxed);
              break;
            }
        }
      }
    } catch (...) {
      worker_errors[wi] = std::current_exception();
      stop.store(true, std::memory_order_relaxed);
    }
  };

  if (jobs == 1 || units.size() <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    for (std::thread& t : pool) t.join();
  }
  for (std::exception_ptr& e : worker_errors)
    if (e) std::rethrow_exception(e);

  VerificationReport report;
  report.config = config;
  report.version = std::string(kVersion);

  std::array<ResultTotals, kResultIdCount> totals{};
  std::array<double, kGroupCount> group_seconds{};
  std::array<char, kGroupCount> group_active{};
  bool skipped = false;
  for (size_t i = 0; i < units.size(); ++i) {
    if (!unit_done[i]) {
      skipped = true;
      continue;
    }
    int g = static_cast<int>(units[i].group);
    group_seconds[g] += unit_seconds[i];
    group_active[g] = 1;
    for (CongruenceCase& c : slots[i]) {
      ResultTotals& t = totals[id_index(c.id)];
      ++t.cases;
      if (c.pass)
        ++t.passes;
      else if (c.failure == FailureKind::divisibility)
        ++t.divisibility_failures;
      else
        ++t.mismatches;
      if (!c.pass) report.failures.push_back(c);
      if (config.keep_cases) report.cases.push_back(std::move(c));
    }
  }
  report.stopped_early = skipped;
  std::stable_sort(report.failures.begin(), report.failures.end(), case_order);
  std::stable_sort(report.cases.begin(), report.cases.end(), case_order);
  for (int i = 0; i < kResultIdCount; ++i)
    if (totals[i].cases > 0)
      report.totals.emplace_back(kAllResultIds[i], totals[i]);
  for (int g = 0; g < kGroupCount; ++g)
    if (group_active[g])
      report.timings.emplace_back(std::string(group_label(static_cast<Group>(g))),
                                  group_seconds[g]);
  report.total_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return report;
}

namespace {

nlohmann::json case_to_json(const CongruenceCase& c) {
  nlohmann::json j;
  j["result_id"] = std::string(to_string(c.id));
  j["p"] = c.p;
  if (c.parameter)
    j["d"] = *c.parameter;
  else
    j["d"] = nullptr;
  if (c.modulus == 0)
    j["modulus"] = nullptr;
  else
    j["modulus"] = c.modulus;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["failure_kind"] = c.pass ? "" : std::string(to_string(c.failure));
  return j;
}

void append_case_line(std::ostringstream& os, const CongruenceCase& c) {
  os << "  " << to_string(c.id) << "  p=" << c.p;
  if (c.parameter) os << "  d=" << *c.parameter;
  if (c.modulus != 0)
    os << "  mod=" << c.modulus;
  else
    os << "  exact";
  os << "  lhs=" << c.lhs << "  rhs=" << c.rhs << "  "
     << (c.pass ? "ok" : std::string(to_string(c.failure))) << "\n";
}

std::string emit_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "sweep p in [" << r.config.p_min << ", " << r.config.p_max << "], d: "
     << d_mode_string(r.config) << ", jobs: " << std::max(1u, r.config.jobs)
     << "\n";
  os << std::left << std::setw(13) << "result" << std::right << std::setw(10)
     << "cases" << std::setw(10) << "pass" << std::setw(10) << "mismatch"
     << std::setw(10) << "div-fail" << "\n";
  uint64_t cases = 0, passes = 0, mism = 0, divf = 0;
  for (const auto& [id, t] : r.totals) {
    os << std::left << std::setw(13) << to_string(id) << std::right
       << std::setw(10) << t.cases << std::setw(10) << t.passes
       << std::setw(10) << t.mismatches << std::setw(10)
       << t.divisibility_failures << "\n";
    cases += t.cases;
    passes += t.passes;
    mism += t.mismatches;
    divf += t.divisibility_failures;
  }
  os << std::left << std::setw(13) << "total" << std::right << std::setw(10)
     << cases << std::setw(10) << passes << std::setw(10) << mism
     << std::setw(10) << divf << "\n";
  if (r.config.keep_cases && !r.cases.empty()) {
    os << "cases:\n";
    for (const CongruenceCase& c : r.cases) append_case_line(os, c);
  }
  if (!r.failures.empty()) {
    os << "failures:\n";
    for (const CongruenceCase& c : r.failures) append_case_line(os, c);
  }
  if (r.stopped_early) os << "stopped early (fail-fast)\n";
  os << std::fixed << std::setprecision(2);
  for (const auto& [label, secs] : r.timings)
    os << "timing " << label << ": " << secs << " s\n";
  os << "elapsed: " << r.total_seconds << " s\n";
  os << "status: " << (r.all_passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string emit_json(const VerificationReport& r) {
  nlohmann::json j;
  nlohmann::json cfg;
  nlohmann::json ids = nlohmann::json::array();
  for (ResultId id : r.config.results) ids.push_back(std::string(to_string(id)));
  cfg["results"] = ids;
  cfg["pmin"] = r.config.p_min;
  cfg["pmax"] = r.config.p_max;
  cfg["d"] = d_mode_string(r.config);
  cfg["fail_fast"] = r.config.fail_fast;
  j["config"] = cfg;

  nlohmann::json results = nlohmann::json::array();
  for (const auto& [id, t] : r.totals) {
    nlohmann::json entry;
    entry["result_id"] = std::string(to_string(id));
    entry["cases"] = t.cases;
    entry["passes"] = t.passes;
    entry["mismatches"] = t.mismatches;
    entry["divisibility_failures"] = t.divisibility_failures;
    results.push_back(entry);
  }
  j["results"] = results;

  nlohmann::json failures = nlohmann::json::array();
  for (const CongruenceCase& c : r.failures) failures.push_back(case_to_json(c));
  j["failures"] = failures;
  if (r.config.keep_cases) {
    nlohmann::json cases = nlohmann::json::array();
    for (const CongruenceCase& c : r.cases) cases.push_back(case_to_json(c));
    j["cases"] = cases;
  }
  j["stopped_early"] = r.stopped_early;
  j["version"] = r.version;

  nlohmann::json timing;
  timing["total_seconds"] = r.total_seconds;
  nlohmann::json per;
  for (const auto& [label, secs] : r.timings) per[label] = secs;
  timing["per_result"] = per;
  j["timing"] = timing;

  return j.dump(2) + "\n";
}

std::string emit_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "result_id,p,d,modulus,lhs,rhs,pass,failure_kind\n";
  for (const CongruenceCase& c : r.cases) {
    os << to_string(c.id) << ',' << c.p << ',';
    if (c.parameter) os << *c.parameter;
    os << ',';
    if (c.modulus == 0)
      os << "exact";
    else
      os << c.modulus;
    os << ',' << c.lhs << ',' << c.rhs << ',' << (c.pass ? "true" : "false")
       << ',';
    if (!c.pass) os << to_string(c.failure);
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string emit_report(const VerificationReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::text: return emit_text(report);
    case OutputFormat::json: return emit_json(report);
    case OutputFormat::csv: return emit_csv(report);
  }
  return "";
}

std::optional<std::vector<ResultId>> parse_results_arg(const std::string& arg) {
  std::array<bool, kResultIdCount> pick{};
  bool any = false;
  for (const std::string& raw : split(arg, ',')) {
    std::string token = trim(raw);
    if (token.empty()) continue;
    std::string lower = token;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == "all") {
      for (auto& b : pick) b = true;
      any = true;
      continue;
    }
    std::optional<ResultId> id = parse_result_id(token);
    if (!id) return std::nullopt;
    pick[id_index(*id)] = true;
    any = true;
  }
  if (!any) return std::nullopt;
  std::vector<ResultId> out;
  for (int i = 0; i < kResultIdCount; ++i)
    if (pick[i]) out.push_back(kAllResultIds[i]);
  return out;
}

bool parse_d_mode_arg(const std::string& arg, SweepConfig& config) {
  if (arg == "all") {
    config.d_mode = DMode::all;
    return true;
  }
  if (arg.rfind("stride:", 0) == 0) {
    uint64_t stride = 0;
    if (!parse_u64(arg.substr(7), stride) || stride < 1) return false;
    config.d_mode = DMode::stride;
    config.d_stride = stride;
    return true;
  }
  if (arg.rfind("sample:", 0) == 0) {
    std::vector<std::string> parts = split(arg.substr(7), ':');
    if (parts.size() != 2) return false;
    uint64_t count = 0, seed = 0;
    if (!parse_u64(parts[0], count) || count < 1) return false;
    if (!parse_u64(parts[1], seed)) return false;
    config.d_mode = DMode::sample;
    config.d_sample = count;
    config.d_seed = seed;
    return true;
  }
  return false;
}

std::string d_mode_string(const SweepConfig& config) {
  switch (config.d_mode) {
    case DMode::all: return "all";
    case DMode::stride: return "stride:" + std::to_string(config.d_stride);
    case DMode::sample:
      return "sample:" + std::to_string(config.d_sample) + ":" +
             std::to_string(config.d_seed);
  }
  return "all";
}

std::optional<OutputFormat> parse_format_arg(const std::string& arg) {
  if (arg == "text") return OutputFormat::text;
  if (arg == "json") return OutputFormat::json;
  if (arg == "csv") return OutputFormat::csv;
  return std::nullopt;
}

}  // namespace trinom
