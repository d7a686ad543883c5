#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <json.hpp>

#include "trinom/combinatorics.hpp"
#include "trinom/congruences.hpp"
#include "trinom/harness.hpp"
#include "trinom/modarith.hpp"
#include "trinom/sequences.hpp"
#include "trinom/trinomial.hpp"

using namespace trinom;

namespace {

int failures = 0;

void run_criterion(int number, const std::string& label, bool (*body)(std::string&)) {
  std::string detail;
  bool ok = false;
  auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (!ok) ++failures;
  std::printf("criterion %2d: %s  %-44s (%.1f s%s%s)\n", number,
              ok ? "PASS" : "FAIL", label.c_str(), secs,
              detail.empty() ? "" : ", ", detail.c_str());
  std::fflush(stdout);
}

struct SweepOutcome {
  uint64_t cases = 0;
  uint64_t passes = 0;
  uint64_t divisibility = 0;
  bool clean = false;
  VerificationReport report;
};

SweepOutcome sweep(std::vector<ResultId> ids, uint64_t p_max,
                   bool keep_cases = false) {
  SweepConfig cfg;
  cfg.results = std::move(ids);
  cfg.p_min = 5;
  cfg.p_max = p_max;
  cfg.keep_cases = keep_cases;
  SweepOutcome out;
  out.report = run_sweep(cfg);
  for (const auto& [id, t] : out.report.totals) {
    out.cases += t.cases;
    out.passes += t.passes;
    out.divisibility += t.divisibility_failures;
  }
  out.clean = out.report.all_passed() && out.cases == out.passes;
  return out;
}

std::string count_note(const SweepOutcome& o) {
  return std::to_string(o.cases) + " cases";
}

bool crit1(std::string& detail) {
  SweepOutcome o = sweep({ResultId::sdcc}, 997);
  detail = count_note(o);
  return o.clean && o.cases > 0;
}

bool crit2(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  SweepOutcome o = sweep({ResultId::thm11_odd, ResultId::thm11_even}, 997);
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  detail = count_note(o) + ", " + std::to_string(o.divisibility) +
           " failed lifts";
  return o.clean && o.divisibility == 0 && o.cases > 0 && secs <= 120.0;
}

bool crit3(std::string& detail) {
  SweepOutcome o = sweep({ResultId::thm12}, 499, true);
  uint64_t boundary_checked = 0;
  bool boundary_ok = true;
  for (const CongruenceCase& c : o.report.cases) {
    if (!c.parameter) continue;
    if (*c.parameter == c.p - 1) {
      ++boundary_checked;
      boundary_ok = boundary_ok && c.lhs == "1";
    } else if (*c.parameter == c.p - 2) {
      ++boundary_checked;
      boundary_ok = boundary_ok && c.lhs == std::to_string(c.p - 2);
    }
  }
  uint64_t prime_count = sieve_primes(5, 499).size();
  detail = count_note(o) + ", " + std::to_string(boundary_checked) +
           " boundary rows";
  return o.clean && boundary_ok && boundary_checked == 2 * prime_count &&
         o.cases > 0;
}

bool crit4(std::string& detail) {
  SweepOutcome o = sweep(
      {ResultId::thm13_d0, ResultId::thm13_d1, ResultId::thm13_d2}, 9973);
  detail = count_note(o);
  return o.clean && o.cases == 3 * sieve_primes(5, 9973).size();
}

bool crit5(std::string& detail) {
  SweepOutcome o = sweep({ResultId::thm14}, 9973);
  detail = count_note(o);
  return o.clean && o.cases == sieve_primes(5, 9973).size();
}

bool crit6(std::string& detail) {
  SweepConfig cfg;
  cfg.results = {ResultId::lem21};
  cfg.p_min = 5;
  cfg.p_max = 80;
  VerificationReport r = run_sweep(cfg);
  uint64_t cases = 0, passes = 0;
  for (const auto& [id, t] : r.totals) {
    cases += t.cases;
    passes += t.passes;
  }
  detail = std::to_string(cases) + " cases";
  // n = 5..80 contribute n offsets each.
  uint64_t expected = (80 * 81) / 2 - (4 * 5) / 2;
  return r.all_passed() && cases == passes && cases == expected;
}

bool crit7(std::string& detail) {
  SweepOutcome o =
      sweep({ResultId::lem22, ResultId::lem23, ResultId::lem24}, 997);
  detail = count_note(o);
  return o.clean && o.cases > 0;
}

bool crit8(std::string& detail) {
  SweepOutcome o = sweep({ResultId::psc, ResultId::pscc, ResultId::stc}, 499);
  detail = count_note(o);
  return o.clean && o.cases > 0;
}

bool crit9(std::string& detail) {
  uint64_t checked = 0;
  for (uint64_t n = 0; n <= 100; ++n) {
    if (trinomial_row_exact(n) != trinomial_expand_oracle(n)) {
      detail = "row recurrence disagrees with expansion at n=" +
               std::to_string(n);
      return false;
    }
    ++checked;
  }
  for (uint64_t p : sieve_primes(3, 10'000)) {
    for (uint64_t a = 0; a < p; ++a) {
      if (jacobi(static_cast<int64_t>(a), p) != legendre_euler(a, p)) {
        detail = "symbol routes disagree at (" + std::to_string(a) + "/" +
                 std::to_string(p) + ")";
        return false;
      }
      ++checked;
    }
  }
  for (uint64_t p : sieve_primes(2, 500)) {
    FactorialTable table = factorial_table(p);
    for (uint64_t n = 0; n <= 2 * p; ++n) {
      PascalRow row = pascal_row(n, p);
      for (uint64_t k = 0; k <= n; ++k) {
        if (row.coeffs[k] != lucas_binomial(n, k, table)) {
          detail = "binomial routes disagree at C(" + std::to_string(n) + "," +
                   std::to_string(k) + ") mod " + std::to_string(p);
          return false;
        }
        ++checked;
      }
    }
  }
  detail = std::to_string(checked) + " comparisons";
  return true;
}

bool crit10(std::string& detail) {
  // Row sums: trinomial rows total 3^n exactly, Pascal rows 2^n mod m.
  BigInt three = 1;
  for (uint64_t n = 0; n <= 100; ++n) {
    auto row = trinomial_row_exact(n);
    BigInt full = row[0];
    for (uint64_t k = 1; k <= n; ++k) full += 2 * row[k];
    if (full != three) {
      detail = "trinomial row sum wrong at n=" + std::to_string(n);
      return false;
    }
    three *= 3;
  }
  for (uint64_t n = 0; n <= 300; ++n) {
    uint64_t m = 1'000'003;
    PascalRow row = pascal_row(n, m);
    uint64_t sum = 0;
    for (uint64_t c : row.coeffs) sum = add_mod(sum, c, m);
    if (sum != pow_mod(2, n, m)) {
      detail = "pascal row sum wrong at n=" + std::to_string(n);
      return false;
    }
  }

  // Symmetry of the trinomial rows in the offset.
  for (uint64_t n = 0; n <= 60; ++n) {
    TrinomialRow row = trinomial_row_mod(n, 1'000'003);
    for (int64_t k = 0; k <= static_cast<int64_t>(n); ++k)
      if (row.at(k) != row.at(-k)) {
        detail = "symmetry broken at n=" + std::to_string(n);
        return false;
      }
  }

  // Rows indexed by the prime itself collapse to their endpoints.
  {
    SweepOutcome o = sweep({ResultId::frobenius}, 499);
    if (!o.clean || o.cases == 0) {
      detail = "endpoint-row sweep failed";
      return false;
    }
  }

  // Catalan convolution, exactly and mod p^2.
  {
    auto c = catalan_prefix_exact(40);
    for (size_t n = 0; n + 1 < c.size(); ++n) {
      BigInt conv = 0;
      for (size_t i = 0; i <= n; ++i) conv += c[i] * c[n - i];
      if (c[n + 1] != conv) {
        detail = "catalan convolution broken at n=" + std::to_string(n + 1);
        return false;
      }
    }
    uint64_t p = 97, m = p * p;
    SequenceTable t = catalan_table_mod_p2(p);
    for (uint64_t n = 0; n + 2 <= p - 1; ++n) {
      uint64_t conv = 0;
      for (uint64_t i = 0; i <= n; ++i)
        conv = add_mod(conv, mul_mod(t.values[i], t.values[n - i], m), m);
      if (t.values[n + 1] != conv) {
        detail = "catalan convolution mod p^2 broken at n=" +
                 std::to_string(n + 1);
        return false;
      }
    }
  }

  // Closed form of the v-polynomials at -1.
  {
    auto v = v_sequence_exact(-1, 1001);
    for (size_t n = 0; n < v.size(); ++n) {
      BigInt expected = (n % 3 == 0) ? 2 : -1;
      if (v[n] != expected) {
        detail = "v(-1) wrong at n=" + std::to_string(n);
        return false;
      }
    }
  }

  // Merge determinism: identical bodies from 1 and 8 workers.
  {
    SweepConfig cfg;
    cfg.results = {ResultId::psc, ResultId::sdcc, ResultId::thm14,
                   ResultId::lem21};
    cfg.p_min = 5;
    cfg.p_max = 97;
    cfg.keep_cases = true;
    cfg.jobs = 1;
    VerificationReport serial = run_sweep(cfg);
    cfg.jobs = 8;
    VerificationReport parallel = run_sweep(cfg);
    nlohmann::json a =
        nlohmann::json::parse(emit_report(serial, OutputFormat::json));
    nlohmann::json b =
        nlohmann::json::parse(emit_report(parallel, OutputFormat::json));
    a.erase("timing");
    b.erase("timing");
    if (a.dump() != b.dump()) {
      detail = "worker count changed the report body";
      return false;
    }
    if (emit_report(serial, OutputFormat::csv) !=
        emit_report(parallel, OutputFormat::csv)) {
      detail = "worker count changed the csv";
      return false;
    }
  }
  detail = "all property families hold";
  return true;
}

}  // namespace

int main() {
  std::printf("acceptance sweep, single process\n");
  run_criterion(1, "unit trinomial prefix sums, p <= 997", crit1);
  run_criterion(2, "lifted odd/even offsets, p <= 997", crit2);
  run_criterion(3, "alternating sums + boundary rows, p <= 499", crit3);
  run_criterion(4, "fixed-offset alternating sums, p <= 9973", crit4);
  run_criterion(5, "geometric-weight central sums, p <= 9973", crit5);
  run_criterion(6, "exact row identity, n <= 80", crit6);
  run_criterion(7, "reciprocal-weight families, p <= 997", crit7);
  run_criterion(8, "central binomial families, p <= 499", crit8);
  run_criterion(9, "independent oracle routes", crit9);
  run_criterion(10, "property families + merge determinism", crit10);
  if (failures == 0) {
    std::printf("acceptance: all 10 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
