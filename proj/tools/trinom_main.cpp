#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trinom/combinatorics.hpp"
#include "trinom/harness.hpp"
#include "trinom/modarith.hpp"
#include "trinom/sequences.hpp"
#include "trinom/trinomial.hpp"
#include "trinom/version.hpp"

namespace {

constexpr uint64_t kMaxModularRow = 10'000'000;
constexpr uint64_t kMaxExactRow = 10'000;

int write_output(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return 2;
  }
  out << body;
  return out.good() ? 0 : 2;
}

template <typename T>
void print_values(const std::vector<T>& values) {
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) std::cout << ' ';
    std::cout << values[i];
  }
  std::cout << '\n';
}

int run_verify(const std::string& results_arg, uint64_t pmin, uint64_t pmax,
               const std::string& d_arg, const std::string& format_arg,
               const std::string& out_path, unsigned jobs, bool fail_fast) {
  trinom::SweepConfig config;
  auto ids = trinom::parse_results_arg(results_arg);
  if (!ids) {
    std::cerr << "error: unrecognized result id in --results '" << results_arg
              << "'\n";
    return 2;
  }
  config.results = std::move(*ids);
  if (pmin < 5) {
    std::cerr << "warning: all checkers assume p > 3; raising --pmin to 5\n";
    pmin = 5;
  }
  if (pmin > pmax) {
    std::cerr << "error: --pmin exceeds --pmax\n";
    return 2;
  }
  config.p_min = pmin;
  config.p_max = pmax;
  if (!trinom::parse_d_mode_arg(d_arg, config)) {
    std::cerr << "error: bad --d value '" << d_arg
              << "' (want all, stride:S, or sample:N:SEED)\n";
    return 2;
  }
  auto format = trinom::parse_format_arg(format_arg);
  if (!format) {
    std::cerr << "error: bad --format value '" << format_arg << "'\n";
    return 2;
  }
  if (jobs < 1) {
    std::cerr << "error: --jobs must be at least 1\n";
    return 2;
  }
  config.jobs = jobs;
  config.fail_fast = fail_fast;
  config.keep_cases = (*format == trinom::OutputFormat::csv);

  trinom::VerificationReport report;
  try {
    report = trinom::run_sweep(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  int io = write_output(trinom::emit_report(report, *format), out_path);
  if (io != 0) return io;
  return report.all_passed() ? 0 : 1;
}

int run_table(uint64_t p, const std::string& result_arg,
              const std::string& format_arg, const std::string& out_path) {
  auto id = trinom::parse_result_id(result_arg);
  if (!id) {
    std::cerr << "error: unrecognized result id '" << result_arg << "'\n";
    return 2;
  }
  auto format = trinom::parse_format_arg(format_arg);
  if (!format) {
    std::cerr << "error: bad --format value '" << format_arg << "'\n";
    return 2;
  }
  if (p < 5) {
    std::cerr << "error: --prime must be at least 5\n";
    return 2;
  }
  if (*id != trinom::ResultId::lem21 && !trinom::is_prime(p)) {
    std::cerr << "error: " << p << " is not prime\n";
    return 2;
  }
  trinom::SweepConfig config;
  config.results = {*id};
  config.p_min = p;
  config.p_max = p;
  config.keep_cases = true;

  trinom::VerificationReport report;
  try {
    report = trinom::run_sweep(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  int io = write_output(trinom::emit_report(report, *format), out_path);
  if (io != 0) return io;
  return report.all_passed() ? 0 : 1;
}

int run_row(uint64_t n, uint64_t mod, const std::string& kind) {
  if (mod == 0) {
    if (n > kMaxExactRow) {
      std::cerr << "error: exact rows support n up to " << kMaxExactRow
                << "; pass --mod for larger n\n";
      return 2;
    }
    if (kind == "trinomial") {
      print_values(trinom::trinomial_row_exact(n));
    } else {
      std::vector<trinom::BigInt> row(n + 1);
      for (uint64_t k = 0; k <= n; ++k) row[k] = trinom::exact_binomial(n, k);
      print_values(row);
    }
    return 0;
  }
  if (n > kMaxModularRow) {
    std::cerr << "error: rows support n up to " << kMaxModularRow << "\n";
    return 2;
  }
  try {
    trinom::check_modulus(mod);
    if (kind == "trinomial")
      print_values(trinom::trinomial_row_mod(n, mod).coeffs);
    else
      print_values(trinom::pascal_row(n, mod).coeffs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int run_seq(const std::string& name, uint64_t count, uint64_t mod, bool has_x,
            int64_t x) {
  if (name == "v") {
    if (!has_x) {
      std::cerr << "error: --x is required for the v sequence\n";
      return 2;
    }
  } else if (has_x) {
    std::cerr << "error: --x only applies to the v sequence\n";
    return 2;
  }
  uint64_t cap = (mod == 0) ? kMaxExactRow : kMaxModularRow;
  if (count < 1 || count > cap) {
    std::cerr << "error: --count must be in [1, " << cap << "]\n";
    return 2;
  }
  try {
    if (mod != 0) trinom::check_modulus(mod);
    if (name == "S") {
      if (mod == 0)
        print_values(trinom::s_sequence_exact(count));
      else
        print_values(trinom::s_sequence(count, mod).values);
    } else if (name == "v") {
      if (mod == 0)
        print_values(trinom::v_sequence_exact(x, count));
      else
        print_values(trinom::v_sequence(x, count, mod).values);
    } else if (name == "catalan") {
      if (mod == 0)
        print_values(trinom::catalan_prefix_exact(count));
      else
        print_values(trinom::catalan_prefix_mod(count, mod));
    } else if (name == "central") {
      if (mod == 0)
        print_values(trinom::central_trinomial_prefix_exact(count));
      else
        print_values(trinom::central_trinomial_prefix(count, mod));
    } else {
      std::cerr << "error: unknown sequence '" << name
                << "' (want S, v, catalan, or central)\n";
      return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trinomial coefficient congruence verifier"};
  app.set_version_flag("--version", std::string(trinom::kVersion) + " (" +
                                        std::string(trinom::kCapabilities) +
                                        ")");
  app.require_subcommand(1);

  auto* verify =
      app.add_subcommand("verify", "sweep selected checks over a prime range");
  std::string results_arg;
  uint64_t pmin = 5, pmax = 97;
  std::string d_arg = "all", verify_format = "text", verify_out;
  unsigned jobs = 1;
  bool fail_fast = false;
  verify->add_option("--results", results_arg,
                     "comma-separated result ids, or 'all'")
      ->required();
  verify->add_option("--pmin", pmin, "lowest prime to test")->required();
  verify->add_option("--pmax", pmax, "highest prime to test")->required();
  verify->add_option("--d", d_arg, "parameter mode: all, stride:S, sample:N:SEED");
  verify->add_option("--format", verify_format, "text, json, or csv");
  verify->add_option("--out", verify_out, "write the report to this file");
  verify->add_option("--jobs", jobs, "worker thread count");
  verify->add_flag("--fail-fast", fail_fast,
                   "stop scheduling new work after the first failure");

  auto* table =
      app.add_subcommand("table", "dump every case for one result at one prime");
  uint64_t table_p = 0;
  std::string table_result, table_format = "text", table_out;
  table->add_option("--prime", table_p, "the prime (row index n for LEM21)")
      ->required();
  table->add_option("--result", table_result, "result id")->required();
  table->add_option("--format", table_format, "text, json, or csv");
  table->add_option("--out", table_out, "write the dump to this file");

  auto* row = app.add_subcommand("row", "print one coefficient row");
  uint64_t row_n = 0, row_mod = 0;
  std::string row_kind = "trinomial";
  row->add_option("--n", row_n, "row index")->required();
  row->add_option("--mod", row_mod, "modulus (omit for exact values)");
  row->add_option("--kind", row_kind, "trinomial or pascal")
      ->check(CLI::IsMember({"trinomial", "pascal"}));

  auto* seq = app.add_subcommand("seq", "print a sequence prefix");
  std::string seq_name;
  uint64_t seq_count = 0, seq_mod = 0;
  int64_t seq_x = 0;
  seq->add_option("--name", seq_name, "S, v, catalan, or central")->required();
  seq->add_option("--count", seq_count, "how many terms")->required();
  seq->add_option("--mod", seq_mod, "modulus (omit for exact values)");
  auto* seq_x_opt = seq->add_option("--x", seq_x, "argument for the v sequence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*verify)
    return run_verify(results_arg, pmin, pmax, d_arg, verify_format, verify_out,
                      jobs, fail_fast);
  if (*table) return run_table(table_p, table_result, table_format, table_out);
  if (*row) return run_row(row_n, row_mod, row_kind);
  if (*seq)
    return run_seq(seq_name, seq_count, seq_mod, seq_x_opt->count() > 0, seq_x);
  return 2;
}
