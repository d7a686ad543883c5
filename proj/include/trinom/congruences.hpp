#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trinom/combinatorics.hpp"
#include "trinom/modarith.hpp"
#include "trinom/sequences.hpp"
#include "trinom/tables.hpp"
#include "trinom/trinomial.hpp"

namespace trinom {

// The verification catalog.  Each id names one congruence family; the CLI,
// CSV and JSON surfaces spell them in upper case.
enum class ResultId {
  psc,         // sum_{k<p} C(2k, k+d)                        mod p
  pscc,        // sum_{k=1}^{p-1} (1/k) C(2k, k+d)            mod p
  stc,         // sum_{k<p} C(2k, k+d)                        mod p^2
  sdcc,        // sum_{k<p} coeff(k, d)                       mod p
  thm11_odd,   // (1/p) sum_{k<p} coeff(k, d), d odd          mod p
  thm11_even,  // lifted signed central difference, d even    mod p
  thm12,       // sum_{k<p} (-1)^k coeff(k, d)                mod p^2
  thm13_d0,    // the alternating sum at d = 0                mod p^2
  thm13_d1,    //                       d = 1                 mod p^2
  thm13_d2,    //                       d = 2                 mod p^2
  thm14,       // sum_{k<p} 3^{-k} coeff(k, 0)                mod p^2
  lem21,       // exact row identity, all offsets
  lem22,       // half-range binomial sum with weight 1/j     mod p
  lem23,       // signed odd-reciprocal sum, full half range  mod p
  lem24,       // the same sum with the 3-divisibility filter mod p
  catalan_aux, // Catalan prefix facts (four sub-checks)      mod p
  frobenius,   // row p of the trinomial triangle             mod p
};

inline constexpr int kResultIdCount = 17;
inline constexpr std::array<ResultId, kResultIdCount> kAllResultIds = {
    ResultId::psc,        ResultId::pscc,      ResultId::stc,
    ResultId::sdcc,       ResultId::thm11_odd, ResultId::thm11_even,
    ResultId::thm12,      ResultId::thm13_d0,  ResultId::thm13_d1,
    ResultId::thm13_d2,   ResultId::thm14,     ResultId::lem21,
    ResultId::lem22,      ResultId::lem23,     ResultId::lem24,
    ResultId::catalan_aux, ResultId::frobenius,
};

std::string_view to_string(ResultId id);
std::optional<ResultId> parse_result_id(std::string_view name);

enum class FailureKind { none, mismatch, divisibility };
std::string_view to_string(FailureKind kind);

struct CongruenceCase {
  ResultId id{};
  uint64_t p = 0;                     // prime; for lem21 the row count n
  std::optional<uint64_t> parameter;  // d or m where the family has one
  uint64_t modulus = 0;               // p or p^2; 0 marks exact comparison
  std::string lhs;
  std::string rhs;
  bool pass = false;
  FailureKind failure = FailureKind::none;
};

namespace detail {

using SideFn = std::function<uint64_t()>;

// Evaluates both sides, catching DivisibilityError from either: a failed
// lift becomes a reported case with failure = divisibility, never a crash.
CongruenceCase compare_sides(ResultId id, uint64_t p,
                             std::optional<uint64_t> parameter,
                             uint64_t modulus, const SideFn& lhs_fn,
                             const SideFn& rhs_fn);

}  // namespace detail

// Exact identity between the two routes to sum_{k<n} coeff(k, d); requires
// d < n.  The `p` field of the case carries n.
CongruenceCase check_lem21(uint64_t n, uint64_t d);

// All offsets d in [0, n) at once, sharing the row tables across d.
std::vector<CongruenceCase> check_lem21_all(uint64_t n);

// One instance per prime.  The first checker that needs an O(p^2) sum table
// builds it; the d-loop then reuses it.  Not thread-safe: the harness gives
// each worker its own instance.
class PrimeChecker {
 public:
  explicit PrimeChecker(uint64_t p);  // requires prime p > 3

  uint64_t prime() const { return p_; }

  CongruenceCase psc(uint64_t d);         // d in [0, p)
  CongruenceCase pscc(uint64_t d);        // d in [0, p)
  CongruenceCase stc(uint64_t d);         // d in [0, p)
  CongruenceCase sdcc(uint64_t d);        // d in [0, p)
  CongruenceCase thm11_odd(uint64_t d);   // odd d in [1, p)
  CongruenceCase thm11_even(uint64_t d);  // even d in [0, p)
  CongruenceCase thm12(uint64_t d);       // d in [0, p)
  std::array<CongruenceCase, 3> thm13();
  CongruenceCase thm14();
  CongruenceCase lem22(uint64_t m);       // m in [1, (p-1)/2)
  CongruenceCase lem23();
  CongruenceCase lem24();
  CongruenceCase catalan_aux();
  CongruenceCase frobenius();

 private:
  void require_d(uint64_t d) const;

  const SumTable& tri_sums_p();
  const SumTable& tri_sums_p2();
  const SumTable& tri_alt_p2(uint64_t d_max);
  const SumTable& binom_sums_p();
  const SumTable& binom_sums_p2();
  const SumTable& binom_inv_sums_p();
  const SumTable& offset_inv_sums();
  const std::vector<uint64_t>& catalan_p2();
  std::span<const uint64_t> inv_table();

  // S_{(p - (3/p))/2} / p mod p; throws DivisibilityError when the sequence
  // value is not divisible by p (then on every later call too).
  uint64_t s_lift();

  uint64_t p_;
  uint64_t p2_;
  std::optional<SumTable> tri_p_;
  std::optional<SumTable> tri_p2_;
  std::optional<SumTable> tri_alt_;
  std::optional<SumTable> binom_p_;
  std::optional<SumTable> binom_p2_;
  std::optional<SumTable> binom_inv_;
  std::optional<SumTable> offset_inv_;
  std::optional<std::vector<uint64_t>> catalan_;
  std::optional<std::vector<uint64_t>> inv_;
  std::optional<uint64_t> central_3k_;
  int s_state_ = 0;  // 0 unknown, 1 ok, 2 divisibility failure
  uint64_t s_value_ = 0;
  uint64_t s_raw_ = 0;
  PascalCache cache_;
};

}  // namespace trinom
