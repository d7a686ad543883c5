#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "trinom/modarith.hpp"
#include "trinom/tables.hpp"

namespace trinom {

using BigInt = boost::multiprecision::cpp_int;

// Row n of the trinomial triangle: coeffs[k] is the coefficient of x^k in
// (1 + x + 1/x)^n for 0 <= k <= n.  Negative k is served by symmetry.
struct TrinomialRow {
  uint64_t n = 0;
  uint64_t modulus = 0;
  std::vector<uint64_t> coeffs;

  uint64_t at(int64_t k) const;  // 0 when |k| > n
};

TrinomialRow trinomial_row_mod(uint64_t n, uint64_t modulus);

// In-place step of the three-term recurrence: row n (size n+1) becomes row
// n+1.  The building block behind every sweep here.
void trinomial_row_advance(std::vector<uint64_t>& row, uint64_t modulus);
void trinomial_row_advance_exact(std::vector<BigInt>& row);

// Exact row n, k = 0..n, by the three-term recurrence.
std::vector<BigInt> trinomial_row_exact(uint64_t n);

// Exact row n obtained by actually expanding (1 + x + x^2)^n and reading the
// coefficients of x^(n+k).  Slower, independent route kept for cross-checks.
std::vector<BigInt> trinomial_expand_oracle(uint64_t n);

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a,
                             const std::vector<BigInt>& b);
std::vector<BigInt> poly_pow(const std::vector<BigInt>& base, uint64_t e);

// Central coefficient of row n.
uint64_t central_trinomial(uint64_t n, uint64_t modulus);

// Central coefficients of rows 0 .. count-1.
std::vector<uint64_t> central_trinomial_prefix(uint64_t count, uint64_t modulus);
std::vector<BigInt> central_trinomial_prefix_exact(uint64_t count);

// One pass over trinomial rows 0 .. p-1 filling every requested accumulator
// from the same row buffer.  The row advance dominates the sweeps, so callers
// wanting several sums for one (p, modulus) should batch them here.
struct TrinomialSweepPlan {
  bool want_unit = false;  // values[d] = sum_k coeff(k, d)
  uint64_t unit_d_max = 0;
  bool want_alternating = false;  // values[d] = sum_k (-1)^k coeff(k, d)
  uint64_t alternating_d_max = 0;
  bool want_central_3k = false;  // sum_k 3^{-k} coeff(k, 0); needs gcd(3, modulus) = 1
};

struct TrinomialSweepResult {
  SumTable unit;
  SumTable alternating;
  uint64_t central_3k = 0;
};

TrinomialSweepResult trinomial_sweep(uint64_t p, uint64_t modulus,
                                     const TrinomialSweepPlan& plan);

enum class RowWeight { unit, alternating };

// values[d] = sum_{k=0}^{p-1} w_k coeff(k, d) mod modulus for 0 <= d <= d_max,
// where w_k is 1 or (-1)^k.
SumTable trinomial_prefix_sums(uint64_t p, uint64_t modulus, RowWeight weight,
                               uint64_t d_max);
SumTable trinomial_prefix_sums(uint64_t p, uint64_t modulus, RowWeight weight);

// sum_{k=0}^{p-1} 3^{-k} coeff(k, 0) mod p^2.
uint64_t weighted_central_sum_3k(uint64_t p);

// Exact sum_{k=0}^{n-1} coeff(k, d); requires d < n.
BigInt exact_prefix_sum(uint64_t n, uint64_t d);

// The same sum assembled from products of ordinary binomials:
// sum over 1 <= k <= n with k + d odd of C(n, k) C(k-1, (k+d-1)/2).
// Shares nothing with the row recurrence, so the two routes check each other.
BigInt exact_prefix_sum_via_binomials(uint64_t n, uint64_t d);

}  // namespace trinom
