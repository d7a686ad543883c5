#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "trinom/modarith.hpp"
#include "trinom/tables.hpp"

namespace trinom {

using BigInt = boost::multiprecision::cpp_int;

struct PascalRow {
  uint64_t n = 0;
  uint64_t modulus = 0;
  std::vector<uint64_t> coeffs;  // coeffs[k] = C(n, k) mod modulus

  uint64_t at(int64_t k) const;  // 0 outside [0, n]
};

// Row n of Pascal's triangle mod modulus, built by the additive recurrence.
// Division-free, so entries divisible by the modulus come out right.
PascalRow pascal_row(uint64_t n, uint64_t modulus);

// C(n, k) mod modulus through a fresh additive build; k outside [0, n] gives 0.
uint64_t binomial_mod(uint64_t n, int64_t k, uint64_t modulus);

// Memoized ladders of Pascal rows, one ladder per modulus.  Not thread-safe;
// give each worker its own instance.
class PascalCache {
 public:
  const std::vector<uint64_t>& row(uint64_t n, uint64_t modulus);
  uint64_t binomial(uint64_t n, int64_t k, uint64_t modulus);

 private:
  std::map<uint64_t, std::vector<std::vector<uint64_t>>> ladders_;
};

// Factorials and their inverses mod a prime p, for the digit-product route.
struct FactorialTable {
  uint64_t p = 0;
  std::vector<uint64_t> fact;      // i! mod p, 0 <= i < p
  std::vector<uint64_t> inv_fact;  // (i!)^{-1} mod p
};

FactorialTable factorial_table(uint64_t p);

// C(n, k) mod prime p as the product of base-p digit binomials, each digit
// binomial taken from factorial tables.  Independent of the additive route.
uint64_t lucas_binomial(uint64_t n, uint64_t k, const FactorialTable& table);
uint64_t lucas_binomial(uint64_t n, uint64_t k, uint64_t p);

BigInt exact_binomial(uint64_t n, uint64_t k);

// Catalan numbers C_0 .. C_{count-1} mod modulus via C_k = C(2k,k) - C(2k,k+1),
// which needs no division by k + 1.
std::vector<uint64_t> catalan_prefix_mod(uint64_t count, uint64_t modulus);
std::vector<BigInt> catalan_prefix_exact(uint64_t count);

// C_0 .. C_{p-1} mod p^2, packaged for the checkers.
SequenceTable catalan_table_mod_p2(uint64_t p);

enum class BinomialWeight {
  unit,           // w_k = 1, k >= 0
  inverse_index,  // w_k = k^{-1} mod modulus, k >= 1 (the k = 0 row is skipped)
};

// values[d] = sum over k of w_k * C(2k, k+d) mod modulus, for 0 <= d < p,
// with k running over [0, p) (or [1, p) for inverse_index).  One rolling pass
// over the even-indexed Pascal rows serves every offset at once.
SumTable central_binomial_sums(uint64_t p, uint64_t modulus, BinomialWeight weight);

// values[d] = sum over k in (d, (p+d-1)/2] of k^{-1} * C(2k-d, k+1) mod p.
// Reindexed as one pass over rows n < p: entry (n, c) with n/2 < c <= n
// contributes inv(c-1) * C(n, c) to offset d = 2c - 2 - n.
SumTable offset_binomial_inv_sums(uint64_t p);

}  // namespace trinom
