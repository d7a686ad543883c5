#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trinom/combinatorics.hpp"
#include "trinom/modarith.hpp"
#include "trinom/tables.hpp"

namespace trinom {

// S_0 = 0, S_1 = 1, S_{n+1} = 4 S_n - S_{n-1}; first `count` terms.
SequenceTable s_sequence(uint64_t count, uint64_t modulus);
std::vector<BigInt> s_sequence_exact(uint64_t count);

// v_0 = 2, v_1 = x, v_{n+1} = x v_n - v_{n-1}, evaluated at integer x.
uint64_t v_at(int64_t x, uint64_t n, uint64_t modulus);
SequenceTable v_sequence(int64_t x, uint64_t count, uint64_t modulus);
std::vector<BigInt> v_sequence_exact(int64_t x, uint64_t count);

enum class DenomKind {
  index,      // term i contributes (-1)^i / i
  odd_index,  // term i contributes (-1)^i / (2i+1)
};

enum class SumFilter {
  none,
  index_plus_p_div_3,        // keep i with 3 | (i + p)
  p_minus_denom_not_div_3,   // keep i with 3 not dividing (p - denom(i))
};

// sum_{i=lo}^{hi} (-1)^i / denom(i) mod p over the kept indices; empty ranges
// give 0.  Divisibility filters are applied to the integers i + p resp.
// p - denom(i) before any modular reduction.  A denominator divisible by p
// raises NotInvertibleError.
uint64_t signed_reciprocal_sum(uint64_t p, DenomKind kind, int64_t lo,
                               int64_t hi, SumFilter filter);

// Same, with inverses served from a precomputed table (inv[i] = i^{-1} mod p).
uint64_t signed_reciprocal_sum(uint64_t p, DenomKind kind, int64_t lo,
                               int64_t hi, SumFilter filter,
                               std::span<const uint64_t> inv);

// sum_{j=1}^{(p-1)/2} (1/j) C(2j, j+m) mod p; requires 1 <= m < (p-1)/2.
uint64_t half_binomial_sum(uint64_t p, uint64_t m);
uint64_t half_binomial_sum(uint64_t p, uint64_t m, PascalCache& cache);

// The weight attached to the mod-p^2 refinement of the central binomial sum:
// sum_{0 < k < d} ((-1)^{k-1} / k) * sym3(d - k) mod p, where sym3 is the
// symbol mod 3.  Zero for d <= 1.
uint64_t stc_weight(uint64_t p, uint64_t d);
uint64_t stc_weight(uint64_t p, uint64_t d, std::span<const uint64_t> inv);

}  // namespace trinom
