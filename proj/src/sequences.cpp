#include "trinom/sequences.hpp"

#include <stdexcept>
#include <string>

namespace trinom {

namespace {

uint64_t inv_of(uint64_t canonical, uint64_t p, std::span<const uint64_t> inv) {
  if (canonical == 0) throw NotInvertibleError(0, p);
  if (!inv.empty()) return inv[canonical];
  return inv_mod(canonical, p);
}

}  // namespace

SequenceTable s_sequence(uint64_t count, uint64_t modulus) {
  check_modulus(modulus);
  if (count < 1) throw std::invalid_argument("s_sequence: count must be >= 1");
  std::vector<uint64_t> values(count);
  values[0] = 0;
  if (count > 1) values[1] = 1 % modulus;
  for (uint64_t n = 2; n < count; ++n) {
    uint64_t four_s = mul_mod(4, values[n - 1], modulus);
    values[n] = sub_mod(four_s, values[n - 2], modulus);
  }
  return {"S", modulus, std::nullopt, std::move(values)};
}

std::vector<BigInt> s_sequence_exact(uint64_t count) {
  if (count < 1)
    throw std::invalid_argument("s_sequence_exact: count must be >= 1");
  std::vector<BigInt> values(count);
  values[0] = 0;
  if (count > 1) values[1] = 1;
  for (uint64_t n = 2; n < count; ++n)
    values[n] = 4 * values[n - 1] - values[n - 2];
  return values;
}

SequenceTable v_sequence(int64_t x, uint64_t count, uint64_t modulus) {
  check_modulus(modulus);
  if (count < 1) throw std::invalid_argument("v_sequence: count must be >= 1");
  uint64_t xr = canonical_mod(x, modulus);
  std::vector<uint64_t> values(count);
  values[0] = 2 % modulus;
  if (count > 1) values[1] = xr;
  for (uint64_t n = 2; n < count; ++n)
    values[n] = sub_mod(mul_mod(xr, values[n - 1], modulus), values[n - 2],
                        modulus);
  return {"v", modulus, x, std::move(values)};
}

uint64_t v_at(int64_t x, uint64_t n, uint64_t modulus) {
  return v_sequence(x, n + 1, modulus).values[static_cast<size_t>(n)];
}

std::vector<BigInt> v_sequence_exact(int64_t x, uint64_t count) {
  if (count < 1)
    throw std::invalid_argument("v_sequence_exact: count must be >= 1");
  std::vector<BigInt> values(count);
  values[0] = 2;
  if (count > 1) values[1] = x;
  for (uint64_t n = 2; n < count; ++n)
    values[n] = x * values[n - 1] - values[n - 2];
  return values;
}

uint64_t signed_reciprocal_sum(uint64_t p, DenomKind kind, int64_t lo,
                               int64_t hi, SumFilter filter,
                               std::span<const uint64_t> inv) {
  check_modulus(p);
  uint64_t sum = 0;
  for (int64_t i = lo; i <= hi; ++i) {
    int64_t denom = kind == DenomKind::index ? i : 2 * i + 1;
    if (filter == SumFilter::index_plus_p_div_3) {
      if ((i + static_cast<int64_t>(p)) % 3 != 0) continue;
    } else if (filter == SumFilter::p_minus_denom_not_div_3) {
      int64_t gap = static_cast<int64_t>(p) - denom;
      if (gap % 3 == 0) continue;
    }
    uint64_t term = inv_of(canonical_mod(denom, p), p, inv);
    sum = i % 2 != 0 ? sub_mod(sum, term, p) : add_mod(sum, term, p);
  }
  return sum;
}

uint64_t signed_reciprocal_sum(uint64_t p, DenomKind kind, int64_t lo,
                               int64_t hi, SumFilter filter) {
  return signed_reciprocal_sum(p, kind, lo, hi, filter, {});
}

uint64_t half_binomial_sum(uint64_t p, uint64_t m, PascalCache& cache) {
  if (p < 5 || p % 2 == 0)
    throw std::invalid_argument("half_binomial_sum: p must be an odd prime > 3");
  if (m < 1 || m >= (p - 1) / 2)
    throw std::invalid_argument("half_binomial_sum: requires 1 <= m < (p-1)/2");
  uint64_t sum = 0;
  for (uint64_t j = 1; j <= (p - 1) / 2; ++j) {
    uint64_t binom = cache.binomial(2 * j, static_cast<int64_t>(j + m), p);
    sum = add_mod(sum, mul_mod(inv_mod(j, p), binom, p), p);
  }
  return sum;
}

uint64_t half_binomial_sum(uint64_t p, uint64_t m) {
  PascalCache cache;
  return half_binomial_sum(p, m, cache);
}

uint64_t stc_weight(uint64_t p, uint64_t d, std::span<const uint64_t> inv) {
  check_modulus(p);
  uint64_t sum = 0;
  for (uint64_t k = 1; k < d; ++k) {
    int sym = symbol_mod3(static_cast<int64_t>(d - k));
    if (sym == 0) continue;
    uint64_t term = inv_of(k % p, p, inv);
    bool positive = (k % 2 == 1) == (sym == 1);  // sign (-1)^{k-1} * sym
    sum = positive ? add_mod(sum, term, p) : sub_mod(sum, term, p);
  }
  return sum;
}

uint64_t stc_weight(uint64_t p, uint64_t d) { return stc_weight(p, d, {}); }

}  // namespace trinom
