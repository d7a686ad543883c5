#include "trinom/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace trinom {

namespace {

// Turns row n (size n+1) into row n+1 in place, filling from the right so
// the old entries survive until they are consumed.
void pascal_advance(std::vector<uint64_t>& row, uint64_t m) {
  size_t n = row.size() - 1;
  row.push_back(row[n]);
  for (size_t k = n; k >= 1; --k) row[k] = add_mod(row[k], row[k - 1], m);
}

}  // namespace

uint64_t PascalRow::at(int64_t k) const {
  if (k < 0 || static_cast<uint64_t>(k) > n) return 0;
  return coeffs[static_cast<size_t>(k)];
}

PascalRow pascal_row(uint64_t n, uint64_t modulus) {
  check_modulus(modulus);
  std::vector<uint64_t> row{1 % modulus};
  for (uint64_t i = 0; i < n; ++i) pascal_advance(row, modulus);
  return {n, modulus, std::move(row)};
}

uint64_t binomial_mod(uint64_t n, int64_t k, uint64_t modulus) {
  if (k < 0 || static_cast<uint64_t>(k) > n) {
    check_modulus(modulus);
    return 0;
  }
  return pascal_row(n, modulus).coeffs[static_cast<size_t>(k)];
}

const std::vector<uint64_t>& PascalCache::row(uint64_t n, uint64_t modulus) {
  check_modulus(modulus);
  auto& ladder = ladders_[modulus];
  if (ladder.empty()) ladder.push_back({1 % modulus});
  while (ladder.size() <= n) {
    auto next = ladder.back();
    pascal_advance(next, modulus);
    ladder.push_back(std::move(next));
  }
  return ladder[static_cast<size_t>(n)];
}

uint64_t PascalCache::binomial(uint64_t n, int64_t k, uint64_t modulus) {
  if (k < 0 || static_cast<uint64_t>(k) > n) {
    check_modulus(modulus);
    return 0;
  }
  return row(n, modulus)[static_cast<size_t>(k)];
}

FactorialTable factorial_table(uint64_t p) {
  check_modulus(p);
  FactorialTable t;
  t.p = p;
  t.fact.resize(p);
  t.inv_fact.resize(p);
  t.fact[0] = 1;
  for (uint64_t i = 1; i < p; ++i) t.fact[i] = mul_mod(t.fact[i - 1], i, p);
  t.inv_fact[p - 1] = inv_mod(t.fact[p - 1], p);
  for (uint64_t i = p - 1; i >= 1; --i)
    t.inv_fact[i - 1] = mul_mod(t.inv_fact[i], i, p);
  return t;
}

uint64_t lucas_binomial(uint64_t n, uint64_t k, const FactorialTable& table) {
  uint64_t p = table.p;
  uint64_t result = 1;
  while (n != 0 || k != 0) {
    uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    result = mul_mod(result, table.fact[nd], p);
    result = mul_mod(result, table.inv_fact[kd], p);
    result = mul_mod(result, table.inv_fact[nd - kd], p);
    n /= p;
    k /= p;
  }
  return result;
}

uint64_t lucas_binomial(uint64_t n, uint64_t k, uint64_t p) {
  return lucas_binomial(n, k, factorial_table(p));
}

BigInt exact_binomial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: the partial product is C(n-k+i, i)
  }
  return result;
}

std::vector<uint64_t> catalan_prefix_mod(uint64_t count, uint64_t modulus) {
  check_modulus(modulus);
  std::vector<uint64_t> catalan(count);
  std::vector<uint64_t> row{1 % modulus};  // row 2k of Pascal's triangle
  for (uint64_t k = 0; k < count; ++k) {
    if (k > 0) {
      pascal_advance(row, modulus);
      pascal_advance(row, modulus);
    }
    uint64_t above = k > 0 ? row[static_cast<size_t>(k + 1)] : 0;
    catalan[static_cast<size_t>(k)] =
        sub_mod(row[static_cast<size_t>(k)], above, modulus);
  }
  return catalan;
}

std::vector<BigInt> catalan_prefix_exact(uint64_t count) {
  std::vector<BigInt> catalan(count);
  for (uint64_t k = 0; k < count; ++k)
    catalan[static_cast<size_t>(k)] =
        exact_binomial(2 * k, k) - exact_binomial(2 * k, k + 1);
  return catalan;
}

SequenceTable catalan_table_mod_p2(uint64_t p) {
  if (p < 2 || p > 3037000499ULL)
    throw std::invalid_argument("catalan_table_mod_p2: bad prime " +
                                std::to_string(p));
  return {"catalan", p * p, std::nullopt, catalan_prefix_mod(p, p * p)};
}

SumTable central_binomial_sums(uint64_t p, uint64_t modulus,
                               BinomialWeight weight) {
  check_modulus(modulus);
  if (p == 0) throw std::invalid_argument("central_binomial_sums: p must be positive");
  std::vector<uint64_t> acc(p, 0);
  std::vector<uint64_t> row{1 % modulus};  // row 2k of Pascal's triangle
  for (uint64_t k = 0; k < p; ++k) {
    if (k > 0) {
      pascal_advance(row, modulus);
      pascal_advance(row, modulus);
    }
    uint64_t d_max = std::min(k, p - 1);
    if (weight == BinomialWeight::unit) {
      for (uint64_t d = 0; d <= d_max; ++d)
        acc[d] = add_mod(acc[d], row[k + d], modulus);
    } else {
      if (k == 0) continue;
      uint64_t w = inv_mod(k, modulus);
      for (uint64_t d = 0; d <= d_max; ++d)
        acc[d] = add_mod(acc[d], mul_mod(w, row[k + d], modulus), modulus);
    }
  }
  return {p, modulus, std::move(acc)};
}

SumTable offset_binomial_inv_sums(uint64_t p) {
  check_modulus(p);
  auto inv = inverse_table(p);
  std::vector<uint64_t> acc(p, 0);
  std::vector<uint64_t> row{1};  // row n of Pascal's triangle
  for (uint64_t n = 0; n < p; ++n) {
    if (n > 0) pascal_advance(row, p);
    for (uint64_t c = (n + 3) / 2; c <= n; ++c) {
      uint64_t d = 2 * c - 2 - n;
      acc[d] = add_mod(acc[d], mul_mod(inv[c - 1], row[c], p), p);
    }
  }
  return {p, p, std::move(acc)};
}

}  // namespace trinom
