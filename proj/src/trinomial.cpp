#include "trinom/trinomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "trinom/combinatorics.hpp"

namespace trinom {

// new[k] depends on old[k-1], old[k], old[k+1]; sweeping left to right with
// old[k-1] carried in `prev` keeps everything single-buffer.  old[-1] is
// old[1] by symmetry.
void trinomial_row_advance(std::vector<uint64_t>& row, uint64_t m) {
  size_t n = row.size() - 1;
  row.push_back(0);
  uint64_t prev = n >= 1 ? row[1] : 0;
  for (size_t k = 0; k <= n; ++k) {
    uint64_t old_k = row[k];
    row[k] = add_mod(add_mod(prev, old_k, m), row[k + 1], m);
    prev = old_k;
  }
  row[n + 1] = prev;  // old[n], always 1
}

void trinomial_row_advance_exact(std::vector<BigInt>& row) {
  size_t n = row.size() - 1;
  row.push_back(0);
  BigInt prev = n >= 1 ? row[1] : 0;
  for (size_t k = 0; k <= n; ++k) {
    BigInt old_k = row[k];
    row[k] = prev + old_k + row[k + 1];
    prev = old_k;
  }
  row[n + 1] = prev;
}

uint64_t TrinomialRow::at(int64_t k) const {
  uint64_t abs_k = k < 0 ? static_cast<uint64_t>(-(k + 1)) + 1
                         : static_cast<uint64_t>(k);
  if (abs_k > n) return 0;
  return coeffs[static_cast<size_t>(abs_k)];
}

TrinomialRow trinomial_row_mod(uint64_t n, uint64_t modulus) {
  check_modulus(modulus);
  std::vector<uint64_t> row{1 % modulus};
  for (uint64_t i = 0; i < n; ++i) trinomial_row_advance(row, modulus);
  return {n, modulus, std::move(row)};
}

std::vector<BigInt> trinomial_row_exact(uint64_t n) {
  std::vector<BigInt> row{1};
  for (uint64_t i = 0; i < n; ++i) trinomial_row_advance_exact(row);
  return row;
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a,
                             const std::vector<BigInt>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<BigInt> poly_pow(const std::vector<BigInt>& base, uint64_t e) {
  std::vector<BigInt> result{1};
  std::vector<BigInt> sq = base;
  while (e != 0) {
    if (e & 1) result = poly_mul(result, sq);
    e >>= 1;
    if (e != 0) sq = poly_mul(sq, sq);
  }
  return result;
}

std::vector<BigInt> trinomial_expand_oracle(uint64_t n) {
  std::vector<BigInt> expanded = poly_pow({1, 1, 1}, n);  // (1 + x + x^2)^n
  std::vector<BigInt> row(n + 1);
  for (uint64_t k = 0; k <= n; ++k) row[k] = expanded[n + k];
  return row;
}

uint64_t central_trinomial(uint64_t n, uint64_t modulus) {
  return trinomial_row_mod(n, modulus).coeffs[0];
}

std::vector<uint64_t> central_trinomial_prefix(uint64_t count, uint64_t modulus) {
  check_modulus(modulus);
  std::vector<uint64_t> centers(count);
  std::vector<uint64_t> row{1 % modulus};
  for (uint64_t k = 0; k < count; ++k) {
    if (k > 0) trinomial_row_advance(row, modulus);
    centers[static_cast<size_t>(k)] = row[0];
  }
  return centers;
}

std::vector<BigInt> central_trinomial_prefix_exact(uint64_t count) {
  std::vector<BigInt> centers(count);
  std::vector<BigInt> row{1};
  for (uint64_t k = 0; k < count; ++k) {
    if (k > 0) trinomial_row_advance_exact(row);
    centers[static_cast<size_t>(k)] = row[0];
  }
  return centers;
}

TrinomialSweepResult trinomial_sweep(uint64_t p, uint64_t modulus,
                                     const TrinomialSweepPlan& plan) {
  check_modulus(modulus);
  if (p == 0) throw std::invalid_argument("trinomial_sweep: p must be positive");
  if ((plan.want_unit && plan.unit_d_max >= p) ||
      (plan.want_alternating && plan.alternating_d_max >= p))
    throw std::invalid_argument("trinomial_sweep: d_max must be below p");

  TrinomialSweepResult out;
  std::vector<uint64_t> unit_acc(plan.want_unit ? plan.unit_d_max + 1 : 0, 0);
  std::vector<uint64_t> alt_acc(
      plan.want_alternating ? plan.alternating_d_max + 1 : 0, 0);
  uint64_t central_acc = 0;
  uint64_t inv3 = plan.want_central_3k ? inv_mod(3, modulus) : 0;
  uint64_t weight_3k = 1;

  std::vector<uint64_t> row{1 % modulus};
  row.reserve(p + 1);
  for (uint64_t k = 0; k < p; ++k) {
    if (k > 0) trinomial_row_advance(row, modulus);
    if (plan.want_unit) {
      uint64_t top = std::min(k, plan.unit_d_max);
      for (uint64_t d = 0; d <= top; ++d)
        unit_acc[d] = add_mod(unit_acc[d], row[d], modulus);
    }
    if (plan.want_alternating) {
      uint64_t top = std::min(k, plan.alternating_d_max);
      if (k % 2 == 0) {
        for (uint64_t d = 0; d <= top; ++d)
          alt_acc[d] = add_mod(alt_acc[d], row[d], modulus);
      } else {
        for (uint64_t d = 0; d <= top; ++d)
          alt_acc[d] = sub_mod(alt_acc[d], row[d], modulus);
      }
    }
    if (plan.want_central_3k) {
      central_acc = add_mod(central_acc, mul_mod(weight_3k, row[0], modulus),
                            modulus);
      weight_3k = mul_mod(weight_3k, inv3, modulus);
    }
  }

  if (plan.want_unit) out.unit = {p, modulus, std::move(unit_acc)};
  if (plan.want_alternating) out.alternating = {p, modulus, std::move(alt_acc)};
  out.central_3k = central_acc;
  return out;
}

SumTable trinomial_prefix_sums(uint64_t p, uint64_t modulus, RowWeight weight,
                               uint64_t d_max) {
  TrinomialSweepPlan plan;
  if (weight == RowWeight::unit) {
    plan.want_unit = true;
    plan.unit_d_max = d_max;
  } else {
    plan.want_alternating = true;
    plan.alternating_d_max = d_max;
  }
  auto result = trinomial_sweep(p, modulus, plan);
  return weight == RowWeight::unit ? std::move(result.unit)
                                   : std::move(result.alternating);
}

SumTable trinomial_prefix_sums(uint64_t p, uint64_t modulus, RowWeight weight) {
  if (p == 0) throw std::invalid_argument("trinomial_prefix_sums: p must be positive");
  return trinomial_prefix_sums(p, modulus, weight, p - 1);
}

uint64_t weighted_central_sum_3k(uint64_t p) {
  if (p < 2 || p % 3 == 0 || p > 3037000499ULL)
    throw std::invalid_argument("weighted_central_sum_3k: bad prime " +
                                std::to_string(p));
  TrinomialSweepPlan plan;
  plan.want_central_3k = true;
  return trinomial_sweep(p, p * p, plan).central_3k;
}

BigInt exact_prefix_sum(uint64_t n, uint64_t d) {
  if (d >= n)
    throw std::invalid_argument("exact_prefix_sum: requires d < n");
  BigInt sum = 0;
  std::vector<BigInt> row{1};
  for (uint64_t k = 0; k < n; ++k) {
    if (k > 0) trinomial_row_advance_exact(row);
    if (d <= k) sum += row[static_cast<size_t>(d)];
  }
  return sum;
}

BigInt exact_prefix_sum_via_binomials(uint64_t n, uint64_t d) {
  if (d >= n)
    throw std::invalid_argument(
        "exact_prefix_sum_via_binomials: requires d < n");
  BigInt sum = 0;
  for (uint64_t k = 1; k <= n; ++k) {
    if ((k + d) % 2 == 0) continue;
    sum += exact_binomial(n, k) * exact_binomial(k - 1, (k + d - 1) / 2);
  }
  return sum;
}

}  // namespace trinom
