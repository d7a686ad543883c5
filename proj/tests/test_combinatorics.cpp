#include <doctest.h>

#include <cstdint>
#include <vector>

#include "trinom/combinatorics.hpp"
#include "trinom/modarith.hpp"

using namespace trinom;

TEST_CASE("pascal_row small rows") {
  PascalRow r5 = pascal_row(5, 1000);
  CHECK(r5.coeffs == std::vector<uint64_t>{1, 5, 10, 10, 5, 1});
  CHECK(r5.at(-1) == 0);
  CHECK(r5.at(6) == 0);
  CHECK(r5.at(2) == 10);
  CHECK(pascal_row(0, 7).coeffs == std::vector<uint64_t>{1});
}

TEST_CASE("row p mod p has unit endpoints and zero interior") {
  for (uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL}) {
    PascalRow row = pascal_row(p, p);
    CHECK(row.coeffs.front() == 1);
    CHECK(row.coeffs.back() == 1);
    for (uint64_t k = 1; k < p; ++k) CHECK(row.coeffs[k] == 0);
  }
}

TEST_CASE("pascal row sums to 2^n") {
  for (uint64_t n = 0; n <= 40; ++n) {
    uint64_t m = 1'000'003;
    PascalRow row = pascal_row(n, m);
    uint64_t sum = 0;
    for (uint64_t c : row.coeffs) sum = add_mod(sum, c, m);
    CHECK(sum == pow_mod(2, n, m));
  }
}

TEST_CASE("binomial_mod matches the exact route") {
  for (uint64_t n = 0; n <= 25; ++n)
    for (uint64_t k = 0; k <= n; ++k) {
      BigInt e = exact_binomial(n, k) % 9973;
      CHECK(binomial_mod(n, static_cast<int64_t>(k), 9973) ==
            e.convert_to<uint64_t>());
    }
  CHECK(binomial_mod(10, -1, 97) == 0);
  CHECK(binomial_mod(10, 11, 97) == 0);
}

TEST_CASE("exact_binomial knowns") {
  CHECK(exact_binomial(0, 0) == 1);
  CHECK(exact_binomial(52, 5) == 2598960);
  CHECK(exact_binomial(10, 10) == 1);
  CHECK(exact_binomial(10, 11) == 0);
  CHECK(exact_binomial(100, 50) % 1000000007 ==
        BigInt("538992043"));  // C(100,50) mod 1e9+7
}

TEST_CASE("PascalCache serves the same rows") {
  PascalCache cache;
  for (uint64_t n : {0ULL, 3ULL, 10ULL, 17ULL}) {
    CHECK(cache.row(n, 101) == pascal_row(n, 101).coeffs);
    CHECK(cache.row(n, 49) == pascal_row(n, 49).coeffs);
  }
  CHECK(cache.binomial(20, 10, 101) == binomial_mod(20, 10, 101));
  CHECK(cache.binomial(20, -2, 101) == 0);
  CHECK(cache.binomial(20, 21, 101) == 0);
}

TEST_CASE("factorial_table and Wilson's theorem") {
  for (uint64_t p : {5ULL, 7ULL, 101ULL}) {
    FactorialTable t = factorial_table(p);
    REQUIRE(t.fact.size() == p);
    CHECK(t.fact[0] == 1);
    CHECK(t.fact[p - 1] == p - 1);  // Wilson: (p-1)! = -1 mod p
    for (uint64_t i = 0; i < p; ++i)
      CHECK(mul_mod(t.fact[i], t.inv_fact[i], p) == 1);
  }
}

TEST_CASE("lucas_binomial agrees with the additive route") {
  for (uint64_t p : {5ULL, 7ULL, 13ULL}) {
    FactorialTable t = factorial_table(p);
    for (uint64_t n = 0; n <= 3 * p; ++n) {
      PascalRow row = pascal_row(n, p);
      for (uint64_t k = 0; k <= n; ++k)
        CHECK(lucas_binomial(n, k, t) == row.coeffs[k]);
    }
  }
  CHECK(lucas_binomial(10, 4, 7ULL) == binomial_mod(10, 4, 7));
}

TEST_CASE("catalan prefixes") {
  std::vector<uint64_t> expected{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  CHECK(catalan_prefix_mod(10, 1'000'003) == expected);
  auto exact = catalan_prefix_exact(10);
  for (size_t i = 0; i < exact.size(); ++i)
    CHECK(exact[i] == expected[i]);
  for (size_t i = 0; i < 10; ++i) {
    BigInt viaFormula = exact_binomial(2 * i, i) - exact_binomial(2 * i, i + 1);
    CHECK(exact[i] == viaFormula);
  }
}

TEST_CASE("catalan numbers satisfy the convolution") {
  auto c = catalan_prefix_exact(20);
  for (size_t n = 0; n + 1 < c.size(); ++n) {
    BigInt conv = 0;
    for (size_t i = 0; i <= n; ++i) conv += c[i] * c[n - i];
    CHECK(c[n + 1] == conv);
  }
}

TEST_CASE("catalan_table_mod_p2 packaging") {
  SequenceTable t = catalan_table_mod_p2(7);
  CHECK(t.name == "catalan");
  CHECK(t.modulus == 49);
  REQUIRE(t.values.size() == 7);
  auto exact = catalan_prefix_exact(7);
  for (size_t i = 0; i < 7; ++i)
    CHECK(t.values[i] == (exact[i] % 49).convert_to<uint64_t>());
}

TEST_CASE("central_binomial_sums unit weight") {
  // p = 5, d = 0: 1 + 2 + 6 + 20 + 70 = 99.
  SumTable s = central_binomial_sums(5, 5, BinomialWeight::unit);
  REQUIRE(s.values.size() == 5);
  CHECK(s.p == 5);
  CHECK(s.modulus == 5);
  CHECK(s.values[0] == 99 % 5);
  // d = 4: only k = 4 contributes C(8, 8) = 1.
  CHECK(s.values[4] == 1);
  // Cross-check every offset against direct summation.
  for (uint64_t p : {5ULL, 11ULL, 17ULL}) {
    SumTable table = central_binomial_sums(p, p * p, BinomialWeight::unit);
    for (uint64_t d = 0; d < p; ++d) {
      BigInt direct = 0;
      for (uint64_t k = 0; k < p; ++k) direct += exact_binomial(2 * k, k + d);
      CHECK(table.values[d] == (direct % (p * p)).convert_to<uint64_t>());
    }
  }
}

TEST_CASE("central_binomial_sums inverse-index weight") {
  for (uint64_t p : {5ULL, 11ULL, 17ULL}) {
    SumTable table = central_binomial_sums(p, p, BinomialWeight::inverse_index);
    for (uint64_t d = 0; d < p; ++d) {
      uint64_t direct = 0;
      for (uint64_t k = 1; k < p; ++k) {
        BigInt b = exact_binomial(2 * k, k + d) % p;
        direct = add_mod(
            direct, mul_mod(inv_mod(k, p), b.convert_to<uint64_t>(), p), p);
      }
      CHECK(table.values[d] == direct);
    }
  }
}

TEST_CASE("offset_binomial_inv_sums against direct summation") {
  for (uint64_t p : {5ULL, 7ULL, 13ULL, 19ULL}) {
    SumTable table = offset_binomial_inv_sums(p);
    CHECK(table.modulus == p);
    REQUIRE(table.values.size() == p);
    for (uint64_t d = 0; d < p; ++d) {
      uint64_t direct = 0;
      for (uint64_t k = d + 1; 2 * k <= p + d - 1; ++k) {
        BigInt b = exact_binomial(2 * k - d, k + 1) % p;
        direct = add_mod(
            direct, mul_mod(inv_mod(k, p), b.convert_to<uint64_t>(), p), p);
      }
      CHECK(table.values[d] == direct);
    }
  }
}
