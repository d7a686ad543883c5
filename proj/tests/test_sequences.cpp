#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "trinom/combinatorics.hpp"
#include "trinom/modarith.hpp"
#include "trinom/sequences.hpp"

using namespace trinom;

TEST_CASE("S sequence opening terms") {
  auto exact = s_sequence_exact(8);
  CHECK(exact == std::vector<BigInt>{0, 1, 4, 15, 56, 209, 780, 2911});
  SequenceTable t = s_sequence(8, 1'000'003);
  CHECK(t.name == "S");
  CHECK(t.modulus == 1'000'003);
  for (size_t i = 0; i < 8; ++i)
    CHECK(t.values[i] == (exact[i] % 1'000'003).convert_to<uint64_t>());
}

TEST_CASE("S sequence modular wraparound") {
  SequenceTable t = s_sequence(10, 7);
  auto exact = s_sequence_exact(10);
  for (size_t i = 0; i < 10; ++i)
    CHECK(t.values[i] == (exact[i] % 7).convert_to<uint64_t>());
}

TEST_CASE("v sequence basics") {
  // x = 2 pins the recurrence: 2, 2, 2, ...
  auto flat = v_sequence_exact(2, 6);
  for (const BigInt& v : flat) CHECK(v == 2);
  auto at4 = v_sequence_exact(4, 5);
  CHECK(at4 == std::vector<BigInt>{2, 4, 14, 52, 194});
  SequenceTable t = v_sequence(4, 5, 1'000'003);
  CHECK(t.name == "v");
  REQUIRE(t.x.has_value());
  CHECK(*t.x == 4);
  for (size_t i = 0; i < 5; ++i)
    CHECK(t.values[i] == (at4[i] % 1'000'003).convert_to<uint64_t>());
  for (uint64_t n = 0; n < 5; ++n)
    CHECK(v_at(4, n, 1'000'003) == t.values[n]);
}

TEST_CASE("v at -1 follows the period-3 pattern") {
  auto v = v_sequence_exact(-1, 31);
  for (size_t n = 0; n < v.size(); ++n) {
    BigInt expected = (n % 3 == 0) ? 2 : -1;
    CHECK(v[n] == expected);
  }
  SequenceTable t = v_sequence(-1, 31, 97);
  for (size_t n = 0; n < 31; ++n)
    CHECK(t.values[n] == (n % 3 == 0 ? 2u : 96u));
}

TEST_CASE("negative x reduces correctly mod m") {
  auto exact = v_sequence_exact(-5, 12);
  SequenceTable t = v_sequence(-5, 12, 101);
  for (size_t i = 0; i < 12; ++i) {
    BigInt r = exact[i] % 101;
    if (r < 0) r += 101;
    CHECK(t.values[i] == r.convert_to<uint64_t>());
  }
}

TEST_CASE("signed reciprocal sums by hand") {
  // p = 7, odd denominators, i = 1..2: -1/3 + 1/5 = -5 + 3 = -2 = 5 mod 7.
  CHECK(signed_reciprocal_sum(7, DenomKind::odd_index, 1, 2,
                              SumFilter::none) == 5);
  // p = 7, plain denominators, i = 1..3: -1 + 1/2 - 1/3 = -1 + 4 - 5 = -2.
  CHECK(signed_reciprocal_sum(7, DenomKind::index, 1, 3, SumFilter::none) == 5);
  // Empty range.
  CHECK(signed_reciprocal_sum(7, DenomKind::index, 3, 2, SumFilter::none) == 0);
  // i = 0 contributes +1/1 in the odd-denominator family.
  CHECK(signed_reciprocal_sum(7, DenomKind::odd_index, 0, 0,
                              SumFilter::none) == 1);
}

TEST_CASE("signed reciprocal sums respect the integer filters") {
  // Filter on 3 | (i + p): for p = 7 keeps i = 2, 5, 8, ...
  uint64_t kept = signed_reciprocal_sum(7, DenomKind::index, 1, 3,
                                        SumFilter::index_plus_p_div_3);
  CHECK(kept == inv_mod(2, 7));  // only i = 2 survives, sign +
  // Filter on 3 not dividing (p - denom): p = 7, odd denoms 3, 5, 7 for
  // i = 1, 2, 3; p - denom = 4, 2, 0; all kept (none divisible by 3).
  uint64_t all_kept =
      signed_reciprocal_sum(7, DenomKind::odd_index, 1, 2,
                            SumFilter::p_minus_denom_not_div_3);
  CHECK(all_kept == signed_reciprocal_sum(7, DenomKind::odd_index, 1, 2,
                                          SumFilter::none));
  // p = 5: denominators 3, 5 at i = 1, 2; p - 3 = 2 kept, p - 5 = 0 dropped
  // (3 | 0), so only -1/3 = -2 = 3 mod 5 remains... but 5 | 5 would raise
  // first without the filter; the filter must skip before inverting.
  CHECK(signed_reciprocal_sum(5, DenomKind::odd_index, 1, 2,
                              SumFilter::p_minus_denom_not_div_3) == 3);
}

TEST_CASE("sums split additively over index ranges") {
  auto inv = inverse_table(97);
  for (auto kind : {DenomKind::index, DenomKind::odd_index}) {
    for (auto filter : {SumFilter::none, SumFilter::index_plus_p_div_3,
                        SumFilter::p_minus_denom_not_div_3}) {
      int64_t lo = (kind == DenomKind::index) ? 1 : 0;
      uint64_t whole = signed_reciprocal_sum(97, kind, lo, 40, filter, inv);
      uint64_t left = signed_reciprocal_sum(97, kind, lo, 20, filter, inv);
      uint64_t right = signed_reciprocal_sum(97, kind, 21, 40, filter, inv);
      CHECK(whole == add_mod(left, right, 97));
    }
  }
}

TEST_CASE("denominator hitting p raises") {
  // odd denominators reach p = 5 at i = 2.
  CHECK_THROWS_AS(signed_reciprocal_sum(5, DenomKind::odd_index, 0, 2,
                                        SumFilter::none),
                  NotInvertibleError);
  CHECK_THROWS_AS(signed_reciprocal_sum(5, DenomKind::index, 1, 5,
                                        SumFilter::none),
                  NotInvertibleError);
}

TEST_CASE("half_binomial_sum by hand and by table") {
  // p = 7, m = 1: 1*C(2,2) + (1/2)C(4,3) + (1/3)C(6,4) = 1 + 2 + 5 = 8 = 1.
  CHECK(half_binomial_sum(7, 1) == 1);
  PascalCache cache;
  for (uint64_t p : {7ULL, 11ULL, 13ULL}) {
    for (uint64_t m = 1; m < (p - 1) / 2; ++m) {
      uint64_t direct = 0;
      for (uint64_t j = 1; 2 * j <= p - 1; ++j) {
        BigInt b = exact_binomial(2 * j, j + m) % p;
        direct = add_mod(
            direct, mul_mod(inv_mod(j, p), b.convert_to<uint64_t>(), p), p);
      }
      CHECK(half_binomial_sum(p, m) == direct);
      CHECK(half_binomial_sum(p, m, cache) == direct);
    }
  }
  CHECK_THROWS_AS(half_binomial_sum(7, 0), std::invalid_argument);
  CHECK_THROWS_AS(half_binomial_sum(7, 3), std::invalid_argument);
}

TEST_CASE("stc_weight by hand") {
  CHECK(stc_weight(5, 0) == 0);
  CHECK(stc_weight(5, 1) == 0);
  // d = 2: k = 1 gives +(1/1) * sym3(1) = 1.
  CHECK(stc_weight(5, 2) == 1);
  // d = 3: k = 1: +sym3(2) = -1; k = 2: -(1/2) * sym3(1) = -(1/2).
  // Mod 5: -1 - 3 = -4 = 1.
  CHECK(stc_weight(5, 3) == 1);
  auto inv = inverse_table(13);
  for (uint64_t d = 0; d < 13; ++d) {
    uint64_t direct = 0;
    for (uint64_t k = 1; k < d; ++k) {
      int sym = symbol_mod3(static_cast<int64_t>(d - k));
      if (sym == 0) continue;
      uint64_t term = inv[k];
      bool negative = ((k % 2 == 0) != (sym == -1));
      direct = negative ? sub_mod(direct, term, 13) : add_mod(direct, term, 13);
    }
    CHECK(stc_weight(13, d) == direct);
    CHECK(stc_weight(13, d, inv) == direct);
  }
}
