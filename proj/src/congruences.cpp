#include "trinom/congruences.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace trinom {

std::string_view to_string(ResultId id) {
  switch (id) {
    case ResultId::psc: return "PSC";
    case ResultId::pscc: return "PSCC";
    case ResultId::stc: return "STC";
    case ResultId::sdcc: return "SDCC";
    case ResultId::thm11_odd: return "THM11_ODD";
    case ResultId::thm11_even: return "THM11_EVEN";
    case ResultId::thm12: return "THM12";
    case ResultId::thm13_d0: return "THM13_D0";
    case ResultId::thm13_d1: return "THM13_D1";
    case ResultId::thm13_d2: return "THM13_D2";
    case ResultId::thm14: return "THM14";
    case ResultId::lem21: return "LEM21";
    case ResultId::lem22: return "LEM22";
    case ResultId::lem23: return "LEM23";
    case ResultId::lem24: return "LEM24";
    case ResultId::catalan_aux: return "CATALAN_AUX";
    case ResultId::frobenius: return "FROBENIUS";
  }
  return "?";
}

std::optional<ResultId> parse_result_id(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (ResultId id : kAllResultIds)
    if (upper == to_string(id)) return id;
  return std::nullopt;
}

std::string_view to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::none: return "none";
    case FailureKind::mismatch: return "mismatch";
    case FailureKind::divisibility: return "divisibility";
  }
  return "?";
}

namespace detail {

CongruenceCase compare_sides(ResultId id, uint64_t p,
                             std::optional<uint64_t> parameter,
                             uint64_t modulus, const SideFn& lhs_fn,
                             const SideFn& rhs_fn) {
  CongruenceCase c;
  c.id = id;
  c.p = p;
  c.parameter = parameter;
  c.modulus = modulus;
  std::optional<uint64_t> lhs, rhs;
  try {
    lhs = lhs_fn();
    c.lhs = std::to_string(*lhs);
  } catch (const DivisibilityError& e) {
    c.lhs = std::to_string(e.value);
    c.failure = FailureKind::divisibility;
  }
  try {
    rhs = rhs_fn();
    c.rhs = std::to_string(*rhs);
  } catch (const DivisibilityError& e) {
    c.rhs = std::to_string(e.value);
    c.failure = FailureKind::divisibility;
  }
  c.pass = lhs.has_value() && rhs.has_value() && *lhs == *rhs;
  if (!c.pass && c.failure == FailureKind::none)
    c.failure = FailureKind::mismatch;
  return c;
}

}  // namespace detail

CongruenceCase check_lem21(uint64_t n, uint64_t d) {
  BigInt lhs = exact_prefix_sum(n, d);
  BigInt rhs = exact_prefix_sum_via_binomials(n, d);
  CongruenceCase c;
  c.id = ResultId::lem21;
  c.p = n;
  c.parameter = d;
  c.modulus = 0;
  c.lhs = lhs.str();
  c.rhs = rhs.str();
  c.pass = lhs == rhs;
  c.failure = c.pass ? FailureKind::none : FailureKind::mismatch;
  return c;
}

std::vector<CongruenceCase> check_lem21_all(uint64_t n) {
  if (n < 1) throw std::invalid_argument("check_lem21_all: n must be >= 1");

  std::vector<BigInt> lhs_acc(n, 0);
  {
    std::vector<BigInt> row{1};
    for (uint64_t k = 0; k < n; ++k) {
      if (k > 0) trinomial_row_advance_exact(row);
      for (uint64_t d = 0; d <= k; ++d) lhs_acc[d] += row[d];
    }
  }

  std::vector<BigInt> rhs_acc(n, 0);
  for (uint64_t k = 1; k <= n; ++k) {
    BigInt cnk = exact_binomial(n, k);
    uint64_t d0 = k % 2 == 1 ? 0 : 1;
    uint64_t j = (k + d0 - 1) / 2;
    BigInt walk = exact_binomial(k - 1, j);
    uint64_t d_top = std::min(k - 1, n - 1);
    for (uint64_t d = d0; d <= d_top; d += 2) {
      rhs_acc[d] += cnk * walk;
      walk = walk * (k - 1 - j) / (j + 1);  // C(k-1, j) -> C(k-1, j+1), exact
      ++j;
    }
  }

  std::vector<CongruenceCase> cases;
  cases.reserve(n);
  for (uint64_t d = 0; d < n; ++d) {
    CongruenceCase c;
    c.id = ResultId::lem21;
    c.p = n;
    c.parameter = d;
    c.modulus = 0;
    c.lhs = lhs_acc[d].str();
    c.rhs = rhs_acc[d].str();
    c.pass = lhs_acc[d] == rhs_acc[d];
    c.failure = c.pass ? FailureKind::none : FailureKind::mismatch;
    cases.push_back(std::move(c));
  }
  return cases;
}

PrimeChecker::PrimeChecker(uint64_t p) : p_(p), p2_(p * p) {
  if (p < 5 || !is_prime(p))
    throw std::invalid_argument("PrimeChecker: p must be a prime > 3, got " +
                                std::to_string(p));
  if (p > 3037000499ULL)
    throw std::invalid_argument("PrimeChecker: p^2 exceeds the modulus cap");
}

void PrimeChecker::require_d(uint64_t d) const {
  if (d >= p_)
    throw std::invalid_argument("d must be below p, got " + std::to_string(d));
}

const SumTable& PrimeChecker::tri_sums_p() {
  if (!tri_p_) tri_p_ = trinomial_prefix_sums(p_, p_, RowWeight::unit);
  return *tri_p_;
}

const SumTable& PrimeChecker::tri_sums_p2() {
  if (!tri_p2_) tri_p2_ = trinomial_prefix_sums(p_, p2_, RowWeight::unit);
  return *tri_p2_;
}

const SumTable& PrimeChecker::tri_alt_p2(uint64_t d_max) {
  if (!tri_alt_ || tri_alt_->values.size() <= d_max)
    tri_alt_ = trinomial_prefix_sums(p_, p2_, RowWeight::alternating, d_max);
  return *tri_alt_;
}

const SumTable& PrimeChecker::binom_sums_p() {
  if (!binom_p_)
    binom_p_ = central_binomial_sums(p_, p_, BinomialWeight::unit);
  return *binom_p_;
}

const SumTable& PrimeChecker::binom_sums_p2() {
  if (!binom_p2_)
    binom_p2_ = central_binomial_sums(p_, p2_, BinomialWeight::unit);
  return *binom_p2_;
}

const SumTable& PrimeChecker::binom_inv_sums_p() {
  if (!binom_inv_)
    binom_inv_ = central_binomial_sums(p_, p_, BinomialWeight::inverse_index);
  return *binom_inv_;
}

const SumTable& PrimeChecker::offset_inv_sums() {
  if (!offset_inv_) offset_inv_ = offset_binomial_inv_sums(p_);
  return *offset_inv_;
}

const std::vector<uint64_t>& PrimeChecker::catalan_p2() {
  if (!catalan_) catalan_ = catalan_table_mod_p2(p_).values;
  return *catalan_;
}

std::span<const uint64_t> PrimeChecker::inv_table() {
  if (!inv_) inv_ = inverse_table(p_);
  return *inv_;
}

uint64_t PrimeChecker::s_lift() {
  if (s_state_ == 0) {
    uint64_t index = jacobi(3, p_) == 1 ? (p_ - 1) / 2 : (p_ + 1) / 2;
    s_raw_ = s_sequence(index + 1, p2_).values[index];
    if (s_raw_ % p_ == 0) {
      s_state_ = 1;
      s_value_ = s_raw_ / p_;
    } else {
      s_state_ = 2;
    }
  }
  if (s_state_ == 2) throw DivisibilityError(s_raw_, p_);
  return s_value_;
}

CongruenceCase PrimeChecker::psc(uint64_t d) {
  require_d(d);
  return detail::compare_sides(
      ResultId::psc, p_, d, p_,
      [&] { return binom_sums_p().values[d]; },
      [&] {
        int sym = symbol_mod3(static_cast<int64_t>(p_ - d));
        return embed_symbol(sym, p_).value();
      });
}

CongruenceCase PrimeChecker::pscc(uint64_t d) {
  require_d(d);
  return detail::compare_sides(
      ResultId::pscc, p_, d, p_,
      [&] { return binom_inv_sums_p().values[d]; },
      [&]() -> uint64_t {
        if (d == 0) return 0;
        int64_t base = -1 + (d % 2 == 0 ? 2 : -2) + ((p_ - d) % 3 == 0 ? 3 : 0);
        return mul_mod(canonical_mod(base, p_), inv_table()[d], p_);
      });
}

CongruenceCase PrimeChecker::stc(uint64_t d) {
  require_d(d);
  return detail::compare_sides(
      ResultId::stc, p_, d, p2_,
      [&] { return binom_sums_p2().values[d]; },
      [&] {
        int sym = symbol_mod3(static_cast<int64_t>(p_ - d));
        uint64_t weight = stc_weight(p_, d, inv_table());
        uint64_t lifted = mul_mod(2 * p_, weight, p2_);
        return add_mod(embed_symbol(sym, p2_).value(), lifted, p2_);
      });
}

CongruenceCase PrimeChecker::sdcc(uint64_t d) {
  require_d(d);
  return detail::compare_sides(
      ResultId::sdcc, p_, d, p_,
      [&] { return tri_sums_p().values[d]; },
      [&]() -> uint64_t {
        if (d % 2 == 1) return 0;
        int sign = ((p_ + d - 1) / 2) % 2 == 0 ? 1 : -1;
        return embed_symbol(sign, p_).value();
      });
}

CongruenceCase PrimeChecker::thm11_odd(uint64_t d) {
  require_d(d);
  if (d % 2 == 0)
    throw std::invalid_argument("thm11_odd: d must be odd");
  return detail::compare_sides(
      ResultId::thm11_odd, p_, d, p_,
      [&] {
        Residue raw = Residue::from_value(tri_sums_p2().values[d], p2_);
        return lift_div_p(raw, p_).value();
      },
      [&] {
        int64_t top = (static_cast<int64_t>(d) - 1) / 2;
        uint64_t plain = signed_reciprocal_sum(p_, DenomKind::index, 1, top,
                                               SumFilter::none, inv_table());
        uint64_t filtered = signed_reciprocal_sum(
            p_, DenomKind::index, 1, top, SumFilter::index_plus_p_div_3,
            inv_table());
        uint64_t inner = sub_mod(plain, mul_mod(3, filtered, p_), p_);
        int sign = ((d + 1) / 2) % 2 == 0 ? 1 : -1;
        uint64_t factor =
            mul_mod(canonical_mod(sign, p_), inv_table()[2], p_);
        return mul_mod(factor, inner, p_);
      });
}

CongruenceCase PrimeChecker::thm11_even(uint64_t d) {
  require_d(d);
  if (d % 2 == 1)
    throw std::invalid_argument("thm11_even: d must be even");
  return detail::compare_sides(
      ResultId::thm11_even, p_, d, p_,
      [&] {
        uint64_t raw = tri_sums_p2().values[d];
        uint64_t signed_sum = (d / 2) % 2 == 0 ? raw : sub_mod(0, raw, p2_);
        uint64_t parity = ((p_ - 1) / 2) % 2 == 0 ? 1 : p2_ - 1;
        uint64_t diff = sub_mod(signed_sum, parity, p2_);
        return lift_div_p(Residue::from_value(diff, p2_), p_).value();
      },
      [&] {
        uint64_t s_term =
            mul_mod(canonical_mod(3 * jacobi(-2, p_), p_), s_lift(), p_);
        int64_t top = static_cast<int64_t>(d) / 2 - 1;
        uint64_t plain = signed_reciprocal_sum(p_, DenomKind::odd_index, 0,
                                               top, SumFilter::none,
                                               inv_table());
        uint64_t filtered = signed_reciprocal_sum(
            p_, DenomKind::odd_index, 0, top,
            SumFilter::p_minus_denom_not_div_3, inv_table());
        uint64_t out = sub_mod(s_term, mul_mod(2, plain, p_), p_);
        return add_mod(out, mul_mod(3, filtered, p_), p_);
      });
}

CongruenceCase PrimeChecker::thm12(uint64_t d) {
  require_d(d);
  return detail::compare_sides(
      ResultId::thm12, p_, d, p2_,
      [&] { return tri_alt_p2(p_ - 1).values[d]; },
      [&]() -> uint64_t {
        if (d == p_ - 1) return 1;  // series form empty here; the row telescopes to 1
        int64_t first = d % 2 == 1 ? static_cast<int64_t>(d)
                                   : -static_cast<int64_t>(d);
        uint64_t term1 = canonical_mod(first, p2_);
        uint64_t scaled = mul_mod(p_, offset_inv_sums().values[d], p2_);
        return d % 2 == 0 ? add_mod(term1, scaled, p2_)
                          : sub_mod(term1, scaled, p2_);
      });
}

std::array<CongruenceCase, 3> PrimeChecker::thm13() {
  const SumTable& alt = tri_alt_p2(2);
  int sym = jacobi(static_cast<int64_t>(p_), 3);
  int64_t pq = static_cast<int64_t>(p_) * ((3 * sym - 1) / 2);
  std::array<int64_t, 3> rhs = {pq, 1 - pq,
                                3 * static_cast<int64_t>(p_) * sym - 2};
  std::array<ResultId, 3> ids = {ResultId::thm13_d0, ResultId::thm13_d1,
                                 ResultId::thm13_d2};
  std::array<CongruenceCase, 3> cases;
  for (uint64_t d = 0; d < 3; ++d) {
    cases[d] = detail::compare_sides(
        ids[d], p_, d, p2_, [&] { return alt.values[d]; },
        [&] { return canonical_mod(rhs[d], p2_); });
  }
  return cases;
}

CongruenceCase PrimeChecker::thm14() {
  return detail::compare_sides(
      ResultId::thm14, p_, std::nullopt, p2_,
      [&] {
        if (!central_3k_) central_3k_ = weighted_central_sum_3k(p_);
        return *central_3k_;
      },
      [&]() -> uint64_t {
        return symbol_mod3(static_cast<int64_t>(p_)) == 1 ? p_ : 0;
      });
}

CongruenceCase PrimeChecker::lem22(uint64_t m) {
  if (m < 1 || m >= (p_ - 1) / 2)
    throw std::invalid_argument("lem22: requires 1 <= m < (p-1)/2");
  return detail::compare_sides(
      ResultId::lem22, p_, m, p_,
      [&] { return half_binomial_sum(p_, m, cache_); },
      [&] {
        int64_t bracket = (p_ + m) % 3 == 0 ? -2 : 1;
        return mul_mod(canonical_mod(bracket, p_), inv_table()[m], p_);
      });
}

CongruenceCase PrimeChecker::lem23() {
  return detail::compare_sides(
      ResultId::lem23, p_, std::nullopt, p_,
      [&] {
        return signed_reciprocal_sum(p_, DenomKind::odd_index, 0,
                                     (static_cast<int64_t>(p_) - 3) / 2,
                                     SumFilter::none, inv_table());
      },
      [&] {
        uint64_t q = fermat_quotient_2(p_).value();
        uint64_t out = mul_mod(canonical_mod(jacobi(-1, p_), p_), q, p_);
        return mul_mod(out, inv_table()[2], p_);
      });
}

CongruenceCase PrimeChecker::lem24() {
  return detail::compare_sides(
      ResultId::lem24, p_, std::nullopt, p_,
      [&] {
        return signed_reciprocal_sum(p_, DenomKind::odd_index, 0,
                                     (static_cast<int64_t>(p_) - 3) / 2,
                                     SumFilter::p_minus_denom_not_div_3,
                                     inv_table());
      },
      [&] {
        uint64_t q = fermat_quotient_2(p_).value();
        uint64_t t1 = mul_mod(canonical_mod(jacobi(-1, p_), p_), q, p_);
        t1 = mul_mod(t1, inv_table()[3], p_);
        uint64_t t2 =
            mul_mod(canonical_mod(jacobi(-2, p_), p_), s_lift(), p_);
        return sub_mod(t1, t2, p_);
      });
}

CongruenceCase PrimeChecker::catalan_aux() {
  const std::vector<uint64_t>& cat = catalan_p2();
  uint64_t sum = 0, weighted = 0;
  for (uint64_t k = 0; k < p_; ++k) {
    uint64_t c = cat[k] % p_;
    sum = add_mod(sum, c, p_);
    if (k >= 1) weighted = add_mod(weighted, mul_mod(c, inv_table()[k], p_), p_);
  }
  int sym = symbol_mod3(static_cast<int64_t>(p_));
  uint64_t rhs_sum = canonical_mod((3 * sym - 1) / 2, p_);
  uint64_t rhs_weighted = canonical_mod(3 * (1 - sym) / 2, p_);

  CongruenceCase c;
  c.id = ResultId::catalan_aux;
  c.p = p_;
  c.modulus = p_;
  c.pass = true;

  auto fail = [&](uint64_t sub, uint64_t lhs, uint64_t rhs) {
    c.pass = false;
    c.failure = FailureKind::mismatch;
    c.parameter = sub;
    c.lhs = std::to_string(lhs);
    c.rhs = std::to_string(rhs);
  };

  if (sum != rhs_sum) {
    fail(0, sum, rhs_sum);
  } else if (weighted != rhs_weighted) {
    fail(1, weighted, rhs_weighted);
  } else if (cat[p_ - 1] % p_ != p_ - 1) {
    fail(2, cat[p_ - 1] % p_, p_ - 1);
  } else {
    for (uint64_t k = (p_ - 1) / 2 + 1; k < p_ - 1; ++k) {
      if (cat[k] % p_ != 0) {
        fail(3, cat[k] % p_, 0);
        break;
      }
    }
  }
  if (c.pass) {
    c.lhs = std::to_string(sum);
    c.rhs = std::to_string(rhs_sum);
  }
  return c;
}

CongruenceCase PrimeChecker::frobenius() {
  TrinomialRow row = trinomial_row_mod(p_, p_);
  CongruenceCase c;
  c.id = ResultId::frobenius;
  c.p = p_;
  c.modulus = p_;
  c.pass = true;
  for (uint64_t k = 0; k <= p_; ++k) {
    uint64_t expected = (k == 0 || k == p_) ? 1 : 0;
    if (row.coeffs[k] != expected) {
      c.pass = false;
      c.failure = FailureKind::mismatch;
      c.parameter = k;
      c.lhs = std::to_string(row.coeffs[k]);
      c.rhs = std::to_string(expected);
      return c;
    }
  }
  c.lhs = "1";
  c.rhs = "1";
  return c;
}

}  // namespace trinom
