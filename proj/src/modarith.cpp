#include "trinom/modarith.hpp"

#include <string>
#include <utility>

namespace trinom {

void check_modulus(uint64_t m) {
  if (m < 2 || m > kMaxModulus)
    throw std::invalid_argument("modulus must be in [2, 2^63-1], got " +
                                std::to_string(m));
}

NotInvertibleError::NotInvertibleError(uint64_t value, uint64_t modulus)
    : std::domain_error("value " + std::to_string(value) +
                        " is not invertible mod " + std::to_string(modulus)),
      value(value),
      modulus(modulus) {}

DivisibilityError::DivisibilityError(uint64_t value, uint64_t p)
    : std::runtime_error("residue " + std::to_string(value) +
                         " is not divisible by " + std::to_string(p)),
      value(value),
      p(p) {}

uint64_t canonical_mod(int64_t v, uint64_t m) {
  check_modulus(m);
  int64_t r = v % static_cast<int64_t>(m);
  if (r < 0) r += static_cast<int64_t>(m);
  return static_cast<uint64_t>(r);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
  check_modulus(m);
  uint64_t result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

uint64_t inv_mod(uint64_t a, uint64_t m) {
  check_modulus(m);
  a %= m;
  __int128 t = 0, next_t = 1;
  uint64_t r = m, next_r = a;
  while (next_r != 0) {
    uint64_t q = r / next_r;
    __int128 tmp_t = t - static_cast<__int128>(q) * next_t;
    t = next_t;
    next_t = tmp_t;
    uint64_t tmp_r = r - q * next_r;
    r = next_r;
    next_r = tmp_r;
  }
  if (r != 1) throw NotInvertibleError(a, m);
  if (t < 0) t += m;
  return static_cast<uint64_t>(t);
}

Residue Residue::from_value(uint64_t value, uint64_t modulus) {
  check_modulus(modulus);
  if (value >= modulus)
    throw std::invalid_argument("value " + std::to_string(value) +
                                " is not canonical mod " +
                                std::to_string(modulus));
  return Residue(static_cast<int64_t>(value), modulus);
}

void Residue::require_same_modulus(const Residue& o) const {
  if (modulus_ != o.modulus_)
    throw std::invalid_argument("modulus mismatch: " +
                                std::to_string(modulus_) + " vs " +
                                std::to_string(o.modulus_));
}

Residue Residue::operator+(const Residue& o) const {
  require_same_modulus(o);
  return from_value(add_mod(value_, o.value_, modulus_), modulus_);
}

Residue Residue::operator-(const Residue& o) const {
  require_same_modulus(o);
  return from_value(sub_mod(value_, o.value_, modulus_), modulus_);
}

Residue Residue::operator*(const Residue& o) const {
  require_same_modulus(o);
  return from_value(mul_mod(value_, o.value_, modulus_), modulus_);
}

Residue Residue::operator-() const {
  return from_value(value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

Residue Residue::pow(uint64_t exp) const {
  return from_value(pow_mod(value_, exp, modulus_), modulus_);
}

Residue Residue::inverse() const {
  return from_value(inv_mod(value_, modulus_), modulus_);
}

bool Residue::operator==(const Residue& o) const {
  require_same_modulus(o);
  return value_ == o.value_;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (uint64_t f = 5; f * f <= n; f += 6) {
    if (n % f == 0 || n % (f + 2) == 0) return false;
  }
  return true;
}

int jacobi(int64_t a, uint64_t n) {
  if (n == 0 || n % 2 == 0)
    throw std::invalid_argument("jacobi: n must be odd and positive, got " +
                                std::to_string(n));
  if (n == 1) return 1;
  uint64_t x = canonical_mod(a, n);
  int result = 1;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      uint64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(x, n);
    if (x % 4 == 3 && n % 4 == 3) result = -result;
    x %= n;
  }
  return n == 1 ? result : 0;
}

int legendre_euler(int64_t a, uint64_t p) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("legendre_euler: p must be an odd prime");
  uint64_t x = canonical_mod(a, p);
  if (x == 0) return 0;
  uint64_t t = pow_mod(x, (p - 1) / 2, p);
  if (t == 1) return 1;
  if (t == p - 1) return -1;
  throw std::invalid_argument("legendre_euler: p is not an odd prime: " +
                              std::to_string(p));
}

int symbol_mod3(int64_t a) {
  int64_t r = a % 3;
  if (r < 0) r += 3;
  return r == 0 ? 0 : r == 1 ? 1 : -1;
}

Residue embed_symbol(int symbol, uint64_t modulus) {
  if (symbol < -1 || symbol > 1)
    throw std::invalid_argument("symbol must be -1, 0 or 1, got " +
                                std::to_string(symbol));
  return Residue(symbol, modulus);
}

std::vector<uint64_t> inverse_table(uint64_t p) {
  check_modulus(p);
  std::vector<uint64_t> inv(p);
  inv[0] = 0;
  if (p > 1) inv[1] = 1;
  for (uint64_t i = 2; i < p; ++i)
    inv[i] = mul_mod(p - p / i, inv[p % i], p);
  return inv;
}

Residue fermat_quotient_2(uint64_t p) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("fermat_quotient_2: p must be an odd prime");
  uint64_t p2 = p * p;
  if (p2 / p != p || p2 > kMaxModulus)
    throw std::invalid_argument("fermat_quotient_2: p^2 exceeds modulus cap");
  uint64_t t = pow_mod(2, p - 1, p2);
  return lift_div_p(Residue::from_value(sub_mod(t, 1, p2), p2), p);
}

Residue lift_div_p(const Residue& x, uint64_t p) {
  if (p < 2 || x.modulus() != p * p)
    throw std::invalid_argument("lift_div_p: modulus of x must be p^2");
  uint64_t v = x.value();
  if (v % p != 0) throw DivisibilityError(v, p);
  return Residue::from_value(v / p, p);
}

}  // namespace trinom
