#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace trinom {

// Largest accepted modulus.  Keeping m < 2^63 means a + b for canonical
// residues never wraps uint64_t, and (m-1)^2 fits the 128-bit product path.
inline constexpr uint64_t kMaxModulus = (uint64_t{1} << 63) - 1;

class NotInvertibleError : public std::domain_error {
 public:
  NotInvertibleError(uint64_t value, uint64_t modulus);
  uint64_t value;
  uint64_t modulus;
};

// Raised when a residue mod p^2 that is claimed to be divisible by p turns
// out not to be.  Checkers convert this into a reported failure rather than
// letting it escape: the divisibility claim is part of what gets verified.
class DivisibilityError : public std::runtime_error {
 public:
  DivisibilityError(uint64_t value, uint64_t p);
  uint64_t value;  // offending residue, 0 <= value < p^2
  uint64_t p;
};

// Throws std::invalid_argument unless 2 <= m <= kMaxModulus.
void check_modulus(uint64_t m);

// Canonical representative of v mod m in [0, m).  Validates the modulus.
uint64_t canonical_mod(int64_t v, uint64_t m);

inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t m) {
  uint64_t r = a + b;
  return r >= m ? r - m : r;
}

inline uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m);

// Inverse of a mod m via extended Euclid; throws NotInvertibleError when
// gcd(a, m) != 1.
uint64_t inv_mod(uint64_t a, uint64_t m);

class Residue {
 public:
  Residue(int64_t value, uint64_t modulus)
      : value_(canonical_mod(value, modulus)), modulus_(modulus) {}

  static Residue from_value(uint64_t value, uint64_t modulus);

  uint64_t value() const { return value_; }
  uint64_t modulus() const { return modulus_; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const;
  Residue pow(uint64_t exp) const;
  Residue inverse() const;

  bool operator==(const Residue& o) const;
  bool operator!=(const Residue& o) const { return !(*this == o); }

 private:
  void require_same_modulus(const Residue& o) const;

  uint64_t value_;
  uint64_t modulus_;
};

// Deterministic primality by trial division; adequate for the supported
// range (p up to ~2*10^9 costs at most ~45000 divisions).
bool is_prime(uint64_t n);

// Jacobi symbol (a/n) for odd n >= 1, by binary quadratic reciprocity.
// Returns -1, 0 or 1; throws std::invalid_argument for even or zero n.
int jacobi(int64_t a, uint64_t n);

// Legendre symbol via Euler's criterion a^((p-1)/2) mod p.  Slower than
// jacobi(); kept as an independent cross-check route.  Requires odd prime p.
int legendre_euler(int64_t a, uint64_t p);

// The symbol (a/3) spelled out: 0, 1, -1 for a = 0, 1, 2 mod 3.
int symbol_mod3(int64_t a);

// Maps a symbol value in {-1, 0, 1} into the residue ring mod m.
Residue embed_symbol(int symbol, uint64_t modulus);

// inv[i] = i^{-1} mod p for 1 <= i < p (inv[0] unused, set to 0).
// Requires prime p; built in O(p) from inv[i] = -(p/i) * inv[p mod i].
std::vector<uint64_t> inverse_table(uint64_t p);

// (2^(p-1) - 1) / p mod p for odd prime p, computed from 2^(p-1) mod p^2.
Residue fermat_quotient_2(uint64_t p);

// Divides a residue mod p^2 by p, i.e. maps x = p*q to q mod p.  Throws
// DivisibilityError when p does not divide x.
Residue lift_div_p(const Residue& x, uint64_t p);

}  // namespace trinom
