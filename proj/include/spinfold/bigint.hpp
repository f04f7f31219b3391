#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace spinfold {

// Arbitrary-precision signed integer. Magnitudes up to 64 bits live inline;
// only wider values touch the heap (base-2^32 limbs). Supports exactly what
// the combinatorics here needs: ring arithmetic, shifts, divmod, parity and
// decimal I/O. Everything is exact; to_int64 throws instead of truncating.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v);
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}
  BigInt(unsigned v) : BigInt(static_cast<long long>(v)) {}

  static BigInt from_decimal(std::string_view s);

  bool is_zero() const { return sign_ == 0; }
  int signum() const { return sign_; }
  bool is_odd() const;
  bool is_even() const { return !is_odd(); }

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);
  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

  // Shift the magnitude; sign is preserved. shr discards low bits.
  BigInt shl(unsigned bits) const;
  BigInt shr(unsigned bits) const;

  // Truncating division; remainder carries the dividend's sign.
  static void divmod(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem);
  BigInt operator/(const BigInt& o) const;
  BigInt operator%(const BigInt& o) const;
  bool divisible_by(const BigInt& o) const;

  // Number of trailing zero bits of the magnitude (0 for zero).
  unsigned trailing_zero_bits() const;

  int compare(const BigInt& o) const;
  friend bool operator==(const BigInt& a, const BigInt& b) { return a.compare(b) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return a.compare(b) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return a.compare(b) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return a.compare(b) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return a.compare(b) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return a.compare(b) >= 0; }

  long long to_int64() const;
  std::string to_string() const;

  static BigInt pow2(unsigned k);
  static BigInt factorial(unsigned n);
  static BigInt binomial(unsigned n, unsigned k);

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
  int sign_ = 0;        // -1, 0, +1
  uint64_t small_ = 0;  // magnitude when wide_ is empty
  std::vector<uint32_t> wide_; // little-endian limbs otherwise, no high zeros

  bool is_small() const { return wide_.empty(); }
  // Magnitude as limbs regardless of representation.
  std::vector<uint32_t> limbs() const;
  // Install a limb magnitude, collapsing to the inline form when it fits.
  void adopt(std::vector<uint32_t> mag, int sign);
  static BigInt from_parts(uint64_t mag, int sign);

  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  // Requires |a| >= |b|.
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static uint32_t divmod_small(std::vector<uint32_t>& num, uint32_t den);
};

} // namespace spinfold
