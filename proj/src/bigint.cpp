#include "spinfold/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "spinfold/errors.hpp"

namespace spinfold {

namespace {
constexpr uint64_t kBase = 1ull << 32;

inline bool u128_mul_fits(uint64_t a, uint64_t b) {
  return b == 0 || a <= ~0ull / b;
}
} // namespace

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  small_ = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
}

BigInt BigInt::from_parts(uint64_t mag, int sign) {
  BigInt out;
  if (mag != 0) {
    out.sign_ = sign;
    out.small_ = mag;
  }
  return out;
}

std::vector<uint32_t> BigInt::limbs() const {
  if (!wide_.empty()) return wide_;
  std::vector<uint32_t> out;
  uint64_t mag = small_;
  while (mag) {
    out.push_back(static_cast<uint32_t>(mag));
    mag >>= 32;
  }
  return out;
}

void BigInt::adopt(std::vector<uint32_t> mag, int sign) {
  while (!mag.empty() && mag.back() == 0) mag.pop_back();
  if (mag.empty()) {
    sign_ = 0;
    small_ = 0;
    wide_.clear();
  } else if (mag.size() <= 2) {
    sign_ = sign;
    small_ = mag.size() == 2 ? (static_cast<uint64_t>(mag[1]) << 32) | mag[0] : mag[0];
    wide_.clear();
  } else {
    sign_ = sign;
    small_ = 0;
    wide_ = std::move(mag);
  }
}

BigInt BigInt::from_decimal(std::string_view s) {
  std::string_view rest = s;
  int sign = 1;
  if (!rest.empty() && (rest[0] == '+' || rest[0] == '-')) {
    sign = rest[0] == '-' ? -1 : 1;
    rest.remove_prefix(1);
  }
  if (rest.empty()) raise(Errc::parse_error, "empty integer literal");
  BigInt out;
  for (char c : rest) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      raise(Errc::parse_error, std::string("bad digit '") + c + "' in integer literal");
    out *= BigInt(10);
    out += BigInt(c - '0');
  }
  if (!out.is_zero()) out.sign_ = sign;
  return out;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  const auto& lo = a.size() >= b.size() ? b : a;
  const auto& hi = a.size() >= b.size() ? a : b;
  std::vector<uint32_t> out;
  out.reserve(hi.size() + 1);
  uint64_t carry = 0;
  for (size_t i = 0; i < hi.size(); ++i) {
    uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
    out.push_back(static_cast<uint32_t>(s));
    carry = s >> 32;
  }
  if (carry) out.push_back(static_cast<uint32_t>(carry));
  return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  out.reserve(a.size());
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
    if (d < 0) {
      d += static_cast<int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<uint32_t>(d));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> out(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    uint64_t ai = a[i];
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = out[i + j] + ai * b[j] + carry;
      out[i + j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t cur = out[k] + carry;
      out[k] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

uint32_t BigInt::divmod_small(std::vector<uint32_t>& num, uint32_t den) {
  uint64_t rem = 0;
  for (size_t i = num.size(); i-- > 0;) {
    uint64_t cur = (rem << 32) | num[i];
    num[i] = static_cast<uint32_t>(cur / den);
    rem = cur % den;
  }
  while (!num.empty() && num.back() == 0) num.pop_back();
  return static_cast<uint32_t>(rem);
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (o.sign_ == 0) return *this;
  if (sign_ == 0) return *this = o;
  if (is_small() && o.is_small()) {
    if (sign_ == o.sign_) {
      uint64_t sum = small_ + o.small_;
      if (sum >= small_) { // no wrap
        small_ = sum;
        return *this;
      }
    } else {
      if (small_ >= o.small_) {
        small_ -= o.small_;
        if (small_ == 0) sign_ = 0;
      } else {
        small_ = o.small_ - small_;
        sign_ = o.sign_;
      }
      return *this;
    }
  }
  auto a = limbs();
  auto b = o.limbs();
  if (sign_ == o.sign_) {
    adopt(add_mag(a, b), sign_);
    return *this;
  }
  int c = cmp_mag(a, b);
  if (c == 0) adopt({}, 0);
  else if (c > 0) adopt(sub_mag(a, b), sign_);
  else adopt(sub_mag(b, a), o.sign_);
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
  if (sign_ == 0 || o.sign_ == 0) {
    sign_ = 0;
    small_ = 0;
    wide_.clear();
    return *this;
  }
  if (is_small() && o.is_small() && u128_mul_fits(small_, o.small_)) {
    small_ *= o.small_;
    sign_ *= o.sign_;
    return *this;
  }
  adopt(mul_mag(limbs(), o.limbs()), sign_ * o.sign_);
  return *this;
}

BigInt BigInt::shl(unsigned bits) const {
  if (is_zero() || bits == 0) return *this;
  if (is_small() && bits < 64 && (small_ >> (64 - bits)) == 0)
    return from_parts(small_ << bits, sign_);
  auto mag = limbs();
  unsigned limb_shift = bits / 32, bit_shift = bits % 32;
  std::vector<uint32_t> out(limb_shift, 0);
  uint32_t carry = 0;
  for (uint32_t limb : mag) {
    if (bit_shift == 0) {
      out.push_back(limb);
    } else {
      out.push_back((limb << bit_shift) | carry);
      carry = static_cast<uint32_t>(static_cast<uint64_t>(limb) >> (32 - bit_shift));
    }
  }
  if (carry) out.push_back(carry);
  BigInt result;
  result.adopt(std::move(out), sign_);
  return result;
}

BigInt BigInt::shr(unsigned bits) const {
  if (is_zero() || bits == 0) return *this;
  if (is_small()) {
    if (bits >= 64) return BigInt();
    return from_parts(small_ >> bits, sign_);
  }
  unsigned limb_shift = bits / 32, bit_shift = bits % 32;
  if (limb_shift >= wide_.size()) return BigInt();
  std::vector<uint32_t> out(wide_.begin() + limb_shift, wide_.end());
  if (bit_shift) {
    for (size_t i = 0; i < out.size(); ++i) {
      uint32_t hi = i + 1 < out.size() ? out[i + 1] : 0;
      out[i] = (out[i] >> bit_shift) | (static_cast<uint64_t>(hi) << (32 - bit_shift));
    }
  }
  BigInt result;
  result.adopt(std::move(out), sign_);
  return result;
}

void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem) {
  if (den.is_zero()) raise(Errc::non_divisor, "division by zero");
  if (num.is_small() && den.is_small()) {
    quot = from_parts(num.small_ / den.small_, num.sign_ * den.sign_);
    rem = from_parts(num.small_ % den.small_, num.sign_);
    return;
  }
  auto n = num.limbs();
  auto d = den.limbs();
  if (cmp_mag(n, d) < 0) {
    quot = BigInt();
    rem = num;
    return;
  }
  if (d.size() == 1) {
    uint32_t r = divmod_small(n, d[0]);
    quot.adopt(std::move(n), num.sign_ * den.sign_);
    rem = from_parts(r, num.sign_);
    return;
  }
  // Binary long division on magnitudes; fine for the sizes handled here.
  std::vector<uint32_t> r_mag;
  std::vector<uint32_t> q_mag(n.size(), 0);
  for (size_t i = n.size() * 32; i-- > 0;) {
    // r <<= 1
    uint32_t carry = 0;
    for (auto& limb : r_mag) {
      uint32_t next = limb >> 31;
      limb = (limb << 1) | carry;
      carry = next;
    }
    if (carry) r_mag.push_back(carry);
    if ((n[i / 32] >> (i % 32)) & 1u) {
      if (r_mag.empty()) r_mag.push_back(1);
      else r_mag[0] |= 1u;
    }
    if (cmp_mag(r_mag, d) >= 0) {
      r_mag = sub_mag(r_mag, d);
      q_mag[i / 32] |= 1u << (i % 32);
    }
  }
  quot.adopt(std::move(q_mag), num.sign_ * den.sign_);
  rem.adopt(std::move(r_mag), num.sign_);
}

BigInt BigInt::operator/(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return r;
}

bool BigInt::divisible_by(const BigInt& o) const { return (*this % o).is_zero(); }

bool BigInt::is_odd() const {
  if (is_zero()) return false;
  return is_small() ? (small_ & 1u) : (wide_[0] & 1u);
}

unsigned BigInt::trailing_zero_bits() const {
  if (is_zero()) return 0;
  if (is_small()) return static_cast<unsigned>(__builtin_ctzll(small_));
  unsigned bits = 0;
  for (uint32_t limb : wide_) {
    if (limb == 0) {
      bits += 32;
      continue;
    }
    return bits + static_cast<unsigned>(__builtin_ctz(limb));
  }
  return bits;
}

int BigInt::compare(const BigInt& o) const {
  if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
  if (sign_ == 0) return 0;
  int c;
  if (is_small() && o.is_small()) {
    c = small_ < o.small_ ? -1 : (small_ > o.small_ ? 1 : 0);
  } else {
    c = cmp_mag(limbs(), o.limbs());
  }
  return sign_ >= 0 ? c : -c;
}

long long BigInt::to_int64() const {
  if (!is_small()) raise(Errc::overflow, "BigInt does not fit in 64 bits: " + to_string());
  if (sign_ >= 0) {
    if (small_ > 0x7fffffffffffffffull)
      raise(Errc::overflow, "BigInt does not fit in 64 bits: " + to_string());
    return static_cast<long long>(small_);
  }
  if (small_ > 0x8000000000000000ull)
    raise(Errc::overflow, "BigInt does not fit in 64 bits: " + to_string());
  return -static_cast<long long>(small_ - 1) - 1;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::vector<uint32_t> mag = limbs();
  std::string digits;
  while (!mag.empty()) {
    uint32_t chunk = divmod_small(mag, 1000000000u);
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + chunk % 10));
      chunk /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigInt BigInt::pow2(unsigned k) { return BigInt(1).shl(k); }

BigInt BigInt::factorial(unsigned n) {
  BigInt out(1);
  for (unsigned i = 2; i <= n; ++i) out *= BigInt(static_cast<long long>(i));
  return out;
}

BigInt BigInt::binomial(unsigned n, unsigned k) {
  if (k > n) return BigInt();
  if (k > n - k) k = n - k;
  BigInt out(1);
  for (unsigned i = 1; i <= k; ++i) {
    out *= BigInt(static_cast<long long>(n - k + i));
    BigInt q, r;
    divmod(out, BigInt(static_cast<long long>(i)), q, r);
    out = std::move(q);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

} // namespace spinfold
