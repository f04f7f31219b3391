#include "spinfold/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "spinfold/errors.hpp"

namespace spinfold {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) raise(Errc::parse_error, "partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::is_strict() const {
  for (size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] >= parts_[i - 1]) return false;
  return true;
}

bool Partition::all_parts_odd() const {
  for (int p : parts_)
    if (p % 2 == 0) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

StrictPartition::StrictPartition(std::vector<int> parts) : p_(std::move(parts)) {
  if (!p_.is_strict()) raise(Errc::not_strict, "parts are not distinct: " + p_.to_string());
}

StrictPartition::StrictPartition(const Partition& p) : p_(p) {
  if (!p_.is_strict()) raise(Errc::not_strict, "parts are not distinct: " + p_.to_string());
}

bool canonical_less(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                      a.parts().begin(), a.parts().end());
}

bool canonical_less(const StrictPartition& a, const StrictPartition& b) {
  return canonical_less(a.as_partition(), b.as_partition());
}

StrictPartition staircase(int k) {
  std::vector<int> parts;
  for (int i = k; i >= 1; --i) parts.push_back(i);
  return StrictPartition(std::move(parts));
}

namespace {

// Longest staircase suffix (m,m-1,...,1); 0 when the last part is not 1.
int staircase_suffix_length(const std::vector<int>& parts) {
  int m = 0;
  for (size_t i = parts.size(); i-- > 0;) {
    if (parts[i] != m + 1) break;
    ++m;
  }
  return m;
}

bool consecutive_run(const std::vector<int>& parts, size_t lo, size_t hi) {
  for (size_t i = lo + 1; i < hi; ++i)
    if (parts[i] != parts[i - 1] - 1) return false;
  return true;
}

} // namespace

ShapeClass classify_shape(const StrictPartition& p) {
  ShapeClass out;
  const auto& parts = p.parts();
  if (parts.empty()) {
    out.tag = ShapeClass::Tag::staircase;
    return out;
  }
  size_t len = parts.size();
  if (consecutive_run(parts, 0, len)) {
    // One consecutive run: staircase when it reaches 1, fat staircase above.
    out.k = static_cast<int>(len);
    out.r = parts[len - 1] - 1;
    out.tag = out.r == 0 ? ShapeClass::Tag::staircase : ShapeClass::Tag::fat_staircase;
    return out;
  }
  int m = staircase_suffix_length(parts);
  if (m > 0 && m < static_cast<int>(len)) {
    size_t cut = len - static_cast<size_t>(m);
    int fat_low = parts[cut - 1];
    if (consecutive_run(parts, 0, cut) && fat_low >= m + 2) {
      out.tag = ShapeClass::Tag::hook_staircase;
      out.k = static_cast<int>(cut);
      out.r = fat_low - 1;
      out.fat_part = StrictPartition(std::vector<int>(parts.begin(), parts.begin() + cut));
      out.stair_part = staircase(m);
      return out;
    }
  }
  out.tag = ShapeClass::Tag::other;
  return out;
}

bool is_staircase(const StrictPartition& p) {
  return classify_shape(p).tag == ShapeClass::Tag::staircase;
}

bool is_fat_staircase(const StrictPartition& p) {
  auto tag = classify_shape(p).tag;
  return tag == ShapeClass::Tag::staircase || tag == ShapeClass::Tag::fat_staircase;
}

bool is_hook_staircase(const StrictPartition& p) {
  return classify_shape(p).tag != ShapeClass::Tag::other;
}

HalfPowerScalar HalfPowerScalar::from_integer(BigInt v) {
  if (v.signum() < 0) raise(Errc::internal, "HalfPowerScalar mantissa must be nonnegative");
  HalfPowerScalar out;
  out.mantissa_ = std::move(v);
  out.normalize();
  return out;
}

HalfPowerScalar HalfPowerScalar::sqrt2() {
  HalfPowerScalar out = one();
  out.half_exponent_ = 1;
  return out;
}

void HalfPowerScalar::normalize() {
  if (mantissa_.is_zero()) {
    half_exponent_ = 0;
    return;
  }
  unsigned t = mantissa_.trailing_zero_bits();
  if (t) {
    mantissa_ = mantissa_.shr(t);
    half_exponent_ += 2l * t;
  }
}

HalfPowerScalar HalfPowerScalar::operator*(const HalfPowerScalar& o) const {
  HalfPowerScalar out;
  out.mantissa_ = mantissa_ * o.mantissa_;
  out.half_exponent_ = half_exponent_ + o.half_exponent_;
  out.normalize();
  return out;
}

HalfPowerScalar HalfPowerScalar::times_pow2_half(long k) const {
  HalfPowerScalar out = *this;
  if (!out.is_zero()) out.half_exponent_ += k;
  return out;
}

bool HalfPowerScalar::is_integral() const {
  if (mantissa_.is_zero()) return true;
  return half_exponent_ >= 0 && half_exponent_ % 2 == 0;
}

BigInt HalfPowerScalar::to_integer() const {
  if (!is_integral()) raise(Errc::internal, "scalar is not integral: " + to_string());
  if (mantissa_.is_zero()) return BigInt();
  return mantissa_.shl(static_cast<unsigned>(half_exponent_ / 2));
}

std::string HalfPowerScalar::to_string() const {
  if (mantissa_.is_zero()) return "0";
  std::string out = mantissa_.to_string();
  if (half_exponent_ != 0) out += " * 2^(" + std::to_string(half_exponent_) + "/2)";
  return out;
}

Parity sigma_parity(const StrictPartition& p) { return p.sigma(); }

namespace {

// Strict partitions of n with all parts < max_part, canonical order.
void gen_strict(int n, int max_part, std::vector<int>& acc, std::vector<StrictPartition>& out) {
  if (n == 0) {
    out.push_back(StrictPartition(acc));
    return;
  }
  for (int p = std::min(n, max_part - 1); p >= 1; --p) {
    // Parts below p can sum to at most p(p-1)/2, and shrinking p only hurts.
    if (n - p > p * (p - 1) / 2) break;
    acc.push_back(p);
    gen_strict(n - p, p, acc, out);
    acc.pop_back();
  }
}

void gen_odd_parts(int n, int max_part, std::vector<int>& acc, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(acc));
    return;
  }
  int start = std::min(n, max_part);
  if (start % 2 == 0) --start;
  for (int p = start; p >= 1; p -= 2) {
    acc.push_back(p);
    gen_odd_parts(n - p, p, acc, out);
    acc.pop_back();
  }
}

void gen_all(int n, int max_part, std::vector<int>& acc, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    acc.push_back(p);
    gen_all(n - p, p, acc, out);
    acc.pop_back();
  }
}

} // namespace

std::vector<StrictPartition> strict_partitions(int n) {
  std::vector<StrictPartition> out;
  if (n < 0) return out;
  std::vector<int> acc;
  gen_strict(n, n + 1, acc, out);
  return out;
}

std::vector<StrictPartition> strict_partitions(int n, Parity sign) {
  std::vector<StrictPartition> out;
  for (auto& p : strict_partitions(n))
    if (p.sigma() == sign) out.push_back(std::move(p));
  return out;
}

std::vector<Partition> odd_part_partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> acc;
  gen_odd_parts(n, n, acc, out);
  return out;
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> acc;
  gen_all(n, n, acc, out);
  return out;
}

std::vector<Partition> enumerate_strict(int n, StrictFilter filter) {
  std::vector<Partition> out;
  switch (filter) {
    case StrictFilter::all:
      for (auto& p : strict_partitions(n)) out.push_back(p.as_partition());
      break;
    case StrictFilter::even:
      for (auto& p : strict_partitions(n, Parity::even)) out.push_back(p.as_partition());
      break;
    case StrictFilter::odd:
      for (auto& p : strict_partitions(n, Parity::odd)) out.push_back(p.as_partition());
      break;
    case StrictFilter::odd_parts:
      out = odd_part_partitions(n);
      break;
  }
  return out;
}

std::vector<StrictPartition> neighbors(const StrictPartition& p) {
  std::vector<StrictPartition> out;
  const auto& parts = p.parts();
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0 && parts[i - 1] == parts[i] + 1) continue; // would collide
    std::vector<int> next = parts;
    ++next[i];
    out.push_back(StrictPartition(std::move(next)));
  }
  std::sort(out.begin(), out.end(),
            [](const StrictPartition& a, const StrictPartition& b) { return canonical_less(a, b); });
  return out;
}

StrictPartition plus_one_part(const StrictPartition& p) {
  if (!p.empty() && p.parts().back() == 1)
    raise(Errc::part_contains_one, "partition already contains 1: " + p.to_string());
  std::vector<int> parts = p.parts();
  parts.push_back(1);
  return StrictPartition(std::move(parts));
}

Partition union_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition(std::move(parts));
}

Partition sum_parts(const Partition& a, const Partition& b) {
  const auto& x = a.parts();
  const auto& y = b.parts();
  std::vector<int> parts(std::max(x.size(), y.size()), 0);
  for (size_t i = 0; i < parts.size(); ++i)
    parts[i] = (i < x.size() ? x[i] : 0) + (i < y.size() ? y[i] : 0);
  return Partition(std::move(parts));
}

HalfPowerScalar epsilon(const Partition& alpha) {
  return alpha.sigma() == Parity::even ? HalfPowerScalar::one() : HalfPowerScalar::sqrt2();
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition();
  size_t pos = 0;
  while (true) {
    size_t start = pos;
    long value = 0;
    bool any = false;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      value = value * 10 + (text[pos] - '0');
      if (value > 1000000) raise(Errc::parse_error, "part too large at column " + std::to_string(start + 1));
      ++pos;
      any = true;
    }
    if (!any) raise(Errc::parse_error, "expected a positive integer at column " + std::to_string(pos + 1));
    if (value == 0) raise(Errc::parse_error, "parts must be positive at column " + std::to_string(start + 1));
    parts.push_back(static_cast<int>(value));
    if (pos == text.size()) break;
    if (text[pos] != ',') raise(Errc::parse_error, std::string("expected ',' at column ") + std::to_string(pos + 1));
    ++pos;
  }
  return Partition(std::move(parts));
}

StrictPartition parse_strict_partition(std::string_view text) {
  return StrictPartition(parse_partition(text));
}

} // namespace spinfold
