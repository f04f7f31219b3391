#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinfold/bigint.hpp"

namespace spinfold {

enum class Parity { even, odd };

inline Parity parity_of(int v) { return (v % 2 == 0) ? Parity::even : Parity::odd; }
inline Parity opposite(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }

// Integer partition, parts stored weakly decreasing. The empty partition is
// allowed (n = 0). Parts are validated positive on construction.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // sigma = n - length (mod 2); the sign character on the class with this
  // cycle type is (-1)^sigma.
  Parity sigma() const { return parity_of(n_ - length()); }

  bool is_strict() const;
  bool all_parts_odd() const;

  std::string to_string() const; // "6,2,1"; "" for the empty partition

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Partition with strictly decreasing parts. sigma() even means membership in
// D_n^+, odd means D_n^-.
class StrictPartition {
public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);
  explicit StrictPartition(const Partition& p);

  const std::vector<int>& parts() const { return p_.parts(); }
  int n() const { return p_.n(); }
  int length() const { return p_.length(); }
  bool empty() const { return p_.empty(); }
  Parity sigma() const { return p_.sigma(); }
  const Partition& as_partition() const { return p_; }

  std::string to_string() const { return p_.to_string(); }

  friend bool operator==(const StrictPartition& a, const StrictPartition& b) { return a.p_ == b.p_; }
  friend bool operator!=(const StrictPartition& a, const StrictPartition& b) { return !(a == b); }

private:
  Partition p_;
};

// Canonical output order used everywhere: descending reverse-lexicographic,
// e.g. (6), (5,1), (4,2), (3,2,1). canonical_less(a, b) is true when a is
// listed before b.
bool canonical_less(const Partition& a, const Partition& b);
bool canonical_less(const StrictPartition& a, const StrictPartition& b);

struct PartitionCanonicalLess {
  bool operator()(const Partition& a, const Partition& b) const { return canonical_less(a, b); }
  bool operator()(const StrictPartition& a, const StrictPartition& b) const { return canonical_less(a, b); }
};

// Shape classes from the multiplicity-free classification. A staircase is
// (k,...,2,1); a fat staircase is (k+r,...,1+r); a hook staircase is a fat
// staircase followed by a staircase with a gap of at least two between them
// (either half possibly empty). classify_shape reports the most specific tag;
// the is_* predicates are inclusive (every staircase is a fat staircase, and
// both are hook staircases).
struct ShapeClass {
  enum class Tag { staircase, fat_staircase, hook_staircase, other };
  Tag tag = Tag::other;
  int k = 0; // number of parts of the (fat) staircase half
  int r = 0; // fattening offset, 0 for a plain staircase
  StrictPartition fat_part;   // set for hook_staircase
  StrictPartition stair_part; // set for hook_staircase
};

ShapeClass classify_shape(const StrictPartition& p);
bool is_staircase(const StrictPartition& p);
bool is_fat_staircase(const StrictPartition& p);
bool is_hook_staircase(const StrictPartition& p);
StrictPartition staircase(int k); // (k,k-1,...,1)

// Exact scalar of the form mantissa * 2^(half_exponent/2) with mantissa a
// nonnegative odd integer (or zero). Carries the epsilon weights and the
// 2^((l(mu)+l(nu)-l(lambda))/2) factor of the shifted Littlewood-Richardson
// rule without rounding.
class HalfPowerScalar {
public:
  HalfPowerScalar() = default; // zero
  static HalfPowerScalar from_integer(BigInt v);
  static HalfPowerScalar one() { return from_integer(BigInt(1)); }
  static HalfPowerScalar sqrt2();

  const BigInt& mantissa() const { return mantissa_; }
  long half_exponent() const { return half_exponent_; }
  bool is_zero() const { return mantissa_.is_zero(); }

  HalfPowerScalar operator*(const HalfPowerScalar& o) const;
  // Multiply by 2^(k/2); k may be negative.
  HalfPowerScalar times_pow2_half(long k) const;

  bool is_integral() const;
  BigInt to_integer() const; // throws unless is_integral()

  std::string to_string() const;

  friend bool operator==(const HalfPowerScalar& a, const HalfPowerScalar& b) {
    return a.mantissa_ == b.mantissa_ && (a.is_zero() || a.half_exponent_ == b.half_exponent_);
  }

private:
  BigInt mantissa_;        // odd or zero
  long half_exponent_ = 0; // value = mantissa * 2^(half_exponent/2)

  void normalize();
};

// --- operations ---

Parity sigma_parity(const StrictPartition& p);

enum class StrictFilter { all, even, odd, odd_parts };

// D_n, D_n^+/-, or the odd-part partitions O_n, in canonical order. Entries
// of the odd_parts family need not be strict.
std::vector<Partition> enumerate_strict(int n, StrictFilter filter);
std::vector<StrictPartition> strict_partitions(int n);
std::vector<StrictPartition> strict_partitions(int n, Parity sign);
std::vector<Partition> odd_part_partitions(int n);

// All partitions of n in canonical order (cycle types of S_n).
std::vector<Partition> all_partitions(int n);

// All strict partitions reachable by adding 1 to a single part, in canonical
// order. N of the empty partition is empty.
std::vector<StrictPartition> neighbors(const StrictPartition& p);

// p with a part 1 adjoined; error part_contains_one if 1 is already a part.
StrictPartition plus_one_part(const StrictPartition& p);

Partition union_parts(const Partition& a, const Partition& b);
Partition sum_parts(const Partition& a, const Partition& b);

// 1 for even alpha, sqrt(2) for odd alpha.
HalfPowerScalar epsilon(const Partition& alpha);

// Parse "6,2,1" (either order) into canonical descending form. Errors:
// parse_error (with 1-based column in the message), not_strict from the
// strict variant.
Partition parse_partition(std::string_view text);
StrictPartition parse_strict_partition(std::string_view text);

} // namespace spinfold
