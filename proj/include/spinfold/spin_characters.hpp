#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "spinfold/bigint.hpp"
#include "spinfold/partitions.hpp"

namespace spinfold {

// Which member of an associate pair a label names. Even shapes are
// self-associate; odd shapes come in plain/associate pairs.
enum class Variant { selfassoc, plain, associate };

// Label of one irreducible spin character of the double cover of S_n.
class SpinLabel {
public:
  SpinLabel() = default;
  SpinLabel(StrictPartition shape, Variant variant);

  // Self-associate label for even shapes, plain for odd ones.
  static SpinLabel of(StrictPartition shape);
  static SpinLabel associate_of(StrictPartition shape);

  const StrictPartition& shape() const { return shape_; }
  Variant variant() const { return variant_; }
  bool self_associate() const { return variant_ == Variant::selfassoc; }

  SpinLabel associate() const; // sign twist; identity on self-associate labels

  std::string to_string(bool ascii = false) const; // "<4,2>", "<2,1>a"

  friend bool operator==(const SpinLabel& a, const SpinLabel& b) {
    return a.shape_ == b.shape_ && a.variant_ == b.variant_;
  }
  friend bool operator!=(const SpinLabel& a, const SpinLabel& b) { return !(a == b); }

private:
  StrictPartition shape_;
  Variant variant_ = Variant::selfassoc;
};

// Canonical order: shapes in canonical order, plain before associate.
struct SpinLabelCanonicalLess {
  bool operator()(const SpinLabel& a, const SpinLabel& b) const;
};

// Nonnegative integer combination of spin labels. An odd shape whose
// constituent is known only up to the associate choice is tracked as an
// "unresolved" entry with multiplicity one.
class SpinCombination {
public:
  void add(const SpinLabel& label, long long mult = 1);
  void add_unresolved(const StrictPartition& shape);

  const std::map<SpinLabel, long long, SpinLabelCanonicalLess>& terms() const { return terms_; }
  const std::set<StrictPartition, PartitionCanonicalLess>& unresolved() const { return unresolved_; }
  bool empty() const { return terms_.empty() && unresolved_.empty(); }

  long long multiplicity(const SpinLabel& label) const;

  // Sum of mult * degree over all constituents; unresolved entries count
  // once (associate pairs share their degree).
  BigInt total_degree() const;

  // Multiplicities with associate variants identified, keyed by shape;
  // unresolved entries contribute 1.
  std::map<StrictPartition, long long, PartitionCanonicalLess> collapsed() const;

  std::string to_string(bool ascii = false) const;

  friend bool operator==(const SpinCombination& a, const SpinCombination& b) {
    return a.terms_ == b.terms_ && a.unresolved_ == b.unresolved_;
  }

private:
  std::map<SpinLabel, long long, SpinLabelCanonicalLess> terms_;
  std::set<StrictPartition, PartitionCanonicalLess> unresolved_;
};

// Label of an irreducible spin character of the preimage of S_l x S_(n-l),
// a reduced Clifford product. When both shapes are odd all four variant
// combinations name the same character, so those are canonicalized to
// (plain, plain).
class CliffordProductLabel {
public:
  CliffordProductLabel(SpinLabel left, SpinLabel right);

  const SpinLabel& left() const { return left_; }
  const SpinLabel& right() const { return right_; }

  std::string to_string(bool ascii = false) const;

  friend bool operator==(const CliffordProductLabel& a, const CliffordProductLabel& b) {
    return a.left_ == b.left_ && a.right_ == b.right_;
  }

private:
  SpinLabel left_, right_;
};

// Label of an irreducible spin character of the double cover of A_n. Even
// shapes restrict from the symmetric cover in two conjugate halves; odd
// shapes restrict whole.
enum class Half { whole, plus, minus };

class AnSpinLabel {
public:
  AnSpinLabel() = default;
  AnSpinLabel(StrictPartition shape, Half half);

  const StrictPartition& shape() const { return shape_; }
  Half half() const { return half_; }

  BigInt degree() const;

  std::string to_string(bool ascii = false) const;

  friend bool operator==(const AnSpinLabel& a, const AnSpinLabel& b) {
    return a.shape_ == b.shape_ && a.half_ == b.half_;
  }

private:
  StrictPartition shape_;
  Half half_ = Half::whole;
};

// --- operations ---

// Number of standard shifted tableaux of shape lambda by the closed product
// formula; exact, with the integrality of the rational product asserted.
BigInt g_lambda(const StrictPartition& lambda);

// Degree of the spin character: 2^floor((n - length)/2) * g_lambda.
BigInt degree(const StrictPartition& lambda);
BigInt degree(const SpinLabel& label);

// Induction one rank up: (1 - [1 is a part]) <lambda + (1)> plus, for each
// neighbor mu, <mu> or <mu> + <mu>^a depending on the sign of mu. For an
// associate input the adjoined-part term flips to its associate.
SpinCombination branch_up(const SpinLabel& x);

// Restriction one rank down, the reciprocal of branch_up.
SpinCombination branch_down(const SpinLabel& x);

// Degree of the reduced Clifford product: 2^(sigma(mu) sigma(nu)) d_mu d_nu.
BigInt clifford_degree(const StrictPartition& mu, const StrictPartition& nu);

// Decomposition of the projective outer product of <mu> and <nu> into spin
// characters of the cover of S_(|mu|+|nu|). Every multiplicity is checked
// integral and the total degree is checked against
// binomial(n, l) * clifford_degree(mu, nu).
SpinCombination decompose_outer_product(const StrictPartition& mu, const StrictPartition& nu);

// Restriction to the alternating cover: two conjugate halves for an even
// shape, one whole constituent for an odd one.
std::vector<AnSpinLabel> restrict_to_an(const SpinLabel& x);

// Induction from the alternating cover: a half induces to <lambda>, a whole
// odd-shape constituent induces to <lambda> + <lambda>^a.
SpinCombination induce_from_an(const AnSpinLabel& x);

} // namespace spinfold
