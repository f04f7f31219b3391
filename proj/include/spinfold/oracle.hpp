#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "spinfold/bigint.hpp"
#include "spinfold/partitions.hpp"

namespace spinfold {

// Homogeneous multivariate polynomial with exact integer coefficients.
// Exponent vectors are packed into 64-bit keys; the packing is sized from the
// variable count and the total degree, which caps k * bits_per_exponent at 64
// (ample for everything enumerable here).
class SparsePolynomial {
public:
  SparsePolynomial(int variables, int total_degree);

  int variables() const { return k_; }
  int total_degree() const { return degree_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::vector<int>& exponents, const BigInt& coeff);
  BigInt coefficient(const std::vector<int>& exponents) const;

  // c * p added into *this; degrees must agree.
  void add_scaled(const SparsePolynomial& p, const BigInt& c);

  static SparsePolynomial multiply(const SparsePolynomial& a, const SparsePolynomial& b);

  // Deterministic iteration in decreasing lexicographic exponent order.
  void for_each_term(const std::function<void(const std::vector<int>&, const BigInt&)>& fn) const;

  std::string to_string() const;

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.k_ == b.k_ && a.terms_ == b.terms_;
  }

private:
  int k_;
  int degree_;
  int bits_;
  std::vector<std::pair<uint64_t, BigInt>> terms_; // sorted by key, descending; no zero coeffs

  uint64_t pack(const std::vector<int>& exponents) const;
  std::vector<int> unpack(uint64_t key) const;
  void normalize(std::vector<std::pair<uint64_t, BigInt>>& raw);

  friend class QFunctionOracle;
};

// Brute-force verification side: Schur Q-functions built straight from the
// tableau definition (filling rules only, no word conditions), so the
// structure constants they produce are independent of the lattice-property
// implementation. Instances memoize the polynomials they build; use one
// instance per thread.
class QFunctionOracle {
public:
  // Q_lambda(x_1..x_k) = sum over marked shifted tableaux of straight shape
  // lambda with letters at most k. Error too_few_variables when k < length.
  const SparsePolynomial& q_function(const StrictPartition& lambda, int k);

  // Coefficients f(lambda) with Q_mu Q_nu = sum 2^(l(mu)+l(nu)-l(lambda))
  // f(lambda) Q_lambda, extracted by triangular elimination in k = |mu|+|nu|
  // variables. Error extraction_residue if elimination leaves anything.
  std::map<StrictPartition, long long, PartitionCanonicalLess> structure_constants(
      const StrictPartition& mu, const StrictPartition& nu);

  // Number of standard shifted tableaux, by corner-removal recursion.
  BigInt standard_shifted_count(const StrictPartition& lambda);

private:
  std::map<std::pair<std::vector<int>, int>, SparsePolynomial> q_cache_;
  std::map<std::vector<int>, BigInt> standard_cache_;
};

// One-shot conveniences over a private oracle instance.
SparsePolynomial q_function(const StrictPartition& lambda, int k);
std::map<StrictPartition, long long, PartitionCanonicalLess> oracle_structure_constants(
    const StrictPartition& mu, const StrictPartition& nu);
BigInt standard_shifted_count(const StrictPartition& lambda);

} // namespace spinfold
