#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spinfold/bigint.hpp"
#include "spinfold/partitions.hpp"
#include "spinfold/spin_characters.hpp"

namespace spinfold {

enum class Group { sn, an };

// Conjugacy class of the preimage of S_m x S_m, named by a pair of cycle
// types; split classes carry an index distinguishing the class of the
// standard lift (1) from its central translate (2).
enum class SplitIndex { none, one, two };

struct ClassParam {
  Partition pi;
  Partition mu;
  SplitIndex index = SplitIndex::none;

  friend bool operator==(const ClassParam& a, const ClassParam& b) {
    return a.pi == b.pi && a.mu == b.mu && a.index == b.index;
  }
};

// Result of the swap action on a Clifford product label: the swapped label,
// possibly twisted by the sign character.
struct TwistedCliffordLabel {
  CliffordProductLabel label;
  bool associate = false;

  // Fixed points account for the diagonal products being self-associate.
  bool names_same_character_as(const CliffordProductLabel& other) const;
};

// Multiplicity-free classification cases for projective outer products.
enum class MultFreeCase {
  single_box,            // one factor is <1>
  hook_staircase_21,     // even hook staircase times <2,1>
  staircase_row,         // staircase times <m>
  staircase_near_row,    // staircase times <m-1,1>, m > 3, opposite signs
  staircase_double_row,  // even staircase times <m+1,m>
  fat_staircase_row,     // fat staircase times <m>, m > 1, opposite signs
};

// Block stabilizers and minimal triples are reported symbolically; the
// exceptional groups appear with their conventional names and their index in
// the ambient group, no group arithmetic behind them.
struct Stabilizer {
  enum class Kind { an_cover, sn_cover_minus_one, an_cover_minus_one, exceptional };
  Kind kind = Kind::an_cover;
  std::string name;              // "A~6", "S~8", "3^2:8", "2xL2(8):3", ...
  std::optional<BigInt> index;   // index in the ambient group when known

  friend bool operator==(const Stabilizer& a, const Stabilizer& b) {
    return a.kind == b.kind && a.name == b.name;
  }
};

// "Either constituent of the restriction of <shape> to the alternating
// cover"; used where a statement covers both halves at once.
struct EitherHalf {
  StrictPartition shape;

  friend bool operator==(const EitherHalf& a, const EitherHalf& b) { return a.shape == b.shape; }
};

// Character named only by a description, for the exceptional stabilizers.
struct NamedCharacter {
  std::string description;
  int degree = 0; // 0 when not pinned

  friend bool operator==(const NamedCharacter& a, const NamedCharacter& b) {
    return a.description == b.description && a.degree == b.degree;
  }
};

using CharacterRef = std::variant<SpinLabel, AnSpinLabel, EitherHalf, NamedCharacter>;

std::string to_string(const CharacterRef& ref, bool ascii = false);
// Degree when the reference pins one down (either-half references use half
// the spin degree).
std::optional<BigInt> character_degree(const CharacterRef& ref);

struct MinimalTriple {
  Group group = Group::sn;
  int n = 0;
  Stabilizer stabilizer;
  CharacterRef inducing;
  CharacterRef induced;

  friend bool operator==(const MinimalTriple& a, const MinimalTriple& b) {
    return a.group == b.group && a.n == b.n && a.stabilizer == b.stabilizer &&
           a.inducing == b.inducing && a.induced == b.induced;
  }
};

// Static facts about the exceptional six- and threefold covers, transcribed
// from their character tables; read-only data.
struct ExceptionalRecord {
  std::string group;      // "3.A6", "3.A7", "6.A6", "6.A7"
  std::string stabilizer; // "3xA~5", "3xS4", ...
  std::string phi;        // description of the inducing character
  std::string chi;        // description of the induced character(s)
};

// --- operations ---

// Multiplicity-free test for <mu> (x) <nu>, as a decision on the unordered
// pair; the matching case is reported when the product is multiplicity-free.
std::optional<MultFreeCase> is_mult_free(const StrictPartition& mu, const StrictPartition& nu);
std::string to_string(MultFreeCase c);

// The outer product <mu> (x) <nu> is irreducible exactly when nu = (1) and mu
// is a staircase of m parts with m = 2,3 (mod 4); returns the induced label's
// shape (m+1,m-1,...,1) in that case.
std::optional<StrictPartition> irreducible_outer(const StrictPartition& mu, const StrictPartition& nu);

// Splitting classes of the preimage of S_m x S_m: odd-type pairs and the two
// mixed-sign strict pairs.
bool splits(const Partition& pi, const Partition& mu);

// Count predicted by |D_m|^2 + 2 |D_m^+| |D_m^-|.
long long splitting_class_count(int m);

// Conjugation action of the wreath swap on class parameters. m even: swap
// the components. m odd: swap, and flip the split index for the mixed-sign
// strict pairs.
ClassParam tau_on_class(const ClassParam& c, int m);

// Swap action on Clifford product labels; the result picks up the sign twist
// when m is odd.
TwistedCliffordLabel tau_on_character(const CliffordProductLabel& x, int m);

// tau-invariance of <mu> (x)z <nu>: exactly the diagonal mu = nu.
bool is_tau_invariant(const StrictPartition& mu, const StrictPartition& nu);

// Whether either extension of <mu> (x)z <mu> to the wreath preimage induces
// irreducibly, decided from the computed decomposition of the outer square.
// The unique positive case is mu = (2,1): <4,2> for the symmetric cover, the
// two halves of its restriction for the alternating one.
std::optional<std::vector<CharacterRef>> wreath_irreducible(const StrictPartition& mu, Group group);

// Index-squared bound: induction from H is forced reducible when
// |G:H|^2 > |G|. Error non_divisor unless order_h divides order_g.
bool index_square_reducible(const BigInt& order_g, const BigInt& order_h);

// All minimal triples (H, phi, chi) for the double cover of S_n or A_n.
// Error unsupported_n for n < 4.
std::vector<MinimalTriple> minimal_triples(Group group, int n);

// Block stabilizers of the given spin character, empty when the character is
// primitive.
std::vector<Stabilizer> block_stabilizers(Group group, const SpinLabel& chi);
std::vector<Stabilizer> block_stabilizers(Group group, const AnSpinLabel& chi);

// Imprimitive monomial spin characters with n <= n_max.
std::vector<std::pair<int, CharacterRef>> monomial_imprimitive(Group group, int n_max);

// The recorded minimal triples of 3.A6, 3.A7, 6.A6 and 6.A7 (the last has
// none).
std::vector<ExceptionalRecord> exceptional_records();
std::vector<ExceptionalRecord> exceptional_records(const std::string& group);

} // namespace spinfold
