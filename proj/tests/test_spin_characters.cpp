#include <doctest.h>

#include "spinfold/errors.hpp"
#include "spinfold/spin_characters.hpp"

using namespace spinfold;

namespace {

StrictPartition sp(std::vector<int> parts) { return StrictPartition(std::move(parts)); }

SpinCombination combo(std::vector<std::pair<SpinLabel, long long>> terms,
                      std::vector<StrictPartition> unresolved = {}) {
  SpinCombination c;
  for (auto& [label, mult] : terms) c.add(label, mult);
  for (auto& shape : unresolved) c.add_unresolved(shape);
  return c;
}

} // namespace

TEST_CASE("label invariants") {
  CHECK(SpinLabel::of(sp({4, 2})).self_associate());
  CHECK(SpinLabel::of(sp({2, 1})).variant() == Variant::plain);
  CHECK(SpinLabel::associate_of(sp({4, 2})) == SpinLabel::of(sp({4, 2})));
  CHECK(SpinLabel::associate_of(sp({2, 1})).variant() == Variant::associate);
  CHECK(SpinLabel::of(sp({2, 1})).associate().associate() == SpinLabel::of(sp({2, 1})));
  CHECK_THROWS_AS(SpinLabel(sp({4, 2}), Variant::plain), Error);
  CHECK_THROWS_AS(SpinLabel(sp({2, 1}), Variant::selfassoc), Error);
  CHECK(SpinLabel::of(sp({6, 2, 1})).to_string(true) == "<6,2,1>");
  CHECK(SpinLabel::associate_of(sp({2, 1})).to_string(true) == "<2,1>a");
}

TEST_CASE("degrees") {
  CHECK(degree(sp({4, 2})) == BigInt(20));
  CHECK(degree(sp({6, 2, 1})) == BigInt(240));
  CHECK(degree(sp({4})) == BigInt(2));
  CHECK(degree(sp({2, 1})) == BigInt(1));
  CHECK(degree(sp({3, 1})) == BigInt(4));
  CHECK(degree(sp({5, 1})) == BigInt(16));
  CHECK(degree(sp({3, 2, 1})) == BigInt(4));
  CHECK(degree(sp({6, 4, 2})) == BigInt(7392));
  CHECK(g_lambda(sp({6, 4, 2, 1})) == BigInt(858));
}

TEST_CASE("branch_up, pinned") {
  CHECK(branch_up(SpinLabel::of(sp({2, 1}))) == combo({{SpinLabel::of(sp({3, 1})), 1}}));
  CHECK(branch_up(SpinLabel::of(sp({3, 1}))) ==
        combo({{SpinLabel::of(sp({4, 1})), 1},
               {SpinLabel::associate_of(sp({4, 1})), 1},
               {SpinLabel::of(sp({3, 2})), 1},
               {SpinLabel::associate_of(sp({3, 2})), 1}}));
  CHECK(branch_up(SpinLabel::of(sp({3, 2}))) ==
        combo({{SpinLabel::of(sp({3, 2, 1})), 1}, {SpinLabel::of(sp({4, 2})), 1}}));

  // Associate input flips the adjoined-part term only.
  auto assoc = branch_up(SpinLabel::associate_of(sp({3, 2})));
  CHECK(assoc == combo({{SpinLabel::associate_of(sp({3, 2, 1})), 1}, {SpinLabel::of(sp({4, 2})), 1}}));
}

TEST_CASE("branch degree contract") {
  for (int n = 2; n <= 12; ++n) {
    for (const auto& p : strict_partitions(n)) {
      SpinLabel x = SpinLabel::of(p);
      CHECK(branch_up(x).total_degree() == degree(p) * BigInt(n + 1));
      CHECK(branch_down(x).total_degree() == degree(p));
    }
  }
}

TEST_CASE("branch_down, pinned") {
  CHECK(branch_down(SpinLabel::of(sp({3, 1}))) ==
        combo({{SpinLabel::of(sp({2, 1})), 1},
               {SpinLabel::associate_of(sp({2, 1})), 1},
               {SpinLabel::of(sp({3})), 1}}));
  CHECK(branch_down(SpinLabel::of(sp({4}))) == combo({{SpinLabel::of(sp({3})), 1}}));
  CHECK(branch_down(SpinLabel::of(sp({2, 1}))) == combo({{SpinLabel::of(sp({2})), 1}}));
}

TEST_CASE("reciprocity") {
  for (int n = 2; n <= 9; ++n) {
    std::vector<SpinLabel> upper, lower;
    for (const auto& p : strict_partitions(n)) {
      upper.push_back(SpinLabel::of(p));
      if (p.sigma() == Parity::odd) upper.push_back(SpinLabel::associate_of(p));
    }
    for (const auto& p : strict_partitions(n - 1)) {
      lower.push_back(SpinLabel::of(p));
      if (p.sigma() == Parity::odd) lower.push_back(SpinLabel::associate_of(p));
    }
    for (const auto& x : upper) {
      auto down = branch_down(x);
      for (const auto& y : lower) CHECK(branch_up(y).multiplicity(x) == down.multiplicity(y));
    }
  }
}

TEST_CASE("clifford degrees") {
  CHECK(clifford_degree(sp({2, 1}), sp({2, 1})) == BigInt(2));
  CHECK(clifford_degree(sp({2, 1}), sp({3})) == BigInt(2));
  CHECK(clifford_degree(sp({3}), sp({3})) == BigInt(4));
}

TEST_CASE("outer products, pinned") {
  CHECK(decompose_outer_product(sp({2, 1}), sp({2, 1})) == combo({{SpinLabel::of(sp({4, 2})), 2}}));

  CHECK(decompose_outer_product(sp({3, 2, 1}), sp({3, 2, 1})) ==
        combo({{SpinLabel::of(sp({6, 4, 2})), 2}, {SpinLabel::associate_of(sp({6, 4, 2})), 2}}));

  CHECK(decompose_outer_product(sp({2, 1}), sp({3})) ==
        combo({{SpinLabel::of(sp({5, 1})), 1}, {SpinLabel::of(sp({4, 2})), 1}}, {sp({3, 2, 1})}));

  CHECK(decompose_outer_product(sp({4, 3, 2, 1}), sp({2, 1})) ==
        combo({{SpinLabel::of(sp({6, 4, 2, 1})), 1},
               {SpinLabel::associate_of(sp({6, 4, 2, 1})), 1}}));
}

TEST_CASE("outer product is symmetric") {
  for (int n = 2; n <= 8; ++n)
    for (int l = 1; l <= n / 2; ++l)
      for (const auto& mu : strict_partitions(l))
        for (const auto& nu : strict_partitions(n - l))
          CHECK(decompose_outer_product(mu, nu) == decompose_outer_product(nu, mu));
}

TEST_CASE("branch consistency with the outer product by a box") {
  StrictPartition box({1});
  for (int n = 1; n <= 11; ++n) {
    for (const auto& mu : strict_partitions(n)) {
      CHECK(decompose_outer_product(mu, box).collapsed() ==
            branch_up(SpinLabel::of(mu)).collapsed());
    }
  }
}

TEST_CASE("restriction and induction") {
  auto halves = restrict_to_an(SpinLabel::of(sp({4, 2})));
  REQUIRE(halves.size() == 2);
  CHECK(halves[0].degree() == BigInt(10));
  CHECK(halves[1].degree() == BigInt(10));
  CHECK(halves[0].half() == Half::plus);

  auto big = restrict_to_an(SpinLabel::of(sp({6, 2, 1})));
  REQUIRE(big.size() == 2);
  CHECK(big[0].degree() == BigInt(120));

  auto whole = restrict_to_an(SpinLabel::of(sp({2, 1})));
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].degree() == BigInt(1));
  CHECK(whole[0].half() == Half::whole);

  CHECK(induce_from_an(AnSpinLabel(sp({4, 2}), Half::plus)) ==
        combo({{SpinLabel::of(sp({4, 2})), 1}}));
  CHECK(induce_from_an(AnSpinLabel(sp({2, 1}), Half::whole)) ==
        combo({{SpinLabel::of(sp({2, 1})), 1}, {SpinLabel::associate_of(sp({2, 1})), 1}}));
  CHECK(induce_from_an(AnSpinLabel(sp({5, 1}), Half::plus)) ==
        combo({{SpinLabel::of(sp({5, 1})), 1}}));

  CHECK_THROWS_AS(AnSpinLabel(sp({4, 2}), Half::whole), Error);
  CHECK_THROWS_AS(AnSpinLabel(sp({2, 1}), Half::plus), Error);

  for (int n = 2; n <= 12; ++n) {
    for (const auto& p : strict_partitions(n)) {
      BigInt total;
      for (const auto& half : restrict_to_an(SpinLabel::of(p))) total += half.degree();
      CHECK(total == degree(p));
    }
  }
}

TEST_CASE("unresolved bookkeeping") {
  SpinCombination c = decompose_outer_product(sp({2, 1}), sp({3}));
  REQUIRE(c.unresolved().size() == 1);
  CHECK(*c.unresolved().begin() == sp({3, 2, 1}));
  auto collapsed = c.collapsed();
  CHECK(collapsed.at(sp({3, 2, 1})) == 1);
  CHECK(collapsed.at(sp({5, 1})) == 1);
  CHECK(c.total_degree() == BigInt(40));
  CHECK(c.to_string(true) == "<5,1> + <4,2> + <3,2,1> or <3,2,1>a");
}

TEST_CASE("clifford product label canonicalization") {
  CliffordProductLabel both_odd(SpinLabel::associate_of(sp({2, 1})), SpinLabel::of(sp({2, 1})));
  CHECK(both_odd.left().variant() == Variant::plain);
  CHECK(both_odd.right().variant() == Variant::plain);
  CliffordProductLabel mixed(SpinLabel::associate_of(sp({2, 1})), SpinLabel::of(sp({3})));
  CHECK(mixed.left().variant() == Variant::associate);
}
