#include <doctest.h>

#include "spinfold/classification.hpp"
#include "spinfold/errors.hpp"

using namespace spinfold;

namespace {

StrictPartition sp(std::vector<int> parts) { return StrictPartition(std::move(parts)); }

} // namespace

TEST_CASE("multiplicity-free cases, pinned") {
  auto r = is_mult_free(sp({4, 3, 2, 1}), sp({2, 1}));
  REQUIRE(r.has_value());
  CHECK(*r == MultFreeCase::hook_staircase_21);

  CHECK_FALSE(is_mult_free(sp({2, 1}), sp({2, 1})).has_value());

  CHECK(*is_mult_free(sp({9, 7, 4}), sp({1})) == MultFreeCase::single_box);
  CHECK(*is_mult_free(sp({1}), sp({9, 7, 4})) == MultFreeCase::single_box);

  CHECK_FALSE(is_mult_free(sp({5, 4, 3}), sp({2})).has_value());
  CHECK(*is_mult_free(sp({5, 4, 3}), sp({3})) == MultFreeCase::fat_staircase_row);

  CHECK(*is_mult_free(sp({3, 2, 1}), sp({4})) == MultFreeCase::staircase_row);
  CHECK(*is_mult_free(sp({4}), sp({3, 2, 1})) == MultFreeCase::staircase_row);

  // (iv) needs m > 3 and opposite signs: (4,3,2,1) is even, (4,1) is odd.
  CHECK(*is_mult_free(sp({4, 3, 2, 1}), sp({4, 1})) == MultFreeCase::staircase_near_row);
  CHECK_FALSE(is_mult_free(sp({3, 2, 1}), sp({4, 1})).has_value());

  // (v) needs the staircase even: (4,3,2,1) yes, (2,1) no.
  CHECK(*is_mult_free(sp({4, 3, 2, 1}), sp({3, 2})) == MultFreeCase::staircase_double_row);
  CHECK_FALSE(is_mult_free(sp({2, 1}), sp({3, 2})).has_value());
}

TEST_CASE("multiplicity-free matches the decomposition up to weight 10") {
  for (int n = 2; n <= 10; ++n) {
    for (int l = 1; l <= n / 2; ++l) {
      for (const auto& mu : strict_partitions(l)) {
        for (const auto& nu : strict_partitions(n - l)) {
          SpinCombination c = decompose_outer_product(mu, nu);
          bool mult_free = true;
          for (const auto& [label, mult] : c.terms())
            if (mult > 1) mult_free = false;
          CHECK(mult_free == is_mult_free(mu, nu).has_value());
        }
      }
    }
  }
}

TEST_CASE("irreducible outer products") {
  auto r = irreducible_outer(sp({2, 1}), sp({1}));
  REQUIRE(r.has_value());
  CHECK(*r == sp({3, 1}));

  r = irreducible_outer(sp({3, 2, 1}), sp({1}));
  REQUIRE(r.has_value());
  CHECK(*r == sp({4, 2, 1}));
  CHECK(r->sigma() == Parity::even);

  CHECK_FALSE(irreducible_outer(sp({4, 3, 2, 1}), sp({1})).has_value());
  CHECK_FALSE(irreducible_outer(sp({2, 1}), sp({2, 1})).has_value());
  CHECK(irreducible_outer(sp({1}), sp({2, 1})).has_value());
}

TEST_CASE("irreducible outer agrees with the decomposition for n up to 13") {
  StrictPartition box({1});
  for (int n = 4; n <= 13; ++n) {
    for (const auto& mu : strict_partitions(n - 1)) {
      auto predicted = irreducible_outer(mu, box);
      auto collapsed = decompose_outer_product(mu, box).collapsed();
      bool irreducible = collapsed.size() == 1 && collapsed.begin()->second == 1 &&
                         collapsed.begin()->first.sigma() == Parity::even;
      CHECK(predicted.has_value() == irreducible);
      if (predicted && irreducible) CHECK(*predicted == collapsed.begin()->first);
    }
  }
}

TEST_CASE("splitting classes") {
  CHECK(splits(Partition({3, 1, 1}), Partition({5})));
  CHECK(splits(Partition({2, 1}), Partition({3})));
  CHECK_FALSE(splits(Partition({2, 1}), Partition({2, 1})));
  CHECK_FALSE(splits(Partition({2, 2}), Partition({4})));
  CHECK_THROWS_AS((void)splits(Partition({2}), Partition({3})), Error);

  for (int m = 1; m <= 10; ++m) {
    long long d = static_cast<long long>(strict_partitions(m).size());
    long long dp = static_cast<long long>(strict_partitions(m, Parity::even).size());
    long long dm = static_cast<long long>(strict_partitions(m, Parity::odd).size());
    CHECK(splitting_class_count(m) == d * d + 2 * dp * dm);
  }
}

TEST_CASE("swap action on classes") {
  // m even: swap only.
  ClassParam c{Partition({3, 1}), Partition({2, 2}), SplitIndex::none};
  ClassParam swapped = tau_on_class(c, 4);
  CHECK(swapped.pi == Partition({2, 2}));
  CHECK(swapped.mu == Partition({3, 1}));
  CHECK(swapped.index == SplitIndex::none);

  ClassParam even_split{Partition({3, 1}), Partition({1, 1, 1, 1}), SplitIndex::one};
  CHECK(tau_on_class(even_split, 4).index == SplitIndex::one);

  // m odd, mixed signs: the index flips.
  ClassParam mixed{Partition({2, 1}), Partition({3}), SplitIndex::one};
  ClassParam t = tau_on_class(mixed, 3);
  CHECK(t.pi == Partition({3}));
  CHECK(t.mu == Partition({2, 1}));
  CHECK(t.index == SplitIndex::two);

  // m odd, odd-type pair: the index stays.
  ClassParam odd_pair{Partition({3}), Partition({3}), SplitIndex::one};
  CHECK(tau_on_class(odd_pair, 3).index == SplitIndex::one);

  CHECK_THROWS_AS((void)tau_on_class(ClassParam{Partition({2, 1}), Partition({2, 1}), SplitIndex::one}, 3),
                  Error);

  // Involution on split classes.
  for (int m = 1; m <= 8; ++m) {
    for (const auto& pi : all_partitions(m)) {
      for (const auto& mu : all_partitions(m)) {
        if (!splits(pi, mu)) continue;
        for (SplitIndex idx : {SplitIndex::one, SplitIndex::two}) {
          ClassParam x{pi, mu, idx};
          CHECK(tau_on_class(tau_on_class(x, m), m) == x);
        }
      }
    }
  }
}

TEST_CASE("swap action on characters") {
  CliffordProductLabel mixed(SpinLabel::of(sp({3})), SpinLabel::of(sp({2, 1})));
  auto even_m = tau_on_character(mixed, 3);
  CHECK(even_m.label.left() == SpinLabel::of(sp({2, 1})));
  CHECK(even_m.label.right() == SpinLabel::of(sp({3})));
  CHECK(even_m.associate);
  CHECK_FALSE(tau_on_character(mixed, 3).names_same_character_as(mixed));

  CliffordProductLabel diag(SpinLabel::of(sp({2, 1})), SpinLabel::of(sp({2, 1})));
  CHECK(tau_on_character(diag, 3).names_same_character_as(diag));

  CliffordProductLabel even_diag(SpinLabel::of(sp({4, 2})), SpinLabel::of(sp({4, 2})));
  CHECK(tau_on_character(even_diag, 6).names_same_character_as(even_diag));
  CHECK_FALSE(tau_on_character(even_diag, 6).associate);

  // Fixed points over all pairs of equal weight are exactly the diagonal.
  for (int m = 1; m <= 8; ++m) {
    for (const auto& mu : strict_partitions(m)) {
      for (const auto& nu : strict_partitions(m)) {
        CliffordProductLabel x(SpinLabel::of(mu), SpinLabel::of(nu));
        CHECK(tau_on_character(x, m).names_same_character_as(x) == (mu == nu));
        CHECK(is_tau_invariant(mu, nu) == (mu == nu));
      }
    }
  }
}

TEST_CASE("outer squares have repeated or non-associate constituents") {
  // Except for the two recorded shapes, the square has two non-associate
  // constituents or one of multiplicity at least four.
  for (int m = 2; m <= 7; ++m) {
    for (const auto& mu : strict_partitions(m)) {
      SpinCombination square = decompose_outer_product(mu, mu);
      auto collapsed = square.collapsed();
      bool two_non_associate = collapsed.size() >= 2;
      bool mult_four = false;
      for (const auto& [label, mult] : square.terms())
        if (mult >= 4) mult_four = true;
      bool exceptional = mu == sp({2, 1}) || mu == sp({3, 2, 1});
      CHECK((two_non_associate || mult_four || exceptional));
      if (exceptional) {
        CHECK_FALSE(two_non_associate);
        CHECK_FALSE(mult_four);
      }
    }
  }
}

TEST_CASE("wreath inductions") {
  auto sn = wreath_irreducible(sp({2, 1}), Group::sn);
  REQUIRE(sn.has_value());
  REQUIRE(sn->size() == 1);
  CHECK(std::get<SpinLabel>((*sn)[0]) == SpinLabel::of(sp({4, 2})));

  auto an = wreath_irreducible(sp({2, 1}), Group::an);
  REQUIRE(an.has_value());
  REQUIRE(an->size() == 2);
  CHECK(std::get<AnSpinLabel>((*an)[0]).degree() == BigInt(10));

  CHECK_FALSE(wreath_irreducible(sp({3, 2, 1}), Group::sn).has_value());
  CHECK_FALSE(wreath_irreducible(sp({3}), Group::sn).has_value());
  for (int m = 1; m <= 6; ++m)
    for (const auto& mu : strict_partitions(m))
      CHECK(wreath_irreducible(mu, Group::sn).has_value() == (mu == sp({2, 1})));
}

TEST_CASE("index-squared reducibility bound") {
  CHECK(index_square_reducible(BigInt(120), BigInt(10)));
  CHECK_FALSE(index_square_reducible(BigInt(120), BigInt(60)));
  BigInt order_s9_cover = BigInt(2) * BigInt::factorial(9);
  CHECK_FALSE(index_square_reducible(order_s9_cover, BigInt(2) * BigInt(1512)));
  CHECK_THROWS_AS((void)index_square_reducible(BigInt(120), BigInt(7)), Error);
}

TEST_CASE("block stabilizers") {
  auto s = block_stabilizers(Group::sn, SpinLabel::of(sp({3, 1})));
  REQUIRE(s.size() == 2);
  CHECK(s[0].name == "A~4");
  CHECK(s[1].name == "S~3");

  s = block_stabilizers(Group::sn, SpinLabel::of(sp({4, 2})));
  REQUIRE(s.size() == 2);
  CHECK(s[0].name == "A~6");
  CHECK(s[1].name == "3^2:Q8:2");

  s = block_stabilizers(Group::sn, SpinLabel::of(sp({6, 2, 1})));
  REQUIRE(s.size() == 2);
  CHECK(s[1].name == "2xL2(8):3");

  CHECK(block_stabilizers(Group::sn, SpinLabel::of(sp({2, 1}))).empty());
  CHECK(block_stabilizers(Group::sn, SpinLabel::of(sp({6, 2}))).size() == 1);

  // Alternating side: the bumped staircases with m = 0,1 (mod 4).
  auto a = block_stabilizers(Group::an, AnSpinLabel(sp({5, 3, 2, 1}), Half::whole));
  REQUIRE(a.size() == 1);
  CHECK(a[0].name == "A~10");
  CHECK(block_stabilizers(Group::an, AnSpinLabel(sp({3, 1}), Half::plus)).empty());
  CHECK(block_stabilizers(Group::an, AnSpinLabel(sp({4, 2}), Half::plus)).size() == 1);
  CHECK(block_stabilizers(Group::an, AnSpinLabel(sp({4, 2}), Half::plus))[0].name == "3^2:8");
  CHECK(block_stabilizers(Group::an, AnSpinLabel(sp({6, 2, 1}), Half::minus))[0].name ==
        "2xL2(8):3");
  CHECK(block_stabilizers(Group::an, AnSpinLabel(sp({3, 2, 1}), Half::whole)).empty());
}

TEST_CASE("monomial lists") {
  auto sn = monomial_imprimitive(Group::sn, 9);
  REQUIRE(sn.size() == 3);
  CHECK(sn[0].first == 4);
  CHECK(std::get<SpinLabel>(sn[0].second) == SpinLabel::of(sp({3, 1})));
  CHECK(sn[1].first == 6);
  CHECK(sn[2].first == 9);

  auto truncated = monomial_imprimitive(Group::sn, 5);
  REQUIRE(truncated.size() == 1);
  CHECK(truncated[0].first == 4);

  auto an = monomial_imprimitive(Group::an, 9);
  REQUIRE(an.size() == 2);
  CHECK(an[0].first == 6);
  CHECK(std::get<EitherHalf>(an[0].second).shape == sp({4, 2}));
  CHECK(an[1].first == 9);

  CHECK_THROWS_AS((void)monomial_imprimitive(Group::sn, 3), Error);
}

TEST_CASE("exceptional records") {
  CHECK(exceptional_records("6.A7").empty());
  auto a6 = exceptional_records("3.A6");
  REQUIRE(a6.size() == 2);
  CHECK(a6[0].stabilizer == "3xA~5");
  CHECK(a6[1].stabilizer == "3xS4");
  CHECK(a6[1].phi == "linear character of order six");
  CHECK(a6[1].chi.find("chi18") != std::string::npos);

  auto sixa6 = exceptional_records("6.A6");
  REQUIRE(sixa6.size() == 1);
  CHECK(sixa6[0].stabilizer == "3xA~5");
  CHECK(sixa6[0].phi.find("degree two") != std::string::npos);
  CHECK(sixa6[0].chi.find("chi21 or chi22") != std::string::npos);

  CHECK(exceptional_records("3.A7").size() == 3);
  CHECK(exceptional_records().size() == 6);
  CHECK_THROWS_AS((void)exceptional_records("5.A6"), Error);
}

TEST_CASE("minimal triples, pinned small cases") {
  auto sn4 = minimal_triples(Group::sn, 4);
  REQUIRE(sn4.size() == 2);
  CHECK(sn4[0].stabilizer.name == "A~4");
  CHECK(std::get<EitherHalf>(sn4[0].inducing).shape == sp({3, 1}));
  CHECK(std::get<SpinLabel>(sn4[0].induced) == SpinLabel::of(sp({3, 1})));
  CHECK(sn4[1].stabilizer.name == "S~3");
  CHECK(std::get<SpinLabel>(sn4[1].inducing) == SpinLabel::of(sp({2, 1})));
  CHECK(std::get<SpinLabel>(sn4[1].induced) == SpinLabel::of(sp({3, 1})));

  auto sn6 = minimal_triples(Group::sn, 6);
  REQUIRE(sn6.size() == 2);
  CHECK(std::get<SpinLabel>(sn6[0].induced) == SpinLabel::of(sp({5, 1})));
  CHECK(sn6[1].stabilizer.name == "3^2:8");
  CHECK(std::get<SpinLabel>(sn6[1].induced) == SpinLabel::of(sp({4, 2})));

  CHECK(minimal_triples(Group::an, 7).empty());

  auto an11 = minimal_triples(Group::an, 11);
  REQUIRE(an11.size() == 1);
  CHECK(an11[0].stabilizer.name == "A~10");
  CHECK(std::get<EitherHalf>(an11[0].inducing).shape == sp({4, 3, 2, 1}));
  auto chi = std::get<AnSpinLabel>(an11[0].induced);
  CHECK(chi.shape() == sp({5, 3, 2, 1}));
  CHECK(chi.half() == Half::whole);
  CHECK(chi.shape().sigma() == Parity::odd);

  CHECK_THROWS_AS((void)minimal_triples(Group::sn, 3), Error);
}

TEST_CASE("minimal triple degree identity") {
  for (int n = 4; n <= 13; ++n) {
    for (Group g : {Group::sn, Group::an}) {
      for (const auto& t : minimal_triples(g, n)) {
        auto phi_deg = character_degree(t.inducing);
        auto chi_deg = character_degree(t.induced);
        REQUIRE(phi_deg.has_value());
        REQUIRE(chi_deg.has_value());
        REQUIRE(t.stabilizer.index.has_value());
        CHECK(*chi_deg == *phi_deg * *t.stabilizer.index);
      }
    }
  }
}
