#include <doctest.h>

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bijectlab/deals.hpp"

using namespace bijectlab::deals;

namespace {

// The n = 5 deal used as the running example across the bijection tests:
// red holds 2G 2B 4B 5G, green holds 1B 2R 4R 5B, blue holds 1G 1R 4G 5R.
Deal worked_example() {
  return Deal{5,
              {1, 2, 4, 5},
              {{Color::Blue, Color::Blue, Color::Green},
               {Color::Green, Color::Red, Color::Red},
               {Color::Green, Color::Blue, Color::Red},
               {Color::Blue, Color::Red, Color::Green}}};
}

}  // namespace

TEST_CASE("color and kind names round-trip") {
  CHECK(color_letter(Color::Red) == 'R');
  CHECK(color_from_letter('B') == Color::Blue);
  CHECK_THROWS_AS((void)color_from_letter('X'), std::invalid_argument);
  CHECK(kind_name(DealKind::Barrucand) == "barrucand");
  CHECK(kind_from_name("hanna") == DealKind::Hanna);
  CHECK_THROWS_AS((void)kind_from_name("motzkin"), std::invalid_argument);
  CHECK(card_token(2, Color::Green) == "2G");
  CHECK(card_token(11, Color::Red) == "11R");
}

TEST_CASE("validate_deal accepts the worked example") {
  const Deal deal = worked_example();
  CHECK(validate_deal(deal, DealKind::Hanna) == std::nullopt);
  CHECK(validate_deal(deal, DealKind::Barrucand) == std::nullopt);
  CHECK(validate_deal(deal, DealKind::Franel) == "not-all-dealt");
  CHECK(most_specific_kind(deal) == DealKind::Barrucand);
}

TEST_CASE("validate_deal names the first violated constraint") {
  const HolderTriple ok{Color::Green, Color::Blue, Color::Red};
  CHECK(validate_deal({1, {2}, {ok}}, DealKind::Hanna) == "dealt-out-of-range");
  CHECK(validate_deal({2, {2, 1}, {ok, ok}}, DealKind::Hanna) ==
        "dealt-not-sorted");
  CHECK(validate_deal({2, {1}, {}}, DealKind::Hanna) == "holders-size");
  CHECK(validate_deal({1, {1}, {{Color::Red, Color::Blue, Color::Red}}},
                      DealKind::Hanna) == "color-avoidance");
  // red ends up empty-handed although one denomination is dealt
  CHECK(validate_deal({1, {1}, {{Color::Green, Color::Blue, Color::Green}}},
                      DealKind::Hanna) == "hand-size-red");
  // red's hand is fine but green grabbed both remaining cards
  CHECK(validate_deal({1, {1}, {{Color::Green, Color::Red, Color::Green}}},
                      DealKind::Barrucand) == "hand-size-green");
  CHECK(validate_deal({1, {1}, {{Color::Green, Color::Red, Color::Green}}},
                      DealKind::Hanna) == std::nullopt);
}

TEST_CASE("hand sizes and statistics of the worked example") {
  const Deal deal = worked_example();
  const HandSizes sizes = hand_sizes(deal);
  CHECK(sizes.red == 4);
  CHECK(sizes.green == 4);
  CHECK(sizes.blue == 4);
  CHECK(stat_cards_in_red(deal) == 4);
  CHECK(stat_distinct_denoms_red(deal) == 3);
  CHECK(stat_green_in_red(deal) == 2);
  CHECK(stat_red_in_blue(deal) == 2);
  CHECK(stat_blue_in_green(deal) == 2);
}

TEST_CASE("enumeration counts match the closed forms") {
  const std::vector<long long> barrucand{1, 3, 15, 93, 639, 4653};
  const std::vector<long long> franel{1, 2, 10, 56, 346, 2252};
  const std::vector<long long> hanna{1, 5, 33, 245, 1921};
  for (int n = 0; n < 6; ++n) {
    CHECK(enumerate_deals(n, DealKind::Barrucand).size() ==
          static_cast<std::size_t>(barrucand[n]));
    CHECK(enumerate_deals(n, DealKind::Franel).size() ==
          static_cast<std::size_t>(franel[n]));
  }
  for (int n = 0; n < 5; ++n) {
    CHECK(enumerate_deals(n, DealKind::Hanna).size() ==
          static_cast<std::size_t>(hanna[n]));
  }
}

TEST_CASE("enumeration order is frozen") {
  // Subsets lexicographic, then holder triples lexicographic with R < G < B.
  const auto barrucand1 = enumerate_deals(1, DealKind::Barrucand);
  REQUIRE(barrucand1.size() == 3);
  CHECK(barrucand1[0] == Deal{1, {}, {}});
  CHECK(barrucand1[1] ==
        Deal{1, {1}, {{Color::Green, Color::Blue, Color::Red}}});
  CHECK(barrucand1[2] ==
        Deal{1, {1}, {{Color::Blue, Color::Red, Color::Green}}});

  const auto hanna1 = enumerate_deals(1, DealKind::Hanna);
  REQUIRE(hanna1.size() == 5);
  CHECK(hanna1[0] == Deal{1, {}, {}});
  CHECK(hanna1[1] == Deal{1, {1}, {{Color::Green, Color::Red, Color::Green}}});
  CHECK(hanna1[2] == Deal{1, {1}, {{Color::Green, Color::Blue, Color::Red}}});
  CHECK(hanna1[3] == Deal{1, {1}, {{Color::Blue, Color::Red, Color::Green}}});
  CHECK(hanna1[4] == Deal{1, {1}, {{Color::Blue, Color::Blue, Color::Red}}});

  const auto barrucand2 = enumerate_deals(2, DealKind::Barrucand);
  REQUIRE(barrucand2.size() == 15);
  CHECK(barrucand2[0].dealt.empty());
  CHECK(barrucand2[1].dealt == std::vector<int>{1});
  CHECK(barrucand2[3].dealt == std::vector<int>{1, 2});
  CHECK(barrucand2[14].dealt == std::vector<int>{2});
}

TEST_CASE("every Franel deal is Barrucand, every Barrucand deal is Hanna") {
  for (int n = 0; n <= 3; ++n) {
    for (const Deal& deal : enumerate_deals(n, DealKind::Franel)) {
      CHECK(validate_deal(deal, DealKind::Barrucand) == std::nullopt);
    }
    for (const Deal& deal : enumerate_deals(n, DealKind::Barrucand)) {
      CHECK(validate_deal(deal, DealKind::Hanna) == std::nullopt);
    }
  }
}

TEST_CASE("joint distribution of red-hand statistics at n = 2") {
  std::map<std::pair<int, int>, int> by_cards_green;
  std::map<int, int> by_green;
  std::map<int, int> by_distinct;
  for (const Deal& deal : enumerate_deals(2, DealKind::Barrucand)) {
    ++by_cards_green[{stat_cards_in_red(deal), stat_green_in_red(deal)}];
  }
  for (const Deal& deal : enumerate_deals(2, DealKind::Franel)) {
    ++by_green[stat_green_in_red(deal)];
    ++by_distinct[stat_distinct_denoms_red(deal)];
  }
  const std::map<std::pair<int, int>, int> expected_joint{
      {{0, 0}, 1}, {{1, 0}, 2}, {{1, 1}, 2},
      {{2, 0}, 1}, {{2, 1}, 8}, {{2, 2}, 1}};
  CHECK(by_cards_green == expected_joint);
  CHECK(by_green == std::map<int, int>{{0, 1}, {1, 8}, {2, 1}});
  CHECK(by_distinct == std::map<int, int>{{1, 4}, {2, 6}});
}

TEST_CASE("enumeration bounds") {
  CHECK_THROWS_AS(for_each_deal(-1, DealKind::Hanna, [](const Deal&) {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      for_each_deal(kMaxEnumerationN + 1, DealKind::Hanna, [](const Deal&) {}),
      std::domain_error);
}
