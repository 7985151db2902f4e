#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bijectlab::deals {

enum class Color { Red, Green, Blue };

char color_letter(Color c);
Color color_from_letter(char ch);  // throws std::invalid_argument

// Who holds each card of one dealt denomination. Color-avoidance means
// red_card != Red, green_card != Green, blue_card != Blue; the enumerator
// only produces avoiding triples, but the fields are unconstrained so that
// deserialized deals can be validated rather than rejected at construction.
struct HolderTriple {
  Color red_card;
  Color green_card;
  Color blue_card;

  bool operator==(const HolderTriple&) const = default;
};

enum class DealKind { Barrucand, Franel, Hanna };

std::string kind_name(DealKind kind);
DealKind kind_from_name(const std::string& name);  // throws std::invalid_argument

// A deal of the cards of the chosen denominations. `dealt` is sorted
// ascending; `holders[i]` covers the three cards of denomination dealt[i].
struct Deal {
  int n = 0;
  std::vector<int> dealt;
  std::vector<HolderTriple> holders;

  bool operator==(const Deal&) const = default;
};

// Checks every invariant of the kind; returns the name of the first violated
// constraint, or nullopt when the deal is valid. Check order: structure
// ("dealt-out-of-range", "dealt-not-sorted", "holders-size"), then
// "color-avoidance", then hand sizes ("hand-size-red", "hand-size-green",
// "hand-size-blue"), then "not-all-dealt" for Franel.
std::optional<std::string> validate_deal(const Deal& deal, DealKind kind);

// Hand sizes: {red, green, blue} card counts.
struct HandSizes {
  int red = 0;
  int green = 0;
  int blue = 0;
};
HandSizes hand_sizes(const Deal& deal);

// Total number of cards in red's hand (k of the Barrucand/Franel sums).
int stat_cards_in_red(const Deal& deal);
// Distinct denominations among red's cards.
int stat_distinct_denoms_red(const Deal& deal);
// Green cards held by red (j of the Barrucand left side).
int stat_green_in_red(const Deal& deal);
// Red cards held by blue.
int stat_red_in_blue(const Deal& deal);
// Blue cards held by green (equals the two stats above on Barrucand deals).
int stat_blue_in_green(const Deal& deal);

// Exhaustive bound for enumeration; past it the raw search space 9^n stops
// being a few million candidates.
inline constexpr int kMaxEnumerationN = 7;

// Visits every valid deal of the kind exactly once. Order: denomination
// subsets in lexicographic order (as sorted sequences, empty set first), then
// holder triples in lexicographic order over (red card, green card, blue
// card) holders with Color order R < G < B, denomination by denomination.
// Throws std::domain_error past kMaxEnumerationN.
void for_each_deal(int n, DealKind kind,
                   const std::function<void(const Deal&)>& visit);

std::vector<Deal> enumerate_deals(int n, DealKind kind);

// Most specific kind the deal satisfies: Franel > Barrucand > Hanna. Falls
// back to Hanna even when the Hanna size constraint fails (used only to
// label serialized output).
DealKind most_specific_kind(const Deal& deal);

// "2G" style card token: denomination digits then one of R/G/B.
std::string card_token(int denom, Color c);

}  // namespace bijectlab::deals
