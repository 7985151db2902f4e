#include "bijectlab/io_json.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace bijectlab::io {

using nlohmann::json;

namespace {

using deals::Color;

struct CardRef {
  int denom;
  Color color;  // the card's own color
};

bool card_less(const CardRef& a, const CardRef& b) {
  if (a.denom != b.denom) return a.denom < b.denom;
  return static_cast<int>(a.color) < static_cast<int>(b.color);
}

CardRef parse_card_token(const std::string& token) {
  if (token.size() < 2) {
    throw std::invalid_argument("bad card token: " + token);
  }
  const std::string digits = token.substr(0, token.size() - 1);
  if (!std::all_of(digits.begin(), digits.end(),
                   [](char ch) { return ch >= '0' && ch <= '9'; }) ||
      digits[0] == '0') {
    throw std::invalid_argument("bad card token: " + token);
  }
  CardRef card;
  card.denom = std::stoi(digits);
  card.color = deals::color_from_letter(token.back());
  return card;
}

}  // namespace

json deal_to_json(const deals::Deal& deal) {
  std::array<std::vector<CardRef>, 3> hands;  // indexed by holding player
  for (std::size_t i = 0; i < deal.dealt.size(); ++i) {
    const int denom = deal.dealt[i];
    const deals::HolderTriple& t = deal.holders[i];
    hands[static_cast<int>(t.red_card)].push_back({denom, Color::Red});
    hands[static_cast<int>(t.green_card)].push_back({denom, Color::Green});
    hands[static_cast<int>(t.blue_card)].push_back({denom, Color::Blue});
  }
  json hands_json;
  for (Color player : {Color::Red, Color::Green, Color::Blue}) {
    std::vector<CardRef>& hand = hands[static_cast<int>(player)];
    std::sort(hand.begin(), hand.end(), card_less);
    json tokens = json::array();
    for (const CardRef& card : hand) {
      tokens.push_back(deals::card_token(card.denom, card.color));
    }
    switch (player) {
      case Color::Red: hands_json["red"] = tokens; break;
      case Color::Green: hands_json["green"] = tokens; break;
      case Color::Blue: hands_json["blue"] = tokens; break;
    }
  }
  return json{{"n", deal.n},
              {"kind", deals::kind_name(deals::most_specific_kind(deal))},
              {"dealt", deal.dealt},
              {"hands", hands_json}};
}

std::pair<deals::Deal, deals::DealKind> deal_from_json(const json& j) {
  deals::Deal deal;
  deal.n = j.at("n").get<int>();
  if (deal.n < 0) throw std::invalid_argument("deal n must be nonnegative");
  deal.dealt = j.at("dealt").get<std::vector<int>>();
  std::sort(deal.dealt.begin(), deal.dealt.end());
  if (std::adjacent_find(deal.dealt.begin(), deal.dealt.end()) != deal.dealt.end()) {
    throw std::invalid_argument("duplicate dealt denomination");
  }
  for (int d : deal.dealt) {
    if (d < 1 || d > deal.n) {
      throw std::invalid_argument("dealt denomination out of [1..n]: " +
                                  std::to_string(d));
    }
  }

  // (denom, card color) -> holding player; every card of every dealt
  // denomination must appear exactly once across the three hands.
  std::map<std::pair<int, int>, Color> holder_of;
  const json& hands = j.at("hands");
  for (auto [key, player] : {std::pair<const char*, Color>{"red", Color::Red},
                             {"green", Color::Green},
                             {"blue", Color::Blue}}) {
    if (!hands.contains(key)) continue;
    for (const auto& token : hands.at(key)) {
      const CardRef card = parse_card_token(token.get<std::string>());
      const auto map_key = std::make_pair(card.denom, static_cast<int>(card.color));
      if (holder_of.count(map_key)) {
        throw std::invalid_argument("card dealt twice: " +
                                    deals::card_token(card.denom, card.color));
      }
      holder_of[map_key] = player;
    }
  }

  deal.holders.resize(deal.dealt.size());
  std::size_t consumed = 0;
  for (std::size_t i = 0; i < deal.dealt.size(); ++i) {
    const int denom = deal.dealt[i];
    deals::HolderTriple triple{};
    for (Color card_color : {Color::Red, Color::Green, Color::Blue}) {
      const auto it = holder_of.find({denom, static_cast<int>(card_color)});
      if (it == holder_of.end()) {
        throw std::invalid_argument("missing card: " +
                                    deals::card_token(denom, card_color));
      }
      ++consumed;
      switch (card_color) {
        case Color::Red: triple.red_card = it->second; break;
        case Color::Green: triple.green_card = it->second; break;
        case Color::Blue: triple.blue_card = it->second; break;
      }
    }
    deal.holders[i] = triple;
  }
  if (consumed != holder_of.size()) {
    throw std::invalid_argument("hands contain cards of undealt denominations");
  }
  return {deal, deals::kind_from_name(j.at("kind").get<std::string>())};
}

json matrix_to_json(const matrices::TwoRowMatrix& m) {
  return json{{"n", m.n}, {"top", m.top}, {"bottom", m.bottom}};
}

matrices::TwoRowMatrix matrix_from_json(const json& j) {
  matrices::TwoRowMatrix m = matrices::make_matrix(
      j.at("top").get<std::string>(), j.at("bottom").get<std::string>());
  if (j.contains("n") && j.at("n").get<int>() != m.n) {
    throw std::invalid_argument("matrix n disagrees with row length");
  }
  return m;
}

json path_to_json(const paths::HannaPath& p) {
  return json{{"n", p.n()}, {"steps", paths::path_to_string(p)}};
}

paths::HannaPath path_from_json(const json& j) {
  paths::HannaPath p = paths::path_from_string(j.at("steps").get<std::string>());
  if (j.contains("n") && j.at("n").get<int>() != p.n()) {
    throw std::invalid_argument("path n disagrees with step count");
  }
  return p;
}

}  // namespace bijectlab::io
