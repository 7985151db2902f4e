#include "bijectlab/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace bijectlab::bijections {

using deals::Color;
using deals::Deal;
using deals::HolderTriple;
using matrices::TwoRowMatrix;
using paths::HannaPath;
using paths::Step;
using paths::StepKind;

namespace {

struct Column {
  char top;
  char bottom;
};

Column column_for_triple(const HolderTriple& t) {
  const bool red_card_with_blue = t.red_card == Color::Blue;
  if (t.green_card != Color::Red && t.blue_card != Color::Red) {
    return {'1', red_card_with_blue ? '3' : '2'};
  }
  if (t.green_card == Color::Red && t.blue_card == Color::Red) {
    return {red_card_with_blue ? '2' : '3', '1'};
  }
  if (t.green_card == Color::Red) {  // green card only
    return {red_card_with_blue ? '2' : '3', '2'};
  }
  // blue card only
  return {red_card_with_blue ? '2' : '3', '3'};
}

}  // namespace

TwoRowMatrix deal_to_matrix(const Deal& deal) {
  if (auto violation = deals::validate_deal(deal, deals::DealKind::Hanna)) {
    throw std::invalid_argument("deal_to_matrix: invalid Hanna deal: " + *violation);
  }
  TwoRowMatrix m;
  m.n = deal.n;
  m.top.assign(deal.n, '1');
  m.bottom.assign(deal.n, '1');
  std::size_t next = 0;
  for (int denom = 1; denom <= deal.n; ++denom) {
    if (next < deal.dealt.size() && deal.dealt[next] == denom) {
      const Column col = column_for_triple(deal.holders[next]);
      m.top[denom - 1] = col.top;
      m.bottom[denom - 1] = col.bottom;
      ++next;
    }
    // undealt denominations keep the (1/1) column
  }
  return m;
}

namespace {

// Card colors a player receives at a given column, straight from the
// per-player table: rows are players, entries the columns where that player
// holds the listed cards.
std::vector<Color> red_cards_at(char p, char q) {
  if (q == '1' && p != '1') return {Color::Green, Color::Blue};
  if (q == '2' && p != '1') return {Color::Green};
  if (q == '3' && p != '1') return {Color::Blue};
  return {};
}

std::vector<Color> green_cards_at(char p, char q) {
  if ((p == '1' && q == '2') || (p == '3' && q == '2')) {
    return {Color::Blue, Color::Red};
  }
  if ((p == '1' && q == '3') || (p == '2' && q == '2')) return {Color::Blue};
  if ((p == '3' && q == '1') || (p == '3' && q == '3')) return {Color::Red};
  return {};
}

std::vector<Color> blue_cards_at(char p, char q) {
  if ((p == '1' && q == '3') || (p == '2' && q == '3')) {
    return {Color::Red, Color::Green};
  }
  if ((p == '2' && q == '1') || (p == '2' && q == '2')) return {Color::Red};
  if ((p == '1' && q == '2') || (p == '3' && q == '3')) return {Color::Green};
  return {};
}

}  // namespace

Deal matrix_to_deal(const TwoRowMatrix& m) {
  const matrices::Classification cls = matrices::classify(m);
  if (!cls.is_hanna) {
    throw std::invalid_argument("matrix_to_deal: matrix is not Hanna");
  }
  Deal deal;
  deal.n = m.n;
  for (int i = 0; i < m.n; ++i) {
    const char p = m.top[i];
    const char q = m.bottom[i];
    if (p == '1' && q == '1') continue;
    HolderTriple triple{};
    for (Color card : red_cards_at(p, q)) {
      (card == Color::Green ? triple.green_card : triple.blue_card) = Color::Red;
    }
    for (Color card : green_cards_at(p, q)) {
      (card == Color::Blue ? triple.blue_card : triple.red_card) = Color::Green;
    }
    for (Color card : blue_cards_at(p, q)) {
      (card == Color::Red ? triple.red_card : triple.green_card) = Color::Blue;
    }
    deal.dealt.push_back(i + 1);
    deal.holders.push_back(triple);
  }
  return deal;
}

namespace {

constexpr Step kColumnSteps[3][3] = {
    // bottom:    1                        2                        3
    {{StepKind::Flat, 1}, {StepKind::Up, 1}, {StepKind::Up, 2}},      // top 1
    {{StepKind::Down, 1}, {StepKind::Flat, 2}, {StepKind::Flat, 3}},  // top 2
    {{StepKind::Down, 2}, {StepKind::Flat, 4}, {StepKind::Flat, 5}},  // top 3
};

}  // namespace

HannaPath matrix_to_path(const TwoRowMatrix& m) {
  if (!matrices::classify(m).is_hanna) {
    throw std::invalid_argument("matrix_to_path: matrix is not Hanna");
  }
  HannaPath p;
  p.steps.reserve(m.n);
  for (int i = 0; i < m.n; ++i) {
    p.steps.push_back(kColumnSteps[m.top[i] - '1'][m.bottom[i] - '1']);
  }
  return p;
}

TwoRowMatrix path_to_matrix(const HannaPath& p) {
  if (auto violation = paths::validate_path(p)) {
    throw std::invalid_argument("path_to_matrix: " + *violation);
  }
  TwoRowMatrix m;
  m.n = p.n();
  m.top.assign(m.n, '1');
  m.bottom.assign(m.n, '1');
  for (int i = 0; i < m.n; ++i) {
    for (int top = 0; top < 3; ++top) {
      for (int bottom = 0; bottom < 3; ++bottom) {
        if (kColumnSteps[top][bottom] == p.steps[i]) {
          m.top[i] = static_cast<char>('1' + top);
          m.bottom[i] = static_cast<char>('1' + bottom);
        }
      }
    }
  }
  return m;
}

}  // namespace bijectlab::bijections
