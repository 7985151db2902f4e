#include "bijectlab/deals.hpp"

#include <algorithm>
#include <stdexcept>

namespace bijectlab::deals {

char color_letter(Color c) {
  switch (c) {
    case Color::Red: return 'R';
    case Color::Green: return 'G';
    case Color::Blue: return 'B';
  }
  return '?';
}

Color color_from_letter(char ch) {
  switch (ch) {
    case 'R': return Color::Red;
    case 'G': return Color::Green;
    case 'B': return Color::Blue;
    default:
      throw std::invalid_argument(std::string("unknown color letter: ") + ch);
  }
}

std::string kind_name(DealKind kind) {
  switch (kind) {
    case DealKind::Barrucand: return "barrucand";
    case DealKind::Franel: return "franel";
    case DealKind::Hanna: return "hanna";
  }
  return "?";
}

DealKind kind_from_name(const std::string& name) {
  if (name == "barrucand") return DealKind::Barrucand;
  if (name == "franel") return DealKind::Franel;
  if (name == "hanna") return DealKind::Hanna;
  throw std::invalid_argument("unknown deal kind: " + name);
}

std::string card_token(int denom, Color c) {
  return std::to_string(denom) + color_letter(c);
}

HandSizes hand_sizes(const Deal& deal) {
  HandSizes sizes;
  for (const HolderTriple& t : deal.holders) {
    for (Color holder : {t.red_card, t.green_card, t.blue_card}) {
      switch (holder) {
        case Color::Red: ++sizes.red; break;
        case Color::Green: ++sizes.green; break;
        case Color::Blue: ++sizes.blue; break;
      }
    }
  }
  return sizes;
}

std::optional<std::string> validate_deal(const Deal& deal, DealKind kind) {
  for (int d : deal.dealt) {
    if (d < 1 || d > deal.n) return "dealt-out-of-range";
  }
  if (!std::is_sorted(deal.dealt.begin(), deal.dealt.end()) ||
      std::adjacent_find(deal.dealt.begin(), deal.dealt.end()) != deal.dealt.end()) {
    return "dealt-not-sorted";
  }
  if (deal.holders.size() != deal.dealt.size()) return "holders-size";
  for (const HolderTriple& t : deal.holders) {
    if (t.red_card == Color::Red || t.green_card == Color::Green ||
        t.blue_card == Color::Blue) {
      return "color-avoidance";
    }
  }
  const int dealt_count = static_cast<int>(deal.dealt.size());
  const HandSizes sizes = hand_sizes(deal);
  if (sizes.red != dealt_count) return "hand-size-red";
  if (kind != DealKind::Hanna) {
    if (sizes.green != dealt_count) return "hand-size-green";
    if (sizes.blue != dealt_count) return "hand-size-blue";
  }
  if (kind == DealKind::Franel && dealt_count != deal.n) return "not-all-dealt";
  return std::nullopt;
}

int stat_cards_in_red(const Deal& deal) {
  int count = 0;
  for (const HolderTriple& t : deal.holders) {
    count += (t.green_card == Color::Red) + (t.blue_card == Color::Red);
  }
  return count;
}

int stat_distinct_denoms_red(const Deal& deal) {
  int count = 0;
  for (const HolderTriple& t : deal.holders) {
    count += (t.green_card == Color::Red || t.blue_card == Color::Red);
  }
  return count;
}

int stat_green_in_red(const Deal& deal) {
  int count = 0;
  for (const HolderTriple& t : deal.holders) count += t.green_card == Color::Red;
  return count;
}

int stat_red_in_blue(const Deal& deal) {
  int count = 0;
  for (const HolderTriple& t : deal.holders) count += t.red_card == Color::Blue;
  return count;
}

int stat_blue_in_green(const Deal& deal) {
  int count = 0;
  for (const HolderTriple& t : deal.holders) count += t.blue_card == Color::Green;
  return count;
}

namespace {

// Color-avoiding holder triples in lexicographic order over
// (red card, green card, blue card) holders, R < G < B.
constexpr HolderTriple kAvoidingTriples[8] = {
    {Color::Green, Color::Red, Color::Red},
    {Color::Green, Color::Red, Color::Green},
    {Color::Green, Color::Blue, Color::Red},
    {Color::Green, Color::Blue, Color::Green},
    {Color::Blue, Color::Red, Color::Red},
    {Color::Blue, Color::Red, Color::Green},
    {Color::Blue, Color::Blue, Color::Red},
    {Color::Blue, Color::Blue, Color::Green},
};

bool sizes_ok(const Deal& deal, DealKind kind) {
  const int dealt_count = static_cast<int>(deal.dealt.size());
  const HandSizes sizes = hand_sizes(deal);
  if (sizes.red != dealt_count) return false;
  if (kind != DealKind::Hanna &&
      (sizes.green != dealt_count || sizes.blue != dealt_count)) {
    return false;
  }
  return true;
}

void fill_holders(Deal& deal, std::size_t pos, DealKind kind,
                  const std::function<void(const Deal&)>& visit) {
  if (pos == deal.dealt.size()) {
    if (sizes_ok(deal, kind)) visit(deal);
    return;
  }
  for (const HolderTriple& t : kAvoidingTriples) {
    deal.holders[pos] = t;
    fill_holders(deal, pos + 1, kind, visit);
  }
}

// Subsets of [1..n] as sorted sequences in lexicographic order:
// {} < {1} < {1,2} < ... < {1,..,n} < {1,..,n-1,n}... i.e. grow-then-advance.
void visit_subsets(int n, std::vector<int>& subset,
                   const std::function<void(const std::vector<int>&)>& visit) {
  visit(subset);
  const int lo = subset.empty() ? 1 : subset.back() + 1;
  for (int next = lo; next <= n; ++next) {
    subset.push_back(next);
    visit_subsets(n, subset, visit);
    subset.pop_back();
  }
}

}  // namespace

void for_each_deal(int n, DealKind kind,
                   const std::function<void(const Deal&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_deal: n must be nonnegative");
  if (n > kMaxEnumerationN) {
    throw std::domain_error("for_each_deal: exhaustive bound " +
                            std::to_string(kMaxEnumerationN) + " exceeded");
  }
  std::vector<int> subset;
  visit_subsets(n, subset, [&](const std::vector<int>& dealt) {
    if (kind == DealKind::Franel && static_cast<int>(dealt.size()) != n) return;
    Deal deal;
    deal.n = n;
    deal.dealt = dealt;
    deal.holders.resize(dealt.size());
    fill_holders(deal, 0, kind, visit);
  });
}

std::vector<Deal> enumerate_deals(int n, DealKind kind) {
  std::vector<Deal> result;
  for_each_deal(n, kind, [&](const Deal& d) { result.push_back(d); });
  return result;
}

DealKind most_specific_kind(const Deal& deal) {
  if (!validate_deal(deal, DealKind::Franel)) return DealKind::Franel;
  if (!validate_deal(deal, DealKind::Barrucand)) return DealKind::Barrucand;
  return DealKind::Hanna;
}

}  // namespace bijectlab::deals
