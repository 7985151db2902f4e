#include "bijectlab/paths.hpp"

#include <algorithm>
#include <stdexcept>

namespace bijectlab::paths {

namespace {

char kind_letter(StepKind kind) {
  switch (kind) {
    case StepKind::Up: return 'U';
    case StepKind::Down: return 'D';
    case StepKind::Flat: return 'F';
  }
  return '?';
}

int max_label(StepKind kind) { return kind == StepKind::Flat ? 5 : 2; }

}  // namespace

std::optional<std::string> validate_path(const HannaPath& p) {
  int balance = 0;
  for (const Step& s : p.steps) {
    if (s.label < 1 || s.label > max_label(s.kind)) {
      return std::string("label-out-of-range: ") + kind_letter(s.kind) +
             std::to_string(s.label);
    }
    if (s.kind == StepKind::Up) ++balance;
    if (s.kind == StepKind::Down) --balance;
  }
  if (balance != 0) return "unbalanced-slanted-steps";
  return std::nullopt;
}

std::string path_to_string(const HannaPath& p) {
  std::string text;
  text.reserve(2 * p.steps.size());
  for (const Step& s : p.steps) {
    text += kind_letter(s.kind);
    text += static_cast<char>('0' + s.label);
  }
  return text;
}

HannaPath path_from_string(std::string_view text) {
  if (text.size() % 2 != 0) {
    throw std::invalid_argument("path text must be kind/label token pairs");
  }
  HannaPath p;
  for (std::size_t i = 0; i < text.size(); i += 2) {
    StepKind kind;
    switch (text[i]) {
      case 'U': kind = StepKind::Up; break;
      case 'D': kind = StepKind::Down; break;
      case 'F': kind = StepKind::Flat; break;
      default:
        throw std::invalid_argument(std::string("unknown step kind: ") + text[i]);
    }
    const int label = text[i + 1] - '0';
    if (label < 1 || label > max_label(kind)) {
      throw std::invalid_argument("step label out of range: " +
                                  std::string(text.substr(i, 2)));
    }
    p.steps.push_back({kind, label});
  }
  if (auto violation = validate_path(p)) {
    throw std::invalid_argument("invalid path: " + *violation);
  }
  return p;
}

namespace {

// Step codes in enumeration order U1 U2 D1 D2 F1 F2 F3 F4 F5.
constexpr Step kStepAlphabet[9] = {
    {StepKind::Up, 1},   {StepKind::Up, 2},   {StepKind::Down, 1},
    {StepKind::Down, 2}, {StepKind::Flat, 1}, {StepKind::Flat, 2},
    {StepKind::Flat, 3}, {StepKind::Flat, 4}, {StepKind::Flat, 5},
};

void extend_path(HannaPath& p, int remaining, int balance,
                 const std::function<void(const HannaPath&)>& visit) {
  if (remaining == 0) {
    if (balance == 0) visit(p);
    return;
  }
  for (const Step& s : kStepAlphabet) {
    const int next_balance =
        balance + (s.kind == StepKind::Up) - (s.kind == StepKind::Down);
    if (std::abs(next_balance) > remaining - 1) continue;
    p.steps.push_back(s);
    extend_path(p, remaining - 1, next_balance, visit);
    p.steps.pop_back();
  }
}

}  // namespace

void for_each_path(int n, const std::function<void(const HannaPath&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_path: n must be nonnegative");
  if (n > kMaxEnumerationN) {
    throw std::domain_error("for_each_path: exhaustive bound " +
                            std::to_string(kMaxEnumerationN) + " exceeded");
  }
  HannaPath p;
  p.steps.reserve(n);
  extend_path(p, n, 0, visit);
}

std::vector<HannaPath> enumerate_paths(int n) {
  std::vector<HannaPath> result;
  for_each_path(n, [&](const HannaPath& p) { result.push_back(p); });
  return result;
}

MatchingPairs matching_pairs(const HannaPath& p) {
  if (auto violation = validate_path(p)) {
    throw std::invalid_argument("matching_pairs: " + *violation);
  }
  // Start heights per step.
  std::vector<int> height(p.steps.size() + 1, 0);
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    int delta = 0;
    if (p.steps[i].kind == StepKind::Up) delta = 1;
    if (p.steps[i].kind == StepKind::Down) delta = -1;
    height[i + 1] = height[i] + delta;
  }

  MatchingPairs result;
  std::vector<std::size_t> stack;

  // Above ground: upsteps leaving h >= 0 match eastward, nesting like
  // parentheses.
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    if (p.steps[i].kind == StepKind::Up && height[i] >= 0) {
      stack.push_back(i);
    } else if (p.steps[i].kind == StepKind::Down && height[i + 1] >= 0) {
      result.pairs.emplace_back(stack.back(), i);
      stack.pop_back();
    }
  }

  // Below ground: the mirror image, scanned right to left.
  stack.clear();
  for (std::size_t r = p.steps.size(); r-- > 0;) {
    if (p.steps[r].kind == StepKind::Up && height[r] <= -1) {
      stack.push_back(r);
    } else if (p.steps[r].kind == StepKind::Down && height[r + 1] <= -1) {
      result.pairs.emplace_back(stack.back(), r);
      stack.pop_back();
    }
  }

  std::sort(result.pairs.begin(), result.pairs.end());
  return result;
}

int stat_X(const HannaPath& p) {
  int count = 0;
  for (const auto& [up, down] : matching_pairs(p).pairs) {
    count += !(p.steps[up].label == 1 && p.steps[down].label == 1);
  }
  return count;
}

int stat_Y(const HannaPath& p) {
  int count = 0;
  for (const Step& s : p.steps) {
    count += s.kind == StepKind::Flat && s.label > 2;
  }
  return count;
}

int stat_upsteps(const HannaPath& p) {
  int count = 0;
  for (const Step& s : p.steps) count += s.kind == StepKind::Up;
  return count;
}

std::string reduced_to_string(std::span<const ReducedStep> r) {
  std::string text;
  for (ReducedStep s : r) {
    switch (s) {
      case ReducedStep::Up: text += 'U'; break;
      case ReducedStep::Down: text += 'D'; break;
      case ReducedStep::Flat1: text += "F1"; break;
      case ReducedStep::Flat2: text += "F2"; break;
    }
  }
  return text;
}

std::vector<ReducedStep> reduced_from_string(std::string_view text) {
  std::vector<ReducedStep> r;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U': r.push_back(ReducedStep::Up); break;
      case 'D': r.push_back(ReducedStep::Down); break;
      case 'F': {
        if (i + 1 >= text.size() || (text[i + 1] != '1' && text[i + 1] != '2')) {
          throw std::invalid_argument("reduced flatstep label must be 1 or 2");
        }
        r.push_back(text[i + 1] == '1' ? ReducedStep::Flat1 : ReducedStep::Flat2);
        ++i;
        break;
      }
      default:
        throw std::invalid_argument(std::string("unknown reduced step: ") + text[i]);
    }
  }
  return r;
}

std::string expand_reduced_path(std::span<const ReducedStep> r) {
  std::string binary;
  binary.reserve(2 * r.size());
  for (ReducedStep s : r) {
    switch (s) {
      case ReducedStep::Up: binary += "UU"; break;
      case ReducedStep::Down: binary += "DD"; break;
      case ReducedStep::Flat1: binary += "UD"; break;
      case ReducedStep::Flat2: binary += "DU"; break;
    }
  }
  return binary;
}

std::vector<ReducedStep> contract_expanded_path(std::string_view binary,
                                                int down_excess) {
  if (binary.size() % 2 != 0) {
    throw std::invalid_argument("contract_expanded_path: odd length");
  }
  std::vector<ReducedStep> r;
  int ups = 0;
  int downs = 0;
  for (std::size_t i = 0; i < binary.size(); i += 2) {
    const char a = binary[i];
    const char b = binary[i + 1];
    if ((a != 'U' && a != 'D') || (b != 'U' && b != 'D')) {
      throw std::invalid_argument("contract_expanded_path: symbols must be U or D");
    }
    if (a == 'U' && b == 'U') {
      r.push_back(ReducedStep::Up);
      ++ups;
    } else if (a == 'D' && b == 'D') {
      r.push_back(ReducedStep::Down);
      ++downs;
    } else if (a == 'U') {
      r.push_back(ReducedStep::Flat1);
    } else {
      r.push_back(ReducedStep::Flat2);
    }
  }
  if (downs - ups != down_excess) {
    throw std::invalid_argument("contract_expanded_path: D-pair excess is " +
                                std::to_string(downs - ups) + ", expected " +
                                std::to_string(down_excess));
  }
  return r;
}

}  // namespace bijectlab::paths
