#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bijectlab::paths {

enum class StepKind { Up, Down, Flat };

// One labeled step: U/D labels in {1,2}, F labels in {1..5}.
struct Step {
  StepKind kind;
  int label;

  bool operator==(const Step&) const = default;
};

// A Delannoy path with labeled steps; equally many Us and Ds, so it returns
// to its start height (ground level).
struct HannaPath {
  std::vector<Step> steps;

  bool operator==(const HannaPath&) const = default;
  int n() const { return static_cast<int>(steps.size()); }
};

// Label ranges and the U/D balance; nullopt when valid.
std::optional<std::string> validate_path(const HannaPath& p);

// Token text, e.g. "U2D2F1F5F2"; empty path is "".
std::string path_to_string(const HannaPath& p);
HannaPath path_from_string(std::string_view text);  // throws std::invalid_argument

inline constexpr int kMaxEnumerationN = 7;

// Every Hanna n-path exactly once, lexicographic over step codes
// U1 < U2 < D1 < D2 < F1 < F2 < F3 < F4 < F5. Throws std::domain_error past
// kMaxEnumerationN.
void for_each_path(int n, const std::function<void(const HannaPath&)>& visit);
std::vector<HannaPath> enumerate_paths(int n);

// The canonical pairing of slanted steps: an upstep leaving height h >= 0 is
// matched to the first downstep east of it falling from h+1 to h; an upstep
// leaving h <= -1 to the first such downstep west of it.
struct MatchingPairs {
  // (upstep index, downstep index), sorted by upstep index.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

// Two stack passes (left-to-right above ground, right-to-left below); always
// a perfect matching of the slanted steps. Throws std::invalid_argument on an
// unbalanced path.
MatchingPairs matching_pairs(const HannaPath& p);

// Matched slanted-step pairs not both labeled 1.
int stat_X(const HannaPath& p);
// Flatsteps with label > 2.
int stat_Y(const HannaPath& p);
int stat_upsteps(const HannaPath& p);

// Steps of the reduced paths consumed by the expansion bijection: unlabeled
// slanted steps plus bicolored flatsteps.
enum class ReducedStep { Up, Down, Flat1, Flat2 };

std::string reduced_to_string(std::span<const ReducedStep> r);    // "DF1UF2"
std::vector<ReducedStep> reduced_from_string(std::string_view);   // throws

// U -> UU, D -> DD, F1 -> UD, F2 -> DU; result is a string over {U, D} of
// twice the input length.
std::string expand_reduced_path(std::span<const ReducedStep> r);

// Inverse of expand_reduced_path via the pairwise parse. `down_excess` must
// equal the parsed (#D - #U) of the result; odd length or a mismatched excess
// throws std::invalid_argument.
std::vector<ReducedStep> contract_expanded_path(std::string_view binary,
                                                int down_excess);

}  // namespace bijectlab::paths
