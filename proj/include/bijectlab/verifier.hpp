#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "bijectlab/bigcount.hpp"
#include "bijectlab/deals.hpp"
#include "bijectlab/exact_counts.hpp"
#include "bijectlab/matrices.hpp"

namespace bijectlab::verifier {

// Exact pushforward of a finite family under a tuple of statistics: value
// tuple -> positive count. Zero counts are never stored, so Distribution
// equality is keywise agreement with no extra keys on either side.
struct Distribution {
  std::map<std::vector<int>, BigCount> entries;

  bool operator==(const Distribution&) const = default;
  BigCount total() const;
  // Accumulates weight at key; zero weights leave the map untouched.
  void add(std::vector<int> key, const BigCount& weight = 1);
};

// An enumerable family as named on the command line: "deals:barrucand",
// "deals:franel", "deals:hanna", "matrices:abelian", "matrices:offset:<a>",
// "matrices:hanna", or "paths".
struct FamilySpec {
  enum class Kind { Deals, Matrices, Paths };
  Kind kind = Kind::Paths;
  deals::DealKind deal_kind = deals::DealKind::Barrucand;  // Deals only
  matrices::MatrixClass matrix_class;                      // Matrices only
};

FamilySpec parse_family(std::string_view name);  // throws std::invalid_argument
std::string family_name(const FamilySpec& family);

// Largest n the family can be enumerated exhaustively.
int family_enumeration_bound(const FamilySpec& family);

// Closed form for the family's cardinality, valid for every n >= 0.
counts::ExpressionId family_cardinality_expression(const FamilySpec& family);

// Statistics addressable by name:
//   deals:    cards_in_red, distinct_denoms_red, green_in_red, red_in_blue,
//             blue_in_green
//   matrices: ones_columns, non_ones_columns, top_non1, pq_columns, row_ones
//   paths:    X, Y, X_plus_Y, upsteps
std::vector<std::string> statistic_names(FamilySpec::Kind kind);

// Joint distribution of the named statistics over the whole family at n.
// Throws std::invalid_argument on an unknown statistic and std::domain_error
// past the family's enumeration bound.
Distribution enumerated_distribution(const FamilySpec& family, int n,
                                     std::span<const std::string> stats);

// Each id binds one enumerated family, a statistic tuple keying it, and the
// closed-form summand every key must match; see interpretation_catalog() for
// the bindings spelled out.
enum class InterpretationTag {
  BarrL_kj,
  BarrR_k,
  AbelianWordL,
  AbelianWordR,
  GenBarr_kj,
  GenBarr_k,
  FranelL_j,
  FranelR_k,
  AperyWeighted_k,
  Chain1_k,
  Chain1_kj,
  Chain2_XY,
  Chain2_XYjoint,
  Chain3_rows,
  Chain3_deal,
  Chain4_ups,
  AndrewsPairs,
};

struct InterpretationId {
  InterpretationTag tag;
  long long param = 0;  // offset a for GenBarr_*, fixed k for AndrewsPairs

  bool operator==(const InterpretationId&) const = default;
};

std::string interpretation_name(const InterpretationId& id);

// One row of the declarative check catalog.
struct CatalogEntry {
  InterpretationId id;
  std::string name;
  // Family string as accepted by parse_family, or "pairs" for AndrewsPairs
  // (subset pairs are counted directly, not via a FamilySpec).
  std::string family;
  std::vector<std::string> stats;
  // Human-readable statement of the double-counting claim being checked.
  std::string claim;
};

// Every interpretation the default suite runs: the fixed ids plus GenBarr at
// offsets {0, 1, 2} and AndrewsPairs at k = 0..5.
std::vector<CatalogEntry> interpretation_catalog();

// Statement of the identity a scalar check verifies (used alongside
// interpretation claims when rendering reports).
std::string identity_claim(counts::IdentityTag tag);

// Closed-form side of an interpretation: entry at each key tuple is the
// summand attached to that interpretation (zero entries omitted).
Distribution formula_distribution(const InterpretationId& id, long long n);

// Intermingling distribution of subset pairs (K, L) of [n+k] with |K| = k,
// |L| = n-k, keyed by the number of elements of L among the k smallest of
// the set union K∪L (elements of both K and L count). Throws
// std::invalid_argument unless 0 <= k <= n and std::domain_error past
// kMaxAndrewsN.
inline constexpr int kMaxAndrewsN = 6;
Distribution andrews_pair_distribution(int n, int k);

// One keywise discrepancy; a side missing the key reports 0.
struct Mismatch {
  std::vector<int> key;
  BigCount expected;  // closed-form side
  BigCount observed;  // enumerated side

  bool operator==(const Mismatch&) const = default;
};

struct Report {
  std::string id;
  int n = 0;
  bool pass = false;
  std::vector<Mismatch> mismatches;  // sorted by key; empty iff pass
  long long millis = 0;
  std::string claim;  // not serialized; feeds human-readable rendering
};

// {"id":..., "mismatches":[...], "millis":..., "n":..., "pass":...} with big
// integers as decimal strings; one such object per line is the report stream
// format.
nlohmann::json report_to_json(const Report& report);

// Enumerates, keys, and compares against formula_distribution. AperyWeighted_k
// compares the weighted pushforward (each Barrucand deal counts with weight
// C(n + cards_in_red, cards_in_red) at its distinct-denominations key);
// AndrewsPairs compares andrews_pair_distribution.
Report check_interpretation(const InterpretationId& id, int n);

// Wraps a scalar identity check: a mismatch at key {i} reports side i against
// side 0.
Report check_identity(const counts::IdentityId& id, long long n);

struct SuiteOptions {
  bool identities = true;
  bool interpretations = true;
  bool andrews = true;
  long long identities_n_max = 40;
  int interpretations_n_max = 4;
  int andrews_n_max = 5;
  // No value runs every check of the enabled groups; an explicit list keeps
  // only matching checks, so an empty list yields no reports. Entries match a
  // report id exactly ("Eq5(a=2)", "GenBarr_k(a=1)") or by its prefix before
  // the parameter list ("Eq5", "GenBarr_k", "AndrewsPairs").
  std::optional<std::vector<std::string>> ids;
};

// Runs the selected cells and returns reports ordered by (group, id, n) with
// groups ordered identities < interpretations < pairs. Identity cells cover
// Eq1..Eq4, Eq5 at a in {-2..3}, and Eq6 at every 0 <= k <= n <= n_max;
// interpretation cells cover the catalog at n = 0..n_max; pair cells cover
// AndrewsPairs at 0 <= k <= n <= n_max.
std::vector<Report> run_suite(const SuiteOptions& options);

}  // namespace bijectlab::verifier
