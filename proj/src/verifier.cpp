#include "bijectlab/verifier.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "bijectlab/paths.hpp"

namespace bijectlab::verifier {

using counts::binom;
using counts::ExpressionId;
using counts::ExprTag;

BigCount Distribution::total() const {
  BigCount sum = 0;
  for (const auto& [key, count] : entries) sum += count;
  return sum;
}

void Distribution::add(std::vector<int> key, const BigCount& weight) {
  if (weight == 0) return;
  entries[std::move(key)] += weight;
}

FamilySpec parse_family(std::string_view name) {
  FamilySpec spec;
  if (name == "paths") {
    spec.kind = FamilySpec::Kind::Paths;
    return spec;
  }
  if (name.starts_with("deals:")) {
    spec.kind = FamilySpec::Kind::Deals;
    spec.deal_kind = deals::kind_from_name(std::string(name.substr(6)));
    return spec;
  }
  if (name.starts_with("matrices:")) {
    spec.kind = FamilySpec::Kind::Matrices;
    const std::string_view cls = name.substr(9);
    if (cls == "abelian") {
      spec.matrix_class = matrices::MatrixClass::abelian();
      return spec;
    }
    if (cls == "hanna") {
      spec.matrix_class = matrices::MatrixClass::hanna();
      return spec;
    }
    if (cls.starts_with("offset:")) {
      const std::string text(cls.substr(7));
      std::size_t used = 0;
      int offset = 0;
      try {
        offset = std::stoi(text, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad offset in family: " + std::string(name));
      }
      if (used != text.size()) {
        throw std::invalid_argument("bad offset in family: " + std::string(name));
      }
      spec.matrix_class = matrices::MatrixClass::offset(offset);
      return spec;
    }
  }
  throw std::invalid_argument("unknown family: " + std::string(name));
}

std::string family_name(const FamilySpec& family) {
  switch (family.kind) {
    case FamilySpec::Kind::Deals:
      return "deals:" + deals::kind_name(family.deal_kind);
    case FamilySpec::Kind::Matrices:
      return "matrices:" + matrices::class_name(family.matrix_class);
    case FamilySpec::Kind::Paths:
      return "paths";
  }
  return "?";
}

int family_enumeration_bound(const FamilySpec& family) {
  switch (family.kind) {
    case FamilySpec::Kind::Deals:
      return deals::kMaxEnumerationN;
    case FamilySpec::Kind::Matrices:
      return matrices::kMaxEnumerationN;
    case FamilySpec::Kind::Paths:
      return paths::kMaxEnumerationN;
  }
  return 0;
}

counts::ExpressionId family_cardinality_expression(const FamilySpec& family) {
  switch (family.kind) {
    case FamilySpec::Kind::Deals:
      switch (family.deal_kind) {
        case deals::DealKind::Barrucand: return {ExprTag::BarrucandR};
        case deals::DealKind::Franel: return {ExprTag::FranelL};
        case deals::DealKind::Hanna: return {ExprTag::Chain3};
      }
      break;
    case FamilySpec::Kind::Matrices:
      switch (family.matrix_class.kind) {
        case matrices::MatrixClass::Kind::Abelian: return {ExprTag::BarrucandR};
        case matrices::MatrixClass::Kind::Offset:
          return {ExprTag::GenBarrR, family.matrix_class.offset_a};
        case matrices::MatrixClass::Kind::Hanna: return {ExprTag::Chain3};
      }
      break;
    case FamilySpec::Kind::Paths:
      return {ExprTag::Chain3};
  }
  throw std::logic_error("family_cardinality_expression: unhandled family");
}

std::vector<std::string> statistic_names(FamilySpec::Kind kind) {
  switch (kind) {
    case FamilySpec::Kind::Deals:
      return {"cards_in_red", "distinct_denoms_red", "green_in_red",
              "red_in_blue", "blue_in_green"};
    case FamilySpec::Kind::Matrices:
      return {"ones_columns", "non_ones_columns", "top_non1", "pq_columns",
              "row_ones"};
    case FamilySpec::Kind::Paths:
      return {"X", "Y", "X_plus_Y", "upsteps"};
  }
  return {};
}

namespace {

[[noreturn]] void unknown_statistic(const FamilySpec& family,
                                    const std::string& stat) {
  throw std::invalid_argument("unknown statistic for " + family_name(family) +
                              ": " + stat);
}

std::function<int(const deals::Deal&)> deal_statistic(
    const FamilySpec& family, const std::string& stat) {
  if (stat == "cards_in_red") return deals::stat_cards_in_red;
  if (stat == "distinct_denoms_red") return deals::stat_distinct_denoms_red;
  if (stat == "green_in_red") return deals::stat_green_in_red;
  if (stat == "red_in_blue") return deals::stat_red_in_blue;
  if (stat == "blue_in_green") return deals::stat_blue_in_green;
  unknown_statistic(family, stat);
}

std::function<int(const matrices::TwoRowMatrix&)> matrix_statistic(
    const FamilySpec& family, const std::string& stat) {
  if (stat == "ones_columns") return matrices::stat_ones_columns;
  if (stat == "non_ones_columns") {
    return [](const matrices::TwoRowMatrix& m) {
      return m.n - matrices::stat_ones_columns(m);
    };
  }
  if (stat == "top_non1") return matrices::stat_top_non1;
  if (stat == "pq_columns") return matrices::stat_pq_columns;
  if (stat == "row_ones") return matrices::stat_row_ones;
  unknown_statistic(family, stat);
}

std::function<int(const paths::HannaPath&)> path_statistic(
    const FamilySpec& family, const std::string& stat) {
  if (stat == "X") return paths::stat_X;
  if (stat == "Y") return paths::stat_Y;
  if (stat == "X_plus_Y") {
    return [](const paths::HannaPath& p) {
      return paths::stat_X(p) + paths::stat_Y(p);
    };
  }
  if (stat == "upsteps") return paths::stat_upsteps;
  unknown_statistic(family, stat);
}

template <typename Object, typename Stat>
Distribution pushforward(
    const std::vector<Stat>& stats,
    const std::function<void(const std::function<void(const Object&)>&)>& scan,
    const std::function<BigCount(const Object&)>& weight_of = nullptr) {
  Distribution dist;
  scan([&](const Object& object) {
    std::vector<int> key;
    key.reserve(stats.size());
    for (const auto& stat : stats) key.push_back(stat(object));
    dist.add(std::move(key), weight_of ? weight_of(object) : BigCount(1));
  });
  return dist;
}

Distribution weighted_deal_distribution(
    deals::DealKind kind, int n, std::span<const std::string> stat_names,
    const std::function<BigCount(const deals::Deal&)>& weight_of) {
  FamilySpec family;
  family.kind = FamilySpec::Kind::Deals;
  family.deal_kind = kind;
  std::vector<std::function<int(const deals::Deal&)>> stats;
  for (const auto& name : stat_names) {
    stats.push_back(deal_statistic(family, name));
  }
  return pushforward<deals::Deal>(
      stats,
      [&](const std::function<void(const deals::Deal&)>& visit) {
        deals::for_each_deal(n, kind, visit);
      },
      weight_of);
}

}  // namespace

Distribution enumerated_distribution(const FamilySpec& family, int n,
                                     std::span<const std::string> stats) {
  switch (family.kind) {
    case FamilySpec::Kind::Deals:
      return weighted_deal_distribution(family.deal_kind, n, stats, nullptr);
    case FamilySpec::Kind::Matrices: {
      std::vector<std::function<int(const matrices::TwoRowMatrix&)>> fns;
      for (const auto& name : stats) fns.push_back(matrix_statistic(family, name));
      return pushforward<matrices::TwoRowMatrix>(
          fns, [&](const std::function<void(const matrices::TwoRowMatrix&)>& visit) {
            matrices::for_each_matrix(n, family.matrix_class, visit);
          });
    }
    case FamilySpec::Kind::Paths: {
      std::vector<std::function<int(const paths::HannaPath&)>> fns;
      for (const auto& name : stats) fns.push_back(path_statistic(family, name));
      return pushforward<paths::HannaPath>(
          fns, [&](const std::function<void(const paths::HannaPath&)>& visit) {
            paths::for_each_path(n, visit);
          });
    }
  }
  throw std::logic_error("enumerated_distribution: unhandled family");
}

std::string interpretation_name(const InterpretationId& id) {
  switch (id.tag) {
    case InterpretationTag::BarrL_kj: return "BarrL_kj";
    case InterpretationTag::BarrR_k: return "BarrR_k";
    case InterpretationTag::AbelianWordL: return "AbelianWordL";
    case InterpretationTag::AbelianWordR: return "AbelianWordR";
    case InterpretationTag::GenBarr_kj:
      return "GenBarr_kj(a=" + std::to_string(id.param) + ")";
    case InterpretationTag::GenBarr_k:
      return "GenBarr_k(a=" + std::to_string(id.param) + ")";
    case InterpretationTag::FranelL_j: return "FranelL_j";
    case InterpretationTag::FranelR_k: return "FranelR_k";
    case InterpretationTag::AperyWeighted_k: return "AperyWeighted_k";
    case InterpretationTag::Chain1_k: return "Chain1_k";
    case InterpretationTag::Chain1_kj: return "Chain1_kj";
    case InterpretationTag::Chain2_XY: return "Chain2_XY";
    case InterpretationTag::Chain2_XYjoint: return "Chain2_XYjoint";
    case InterpretationTag::Chain3_rows: return "Chain3_rows";
    case InterpretationTag::Chain3_deal: return "Chain3_deal";
    case InterpretationTag::Chain4_ups: return "Chain4_ups";
    case InterpretationTag::AndrewsPairs:
      return "AndrewsPairs(k=" + std::to_string(id.param) + ")";
  }
  return "?";
}

namespace {

CatalogEntry entry(InterpretationId id, std::string family,
                   std::vector<std::string> stats, std::string claim) {
  return {id, interpretation_name(id), std::move(family), std::move(stats),
          std::move(claim)};
}

}  // namespace

std::vector<CatalogEntry> interpretation_catalog() {
  std::vector<CatalogEntry> catalog;
  catalog.push_back(entry(
      {InterpretationTag::BarrL_kj}, "deals:barrucand",
      {"cards_in_red", "green_in_red"},
      "Barrucand deals with k cards in red's hand, j of them green, number "
      "C(n,k) C(k,j)^3"));
  catalog.push_back(entry(
      {InterpretationTag::BarrR_k}, "deals:barrucand",
      {"distinct_denoms_red"},
      "Barrucand deals with k distinct denominations in red's hand number "
      "C(n,k)^2 C(2k,k)"));
  catalog.push_back(entry(
      {InterpretationTag::AbelianWordL}, "matrices:abelian", {"ones_columns"},
      "abelian matrices with m columns (1/1) number C(n,k) sum_j C(k,j)^3 "
      "at k = n-m"));
  catalog.push_back(entry(
      {InterpretationTag::AbelianWordR}, "matrices:abelian", {"row_ones"},
      "abelian matrices with m 1s per row number C(n,k)^2 C(2k,k) at "
      "k = n-m"));
  for (long long a = 0; a <= 2; ++a) {
    catalog.push_back(entry(
        {InterpretationTag::GenBarr_kj, a}, "matrices:offset:" + std::to_string(a),
        {"non_ones_columns", "pq_columns"},
        "offset-" + std::to_string(a) + " matrices with k columns != (1/1), "
        "j of them (p/q) with p>1 and q<3, number C(n,k) C(k,j)^2 C(k,j-a)"));
    catalog.push_back(entry(
        {InterpretationTag::GenBarr_k, a}, "matrices:offset:" + std::to_string(a),
        {"top_non1"},
        "offset-" + std::to_string(a) + " matrices with k 2s and 3s in the "
        "top row number C(n,k)^2 C(2k,k-a)"));
  }
  catalog.push_back(entry(
      {InterpretationTag::FranelL_j}, "deals:franel", {"green_in_red"},
      "Franel deals with j green cards in red's hand number C(n,j)^3"));
  catalog.push_back(entry(
      {InterpretationTag::FranelR_k}, "deals:franel", {"distinct_denoms_red"},
      "Franel deals with k distinct denominations in red's hand number "
      "C(n,k)^2 C(2k,n)"));
  catalog.push_back(entry(
      {InterpretationTag::AperyWeighted_k}, "deals:barrucand",
      {"distinct_denoms_red"},
      "Barrucand deals weighted by C(n+c,c), c = cards in red's hand, "
      "total C(n,k)^2 C(n+k,k)^2 at k distinct denominations in red's hand"));
  catalog.push_back(entry(
      {InterpretationTag::Chain1_k}, "deals:hanna", {"cards_in_red"},
      "Hanna deals with k cards in red's hand number C(n,k) C(2k,k) 2^k"));
  catalog.push_back(entry(
      {InterpretationTag::Chain1_kj}, "deals:hanna",
      {"cards_in_red", "red_in_blue"},
      "Hanna deals with k cards in red's hand and j red cards in blue's "
      "hand number C(n,k) C(k,j) C(2k,k)"));
  catalog.push_back(entry(
      {InterpretationTag::Chain2_XY}, "paths", {"X_plus_Y"},
      "Hanna paths with X+Y = k number C(n,k) C(2n-k,n) 3^k"));
  catalog.push_back(entry(
      {InterpretationTag::Chain2_XYjoint}, "paths", {"X", "Y"},
      "Hanna paths with X = i and Y = j number C(n,j) C(n-j,i) "
      "C(2n-2i-2j,n-j) 3^(i+j)"));
  catalog.push_back(entry(
      {InterpretationTag::Chain3_rows}, "matrices:hanna", {"row_ones"},
      "Hanna matrices with m 1s per row number C(n,m)^2 4^(n-m)"));
  catalog.push_back(entry(
      {InterpretationTag::Chain3_deal}, "deals:hanna", {"distinct_denoms_red"},
      "Hanna deals with k distinct denominations in red's hand number "
      "C(n,k)^2 4^k"));
  catalog.push_back(entry(
      {InterpretationTag::Chain4_ups}, "paths", {"upsteps"},
      "Hanna paths with k upsteps number C(n,2k) C(2k,k) 4^k 5^(n-2k)"));
  for (long long k = 0; k <= 5; ++k) {
    catalog.push_back(entry(
        {InterpretationTag::AndrewsPairs, k}, "pairs", {"intermingling"},
        "pairs (K,L) of a k-subset and an (n-k)-subset of [n+k] with "
        "intermingling coefficient a number C(k,a) C(n-k,a) C(n+k+a,n), "
        "k = " + std::to_string(k)));
  }
  return catalog;
}

std::string identity_claim(counts::IdentityTag tag) {
  switch (tag) {
    case counts::IdentityTag::Eq1:
      return "Franel: sum_k C(n,k)^3 = sum_k C(n,k)^2 C(2k,n)";
    case counts::IdentityTag::Eq2:
      return "Apery: sum_k C(n,k) C(n+k,k) sum_j C(k,j)^3 = "
             "sum_k C(n,k)^2 C(n+k,k)^2";
    case counts::IdentityTag::Eq3:
      return "four expressions for the Hanna counts: sum_k C(n,k) C(2k,k) 2^k "
             "= sum_k C(n,k) C(2n-k,n) 3^k = sum_k C(n,k)^2 4^k = "
             "sum_k C(n,2k) C(2k,k) 4^k 5^(n-2k)";
    case counts::IdentityTag::Eq4:
      return "Barrucand: sum_k C(n,k) sum_j C(k,j)^3 = sum_k C(n,k)^2 C(2k,k)";
    case counts::IdentityTag::Eq5:
      return "generalized Barrucand: sum_k C(n,k) sum_j C(k,j)^2 C(k,j-a) = "
             "sum_k C(n,k)^2 C(2k,k-a)";
    case counts::IdentityTag::Eq6:
      return "Andrews: sum_a C(k,a) C(n-k,a) C(n+k+a,n) = "
             "C(n+k,k) C(n+k,n-k)";
  }
  return "?";
}

namespace {

// Fills keys (k) or (k,j) over [0..n] with the given summand, dropping zeros.
Distribution summand_distribution(
    long long n, int arity,
    const std::function<BigCount(long long, long long)>& value_at) {
  Distribution dist;
  for (long long k = 0; k <= n; ++k) {
    if (arity == 1) {
      dist.add({static_cast<int>(k)}, value_at(k, 0));
      continue;
    }
    for (long long j = 0; j <= n; ++j) {
      dist.add({static_cast<int>(k), static_cast<int>(j)}, value_at(k, j));
    }
  }
  return dist;
}

BigCount expr_summand1(ExprTag tag, long long param, long long n, long long k) {
  const ExpressionId expr{tag, param};
  const long long idx[] = {k};
  return counts::summand(expr, n, idx);
}

BigCount expr_summand2(ExprTag tag, long long param, long long n, long long k,
                       long long j) {
  const ExpressionId expr{tag, param};
  const long long idx[] = {k, j};
  return counts::summand(expr, n, idx);
}

}  // namespace

Distribution formula_distribution(const InterpretationId& id, long long n) {
  if (n < 0) {
    throw std::invalid_argument("formula_distribution: n must be nonnegative");
  }
  const long long a = id.param;
  switch (id.tag) {
    case InterpretationTag::BarrL_kj:
      return summand_distribution(n, 2, [&](long long k, long long j) {
        return expr_summand2(ExprTag::BarrucandL, 0, n, k, j);
      });
    case InterpretationTag::BarrR_k:
      return summand_distribution(n, 1, [&](long long k, long long) {
        return expr_summand1(ExprTag::BarrucandR, 0, n, k);
      });
    case InterpretationTag::AbelianWordL:
      return summand_distribution(n, 1, [&](long long m, long long) {
        BigCount sum = 0;
        for (long long j = 0; j <= n; ++j) {
          sum += expr_summand2(ExprTag::BarrucandL, 0, n, n - m, j);
        }
        return sum;
      });
    case InterpretationTag::AbelianWordR:
      return summand_distribution(n, 1, [&](long long m, long long) {
        return expr_summand1(ExprTag::BarrucandR, 0, n, n - m);
      });
    case InterpretationTag::GenBarr_kj:
      return summand_distribution(n, 2, [&](long long k, long long j) {
        return expr_summand2(ExprTag::GenBarrL, a, n, k, j);
      });
    case InterpretationTag::GenBarr_k:
      return summand_distribution(n, 1, [&](long long k, long long) {
        return expr_summand1(ExprTag::GenBarrR, a, n, k);
      });
    case InterpretationTag::FranelL_j:
      return summand_distribution(n, 1, [&](long long j, long long) {
        return expr_summand1(ExprTag::FranelL, 0, n, j);
      });
    case InterpretationTag::FranelR_k:
      return summand_distribution(n, 1, [&](long long k, long long) {
        return expr_summand1(ExprTag::FranelR, 0, n, k);
      });
    case InterpretationTag::AperyWeighted_k:
      return summand_distribution(n, 1, [&](long long k, long long) {
        return expr_summand1(ExprTag::AperyR, 0, n, k);
      });
    case InterpretationTag::Chain1_k:
      return summand_distribution(n, 1, [&](long long k, long long) {
        return expr_summand1(ExprTag::Chain1, 0, n, k);
      });
    case InterpretationTag::Chain1_kj:
      // The 2^k of the Chain1 summand expanded as sum_j C(k,j).
      return summand_distribution(n, 2, [&](long long k, long long j) {
        return binom(n, k) * binom(k, j) * binom(2 * k, k);
      });
    case InterpretationTag::Chain2_XY:
      return summand_distribution(n, 1, [&](long long k, long long) {
        return expr_summand1(ExprTag::Chain2, 0, n, k);
      });
    case InterpretationTag::Chain2_XYjoint:
      return summand_distribution(n, 2, [&](long long i, long long j) {
        return expr_summand2(ExprTag::Prop4a, 0, n, i, j);
      });
    case InterpretationTag::Chain3_rows:
      return summand_distribution(n, 1, [&](long long m, long long) {
        return expr_summand1(ExprTag::Chain3, 0, n, n - m);
      });
    case InterpretationTag::Chain3_deal:
      return summand_distribution(n, 1, [&](long long k, long long) {
        return expr_summand1(ExprTag::Chain3, 0, n, k);
      });
    case InterpretationTag::Chain4_ups:
      return summand_distribution(n, 1, [&](long long k, long long) {
        return expr_summand1(ExprTag::Chain4, 0, n, k);
      });
    case InterpretationTag::AndrewsPairs:
      if (a < 0 || a > n) {
        throw std::invalid_argument(
            "formula_distribution: AndrewsPairs needs 0 <= k <= n");
      }
      return summand_distribution(n, 1, [&](long long idx, long long) {
        return expr_summand1(ExprTag::AndrewsL, a, n, idx);
      });
  }
  throw std::logic_error("formula_distribution: unhandled tag");
}

Distribution andrews_pair_distribution(int n, int k) {
  if (k < 0 || k > n) {
    throw std::invalid_argument(
        "andrews_pair_distribution: need 0 <= k <= n");
  }
  if (n > kMaxAndrewsN) {
    throw std::domain_error("andrews_pair_distribution: n exceeds " +
                            std::to_string(kMaxAndrewsN));
  }
  const int ground = n + k;
  const std::uint32_t limit = 1u << ground;
  std::vector<std::uint32_t> k_subsets, l_subsets;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const int bits = std::popcount(mask);
    if (bits == k) k_subsets.push_back(mask);
    if (bits == n - k) l_subsets.push_back(mask);
  }
  Distribution dist;
  for (const std::uint32_t kmask : k_subsets) {
    for (const std::uint32_t lmask : l_subsets) {
      std::uint32_t unioned = kmask | lmask;
      // Pick off the k smallest elements of the union and count members of L.
      int take = k;
      int in_l = 0;
      while (take > 0) {
        const std::uint32_t low = unioned & (~unioned + 1);
        if ((lmask & low) != 0) ++in_l;
        unioned ^= low;
        --take;
      }
      dist.add({in_l});
    }
  }
  return dist;
}

nlohmann::json report_to_json(const Report& report) {
  nlohmann::json mismatches = nlohmann::json::array();
  for (const Mismatch& m : report.mismatches) {
    mismatches.push_back({{"key", m.key},
                          {"expected", m.expected.str()},
                          {"observed", m.observed.str()}});
  }
  return {{"id", report.id},
          {"n", report.n},
          {"pass", report.pass},
          {"mismatches", mismatches},
          {"millis", report.millis}};
}

namespace {

class Stopwatch {
 public:
  long long millis() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::vector<Mismatch> diff_distributions(const Distribution& expected,
                                         const Distribution& observed) {
  std::vector<Mismatch> mismatches;
  auto exp_it = expected.entries.begin();
  auto obs_it = observed.entries.begin();
  while (exp_it != expected.entries.end() || obs_it != observed.entries.end()) {
    if (obs_it == observed.entries.end() ||
        (exp_it != expected.entries.end() && exp_it->first < obs_it->first)) {
      mismatches.push_back({exp_it->first, exp_it->second, 0});
      ++exp_it;
    } else if (exp_it == expected.entries.end() ||
               obs_it->first < exp_it->first) {
      mismatches.push_back({obs_it->first, 0, obs_it->second});
      ++obs_it;
    } else {
      if (exp_it->second != obs_it->second) {
        mismatches.push_back({exp_it->first, exp_it->second, obs_it->second});
      }
      ++exp_it;
      ++obs_it;
    }
  }
  return mismatches;
}

CatalogEntry catalog_entry_for(const InterpretationId& id) {
  static const std::vector<CatalogEntry> catalog = interpretation_catalog();
  for (const CatalogEntry& e : catalog) {
    if (e.id == id) return e;
  }
  // Ids outside the default catalog (e.g. another GenBarr offset) get a
  // synthesized entry.
  switch (id.tag) {
    case InterpretationTag::GenBarr_kj:
      return {id, interpretation_name(id),
              "matrices:offset:" + std::to_string(id.param),
              {"non_ones_columns", "pq_columns"},
              "offset matrices keyed by non-(1/1) and (p>1,q<3) columns"};
    case InterpretationTag::GenBarr_k:
      return {id, interpretation_name(id),
              "matrices:offset:" + std::to_string(id.param),
              {"top_non1"},
              "offset matrices keyed by 2s and 3s in the top row"};
    case InterpretationTag::AndrewsPairs:
      return {id, interpretation_name(id), "pairs", {"intermingling"},
              "subset pairs keyed by intermingling coefficient"};
    default:
      throw std::logic_error("catalog_entry_for: id missing from catalog");
  }
}

}  // namespace

Report check_interpretation(const InterpretationId& id, int n) {
  const Stopwatch watch;
  const CatalogEntry entry = catalog_entry_for(id);
  Report report;
  report.id = entry.name;
  report.n = n;
  report.claim = entry.claim;

  Distribution observed;
  if (id.tag == InterpretationTag::AndrewsPairs) {
    observed = andrews_pair_distribution(n, static_cast<int>(id.param));
  } else if (id.tag == InterpretationTag::AperyWeighted_k) {
    observed = weighted_deal_distribution(
        deals::DealKind::Barrucand, n, entry.stats,
        [n](const deals::Deal& deal) {
          const int cards = deals::stat_cards_in_red(deal);
          return binom(n + cards, cards);
        });
  } else {
    observed = enumerated_distribution(parse_family(entry.family), n,
                                       entry.stats);
  }
  const Distribution expected = formula_distribution(id, n);
  report.mismatches = diff_distributions(expected, observed);
  report.pass = report.mismatches.empty();
  report.millis = watch.millis();
  return report;
}

Report check_identity(const counts::IdentityId& id, long long n) {
  const Stopwatch watch;
  const counts::ScalarCheck check = counts::check_scalar_identity(id, n);
  Report report;
  report.id = check.id;
  report.n = static_cast<int>(n);
  report.pass = check.pass;
  report.claim = identity_claim(id.tag);
  for (std::size_t i = 1; i < check.sides.size(); ++i) {
    if (check.sides[i] != check.sides.front()) {
      report.mismatches.push_back(
          {{static_cast<int>(i)}, check.sides.front(), check.sides[i]});
    }
  }
  report.millis = watch.millis();
  return report;
}

namespace {

// "Eq5(a=2)" matches filters "Eq5(a=2)" and "Eq5". No filter list at all
// selects everything; an empty list selects nothing.
bool id_selected(const std::optional<std::vector<std::string>>& filters,
                 const std::string& id) {
  if (!filters.has_value()) return true;
  const std::string base = id.substr(0, id.find('('));
  return std::any_of(
      filters->begin(), filters->end(),
      [&](const std::string& f) { return f == id || f == base; });
}

}  // namespace

std::vector<Report> run_suite(const SuiteOptions& options) {
  std::vector<Report> reports;

  if (options.identities) {
    std::vector<counts::IdentityId> ids;
    ids.push_back({counts::IdentityTag::Eq1});
    ids.push_back({counts::IdentityTag::Eq2});
    ids.push_back({counts::IdentityTag::Eq3});
    ids.push_back({counts::IdentityTag::Eq4});
    for (long long a = -2; a <= 3; ++a) {
      ids.push_back({counts::IdentityTag::Eq5, a});
    }
    for (long long k = 0; k <= options.identities_n_max; ++k) {
      ids.push_back({counts::IdentityTag::Eq6, k});
    }
    for (const counts::IdentityId& id : ids) {
      if (!id_selected(options.ids, counts::identity_name(id))) continue;
      const long long n_start =
          id.tag == counts::IdentityTag::Eq6 ? id.param : 0;
      for (long long n = n_start; n <= options.identities_n_max; ++n) {
        reports.push_back(check_identity(id, n));
      }
    }
  }

  if (options.interpretations) {
    for (const CatalogEntry& entry : interpretation_catalog()) {
      if (entry.id.tag == InterpretationTag::AndrewsPairs) continue;
      if (!id_selected(options.ids, entry.name)) continue;
      for (int n = 0; n <= options.interpretations_n_max; ++n) {
        reports.push_back(check_interpretation(entry.id, n));
      }
    }
  }

  if (options.andrews) {
    for (long long k = 0; k <= options.andrews_n_max; ++k) {
      const InterpretationId id{InterpretationTag::AndrewsPairs, k};
      if (!id_selected(options.ids, interpretation_name(id))) continue;
      for (int n = static_cast<int>(k); n <= options.andrews_n_max; ++n) {
        reports.push_back(check_interpretation(id, n));
      }
    }
  }

  return reports;
}

}  // namespace bijectlab::verifier
