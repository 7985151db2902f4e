// Acceptance checks, one line per criterion. The process exit status is the
// number of failed criteria, so 0 means the whole gate is green.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bijectlab/bijections.hpp"
#include "bijectlab/deals.hpp"
#include "bijectlab/exact_counts.hpp"
#include "bijectlab/matrices.hpp"
#include "bijectlab/oeis_client.hpp"
#include "bijectlab/paths.hpp"
#include "bijectlab/verifier.hpp"

namespace bl = bijectlab;
using bl::BigCount;

namespace {

int failures = 0;

void criterion(int index, const std::string& label,
               const std::function<bool(std::string&)>& body,
               long long budget_ms = 0) {
  std::string note;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    ok = false;
    note = std::string("exception: ") + e.what();
  }
  const long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  if (budget_ms > 0 && ms >= budget_ms) {
    ok = false;
    if (!note.empty()) note += "; ";
    note += "over the " + std::to_string(budget_ms) + " ms budget";
  }
  std::cout << "[" << index << "/9] " << (ok ? "PASS" : "FAIL") << " (" << ms
            << " ms) " << label;
  if (!note.empty()) std::cout << " -- " << note;
  std::cout << std::endl;
  if (!ok) ++failures;
}

bool all_pass(const std::vector<bl::verifier::Report>& reports,
              std::size_t expected_count, std::string& note) {
  if (reports.size() != expected_count) {
    note = "expected " + std::to_string(expected_count) + " reports, got " +
           std::to_string(reports.size());
    return false;
  }
  for (const auto& report : reports) {
    if (!report.pass) {
      note = report.id + " failed at n = " + std::to_string(report.n);
      return false;
    }
  }
  return true;
}

bl::deals::Deal worked_deal() {
  using bl::deals::Color;
  return bl::deals::Deal{5,
                         {1, 2, 4, 5},
                         {{Color::Blue, Color::Blue, Color::Green},
                          {Color::Green, Color::Red, Color::Red},
                          {Color::Green, Color::Blue, Color::Red},
                          {Color::Blue, Color::Red, Color::Green}}};
}

using MatrixKey = std::pair<std::string, std::string>;

MatrixKey key_of(const bl::matrices::TwoRowMatrix& m) {
  return {m.top, m.bottom};
}

// Deal enumeration mapped through the bijection must land exactly on the
// matrix class, member by member, and invert.
bool transports_onto(int n, bl::deals::DealKind kind,
                     const std::function<bool(const bl::matrices::TwoRowMatrix&)>&
                         in_class,
                     std::string& note) {
  std::set<MatrixKey> images;
  bool ok = true;
  bl::deals::for_each_deal(n, kind, [&](const bl::deals::Deal& deal) {
    const bl::matrices::TwoRowMatrix m = bl::bijections::deal_to_matrix(deal);
    ok = ok && in_class(m) && bl::bijections::matrix_to_deal(m) == deal;
    images.insert(key_of(m));
  });
  std::size_t class_size = 0;
  bl::matrices::for_each_matrix(
      n, bl::matrices::MatrixClass::hanna(),
      [&](const bl::matrices::TwoRowMatrix& m) {
        if (in_class(m)) ++class_size;
      });
  if (!ok || images.size() != class_size) {
    note = "transport mismatch at n = " + std::to_string(n);
    return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(
      1, "the six summation identities hold for every n <= 40",
      [](std::string& note) {
        bl::verifier::SuiteOptions suite;
        suite.interpretations = false;
        suite.andrews = false;
        suite.identities_n_max = 40;
        // Eq1..Eq4 and six offsets of Eq5 at 41 sizes each, Eq6 at every
        // 0 <= k <= n <= 40.
        return all_pass(bl::verifier::run_suite(suite),
                        (4 + 6) * 41 + (41 * 42) / 2, note);
      },
      5000);

  criterion(
      2, "enumerated family sizes match the closed forms",
      [](std::string& note) {
        const auto check_family = [&](const char* family_name, int n_max,
                                      const std::vector<long long>& expected) {
          const bl::verifier::FamilySpec family =
              bl::verifier::parse_family(family_name);
          for (int n = 0; n <= n_max; ++n) {
            const BigCount enumerated =
                bl::verifier::enumerated_distribution(family, n, {}).total();
            const BigCount closed = bl::counts::eval_expression(
                bl::verifier::family_cardinality_expression(family), n);
            if (enumerated != closed || enumerated != expected[n]) {
              note = std::string(family_name) + " at n = " + std::to_string(n);
              return false;
            }
          }
          return true;
        };
        return check_family("deals:barrucand", 5, {1, 3, 15, 93, 639, 4653}) &&
               check_family("deals:franel", 5, {1, 2, 10, 56, 346, 2252}) &&
               check_family("deals:hanna", 4, {1, 5, 33, 245, 1921}) &&
               check_family("matrices:hanna", 5,
                            {1, 5, 33, 245, 1921, 15525}) &&
               check_family("paths", 5, {1, 5, 33, 245, 1921, 15525});
      },
      60000);

  criterion(3, "the bijections invert and carry each class onto its image",
            [](std::string& note) {
              for (int n = 0; n <= 4; ++n) {
                if (!transports_onto(
                        n, bl::deals::DealKind::Hanna,
                        [](const bl::matrices::TwoRowMatrix&) { return true; },
                        note) ||
                    !transports_onto(n, bl::deals::DealKind::Barrucand,
                                     [](const bl::matrices::TwoRowMatrix& m) {
                                       return bl::matrices::classify(m)
                                           .is_abelian;
                                     },
                                     note) ||
                    !transports_onto(n, bl::deals::DealKind::Franel,
                                     [](const bl::matrices::TwoRowMatrix& m) {
                                       return bl::matrices::classify(m)
                                                  .is_abelian &&
                                              bl::matrices::stat_ones_columns(
                                                  m) == 0;
                                     },
                                     note)) {
                  return false;
                }
                // paths inherit the matrix enumeration through the step map
                bool paths_ok = true;
                std::set<std::string> path_images;
                bl::matrices::for_each_matrix(
                    n, bl::matrices::MatrixClass::hanna(),
                    [&](const bl::matrices::TwoRowMatrix& m) {
                      const bl::paths::HannaPath p =
                          bl::bijections::matrix_to_path(m);
                      paths_ok = paths_ok &&
                                 bl::bijections::path_to_matrix(p) == m;
                      path_images.insert(bl::paths::path_to_string(p));
                    });
                std::size_t path_count = 0;
                bl::paths::for_each_path(
                    n, [&](const bl::paths::HannaPath&) { ++path_count; });
                if (!paths_ok || path_images.size() != path_count) {
                  note = "path transport mismatch at n = " + std::to_string(n);
                  return false;
                }
              }
              const bl::deals::Deal deal = worked_deal();
              const bl::matrices::TwoRowMatrix m =
                  bl::bijections::deal_to_matrix(deal);
              if (m.top != "13132" || m.bottom != "31132" ||
                  bl::bijections::matrix_to_deal(m) != deal) {
                note = "worked example";
                return false;
              }
              const bl::paths::HannaPath p = bl::bijections::matrix_to_path(m);
              return bl::paths::path_to_string(p) == "U2D2F1F5F2" &&
                     bl::bijections::path_to_matrix(p) == m;
            });

  criterion(4, "deal statistics transport to matrix statistics",
            [](std::string& note) {
              for (int n = 0; n <= 4; ++n) {
                bool ok = true;
                bl::deals::for_each_deal(
                    n, bl::deals::DealKind::Hanna,
                    [&](const bl::deals::Deal& deal) {
                      const bl::matrices::TwoRowMatrix m =
                          bl::bijections::deal_to_matrix(deal);
                      ok = ok &&
                           bl::deals::stat_cards_in_red(deal) ==
                               n - bl::matrices::stat_ones_columns(m) &&
                           bl::deals::stat_distinct_denoms_red(deal) ==
                               bl::matrices::stat_top_non1(m) &&
                           bl::deals::stat_green_in_red(deal) ==
                               bl::matrices::stat_pq_columns(m);
                    });
                if (!ok) {
                  note = "mismatch at n = " + std::to_string(n);
                  return false;
                }
              }
              return true;
            });

  criterion(
      5, "every refined count matches its closed-form summand for n <= 4",
      [](std::string& note) {
        bl::verifier::SuiteOptions suite;
        suite.identities = false;
        suite.andrews = false;
        suite.interpretations_n_max = 4;
        return all_pass(bl::verifier::run_suite(suite), 20 * 5, note);
      },
      120000);

  criterion(6, "subset-pair counts match keywise for 0 <= k <= n <= 5",
            [](std::string& note) {
              bl::verifier::SuiteOptions suite;
              suite.identities = false;
              suite.interpretations = false;
              suite.andrews_n_max = 5;
              if (!all_pass(bl::verifier::run_suite(suite), 21, note)) {
                return false;
              }
              for (int n = 0; n <= 5; ++n) {
                for (int k = 0; k <= n; ++k) {
                  const BigCount total =
                      bl::verifier::andrews_pair_distribution(n, k).total();
                  if (total != bl::counts::binom(n + k, k) *
                                   bl::counts::binom(n + k, n - k)) {
                    note = "total at n = " + std::to_string(n) +
                           ", k = " + std::to_string(k);
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(7, "doubling and halving of two-letter paths invert",
            [](std::string& note) {
              using bl::paths::ReducedStep;
              long long checked = 0;
              for (int length = 0; length <= 6; ++length) {
                std::vector<int> digits(length, 0);
                while (true) {
                  std::vector<ReducedStep> reduced;
                  int down_excess = 0;
                  for (const int digit : digits) {
                    reduced.push_back(static_cast<ReducedStep>(digit));
                    if (reduced.back() == ReducedStep::Down) ++down_excess;
                    if (reduced.back() == ReducedStep::Up) --down_excess;
                  }
                  const std::string expanded =
                      bl::paths::expand_reduced_path(reduced);
                  const long long downs =
                      std::count(expanded.begin(), expanded.end(), 'D');
                  const long long ups =
                      std::count(expanded.begin(), expanded.end(), 'U');
                  if (downs != length + down_excess ||
                      ups != length - down_excess ||
                      bl::paths::contract_expanded_path(
                          expanded, down_excess) != reduced) {
                    note = "failed on a word of length " +
                           std::to_string(length);
                    return false;
                  }
                  ++checked;
                  int pos = length - 1;
                  while (pos >= 0 && digits[pos] == 3) digits[pos--] = 0;
                  if (pos < 0) break;
                  ++digits[pos];
                }
              }
              if (checked != 5461) {
                note = "expected 5461 words, checked " +
                       std::to_string(checked);
                return false;
              }
              return true;
            });

  criterion(
      8, "10000 seeded width-12 samples round-trip with valid matchings",
      [](std::string& note) {
        const std::uint64_t base_seed = 20260825;
        std::vector<MatrixKey> first_hundred;
        for (int i = 0; i < 10000; ++i) {
          const bl::matrices::TwoRowMatrix m = bl::matrices::sample_matrix(
              12, bl::matrices::MatrixClass::hanna(), base_seed + i);
          if (i < 100) first_hundred.push_back(key_of(m));
          if (bl::bijections::deal_to_matrix(
                  bl::bijections::matrix_to_deal(m)) != m) {
            note = "deal round trip failed at sample " + std::to_string(i);
            return false;
          }
          const bl::paths::HannaPath p = bl::bijections::matrix_to_path(m);
          if (bl::bijections::path_to_matrix(p) != m) {
            note = "path round trip failed at sample " + std::to_string(i);
            return false;
          }
          const bl::paths::MatchingPairs matching =
              bl::paths::matching_pairs(p);
          std::set<std::size_t> seen;
          std::size_t up_count = 0;
          for (const bl::paths::Step& step : p.steps) {
            if (step.kind == bl::paths::StepKind::Up) ++up_count;
          }
          bool well_formed = matching.pairs.size() == up_count;
          for (const auto& [up, down] : matching.pairs) {
            well_formed = well_formed && up < p.steps.size() &&
                          down < p.steps.size() &&
                          p.steps[up].kind == bl::paths::StepKind::Up &&
                          p.steps[down].kind == bl::paths::StepKind::Down &&
                          seen.insert(up).second && seen.insert(down).second;
          }
          if (!well_formed) {
            note = "bad matching at sample " + std::to_string(i);
            return false;
          }
        }
        for (int i = 0; i < 100; ++i) {
          const bl::matrices::TwoRowMatrix again = bl::matrices::sample_matrix(
              12, bl::matrices::MatrixClass::hanna(), base_seed + i);
          if (key_of(again) != first_hundred[i]) {
            note = "resampling seed " + std::to_string(i) + " diverged";
            return false;
          }
        }
        return true;
      },
      30000);

  criterion(9, "sequence prefixes are consistent (and match OEIS when online)",
            [](std::string& note) {
              for (const std::string& id : bl::oeis::known_sequence_ids()) {
                if (!bl::oeis::prefix_consistency(id, 16).pass) {
                  note = id + " prefix inconsistent";
                  return false;
                }
              }
              if (!std::getenv("BIJECTLAB_ONLINE_TESTS")) {
                note = "online comparison skipped (BIJECTLAB_ONLINE_TESTS unset)";
                return true;
              }
              const std::filesystem::path cache = bl::oeis::default_cache_dir();
              for (const std::string& id : bl::oeis::known_sequence_ids()) {
                const bl::oeis::SequenceRef ref =
                    bl::oeis::make_sequence_ref(id, 15);
                if (!bl::oeis::cross_check(ref, 15, cache,
                                           bl::oeis::NetworkPolicy::AllowNetwork)
                         .pass) {
                  note = id + " disagrees with the published terms";
                  return false;
                }
              }
              return true;
            });

  if (failures == 0) {
    std::cout << "acceptance: all 9 criteria passed" << std::endl;
  } else {
    std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
  }
  return failures;
}
