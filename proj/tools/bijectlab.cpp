// Command-line front door: exact counts, exhaustive enumeration, bijections,
// identity and double-counting verification, rejection sampling, and OEIS
// cross-checks over card deals, two-row matrices, and labeled Delannoy paths.
//
// Exit codes: 0 success, 1 failed check or bad data, 2 usage error.

#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bijectlab/bigcount.hpp"
#include "bijectlab/bijections.hpp"
#include "bijectlab/deals.hpp"
#include "bijectlab/exact_counts.hpp"
#include "bijectlab/io_json.hpp"
#include "bijectlab/matrices.hpp"
#include "bijectlab/oeis_client.hpp"
#include "bijectlab/paths.hpp"
#include "bijectlab/verifier.hpp"

namespace {

namespace bl = bijectlab;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty list entry in: " + text);
    items.push_back(item);
  }
  return items;
}

std::string key_text(const std::vector<int>& key) {
  std::string text;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i > 0) text += ',';
    text += std::to_string(key[i]);
  }
  return text;
}

// ---------------------------------------------------------------- count ----

struct CountOptions {
  std::string family;
  int n = 0;
  std::string by;
  bool closed_form = false;
  std::string format = "json";
};

int run_count(const CountOptions& opt) {
  const bl::verifier::FamilySpec family = bl::verifier::parse_family(opt.family);
  if (opt.n < 0) throw std::invalid_argument("--n must be nonnegative");

  const std::vector<std::string> stats =
      opt.by.empty() ? std::vector<std::string>{} : split_csv(opt.by);
  const char* method = opt.closed_form ? "closed-form" : "enumeration";

  bl::BigCount total;
  bl::verifier::Distribution dist;
  if (opt.closed_form) {
    total = bl::counts::eval_expression(
        bl::verifier::family_cardinality_expression(family), opt.n);
  } else {
    dist = bl::verifier::enumerated_distribution(family, opt.n, stats);
    total = dist.total();
  }

  if (opt.format == "csv") {
    if (stats.empty()) {
      std::cout << "family,n,method,total\n"
                << opt.family << ',' << opt.n << ',' << method << ','
                << total.str() << '\n';
    } else {
      std::cout << opt.by << ",count\n";
      for (const auto& [key, count] : dist.entries) {
        std::cout << key_text(key) << ',' << count.str() << '\n';
      }
    }
    return kExitOk;
  }

  json out{{"family", opt.family},
           {"n", opt.n},
           {"method", method},
           {"total", total.str()}};
  if (!stats.empty()) {
    out["by"] = stats;
    json counts = json::object();
    for (const auto& [key, count] : dist.entries) {
      counts[key_text(key)] = count.str();
    }
    out["counts"] = counts;
  }
  std::cout << out.dump() << '\n';
  return kExitOk;
}

// ------------------------------------------------------------ enumerate ----

struct EnumerateOptions {
  std::string family;
  int n = 0;
  long long limit = -1;  // < 0 means everything
};

int run_enumerate(const EnumerateOptions& opt) {
  const bl::verifier::FamilySpec family = bl::verifier::parse_family(opt.family);
  if (opt.n < 0) throw std::invalid_argument("--n must be nonnegative");
  long long emitted = 0;
  const auto want_more = [&] {
    return opt.limit < 0 || emitted < opt.limit;
  };
  switch (family.kind) {
    case bl::verifier::FamilySpec::Kind::Deals:
      bl::deals::for_each_deal(opt.n, family.deal_kind,
                               [&](const bl::deals::Deal& d) {
                                 if (!want_more()) return;
                                 std::cout << bl::io::deal_to_json(d).dump() << '\n';
                                 ++emitted;
                               });
      break;
    case bl::verifier::FamilySpec::Kind::Matrices:
      bl::matrices::for_each_matrix(
          opt.n, family.matrix_class, [&](const bl::matrices::TwoRowMatrix& m) {
            if (!want_more()) return;
            std::cout << bl::io::matrix_to_json(m).dump() << '\n';
            ++emitted;
          });
      break;
    case bl::verifier::FamilySpec::Kind::Paths:
      bl::paths::for_each_path(opt.n, [&](const bl::paths::HannaPath& p) {
        if (!want_more()) return;
        std::cout << bl::io::path_to_json(p).dump() << '\n';
        ++emitted;
      });
      break;
  }
  return kExitOk;
}

// --------------------------------------------------------------- biject ----

struct BijectOptions {
  std::string from;
  std::string to;
};

// Parses one input object, validates its invariants, and lands on the matrix
// hub; deals and paths convert through it.
bl::matrices::TwoRowMatrix to_matrix_hub(const std::string& from, const json& j) {
  if (from == "deal") {
    const auto [deal, kind] = bl::io::deal_from_json(j);
    if (const auto violation = bl::deals::validate_deal(deal, kind)) {
      throw std::invalid_argument("invalid deal: " + *violation);
    }
    return bl::bijections::deal_to_matrix(deal);
  }
  if (from == "matrix") {
    return bl::io::matrix_from_json(j);
  }
  const bl::paths::HannaPath path = bl::io::path_from_json(j);
  if (const auto violation = bl::paths::validate_path(path)) {
    throw std::invalid_argument("invalid path: " + *violation);
  }
  return bl::bijections::path_to_matrix(path);
}

json from_matrix_hub(const std::string& to, const bl::matrices::TwoRowMatrix& m) {
  if (to == "deal") {
    return bl::io::deal_to_json(bl::bijections::matrix_to_deal(m));
  }
  if (to == "matrix") {
    return bl::io::matrix_to_json(m);
  }
  return bl::io::path_to_json(bl::bijections::matrix_to_path(m));
}

int run_biject(const BijectOptions& opt) {
  bool any_failed = false;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json parsed = json::parse(line);
      std::cout << from_matrix_hub(opt.to, to_matrix_hub(opt.from, parsed)).dump()
                << '\n';
    } catch (const std::exception& e) {
      std::cout << json{{"error", e.what()}}.dump() << '\n';
      any_failed = true;
    }
  }
  return any_failed ? kExitCheckFailed : kExitOk;
}

// --------------------------------------------------------------- verify ----

struct VerifyOptions {
  std::string suite = "default";
  int n_max = -1;  // < 0 keeps the per-suite defaults
  std::string format = "json";
  std::vector<std::string> ids;
};

void print_markdown(const std::vector<bl::verifier::Report>& reports) {
  std::cout << "| check | n | result | ms | claim |\n"
            << "|---|---|---|---|---|\n";
  for (const auto& report : reports) {
    std::cout << "| " << report.id << " | " << report.n << " | "
              << (report.pass ? "pass" : "FAIL") << " | " << report.millis
              << " | " << report.claim << " |\n";
  }
}

int run_verify(const VerifyOptions& opt) {
  bl::verifier::SuiteOptions suite;
  if (!opt.ids.empty()) suite.ids = opt.ids;
  suite.identities = opt.suite == "default" || opt.suite == "identities";
  suite.interpretations =
      opt.suite == "default" || opt.suite == "interpretations";
  suite.andrews = opt.suite == "default" || opt.suite == "andrews";
  if (opt.n_max >= 0) {
    suite.identities_n_max = opt.n_max;
    suite.interpretations_n_max = opt.n_max;
    suite.andrews_n_max = opt.n_max;
  }
  const std::vector<bl::verifier::Report> reports = bl::verifier::run_suite(suite);
  bool all_pass = true;
  if (opt.format == "markdown") {
    print_markdown(reports);
    for (const auto& report : reports) all_pass = all_pass && report.pass;
    std::cout << "\n" << (all_pass ? "all checks passed" : "CHECKS FAILED")
              << " (" << reports.size() << " reports)\n";
  } else {
    for (const auto& report : reports) {
      std::cout << bl::verifier::report_to_json(report).dump() << '\n';
      all_pass = all_pass && report.pass;
    }
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

// --------------------------------------------------------------- sample ----

struct SampleOptions {
  std::string family;
  int n = 0;
  std::uint64_t seed = 0;
  long long count = 1;
  bool roundtrip = false;
};

int run_sample(const SampleOptions& opt) {
  const bl::verifier::FamilySpec family = bl::verifier::parse_family(opt.family);
  if (family.kind != bl::verifier::FamilySpec::Kind::Matrices) {
    throw std::invalid_argument("sample supports matrix families only");
  }
  if (opt.count < 0) throw std::invalid_argument("--count must be nonnegative");
  bool any_failed = false;
  for (long long i = 0; i < opt.count; ++i) {
    // Sample i uses seed + i, so a run of C samples is reproducible and each
    // sample is independently recomputable.
    const bl::matrices::TwoRowMatrix m =
        bl::matrices::sample_matrix(opt.n, family.matrix_class, opt.seed + i);
    json out = bl::io::matrix_to_json(m);
    if (opt.roundtrip) {
      const bl::matrices::TwoRowMatrix via_deal =
          bl::bijections::deal_to_matrix(bl::bijections::matrix_to_deal(m));
      const bl::matrices::TwoRowMatrix via_path =
          bl::bijections::path_to_matrix(bl::bijections::matrix_to_path(m));
      if (via_deal != m || via_path != m) {
        out = json{{"error", "round trip mismatch"},
                   {"matrix", bl::io::matrix_to_json(m)}};
        any_failed = true;
      }
    }
    std::cout << out.dump() << '\n';
  }
  return any_failed ? kExitCheckFailed : kExitOk;
}

// ----------------------------------------------------------------- oeis ----

struct OeisOptions {
  std::vector<std::string> ids;
  int depth = 10;
  std::string cache_dir;
  bool online = false;
  bool local = false;
};

int run_oeis(const OeisOptions& opt) {
  const std::vector<std::string> ids =
      opt.ids.empty() ? bl::oeis::known_sequence_ids() : opt.ids;
  if (opt.local) {
    for (const std::string& id : ids) {
      const bl::oeis::SequenceRef ref = bl::oeis::make_sequence_ref(id, opt.depth);
      json terms = json::array();
      for (const bl::BigCount& term : ref.local_prefix) terms.push_back(term.str());
      std::cout << json{{"id", id}, {"terms", terms}}.dump() << '\n';
    }
    return kExitOk;
  }
  const std::filesystem::path cache = opt.cache_dir.empty()
                                          ? bl::oeis::default_cache_dir()
                                          : std::filesystem::path(opt.cache_dir);
  const bl::oeis::NetworkPolicy policy = opt.online
                                             ? bl::oeis::NetworkPolicy::AllowNetwork
                                             : bl::oeis::NetworkPolicy::OfflineOnly;
  bool all_pass = true;
  for (const std::string& id : ids) {
    const bl::oeis::SequenceRef ref = bl::oeis::make_sequence_ref(id, opt.depth);
    const bl::verifier::Report report =
        bl::oeis::cross_check(ref, opt.depth, cache, policy);
    std::cout << bl::verifier::report_to_json(report).dump() << '\n';
    all_pass = all_pass && report.pass;
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

// --------------------------------------------------------------- report ----

struct ReportOptions {
  std::string format = "json";
  int prefix_depth = 16;
};

int run_report(const ReportOptions& opt) {
  bl::verifier::SuiteOptions suite;  // default bounds
  std::vector<bl::verifier::Report> reports = bl::verifier::run_suite(suite);
  for (const std::string& id : bl::oeis::known_sequence_ids()) {
    reports.push_back(bl::oeis::prefix_consistency(id, opt.prefix_depth));
  }
  bool all_pass = true;
  for (const auto& report : reports) all_pass = all_pass && report.pass;
  if (opt.format == "markdown") {
    print_markdown(reports);
    std::cout << "\n" << (all_pass ? "all checks passed" : "CHECKS FAILED")
              << " (" << reports.size() << " reports)\n";
  } else {
    for (const auto& report : reports) {
      std::cout << bl::verifier::report_to_json(report).dump() << '\n';
    }
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumeration, bijections, and identity checks for card "
               "deals, two-row matrices over {1,2,3}, and labeled Delannoy "
               "paths"};
  app.require_subcommand(1);

  const std::string family_help =
      "deals:barrucand|deals:franel|deals:hanna|matrices:abelian|"
      "matrices:offset:<a>|matrices:hanna|paths";

  CountOptions count_opt;
  CLI::App* count = app.add_subcommand("count", "count a family, optionally by statistics");
  count->add_option("--family", count_opt.family, family_help)->required();
  count->add_option("--n", count_opt.n, "size parameter")->required();
  auto* count_by = count->add_option(
      "--by", count_opt.by,
      "comma-separated statistics to key the count by (enumeration only)");
  count->add_flag("--closed-form", count_opt.closed_form,
                  "evaluate the closed form instead of enumerating")
      ->excludes(count_by);
  count->add_option("--format", count_opt.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  EnumerateOptions enum_opt;
  CLI::App* enumerate = app.add_subcommand("enumerate", "list every member of a family as JSON lines");
  enumerate->add_option("--family", enum_opt.family, family_help)->required();
  enumerate->add_option("--n", enum_opt.n, "size parameter")->required();
  enumerate->add_option("--limit", enum_opt.limit, "emit at most this many objects");

  BijectOptions biject_opt;
  CLI::App* biject = app.add_subcommand(
      "biject", "convert JSON objects between representations, one per line");
  biject->add_option("--from", biject_opt.from, "deal|matrix|path")
      ->required()
      ->check(CLI::IsMember({"deal", "matrix", "path"}));
  biject->add_option("--to", biject_opt.to, "deal|matrix|path")
      ->required()
      ->check(CLI::IsMember({"deal", "matrix", "path"}));

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "run identity and double-counting checks");
  verify->add_option("--suite", verify_opt.suite, "default|identities|interpretations|andrews")
      ->check(CLI::IsMember({"default", "identities", "interpretations", "andrews"}));
  verify->add_option("--n-max", verify_opt.n_max,
                     "override the selected suite's n bound");
  verify->add_option("--format", verify_opt.format, "json|markdown")
      ->check(CLI::IsMember({"json", "markdown"}));
  verify->add_option("--id", verify_opt.ids,
                     "restrict to these check ids (repeatable; 'Eq5' matches "
                     "every offset)");

  SampleOptions sample_opt;
  CLI::App* sample = app.add_subcommand("sample", "draw seeded uniform samples from a matrix class");
  sample->add_option("--family", sample_opt.family,
                     "matrices:hanna|matrices:abelian|matrices:offset:<a>")
      ->required();
  sample->add_option("--n", sample_opt.n, "matrix width (at most 16)")->required();
  sample->add_option("--seed", sample_opt.seed, "base seed; sample i uses seed+i");
  sample->add_option("--count", sample_opt.count, "number of samples");
  sample->add_flag("--roundtrip", sample_opt.roundtrip,
                   "convert each sample to deal and path and back, failing on "
                   "any mismatch");

  OeisOptions oeis_opt;
  CLI::App* oeis = app.add_subcommand("oeis", "cross-check closed forms against published terms");
  oeis->add_option("--id", oeis_opt.ids,
                   "sequence ids (repeatable; default: all known)");
  oeis->add_option("--depth", oeis_opt.depth, "terms to compare");
  oeis->add_option("--cache-dir", oeis_opt.cache_dir,
                   "b-file cache (default: BIJECTLAB_CACHE or user cache dir)");
  oeis->add_flag("--online", oeis_opt.online,
                 "allow downloading missing b-files (default: cache only)");
  oeis->add_flag("--local", oeis_opt.local,
                 "print locally computed prefixes; no cache or network");

  ReportOptions report_opt;
  CLI::App* report = app.add_subcommand(
      "report", "default verification suite plus sequence-prefix consistency");
  report->add_option("--format", report_opt.format, "json|markdown")
      ->check(CLI::IsMember({"json", "markdown"}));
  report->add_option("--prefix-depth", report_opt.prefix_depth,
                     "terms per sequence in the consistency rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return kExitUsage;
  }

  try {
    if (count->parsed()) return run_count(count_opt);
    if (enumerate->parsed()) return run_enumerate(enum_opt);
    if (biject->parsed()) return run_biject(biject_opt);
    if (verify->parsed()) return run_verify(verify_opt);
    if (sample->parsed()) return run_sample(sample_opt);
    if (oeis->parsed()) return run_oeis(oeis_opt);
    if (report->parsed()) return run_report(report_opt);
  } catch (const std::logic_error& e) {
    // invalid_argument/domain_error from flag validation and range checks
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
