#include <doctest.h>

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bijectlab/bigcount.hpp"
#include "bijectlab/exact_counts.hpp"
#include "bijectlab/oeis_client.hpp"

using namespace bijectlab;
using namespace bijectlab::oeis;
namespace fs = std::filesystem;

namespace {

// Fresh directory under the system temp root, removed on scope exit.
struct TempDir {
  fs::path path;
  TempDir() {
    static std::atomic<int> counter{0};
    path = fs::temp_directory_path() /
           ("bijectlab-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

const std::string kFranelBFile =
    "# b-file fixture\n"
    "0 1\n"
    "1 2\n"
    "\n"
    "2 10\r\n"
    "3 56\n"
    "4 346\n"
    "5 2252\n";

}  // namespace

TEST_CASE("known sequence ids") {
  CHECK(known_sequence_ids() ==
        std::vector<std::string>{"A000172", "A005259", "A084771"});
}

TEST_CASE("make_sequence_ref computes the prefix locally") {
  const auto prefix = [](const std::string& id) {
    std::vector<long long> out;
    for (const BigCount& term : make_sequence_ref(id, 5).local_prefix) {
      out.push_back(term.convert_to<long long>());
    }
    return out;
  };
  CHECK(prefix("A000172") == std::vector<long long>{1, 2, 10, 56, 346});
  CHECK(prefix("A005259") == std::vector<long long>{1, 5, 73, 1445, 33001});
  CHECK(prefix("A084771") == std::vector<long long>{1, 5, 33, 245, 1921});
  CHECK(make_sequence_ref("A000172", 0).local_prefix.empty());
  CHECK_THROWS_AS((void)make_sequence_ref("A000045", 5),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)make_sequence_ref("A000172", -1),
                  std::invalid_argument);
}

TEST_CASE("parse_bfile accepts comments, blanks, and CRLF") {
  const BFile bfile = parse_bfile(kFranelBFile);
  CHECK(bfile.first_index == 0);
  REQUIRE(bfile.terms.size() == 6);
  CHECK(bfile.terms[2] == 10);
  CHECK(bfile.terms[5] == 2252);

  const BFile shifted = parse_bfile("5 120\n6 720\n");
  CHECK(shifted.first_index == 5);
  CHECK(shifted.terms == std::vector<BigCount>{120, 720});

  const BFile empty = parse_bfile("# nothing\n\n");
  CHECK(empty.first_index == 0);
  CHECK(empty.terms.empty());
}

TEST_CASE("parse_bfile rejects malformed lines") {
  CHECK_THROWS_WITH_AS((void)parse_bfile("0 1\n2 10\n"),
                       "b-file line 2: non-consecutive index 2", parse_error);
  CHECK_THROWS_WITH_AS((void)parse_bfile("0 one\n"),
                       "b-file line 1: non-numeric field", parse_error);
  CHECK_THROWS_WITH_AS((void)parse_bfile("0 1 9\n"),
                       "b-file line 1: expected exactly 'index value'",
                       parse_error);
  CHECK_THROWS_AS((void)parse_bfile("0\n"), parse_error);
}

TEST_CASE("default_cache_dir honors the override variable") {
  const char* previous = std::getenv("BIJECTLAB_CACHE");
  const std::string saved = previous ? previous : "";
  ::setenv("BIJECTLAB_CACHE", "/tmp/bijectlab-xyz", 1);
  CHECK(default_cache_dir() == fs::path("/tmp/bijectlab-xyz"));
  if (previous) {
    ::setenv("BIJECTLAB_CACHE", saved.c_str(), 1);
  } else {
    ::unsetenv("BIJECTLAB_CACHE");
  }
}

TEST_CASE("offline fetch fails without a cache file") {
  TempDir cache;
  CHECK_THROWS_AS((void)fetch_bfile_text("A000172", cache.path,
                                         NetworkPolicy::OfflineOnly),
                  fetch_error);
}

TEST_CASE("cross_check against a cached b-file") {
  TempDir cache;
  write_file(cache.path / "A000172.bfile", kFranelBFile);

  const SequenceRef ref = make_sequence_ref("A000172", 6);
  const verifier::Report report =
      cross_check(ref, 6, cache.path, NetworkPolicy::OfflineOnly);
  CHECK(report.id == "oeis:A000172");
  CHECK(report.n == 6);
  CHECK(report.pass);
  CHECK(report.mismatches.empty());

  CHECK(fetch_terms("A000172", cache.path, NetworkPolicy::OfflineOnly)
            .size() == 6);
}

TEST_CASE("cross_check reports a corrupted term") {
  TempDir cache;
  write_file(cache.path / "A000172.bfile", "0 1\n1 2\n2 10\n3 57\n4 346\n");

  const SequenceRef ref = make_sequence_ref("A000172", 5);
  const verifier::Report report =
      cross_check(ref, 5, cache.path, NetworkPolicy::OfflineOnly);
  CHECK_FALSE(report.pass);
  REQUIRE(report.mismatches.size() == 1);
  CHECK(report.mismatches[0].key == std::vector<int>{3});
  CHECK(report.mismatches[0].expected == 56);
  CHECK(report.mismatches[0].observed == 57);
}

TEST_CASE("cross_check skips indices below the b-file offset") {
  TempDir cache;
  write_file(cache.path / "A000172.bfile",
             "1 2\n2 10\n3 56\n4 346\n5 2252\n");
  const SequenceRef ref = make_sequence_ref("A000172", 6);
  CHECK(cross_check(ref, 6, cache.path, NetworkPolicy::OfflineOnly).pass);
}

TEST_CASE("cross_check validates the depth") {
  TempDir cache;
  write_file(cache.path / "A000172.bfile", "0 1\n1 2\n");
  const SequenceRef ref = make_sequence_ref("A000172", 4);
  CHECK_THROWS_AS(
      (void)cross_check(ref, 5, cache.path, NetworkPolicy::OfflineOnly),
      std::invalid_argument);  // beyond the local prefix
  CHECK_THROWS_AS(
      (void)cross_check(ref, 3, cache.path, NetworkPolicy::OfflineOnly),
      std::invalid_argument);  // beyond the cached terms
  CHECK(cross_check(ref, 2, cache.path, NetworkPolicy::OfflineOnly).pass);
}

TEST_CASE("consistency_identity maps ids to their identities") {
  CHECK(consistency_identity("A000172").tag == counts::IdentityTag::Eq1);
  CHECK(consistency_identity("A005259").tag == counts::IdentityTag::Eq2);
  CHECK(consistency_identity("A084771").tag == counts::IdentityTag::Eq3);
  CHECK_THROWS_AS((void)consistency_identity("A000045"),
                  std::invalid_argument);
}

TEST_CASE("prefix_consistency agrees across closed forms") {
  for (const std::string& id : known_sequence_ids()) {
    const verifier::Report report = prefix_consistency(id, 16);
    CHECK(report.id == "prefix:" + id);
    CHECK(report.n == 16);
    CHECK(report.pass);
    CHECK(report.mismatches.empty());
  }
}

TEST_CASE("online cross_check (opt-in via BIJECTLAB_ONLINE_TESTS)") {
  if (!std::getenv("BIJECTLAB_ONLINE_TESTS")) return;
  TempDir cache;
  for (const std::string& id : known_sequence_ids()) {
    const SequenceRef ref = make_sequence_ref(id, 15);
    const verifier::Report report =
        cross_check(ref, 15, cache.path, NetworkPolicy::AllowNetwork);
    CAPTURE(id);
    CHECK(report.pass);
    // the download must now be cached for offline reuse
    CHECK(cross_check(ref, 15, cache.path, NetworkPolicy::OfflineOnly).pass);
  }
}
