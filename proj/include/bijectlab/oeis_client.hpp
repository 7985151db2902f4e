#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "bijectlab/bigcount.hpp"
#include "bijectlab/verifier.hpp"

namespace bijectlab::oeis {

// Download or parse trouble; a failed download never disturbs an existing
// cache file.
struct fetch_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// OfflineOnly resolves from the cache alone and never opens a connection.
enum class NetworkPolicy { OfflineOnly, AllowNetwork };

// An OEIS id paired with the closed-form prefix computed locally; the prefix
// is derived from eval_expression at build time, never hand-entered.
struct SequenceRef {
  std::string oeis_id;
  std::vector<BigCount> local_prefix;  // local_prefix[n] = closed form at n
};

// The cross-checked sequences:
//   A000172 - Franel numbers, sum_k C(n,k)^3
//   A005259 - Apery numbers, sum_k C(n,k)^2 C(n+k,k)^2
//   A084771 - sum_k C(n,k)^2 4^k
std::vector<std::string> known_sequence_ids();

// Builds the ref with prefix_len locally computed terms. Throws
// std::invalid_argument for ids outside known_sequence_ids().
SequenceRef make_sequence_ref(const std::string& oeis_id, int prefix_len);

// Parsed b-file: "index value" lines with consecutive indices; the first
// index is the sequence offset declared by the file itself.
struct BFile {
  long long first_index = 0;
  std::vector<BigCount> terms;
};

// '#' comments and blank lines are skipped; anything else malformed raises
// parse_error naming the 1-based line.
BFile parse_bfile(const std::string& text);

// BIJECTLAB_CACHE if set, else the user cache directory
// (XDG_CACHE_HOME|~/.cache)/bijectlab, else ./.bijectlab-cache.
std::filesystem::path default_cache_dir();

// Raw b-file text for the id ("Adddddd"), served from
// <cache_dir>/<ID>.bfile when present. A miss under AllowNetwork downloads
// https://oeis.org/<ID>/b<digits>.txt and caches it atomically
// (write-temp-then-rename); a miss under OfflineOnly is a fetch_error.
std::string fetch_bfile_text(const std::string& oeis_id,
                             const std::filesystem::path& cache_dir,
                             NetworkPolicy policy);

// Parsed terms of the cached-or-fetched b-file.
std::vector<BigCount> fetch_terms(const std::string& oeis_id,
                                  const std::filesystem::path& cache_dir,
                                  NetworkPolicy policy);

// Compares ref.local_prefix[n] with the b-file term at index n for
// n = 0..depth-1, honoring the b-file's declared first index (indices before
// it cannot be checked and are skipped). Throws std::invalid_argument when
// depth exceeds either side; fetch/parse errors propagate. The report id is
// "oeis:<ID>".
verifier::Report cross_check(const SequenceRef& ref, int depth,
                             const std::filesystem::path& cache_dir,
                             NetworkPolicy policy);

// The identity whose sides all evaluate the sequence (Eq1 for A000172, Eq2
// for A005259, Eq3 for A084771).
counts::IdentityId consistency_identity(const std::string& oeis_id);

// Fully offline sanity check of the local prefix: every closed form of the
// sequence agrees termwise for n = 0..depth-1. Mismatch keys are {n, side};
// the report id is "prefix:<ID>". No cache or network involved.
verifier::Report prefix_consistency(const std::string& oeis_id, int depth);

}  // namespace bijectlab::oeis
