#include "bijectlab/oeis_client.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <httplib.h>

#include "bijectlab/exact_counts.hpp"

namespace bijectlab::oeis {

namespace fs = std::filesystem;

namespace {

counts::ExpressionId expression_for(const std::string& oeis_id) {
  if (oeis_id == "A000172") return {counts::ExprTag::FranelL};
  if (oeis_id == "A005259") return {counts::ExprTag::AperyR};
  if (oeis_id == "A084771") return {counts::ExprTag::Chain3};
  throw std::invalid_argument("no local closed form for " + oeis_id);
}

// "A084771" -> "084771"; anything but 'A' + 6 digits is rejected before it
// can reach the filesystem or a URL.
std::string id_digits(const std::string& oeis_id) {
  if (oeis_id.size() != 7 || oeis_id.front() != 'A' ||
      !std::all_of(oeis_id.begin() + 1, oeis_id.end(),
                   [](unsigned char ch) { return std::isdigit(ch); })) {
    throw std::invalid_argument("malformed OEIS id: " + oeis_id);
  }
  return oeis_id.substr(1);
}

bool is_integer_token(const std::string& token) {
  if (token.empty()) return false;
  const std::size_t start = token.front() == '-' ? 1 : 0;
  if (start == token.size()) return false;
  return std::all_of(token.begin() + start, token.end(),
                     [](unsigned char ch) { return std::isdigit(ch); });
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fetch_error("cannot read cache file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file_atomically(const fs::path& path, const std::string& text) {
  const fs::path temp = path.string() + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw fetch_error("cannot write cache file " + temp.string());
    out << text;
    if (!out.flush()) {
      throw fetch_error("cannot write cache file " + temp.string());
    }
  }
  fs::rename(temp, path);  // atomic publish: readers see the old file or the new one
}

}  // namespace

std::vector<std::string> known_sequence_ids() {
  return {"A000172", "A005259", "A084771"};
}

SequenceRef make_sequence_ref(const std::string& oeis_id, int prefix_len) {
  const counts::ExpressionId expr = expression_for(oeis_id);
  if (prefix_len < 0) {
    throw std::invalid_argument("prefix length must be nonnegative");
  }
  SequenceRef ref;
  ref.oeis_id = oeis_id;
  ref.local_prefix.reserve(prefix_len);
  for (int n = 0; n < prefix_len; ++n) {
    ref.local_prefix.push_back(counts::eval_expression(expr, n));
  }
  return ref;
}

BFile parse_bfile(const std::string& text) {
  BFile bfile;
  std::istringstream lines(text);
  std::string line;
  long long line_number = 0;
  bool seen_term = false;
  while (std::getline(lines, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string index_token, value_token, extra;
    if (!(fields >> index_token)) continue;  // blank line
    if (index_token.front() == '#') continue;
    const auto fail = [&](const std::string& what) -> parse_error {
      return parse_error("b-file line " + std::to_string(line_number) + ": " +
                         what);
    };
    if (!(fields >> value_token) || (fields >> extra)) {
      throw fail("expected exactly 'index value'");
    }
    if (!is_integer_token(index_token) || !is_integer_token(value_token)) {
      throw fail("non-numeric field");
    }
    const long long index = std::stoll(index_token);
    if (!seen_term) {
      bfile.first_index = index;
      seen_term = true;
    } else if (index !=
               bfile.first_index + static_cast<long long>(bfile.terms.size())) {
      throw fail("non-consecutive index " + index_token);
    }
    bfile.terms.emplace_back(value_token);
  }
  return bfile;
}

fs::path default_cache_dir() {
  if (const char* dir = std::getenv("BIJECTLAB_CACHE")) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME")) {
    return fs::path(xdg) / "bijectlab";
  }
  if (const char* home = std::getenv("HOME")) {
    return fs::path(home) / ".cache" / "bijectlab";
  }
  return fs::path(".bijectlab-cache");
}

std::string fetch_bfile_text(const std::string& oeis_id,
                             const fs::path& cache_dir,
                             NetworkPolicy policy) {
  const std::string digits = id_digits(oeis_id);
  const fs::path cached = cache_dir / (oeis_id + ".bfile");
  if (fs::exists(cached)) return read_file(cached);
  if (policy == NetworkPolicy::OfflineOnly) {
    throw fetch_error("offline and no cached b-file for " + oeis_id + " at " +
                      cached.string());
  }
  httplib::Client client("https://oeis.org");
  client.set_follow_location(true);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  const std::string url = "/" + oeis_id + "/b" + digits + ".txt";
  const httplib::Result result = client.Get(url);
  if (!result) {
    throw fetch_error("download of " + url + " failed: " +
                      httplib::to_string(result.error()));
  }
  if (result->status != 200) {
    throw fetch_error("download of " + url + " failed: HTTP " +
                      std::to_string(result->status));
  }
  fs::create_directories(cache_dir);
  write_file_atomically(cached, result->body);
  return result->body;
}

std::vector<BigCount> fetch_terms(const std::string& oeis_id,
                                  const fs::path& cache_dir,
                                  NetworkPolicy policy) {
  return parse_bfile(fetch_bfile_text(oeis_id, cache_dir, policy)).terms;
}

verifier::Report cross_check(const SequenceRef& ref, int depth,
                             const fs::path& cache_dir, NetworkPolicy policy) {
  const auto start = std::chrono::steady_clock::now();
  if (depth < 0 ||
      depth > static_cast<int>(ref.local_prefix.size())) {
    throw std::invalid_argument("cross_check depth exceeds local prefix");
  }
  const BFile bfile = parse_bfile(fetch_bfile_text(ref.oeis_id, cache_dir, policy));
  const long long available =
      bfile.first_index + static_cast<long long>(bfile.terms.size());
  if (depth > available) {
    throw std::invalid_argument("cross_check depth exceeds fetched terms");
  }
  verifier::Report report;
  report.id = "oeis:" + ref.oeis_id;
  report.n = depth;
  report.claim = "locally computed prefix matches the published " +
                 ref.oeis_id + " terms";
  for (long long n = std::max(bfile.first_index, 0LL); n < depth; ++n) {
    const BigCount& fetched = bfile.terms[n - bfile.first_index];
    if (fetched != ref.local_prefix[n]) {
      report.mismatches.push_back(
          {{static_cast<int>(n)}, ref.local_prefix[n], fetched});
    }
  }
  report.pass = report.mismatches.empty();
  report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return report;
}

counts::IdentityId consistency_identity(const std::string& oeis_id) {
  if (oeis_id == "A000172") return {counts::IdentityTag::Eq1};
  if (oeis_id == "A005259") return {counts::IdentityTag::Eq2};
  if (oeis_id == "A084771") return {counts::IdentityTag::Eq3};
  throw std::invalid_argument("no local closed form for " + oeis_id);
}

verifier::Report prefix_consistency(const std::string& oeis_id, int depth) {
  const auto start = std::chrono::steady_clock::now();
  const counts::IdentityId identity = consistency_identity(oeis_id);
  verifier::Report report;
  report.id = "prefix:" + oeis_id;
  report.n = depth;
  report.claim = "all closed forms for " + oeis_id + " agree termwise";
  for (int n = 0; n < depth; ++n) {
    const counts::ScalarCheck check = counts::check_scalar_identity(identity, n);
    for (std::size_t side = 1; side < check.sides.size(); ++side) {
      if (check.sides[side] != check.sides.front()) {
        report.mismatches.push_back({{n, static_cast<int>(side)},
                                     check.sides.front(), check.sides[side]});
      }
    }
  }
  report.pass = report.mismatches.empty();
  report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return report;
}

}  // namespace bijectlab::oeis
