#include "bijectlab/matrices.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace bijectlab::matrices {

namespace {

struct RowCounts {
  int ones = 0;
  int twos = 0;
  int threes = 0;
};

RowCounts count_row(const std::string& row) {
  RowCounts c;
  for (char ch : row) {
    if (ch == '1') ++c.ones;
    else if (ch == '2') ++c.twos;
    else ++c.threes;
  }
  return c;
}

void check_row(const std::string& row) {
  for (char ch : row) {
    if (ch < '1' || ch > '3') {
      throw std::invalid_argument(std::string("matrix row symbol out of {1,2,3}: ") + ch);
    }
  }
}

}  // namespace

TwoRowMatrix make_matrix(std::string top, std::string bottom) {
  if (top.size() != bottom.size()) {
    throw std::invalid_argument("matrix rows differ in length");
  }
  check_row(top);
  check_row(bottom);
  TwoRowMatrix m;
  m.n = static_cast<int>(top.size());
  m.top = std::move(top);
  m.bottom = std::move(bottom);
  return m;
}

std::string class_name(const MatrixClass& cls) {
  switch (cls.kind) {
    case MatrixClass::Kind::Abelian: return "abelian";
    case MatrixClass::Kind::Offset: return "offset:" + std::to_string(cls.offset_a);
    case MatrixClass::Kind::Hanna: return "hanna";
  }
  return "?";
}

Classification classify(const TwoRowMatrix& m) {
  const RowCounts top = count_row(m.top);
  const RowCounts bottom = count_row(m.bottom);
  Classification result;
  result.is_hanna = top.ones == bottom.ones;
  if (result.is_hanna) {
    result.offset_a = top.threes - bottom.threes;
    result.is_abelian = top.threes == bottom.threes;
  }
  return result;
}

bool matches_class(const TwoRowMatrix& m, const MatrixClass& cls) {
  const Classification c = classify(m);
  switch (cls.kind) {
    case MatrixClass::Kind::Abelian: return c.is_abelian;
    case MatrixClass::Kind::Offset: return c.is_hanna && *c.offset_a == cls.offset_a;
    case MatrixClass::Kind::Hanna: return c.is_hanna;
  }
  return false;
}

int stat_ones_columns(const TwoRowMatrix& m) {
  int count = 0;
  for (int i = 0; i < m.n; ++i) {
    count += m.top[i] == '1' && m.bottom[i] == '1';
  }
  return count;
}

int stat_top_non1(const TwoRowMatrix& m) {
  int count = 0;
  for (char ch : m.top) count += ch != '1';
  return count;
}

int stat_pq_columns(const TwoRowMatrix& m) {
  int count = 0;
  for (int i = 0; i < m.n; ++i) {
    count += m.top[i] > '1' && m.bottom[i] < '3';
  }
  return count;
}

int stat_row_ones(const TwoRowMatrix& m) {
  const RowCounts top = count_row(m.top);
  const RowCounts bottom = count_row(m.bottom);
  if (top.ones != bottom.ones) {
    throw std::invalid_argument("stat_row_ones: rows have unequal 1-counts");
  }
  return top.ones;
}

void for_each_matrix_brute(int n, const MatrixClass& cls,
                           const std::function<void(const TwoRowMatrix&)>& visit) {
  if (n < 0) throw std::invalid_argument("matrix enumeration: n must be nonnegative");
  TwoRowMatrix m;
  m.n = n;
  m.top.assign(n, '1');
  m.bottom.assign(n, '1');
  // Odometer over the concatenation top+bottom, last cell least significant,
  // i.e. row-major lexicographic order.
  while (true) {
    if (matches_class(m, cls)) visit(m);
    int pos = 2 * n - 1;
    for (; pos >= 0; --pos) {
      char& cell = pos < n ? m.top[pos] : m.bottom[pos - n];
      if (cell < '3') {
        ++cell;
        break;
      }
      cell = '1';
    }
    if (pos < 0) break;
  }
}

namespace {

// Size-k subsets of {0..n-1} in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> subset(k);
  for (int i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    visit(subset);
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

// Writes symbols onto row[positions[...]]: '2' at the chosen subset of the
// free positions, '3' elsewhere.
void place_23(std::string& row, const std::vector<int>& free_positions,
              const std::vector<int>& two_subset) {
  for (int pos : free_positions) row[pos] = '3';
  for (int idx : two_subset) row[free_positions[idx]] = '2';
}

std::vector<int> complement_positions(int n, const std::vector<int>& ones) {
  std::vector<int> free_positions;
  free_positions.reserve(n - ones.size());
  std::size_t next = 0;
  for (int i = 0; i < n; ++i) {
    if (next < ones.size() && ones[next] == i) {
      ++next;
    } else {
      free_positions.push_back(i);
    }
  }
  return free_positions;
}

void fill_hanna_row(std::string& row, const std::vector<int>& free_positions,
                    std::size_t idx, const std::function<void()>& done) {
  if (idx == free_positions.size()) {
    done();
    return;
  }
  for (char ch : {'2', '3'}) {
    row[free_positions[idx]] = ch;
    fill_hanna_row(row, free_positions, idx + 1, done);
  }
}

}  // namespace

void for_each_matrix_constructive(
    int n, const MatrixClass& cls,
    const std::function<void(const TwoRowMatrix&)>& visit) {
  if (n < 0) throw std::invalid_argument("matrix enumeration: n must be nonnegative");
  TwoRowMatrix m;
  m.n = n;
  m.top.assign(n, '1');
  m.bottom.assign(n, '1');
  for (int ones = 0; ones <= n; ++ones) {
    const int rest = n - ones;
    for_each_subset(n, ones, [&](const std::vector<int>& top_ones) {
      const std::vector<int> top_free = complement_positions(n, top_ones);
      for (int pos : top_ones) m.top[pos] = '1';
      for_each_subset(n, ones, [&](const std::vector<int>& bottom_ones) {
        const std::vector<int> bottom_free = complement_positions(n, bottom_ones);
        for (int pos : bottom_ones) m.bottom[pos] = '1';
        if (cls.kind == MatrixClass::Kind::Hanna) {
          fill_hanna_row(m.top, top_free, 0, [&] {
            fill_hanna_row(m.bottom, bottom_free, 0, [&] { visit(m); });
          });
        } else {
          // Abelian is Offset(0): top gets t 2s, bottom t+a 2s.
          const int a = cls.kind == MatrixClass::Kind::Offset ? cls.offset_a : 0;
          for (int t = std::max(0, -a); t <= rest && t + a <= rest; ++t) {
            for_each_subset(rest, t, [&](const std::vector<int>& top_twos) {
              place_23(m.top, top_free, top_twos);
              for_each_subset(rest, t + a, [&](const std::vector<int>& bottom_twos) {
                place_23(m.bottom, bottom_free, bottom_twos);
                visit(m);
              });
            });
          }
        }
      });
    });
  }
}

void for_each_matrix(int n, const MatrixClass& cls,
                     const std::function<void(const TwoRowMatrix&)>& visit) {
  if (n > kMaxEnumerationN) {
    throw std::domain_error("matrix enumeration: exhaustive bound " +
                            std::to_string(kMaxEnumerationN) + " exceeded");
  }
  if (n <= kBruteEnumerationN) {
    for_each_matrix_brute(n, cls, visit);
  } else {
    for_each_matrix_constructive(n, cls, visit);
  }
}

std::vector<TwoRowMatrix> enumerate_matrices(int n, const MatrixClass& cls) {
  std::vector<TwoRowMatrix> result;
  for_each_matrix(n, cls, [&](const TwoRowMatrix& m) { result.push_back(m); });
  return result;
}

namespace {

// Unbiased symbol draw: 2^64 mod 3 == 1, so rejecting the single top value
// keeps the remaining range an exact multiple of 3.
char draw_symbol(std::mt19937_64& rng) {
  std::uint64_t raw = rng();
  while (raw == UINT64_MAX) raw = rng();
  return static_cast<char>('1' + raw % 3);
}

}  // namespace

TwoRowMatrix sample_matrix(int n, const MatrixClass& cls, std::uint64_t seed) {
  if (n < 0 || n > kMaxSampleN) {
    throw std::invalid_argument("sample_matrix: n must be in [0, " +
                                std::to_string(kMaxSampleN) + "]");
  }
  std::mt19937_64 rng(seed);
  TwoRowMatrix m;
  m.n = n;
  m.top.assign(n, '1');
  m.bottom.assign(n, '1');
  constexpr long long kMaxAttempts = 10'000'000;
  for (long long attempt = 0; attempt < kMaxAttempts; ++attempt) {
    for (int i = 0; i < n; ++i) m.top[i] = draw_symbol(rng);
    for (int i = 0; i < n; ++i) m.bottom[i] = draw_symbol(rng);
    if (matches_class(m, cls)) return m;
  }
  throw std::runtime_error("sample_matrix: rejection cap reached for class " +
                           class_name(cls));
}

}  // namespace bijectlab::matrices
