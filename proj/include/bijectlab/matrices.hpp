#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bijectlab::matrices {

// A 2 x n array over {1,2,3}, rows stored as digit strings ("13132").
// Carries no class tag; class membership is always a predicate.
struct TwoRowMatrix {
  int n = 0;
  std::string top;
  std::string bottom;

  bool operator==(const TwoRowMatrix&) const = default;
};

// Validates digits and row lengths; throws std::invalid_argument.
TwoRowMatrix make_matrix(std::string top, std::string bottom);

struct MatrixClass {
  enum class Kind { Abelian, Offset, Hanna };
  Kind kind = Kind::Abelian;
  int offset_a = 0;  // Offset only; Offset(0) coincides with Abelian

  static MatrixClass abelian() { return {Kind::Abelian, 0}; }
  static MatrixClass offset(int a) { return {Kind::Offset, a}; }
  static MatrixClass hanna() { return {Kind::Hanna, 0}; }
};

std::string class_name(const MatrixClass& cls);

struct Classification {
  bool is_abelian = false;
  bool is_hanna = false;
  // Defined iff is_hanna: (#3s in top) - (#3s in bottom).
  std::optional<int> offset_a;
};

Classification classify(const TwoRowMatrix& m);
bool matches_class(const TwoRowMatrix& m, const MatrixClass& cls);

// Number of (1/1) columns.
int stat_ones_columns(const TwoRowMatrix& m);
// Count of 2s and 3s in the top row.
int stat_top_non1(const TwoRowMatrix& m);
// Columns (p/q) with p > 1 and q < 3.
int stat_pq_columns(const TwoRowMatrix& m);
// Common per-row count of 1s; throws std::invalid_argument on a non-Hanna
// matrix.
int stat_row_ones(const TwoRowMatrix& m);

// Enumeration switches from the brute 3^(2n) filter (the trusted oracle) to
// constructive generation above kBruteEnumerationN; kMaxEnumerationN caps the
// output size at tens of millions of matrices.
inline constexpr int kBruteEnumerationN = 6;
inline constexpr int kMaxEnumerationN = 9;
inline constexpr int kMaxSampleN = 16;

// Scans all 3^(2n) matrices in row-major lexicographic order (top row, then
// bottom row) and visits those in the class.
void for_each_matrix_brute(int n, const MatrixClass& cls,
                           const std::function<void(const TwoRowMatrix&)>& visit);

// Builds class members directly: per-row 1-count ascending, then top/bottom
// 1-position subsets in lexicographic order, then 2/3 fills (for Offset and
// Abelian: 2-count of the top remainder ascending, then 2-position subsets).
// Same set as the brute scan, different order.
void for_each_matrix_constructive(
    int n, const MatrixClass& cls,
    const std::function<void(const TwoRowMatrix&)>& visit);

// Brute order up to kBruteEnumerationN, constructive past it. Throws
// std::domain_error past kMaxEnumerationN.
void for_each_matrix(int n, const MatrixClass& cls,
                     const std::function<void(const TwoRowMatrix&)>& visit);

std::vector<TwoRowMatrix> enumerate_matrices(int n, const MatrixClass& cls);

// Uniform over the class by rejection from the 3^(2n) cube with a seeded
// mt19937_64 (cells drawn top row left to right, then bottom row). Same seed,
// same matrix, on any platform. Throws std::runtime_error if 10^7 attempts
// all miss and std::invalid_argument past kMaxSampleN.
TwoRowMatrix sample_matrix(int n, const MatrixClass& cls, std::uint64_t seed);

}  // namespace bijectlab::matrices
