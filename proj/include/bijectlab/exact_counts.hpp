#pragma once

#include <span>
#include <string>
#include <vector>

#include "bijectlab/bigcount.hpp"

namespace bijectlab::counts {

// C(n,k) as an exact big integer. Out-of-range indices (k < 0, k > n, n < 0)
// give 0; the generalized-Barrucand and Andrews sums rely on this convention.
BigCount binom(long long n, long long k);

// The closed-form expressions handled by eval_expression/summand.
//
//   FranelL      sum_k C(n,k)^3
//   FranelR      sum_k C(n,k)^2 C(2k,n)
//   AperyL       sum_k C(n,k) C(n+k,k) sum_j C(k,j)^3
//   AperyR       sum_k C(n,k)^2 C(n+k,k)^2
//   BarrucandL   sum_k C(n,k) sum_j C(k,j)^3
//   BarrucandR   sum_k C(n,k)^2 C(2k,k)
//   GenBarrL(a)  sum_k C(n,k) sum_j C(k,j)^2 C(k,j-a)
//   GenBarrR(a)  sum_k C(n,k)^2 C(2k,k-a)
//   Chain1       sum_k C(n,k) C(2k,k) 2^k
//   Chain2       sum_k C(n,k) C(2n-k,n) 3^k
//   Chain3       sum_k C(n,k)^2 4^k
//   Chain4       sum_{k<=n/2} C(n,2k) C(2k,k) 4^k 5^(n-2k)
//   AndrewsL(k)  sum_a C(k,a) C(n-k,a) C(n+k+a,n)
//   AndrewsR(k)  C(n+k,k) C(n+k,n-k)
//   Prop4a       sum_{i,j} C(n,j) C(n-j,i) C(2n-2i-2j,n-j) 3^(i+j)
enum class ExprTag {
  FranelL,
  FranelR,
  AperyL,
  AperyR,
  BarrucandL,
  BarrucandR,
  GenBarrL,
  GenBarrR,
  Chain1,
  Chain2,
  Chain3,
  Chain4,
  AndrewsL,
  AndrewsR,
  Prop4a,
};

struct ExpressionId {
  ExprTag tag;
  // Offset a for GenBarrL/GenBarrR (may be negative), fixed k for
  // AndrewsL/AndrewsR. Ignored by the other tags.
  long long param = 0;
};

// Number of summation indices of the expression: 2 for the double sums
// (AperyL, BarrucandL, GenBarrL, Prop4a), 0 for the closed product AndrewsR,
// 1 for the single sums.
int summand_arity(ExprTag tag);

std::string expression_name(const ExpressionId& expr);

// One term of the sum; out-of-range indices give 0, wrong arity throws
// std::invalid_argument.
BigCount summand(const ExpressionId& expr, long long n,
                 std::span<const long long> indices);

// Exact value of the expression at n. Negative n (or an Andrews parameter
// outside [0, n]) throws std::invalid_argument.
BigCount eval_expression(const ExpressionId& expr, long long n);

enum class IdentityTag { Eq1, Eq2, Eq3, Eq4, Eq5, Eq6 };

struct IdentityId {
  IdentityTag tag;
  long long param = 0;  // a for Eq5, k for Eq6
};

std::string identity_name(const IdentityId& id);

// All expressions equated by the identity (four for Eq3, two otherwise).
std::vector<ExpressionId> identity_expressions(const IdentityId& id);

struct ScalarCheck {
  std::string id;
  long long n = 0;
  bool pass = false;
  std::vector<BigCount> sides;
};

// Evaluates every side of the identity at n; pass iff all agree exactly.
ScalarCheck check_scalar_identity(const IdentityId& id, long long n);

}  // namespace bijectlab::counts
