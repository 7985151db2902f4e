#include "bijectlab/exact_counts.hpp"

#include <algorithm>
#include <stdexcept>

namespace bijectlab::counts {

BigCount binom(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) after this step
  }
  return result;
}

int summand_arity(ExprTag tag) {
  switch (tag) {
    case ExprTag::AperyL:
    case ExprTag::BarrucandL:
    case ExprTag::GenBarrL:
    case ExprTag::Prop4a:
      return 2;
    case ExprTag::AndrewsR:
      return 0;
    default:
      return 1;
  }
}

std::string expression_name(const ExpressionId& expr) {
  switch (expr.tag) {
    case ExprTag::FranelL: return "FranelL";
    case ExprTag::FranelR: return "FranelR";
    case ExprTag::AperyL: return "AperyL";
    case ExprTag::AperyR: return "AperyR";
    case ExprTag::BarrucandL: return "BarrucandL";
    case ExprTag::BarrucandR: return "BarrucandR";
    case ExprTag::GenBarrL: return "GenBarrL(a=" + std::to_string(expr.param) + ")";
    case ExprTag::GenBarrR: return "GenBarrR(a=" + std::to_string(expr.param) + ")";
    case ExprTag::Chain1: return "Chain1";
    case ExprTag::Chain2: return "Chain2";
    case ExprTag::Chain3: return "Chain3";
    case ExprTag::Chain4: return "Chain4";
    case ExprTag::AndrewsL: return "AndrewsL(k=" + std::to_string(expr.param) + ")";
    case ExprTag::AndrewsR: return "AndrewsR(k=" + std::to_string(expr.param) + ")";
    case ExprTag::Prop4a: return "Prop4a";
  }
  return "?";
}

BigCount summand(const ExpressionId& expr, long long n,
                 std::span<const long long> indices) {
  if (static_cast<int>(indices.size()) != summand_arity(expr.tag)) {
    throw std::invalid_argument("summand: " + expression_name(expr) +
                                " expects " +
                                std::to_string(summand_arity(expr.tag)) +
                                " indices, got " +
                                std::to_string(indices.size()));
  }
  const long long a = expr.param;
  switch (expr.tag) {
    case ExprTag::FranelL: {
      const long long k = indices[0];
      return binom(n, k) * binom(n, k) * binom(n, k);
    }
    case ExprTag::FranelR: {
      const long long k = indices[0];
      return binom(n, k) * binom(n, k) * binom(2 * k, n);
    }
    case ExprTag::AperyL: {
      const long long k = indices[0], j = indices[1];
      if (k < 0 || k > n) return 0;
      const BigCount c = binom(k, j);
      return binom(n, k) * binom(n + k, k) * c * c * c;
    }
    case ExprTag::AperyR: {
      const long long k = indices[0];
      if (k < 0 || k > n) return 0;
      const BigCount outer = binom(n, k) * binom(n + k, k);
      return outer * outer;
    }
    case ExprTag::BarrucandL: {
      const long long k = indices[0], j = indices[1];
      const BigCount c = binom(k, j);
      return binom(n, k) * c * c * c;
    }
    case ExprTag::BarrucandR: {
      const long long k = indices[0];
      return binom(n, k) * binom(n, k) * binom(2 * k, k);
    }
    case ExprTag::GenBarrL: {
      const long long k = indices[0], j = indices[1];
      return binom(n, k) * binom(k, j) * binom(k, j) * binom(k, j - a);
    }
    case ExprTag::GenBarrR: {
      const long long k = indices[0];
      return binom(n, k) * binom(n, k) * binom(2 * k, k - a);
    }
    case ExprTag::Chain1: {
      const long long k = indices[0];
      if (k < 0 || k > n) return 0;
      return binom(n, k) * binom(2 * k, k) * big_pow(2, static_cast<unsigned>(k));
    }
    case ExprTag::Chain2: {
      const long long k = indices[0];
      if (k < 0 || k > n) return 0;
      return binom(n, k) * binom(2 * n - k, n) * big_pow(3, static_cast<unsigned>(k));
    }
    case ExprTag::Chain3: {
      const long long k = indices[0];
      if (k < 0 || k > n) return 0;
      return binom(n, k) * binom(n, k) * big_pow(4, static_cast<unsigned>(k));
    }
    case ExprTag::Chain4: {
      const long long k = indices[0];
      if (k < 0 || 2 * k > n) return 0;
      return binom(n, 2 * k) * binom(2 * k, k) *
             big_pow(4, static_cast<unsigned>(k)) *
             big_pow(5, static_cast<unsigned>(n - 2 * k));
    }
    case ExprTag::AndrewsL: {
      const long long idx = indices[0];
      return binom(a, idx) * binom(n - a, idx) * binom(n + a + idx, n);
    }
    case ExprTag::AndrewsR: {
      return binom(n + a, a) * binom(n + a, n - a);
    }
    case ExprTag::Prop4a: {
      const long long i = indices[0], j = indices[1];
      if (i < 0 || j < 0 || i + j > n) return 0;
      return binom(n, j) * binom(n - j, i) * binom(2 * n - 2 * i - 2 * j, n - j) *
             big_pow(3, static_cast<unsigned>(i + j));
    }
  }
  throw std::logic_error("summand: unhandled expression tag");
}

BigCount eval_expression(const ExpressionId& expr, long long n) {
  if (n < 0) {
    throw std::invalid_argument("eval_expression: n must be nonnegative");
  }
  if ((expr.tag == ExprTag::AndrewsL || expr.tag == ExprTag::AndrewsR) &&
      (expr.param < 0 || expr.param > n)) {
    throw std::invalid_argument(
        "eval_expression: Andrews parameter k must satisfy 0 <= k <= n");
  }
  BigCount total = 0;
  switch (summand_arity(expr.tag)) {
    case 0: {
      total = summand(expr, n, {});
      break;
    }
    case 1: {
      // Out-of-range terms are 0, so k = 0..n covers Chain4's n/2 limit too.
      for (long long k = 0; k <= n; ++k) {
        const long long idx[] = {k};
        total += summand(expr, n, idx);
      }
      break;
    }
    case 2: {
      for (long long k = 0; k <= n; ++k) {
        for (long long j = 0; j <= n; ++j) {
          const long long idx[] = {k, j};
          total += summand(expr, n, idx);
        }
      }
      break;
    }
  }
  return total;
}

std::string identity_name(const IdentityId& id) {
  switch (id.tag) {
    case IdentityTag::Eq1: return "Eq1";
    case IdentityTag::Eq2: return "Eq2";
    case IdentityTag::Eq3: return "Eq3";
    case IdentityTag::Eq4: return "Eq4";
    case IdentityTag::Eq5: return "Eq5(a=" + std::to_string(id.param) + ")";
    case IdentityTag::Eq6: return "Eq6(k=" + std::to_string(id.param) + ")";
  }
  return "?";
}

std::vector<ExpressionId> identity_expressions(const IdentityId& id) {
  switch (id.tag) {
    case IdentityTag::Eq1:
      return {{ExprTag::FranelL}, {ExprTag::FranelR}};
    case IdentityTag::Eq2:
      return {{ExprTag::AperyL}, {ExprTag::AperyR}};
    case IdentityTag::Eq3:
      return {{ExprTag::Chain1}, {ExprTag::Chain2}, {ExprTag::Chain3},
              {ExprTag::Chain4}};
    case IdentityTag::Eq4:
      return {{ExprTag::BarrucandL}, {ExprTag::BarrucandR}};
    case IdentityTag::Eq5:
      return {{ExprTag::GenBarrL, id.param}, {ExprTag::GenBarrR, id.param}};
    case IdentityTag::Eq6:
      return {{ExprTag::AndrewsL, id.param}, {ExprTag::AndrewsR, id.param}};
  }
  throw std::logic_error("identity_expressions: unhandled tag");
}

ScalarCheck check_scalar_identity(const IdentityId& id, long long n) {
  ScalarCheck check;
  check.id = identity_name(id);
  check.n = n;
  for (const ExpressionId& expr : identity_expressions(id)) {
    check.sides.push_back(eval_expression(expr, n));
  }
  check.pass = std::all_of(check.sides.begin(), check.sides.end(),
                           [&](const BigCount& v) { return v == check.sides.front(); });
  return check;
}

}  // namespace bijectlab::counts
