#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bijectlab {

// Exact nonnegative counts. Every count and binomial in the project lives in
// this type; no floating point is used anywhere.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount big_pow(const BigCount& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

}  // namespace bijectlab
