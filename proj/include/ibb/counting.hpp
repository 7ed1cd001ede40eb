#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ibb {

using BigInt = boost::multiprecision::cpp_int;

// Exhaustive enumeration is refused above these ranks.
inline constexpr int kSignedEnumCap = 6;
inline constexpr int kUnsignedEnumCap = 8;
inline constexpr int enumeration_cap(bool with_signs) {
  return with_signs ? kSignedEnumCap : kUnsignedEnumCap;
}

/// |I(B_n)| = sum_k 2^k C(n,k)^2 k!  (signed), |I_n| = sum_k C(n,k)^2 k!.
BigInt cardinality_formula(int n, bool with_signs);

/// Order of the group of units: 2^n n! (signed, W(B_n)) or n! (Sigma_n).
BigInt unit_group_order(int n, bool with_signs);

}  // namespace ibb
