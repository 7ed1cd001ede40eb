#include "ibb/counting.hpp"

#include <stdexcept>

namespace ibb {

namespace {

BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b = 1;
  for (int i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);
  }
  return b;
}

}  // namespace

BigInt cardinality_formula(int n, bool with_signs) {
  if (n < 0) throw std::invalid_argument("rank must be nonnegative");
  BigInt total = 0;
  BigInt pow2 = 1;
  for (int k = 0; k <= n; ++k) {
    BigInt c = binomial(n, k);
    total += (with_signs ? pow2 : BigInt(1)) * c * c * factorial(k);
    pow2 *= 2;
  }
  return total;
}

BigInt unit_group_order(int n, bool with_signs) {
  if (n < 0) throw std::invalid_argument("rank must be nonnegative");
  BigInt order = factorial(n);
  if (with_signs) order <<= n;
  return order;
}

}  // namespace ibb
