#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ibb/partial_perm.hpp"

namespace ibb {

/// Streams every element of I(B_n) (with signs) or I_n (without) exactly
/// once, in a fixed order:
///   - domain subsets by ascending bitmask (bit j-1 set iff v_j is defined),
///   - for each domain, target tuples in lexicographic order,
///   - for each tuple, sign patterns counting up with '+' before '-'
///     (the first domain index is the most significant bit).
///
/// The constructor refuses ranks above the enumeration cap unless an
/// explicit override is given.
class ElementStream {
 public:
  ElementStream(int n, bool with_signs, std::optional<int> cap_override = std::nullopt);

  std::optional<SignedPartialPerm> next();

 private:
  SignedPartialPerm build() const;
  bool advance();

  int n_;
  bool signed_;
  std::uint64_t mask_ = 0;
  std::uint64_t mask_end_;
  std::vector<int> dom_;
  std::vector<int> tgt_;
  std::uint64_t sign_bits_ = 0;
  bool exhausted_ = false;
};

/// Collects the whole stream; same cap rules as ElementStream.
std::vector<SignedPartialPerm> all_elements(int n, bool with_signs,
                                            std::optional<int> cap_override = std::nullopt);

}  // namespace ibb
