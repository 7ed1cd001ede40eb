#include "ibb/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

#include "ibb/counting.hpp"
#include "ibb/errors.hpp"

namespace ibb {

namespace {

// Lexicographic successor of a tuple of distinct values in 1..n.
bool next_injection(std::vector<int>& t, int n) {
  const int k = static_cast<int>(t.size());
  for (int pos = k - 1; pos >= 0; --pos) {
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    for (int q = 0; q < pos; ++q) used[static_cast<size_t>(t[static_cast<size_t>(q)])] = true;
    for (int v = t[static_cast<size_t>(pos)] + 1; v <= n; ++v) {
      if (used[static_cast<size_t>(v)]) continue;
      t[static_cast<size_t>(pos)] = v;
      used[static_cast<size_t>(v)] = true;
      int fill = 1;
      for (int q = pos + 1; q < k; ++q) {
        while (used[static_cast<size_t>(fill)]) ++fill;
        t[static_cast<size_t>(q)] = fill;
        used[static_cast<size_t>(fill)] = true;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

ElementStream::ElementStream(int n, bool with_signs, std::optional<int> cap_override)
    : n_(n), signed_(with_signs) {
  // 32 bounds the bitmask arithmetic; real use sits far below the caps.
  if (n < 0 || n > 32) throw std::invalid_argument("enumeration rank out of range");
  const int cap = cap_override.value_or(enumeration_cap(with_signs));
  if (n > cap) throw CapExceededError(n, cap);
  mask_end_ = std::uint64_t{1} << n;
}

SignedPartialPerm ElementStream::build() const {
  std::vector<std::optional<Target>> rows(static_cast<size_t>(n_));
  const int k = static_cast<int>(dom_.size());
  for (int idx = 0; idx < k; ++idx) {
    // First domain index carries the most significant sign bit.
    bool negative = signed_ && ((sign_bits_ >> (k - 1 - idx)) & 1u);
    rows[static_cast<size_t>(dom_[static_cast<size_t>(idx)] - 1)] =
        Target{tgt_[static_cast<size_t>(idx)], negative ? -1 : 1};
  }
  return SignedPartialPerm::from_entries(n_, rows);
}

bool ElementStream::advance() {
  const int k = static_cast<int>(dom_.size());
  const std::uint64_t sign_count = signed_ ? (std::uint64_t{1} << k) : 1;
  if (sign_bits_ + 1 < sign_count) {
    ++sign_bits_;
    return true;
  }
  sign_bits_ = 0;
  if (next_injection(tgt_, n_)) return true;
  while (++mask_ < mask_end_) {
    dom_.clear();
    for (int j = 1; j <= n_; ++j)
      if ((mask_ >> (j - 1)) & 1u) dom_.push_back(j);
    tgt_.resize(dom_.size());
    for (size_t i = 0; i < tgt_.size(); ++i) tgt_[i] = static_cast<int>(i) + 1;
    return true;
  }
  return false;
}

std::optional<SignedPartialPerm> ElementStream::next() {
  if (exhausted_) return std::nullopt;
  SignedPartialPerm out = build();
  if (!advance()) exhausted_ = true;
  return out;
}

std::vector<SignedPartialPerm> all_elements(int n, bool with_signs,
                                            std::optional<int> cap_override) {
  ElementStream stream(n, with_signs, cap_override);
  std::vector<SignedPartialPerm> out;
  while (auto e = stream.next()) out.push_back(*e);
  return out;
}

}  // namespace ibb
