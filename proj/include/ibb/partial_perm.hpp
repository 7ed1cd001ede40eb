#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace ibb {

inline constexpr int kMaxRank = 64;

// Image of one basis vector: +v_j maps to sign * v_index.
struct Target {
  int index;  // 1..n
  int sign;   // +1 or -1
  friend bool operator==(const Target&, const Target&) = default;
};

/// A sign-equivariant partial bijection of {±v_1,...,±v_n}.
///
/// Only the row of +v_j is stored; the image of -v_j is the negation of the
/// image of +v_j, so sign-equivariance and the negation-closed domain are
/// structural. Defined targets have pairwise distinct indices (injectivity
/// on the whole signed set). Values are immutable after construction.
class SignedPartialPerm {
 public:
  static SignedPartialPerm identity(int n);
  static SignedPartialPerm empty_map(int n);
  static SignedPartialPerm from_entries(int n,
                                        const std::vector<std::optional<Target>>& rows);

  int rank() const { return n_; }
  std::optional<Target> image_of(int j) const;  // j in 1..n
  bool defined_at(int j) const { return cell(j) != 0; }

  int domain_size() const;
  std::vector<int> domain() const;         // ascending source indices
  std::vector<int> image_indices() const;  // ascending target indices

  bool is_unit() const;        // total, i.e. lies in W(B_n)
  bool is_idempotent() const;  // partial identity
  bool is_unsigned() const;    // all defined signs +1, i.e. lies in I_n

  friend bool operator==(const SignedPartialPerm&, const SignedPartialPerm&) = default;
  friend std::strong_ordering operator<=>(const SignedPartialPerm&,
                                          const SignedPartialPerm&) = default;

 private:
  explicit SignedPartialPerm(int n);
  int8_t cell(int j) const { return cells_[static_cast<size_t>(j - 1)]; }

  int n_ = 0;
  // cells_[j-1] == 0 when +v_j is undefined, otherwise sign * target index.
  std::vector<int8_t> cells_;

  friend SignedPartialPerm compose(const SignedPartialPerm&, const SignedPartialPerm&);
  friend SignedPartialPerm inverse_of(const SignedPartialPerm&);
};

/// Left-to-right composition: "a then b". Defined at +v_j iff a is defined
/// there and b is defined at a's target; signs multiply.
SignedPartialPerm compose(const SignedPartialPerm& a, const SignedPartialPerm& b);
inline SignedPartialPerm operator*(const SignedPartialPerm& a,
                                   const SignedPartialPerm& b) {
  return compose(a, b);
}

/// The unique b with a = a b a and b = b a b: arrows reversed, domain and
/// image swapped.
SignedPartialPerm inverse_of(const SignedPartialPerm& a);

// Idempotent-times-unit factorisation: idem is the partial identity on
// dom(a) and unit is the total extension of a obtained by matching unused
// sources to unused targets in increasing order with sign +1.
struct Decomposition {
  SignedPartialPerm idem;
  SignedPartialPerm unit;
};
Decomposition factorise(const SignedPartialPerm& a);

// Text form `[1->+2, 2->-1, 3->.]`; parse and print round-trip exactly.
std::string to_text(const SignedPartialPerm& a);
SignedPartialPerm parse_element(std::string_view text);

// JSON form {"n":3,"map":[[2,1],[1,-1],null]} with entries [target, sign].
nlohmann::ordered_json to_json(const SignedPartialPerm& a);
SignedPartialPerm element_from_json(const nlohmann::json& j);

std::ostream& operator<<(std::ostream& os, const SignedPartialPerm& a);

}  // namespace ibb
