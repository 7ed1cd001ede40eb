#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace ibb {

// Letter kinds of the braid-monoid alphabets. Eps carries an index in 1..n
// and Eps(1) is the plain epsilon; sigma letters carry an index in 1..n-1.
enum class Gen { Sigma, SigmaInv, Tau, TauInv, Eps };

struct GeneratorSymbol {
  Gen kind;
  int index = 0;  // unused for Tau/TauInv
  friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
  friend std::strong_ordering operator<=>(const GeneratorSymbol&,
                                          const GeneratorSymbol&) = default;
};

inline GeneratorSymbol sigma(int i) { return {Gen::Sigma, i}; }
inline GeneratorSymbol sigma_inv(int i) { return {Gen::SigmaInv, i}; }
inline GeneratorSymbol tau() { return {Gen::Tau, 0}; }
inline GeneratorSymbol tau_inv() { return {Gen::TauInv, 0}; }
inline GeneratorSymbol eps(int i = 1) { return {Gen::Eps, i}; }

/// A word over the generator alphabet at a fixed ambient rank. Letters are
/// validated on construction; the empty word is the identity. Immutable.
class Word {
 public:
  explicit Word(int rank) : rank_(rank) { validate(); }
  Word(int rank, std::vector<GeneratorSymbol> letters)
      : rank_(rank), letters_(std::move(letters)) {
    validate();
  }

  int rank() const { return rank_; }
  const std::vector<GeneratorSymbol>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }

  /// Letter-wise formal inverse in reverse order; eps letters are their own
  /// inverses.
  Word formal_inverse() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  void validate() const;
  int rank_;
  std::vector<GeneratorSymbol> letters_;
};

/// Deletes adjacent sigma/sigma^-1 and tau/tau^-1 pairs until none remain.
/// Nothing else is rewritten; eps letters never cancel.
Word free_reduce(const Word& w);

/// Grammar: tokens separated by spaces or '*'; `s<i>` = sigma_i, `S<i>` =
/// sigma_i^-1, `t` = tau, `T` = tau^-1, `e` = eps = eps_1, `e<i>` = eps_i.
/// The token `1` stands for the empty word and is how an empty word prints.
Word parse_word(std::string_view text, int rank);
std::string to_string(const Word& w);
std::string to_string(const GeneratorSymbol& g);

}  // namespace ibb
