#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ibb/partial_perm.hpp"

namespace ibb {

struct FreeLetter {
  int index;  // free-group generator index, >= 1
  int exp;    // +1 or -1
  friend bool operator==(const FreeLetter&, const FreeLetter&) = default;
  friend std::strong_ordering operator<=>(const FreeLetter&, const FreeLetter&) = default;
};

/// A freely reduced word in the free group: adjacent inverse pairs are
/// cancelled on construction, so the stored form is the normal form.
class FreeWord {
 public:
  FreeWord() = default;
  FreeWord(std::initializer_list<FreeLetter> letters);
  explicit FreeWord(std::vector<FreeLetter> letters);

  const std::vector<FreeLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }

  FreeWord inverse() const;
  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<FreeLetter> letters_;
};

/// Cancels all adjacent inverse pairs; the result is the unique normal
/// form. FreeWord values are already stored reduced, so this normalizes
/// raw letter sequences.
FreeWord reduce_free(std::vector<FreeLetter> letters);
inline FreeWord reduce_free(const FreeWord& w) { return w; }

/// Deletes every letter whose generator index is not in `alive`, then
/// reduces.
FreeWord kill_generators(const FreeWord& w, const std::set<int>& alive);

std::string to_string(const FreeWord& w);

/// An element of EF_n: an unsigned partial permutation a together with a
/// conjugating word per defined source, realizing x_i -> w_i^-1 x_{a(i)} w_i.
/// Each w_i may only use generator indices in the image of a. Conjugators
/// are stored canonically (leading powers of the target generator absorb
/// into the core), so equality of values is equality of realized maps.
class PartialFreeIso {
 public:
  /// conj must be empty at sources where perm is undefined.
  PartialFreeIso(SignedPartialPerm perm, std::vector<FreeWord> conj);

  /// The splitting inclusion I_n -> EF_n: all conjugators trivial.
  static PartialFreeIso inclusion(const SignedPartialPerm& a);

  int rank() const { return perm_.rank(); }
  const SignedPartialPerm& perm() const { return perm_; }
  const FreeWord& conjugator(int i) const;  // i must be in the domain

  /// w_i^-1 x_{a(i)} w_i as a reduced free word.
  FreeWord realized_image(int i) const;

  /// Letterwise application of the realized maps to a word whose letters
  /// all lie in the domain of the underlying permutation.
  FreeWord apply(const FreeWord& w) const;

  friend bool operator==(const PartialFreeIso&, const PartialFreeIso&) = default;

 private:
  SignedPartialPerm perm_;
  std::vector<FreeWord> conj_;  // aligned with sources 1..n; empty off-domain
};

/// EF_n composition, f then g: the underlying permutations compose as
/// partial maps; conjugators of f are first restricted to the domain of g
/// (letters elsewhere are set to 1), pushed through g, and the composite
/// images are restricted to the image of the composite and re-extracted as
/// (target, conjugator). Throws std::logic_error if a composite image ever
/// fails to have the conjugate shape u^-1 x_t u.
PartialFreeIso compose(const PartialFreeIso& f, const PartialFreeIso& g);

/// The projection EF_n -> I_n (forget the conjugators).
SignedPartialPerm project(const PartialFreeIso& f);

// Text form `x1 -> x2^-1 x1 x2 ; x2 -> x2` (realized images, ascending
// sources; empty domain prints as the empty string). JSON mirror:
// {"n":2,"map":[{"target":1,"conj":[[2,1]]},null]}.
std::string to_text(const PartialFreeIso& f);
PartialFreeIso parse_free_iso(std::string_view text, int n);
nlohmann::ordered_json to_json(const PartialFreeIso& f);
PartialFreeIso free_iso_from_json(const nlohmann::json& j);

}  // namespace ibb
