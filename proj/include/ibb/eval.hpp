#pragma once

#include <vector>

#include "json.hpp"

#include "ibb/partial_perm.hpp"
#include "ibb/relations.hpp"
#include "ibb/word.hpp"

namespace ibb {

// Target of word evaluation: I(B_n) when signed_domain, I_n otherwise.
// tau letters are rejected in the unsigned setting.
struct EvalContext {
  int rank;
  bool signed_domain = true;
};

/// Image of a single letter: sigma_i swaps v_i and v_{i+1} keeping signs,
/// tau negates v_1, eps_i is the identity off v_i; inverse letters map to
/// the relational inverses of their base letters.
SignedPartialPerm eval_generator(const GeneratorSymbol& g, const EvalContext& ctx);

/// Left-to-right product of the letter images; the empty word evaluates to
/// the identity.
SignedPartialPerm eval_word(const Word& w, const EvalContext& ctx);

/// Total signed permutations, used as an independent evaluation route for
/// words without eps letters (the group of units side of the diagram).
class SignedPerm {
 public:
  static SignedPerm identity(int n);
  static SignedPerm generator(const GeneratorSymbol& g, int n);  // no eps

  int rank() const { return static_cast<int>(targets_.size()); }
  SignedPerm then(const SignedPerm& other) const;
  SignedPerm inverse() const;
  SignedPartialPerm to_partial() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

 private:
  // targets_[j-1] = sign * image index of +v_j; always total.
  std::vector<int> targets_;
};

/// Evaluates an eps-free word both as a total signed permutation and
/// through the partial-permutation route and compares the results.
bool check_diagram(const Word& w, int n);

/// A word in {tau, sigma_i} evaluating to the given unit: first one
/// conjugated-tau block s_{j-1}..s_1 t s_1..s_{j-1} per source j with a
/// negative sign (ascending j), then insertion-sort swaps for the
/// underlying permutation.
Word weyl_lift(const SignedPartialPerm& unit);

struct PairCheck {
  Word lhs;
  Word rhs;
  SignedPartialPerm image_lhs;
  SignedPartialPerm image_rhs;
  bool equal;
};

struct VerificationReport {
  PresentationId id;
  int rank;
  std::vector<PairCheck> pairs;
  bool all_equal;

  nlohmann::ordered_json to_json() const;
};

/// Evaluates both sides of every relation in the table; failures are
/// recorded in the report, not thrown.
VerificationReport verify_presentation(PresentationId id, int n);

/// For every element a of I(B_n), rebuilds a word from factorise(a) (eps_i
/// letters for the missing domain indices, then the Weyl lift of the unit
/// part) and checks that it evaluates back to a.
bool certify_surjectivity(int n);

/// The epsilon-then-lift word used by certify_surjectivity, exposed for
/// the normal-form command.
Word surjectivity_word(const SignedPartialPerm& a);

}  // namespace ibb
