#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ibb/word.hpp"

namespace ibb {

// Identifiers for the presentations handled here:
//   BR       braid group Br_n (with formal-inverse pairs)
//   IBN      inverse braid monoid IB_n, epsilon presentation
//   IBN_BAL  inverse braid monoid IB_n, balanced eps_i presentation
//   IN       symmetric inverse monoid I_n (sigma_i^2 = 1, superfluous
//            epsilon relations removed)
//   IBN_QUOT IB_n table plus sigma_i^2 = 1, redundancies kept
//   BRB      braid group of type B, Br(B_n)
//   IBB      inverse braid monoid of type B, IB(B_n)
//   IBB_BAL  IB(B_n) over the balanced eps_i presentation
//   IBB_QUOT I(B_n): IBB with sigma_i^2 = 1 and tau^2 = 1 quotients
enum class PresentationId { BR, IBN, IBN_BAL, IN, IBN_QUOT, BRB, IBB, IBB_BAL, IBB_QUOT };

std::string to_string(PresentationId id);
PresentationId presentation_from_string(std::string_view name);
std::vector<PresentationId> all_presentations();

/// True when the table lives in the type-B world and must be evaluated in
/// I(B_n) rather than I_n.
bool presentation_is_signed(PresentationId id);

struct RelationTable {
  PresentationId id;
  int rank;
  std::vector<std::pair<Word, Word>> pairs;
};

/// The complete finite list of relation pairs at rank n, with index ranges
/// expanded. Families whose generators do not exist at n contribute no
/// pairs. Displayed equality chains l1 = l2 = ... are expanded by pairing
/// every member with the shortest one.
RelationTable relations_for(PresentationId id, int n);

enum class EpsilonBlockVariant { Conjugated, Product };

/// Word for the partial identity that keeps strings 1..k and removes
/// strings k+1..n. Product variant: eps_{k+1} eps_{k+2} ... eps_n.
/// Conjugated variant: the same product with every eps_i spelled in the
/// single generator eps as s_{i-1}..s_1 e s_1..s_{i-1}. k = n gives the
/// empty word.
Word epsilon_block(int k, int n, EpsilonBlockVariant variant);

/// Assembles the representative word
///   D(i_1,1)...D(i_k,k) E x E U(k,j_k)...U(1,j_1)
/// where D(i,m) is the descending run s_i s_{i-1} ... s_m (empty when
/// i < m), U(m,j) its mirror ascending run, and E the product epsilon
/// block for (k, n). i_seq and j_seq must be strictly ascending with
/// entries in 0..n-1; x may use sigma/tau letters valid at rank k only.
Word normal_form_word(int k, const std::vector<int>& i_seq,
                      const std::vector<int>& j_seq, const Word& x, int n);

}  // namespace ibb
