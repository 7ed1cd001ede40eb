#include "ibb/relations.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ibb {

std::string to_string(PresentationId id) {
  switch (id) {
    case PresentationId::BR:
      return "BR";
    case PresentationId::IBN:
      return "IBN";
    case PresentationId::IBN_BAL:
      return "IBN_BAL";
    case PresentationId::IN:
      return "IN";
    case PresentationId::IBN_QUOT:
      return "IBN_QUOT";
    case PresentationId::BRB:
      return "BRB";
    case PresentationId::IBB:
      return "IBB";
    case PresentationId::IBB_BAL:
      return "IBB_BAL";
    case PresentationId::IBB_QUOT:
      return "IBB_QUOT";
  }
  return "?";
}

PresentationId presentation_from_string(std::string_view name) {
  for (PresentationId id : all_presentations())
    if (to_string(id) == name) return id;
  throw std::invalid_argument("unknown presentation id '" + std::string(name) + "'");
}

std::vector<PresentationId> all_presentations() {
  return {PresentationId::BR,       PresentationId::IBN,      PresentationId::IBN_BAL,
          PresentationId::IN,       PresentationId::IBN_QUOT, PresentationId::BRB,
          PresentationId::IBB,      PresentationId::IBB_BAL,  PresentationId::IBB_QUOT};
}

bool presentation_is_signed(PresentationId id) {
  switch (id) {
    case PresentationId::BRB:
    case PresentationId::IBB:
    case PresentationId::IBB_BAL:
    case PresentationId::IBB_QUOT:
      return true;
    default:
      return false;
  }
}

namespace {

// Accumulates pairs, dropping duplicates so that overlapping families can
// be combined without repeating relations.
class TableBuilder {
 public:
  explicit TableBuilder(int n) : n_(n) {}

  Word word(std::vector<GeneratorSymbol> letters) const {
    return Word(n_, std::move(letters));
  }

  void pair(const Word& lhs, const Word& rhs) {
    auto key = std::make_pair(to_string(lhs), to_string(rhs));
    if (seen_.insert(key).second) pairs_.emplace_back(lhs, rhs);
  }

  // l1 = l2 = ... expanded against the shortest member.
  void chain(const std::vector<Word>& members) {
    size_t anchor = 0;
    for (size_t i = 1; i < members.size(); ++i)
      if (members[i].size() < members[anchor].size()) anchor = i;
    for (size_t i = 0; i < members.size(); ++i)
      if (i != anchor) pair(members[i], members[anchor]);
  }

  std::vector<std::pair<Word, Word>> take() { return std::move(pairs_); }

 private:
  int n_;
  std::vector<std::pair<Word, Word>> pairs_;
  std::set<std::pair<std::string, std::string>> seen_;
};

void add_braid(TableBuilder& b, int n) {
  for (int i = 1; i + 2 <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      b.pair(b.word({sigma(i), sigma(j)}), b.word({sigma(j), sigma(i)}));
  for (int i = 1; i <= n - 2; ++i)
    b.pair(b.word({sigma(i), sigma(i + 1), sigma(i)}),
           b.word({sigma(i + 1), sigma(i), sigma(i + 1)}));
}

void add_sigma_inverses(TableBuilder& b, int n) {
  for (int i = 1; i <= n - 1; ++i)
    b.chain({b.word({sigma(i), sigma_inv(i)}), b.word({sigma_inv(i), sigma(i)}),
             b.word({})});
}

void add_sigma_squares(TableBuilder& b, int n) {
  for (int i = 1; i <= n - 1; ++i) b.pair(b.word({sigma(i), sigma(i)}), b.word({}));
}

void add_tau_inverses(TableBuilder& b) {
  b.chain({b.word({tau(), tau_inv()}), b.word({tau_inv(), tau()}), b.word({})});
}

void add_type_b(TableBuilder& b, int n) {
  if (n >= 2)
    b.pair(b.word({tau(), sigma(1), tau(), sigma(1)}),
           b.word({sigma(1), tau(), sigma(1), tau()}));
  for (int i = 2; i <= n - 1; ++i)
    b.pair(b.word({tau(), sigma(i)}), b.word({sigma(i), tau()}));
}

void add_eps_sigma_commutation(TableBuilder& b, int n) {
  for (int i = 2; i <= n - 1; ++i)
    b.pair(b.word({eps(), sigma(i)}), b.word({sigma(i), eps()}));
}

void add_eps_sigma1_chain(TableBuilder& b, int n) {
  if (n < 2) return;
  b.chain({b.word({eps(), sigma(1), eps()}),
           b.word({sigma(1), eps(), sigma(1), eps()}),
           b.word({eps(), sigma(1), eps(), sigma(1)})});
}

void add_eps_idempotent(TableBuilder& b, bool with_sigma_squares, int n) {
  std::vector<Word> members = {b.word({eps()}), b.word({eps(), eps()})};
  if (with_sigma_squares && n >= 2) {
    members.push_back(b.word({eps(), sigma(1), sigma(1)}));
    members.push_back(b.word({sigma(1), sigma(1), eps()}));
  }
  b.chain(members);
}

void add_eps_tau_chain(TableBuilder& b) {
  b.chain({b.word({eps(), tau()}), b.word({tau(), eps()}), b.word({eps()})});
}

void add_balanced(TableBuilder& b, int n) {
  add_sigma_inverses(b, n);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      b.pair(b.word({eps(j), sigma(i)}), b.word({sigma(i), eps(j)}));
    }
  for (int i = 1; i <= n - 1; ++i) {
    b.pair(b.word({eps(i), sigma(i)}), b.word({sigma(i), eps(i + 1)}));
    b.pair(b.word({eps(i + 1), sigma(i)}), b.word({sigma(i), eps(i)}));
  }
  for (int i = 1; i <= n; ++i)
    b.pair(b.word({eps(i), eps(i)}), b.word({eps(i)}));
  for (int i = 1; i <= n - 1; ++i) {
    b.chain({b.word({eps(i + 1), sigma(i), sigma(i)}),
             b.word({sigma(i), sigma(i), eps(i + 1)}), b.word({eps(i + 1)})});
    b.chain({b.word({eps(i), eps(i + 1), sigma(i)}),
             b.word({sigma(i), eps(i), eps(i + 1)}),
             b.word({eps(i), eps(i + 1)})});
  }
  add_braid(b, n);
}

}  // namespace

RelationTable relations_for(PresentationId id, int n) {
  if (n < 1) throw std::invalid_argument("presentations need rank >= 1");
  TableBuilder b(n);
  switch (id) {
    case PresentationId::BR:
      add_sigma_inverses(b, n);
      add_braid(b, n);
      break;
    case PresentationId::IBN:
      add_sigma_inverses(b, n);
      add_eps_sigma_commutation(b, n);
      add_eps_sigma1_chain(b, n);
      add_eps_idempotent(b, /*with_sigma_squares=*/true, n);
      add_braid(b, n);
      break;
    case PresentationId::IN:
      add_sigma_squares(b, n);
      add_eps_sigma_commutation(b, n);
      add_eps_sigma1_chain(b, n);
      add_eps_idempotent(b, /*with_sigma_squares=*/false, n);
      add_braid(b, n);
      break;
    case PresentationId::IBN_QUOT:
      add_sigma_inverses(b, n);
      add_sigma_squares(b, n);
      add_eps_sigma_commutation(b, n);
      add_eps_sigma1_chain(b, n);
      add_eps_idempotent(b, /*with_sigma_squares=*/true, n);
      add_braid(b, n);
      break;
    case PresentationId::IBN_BAL:
      add_balanced(b, n);
      break;
    case PresentationId::BRB:
      add_sigma_inverses(b, n);
      add_tau_inverses(b);
      add_type_b(b, n);
      add_braid(b, n);
      break;
    case PresentationId::IBB:
      add_sigma_inverses(b, n);
      add_tau_inverses(b);
      add_type_b(b, n);
      add_braid(b, n);
      add_eps_sigma_commutation(b, n);
      add_eps_sigma1_chain(b, n);
      add_eps_idempotent(b, /*with_sigma_squares=*/true, n);
      add_eps_tau_chain(b);
      break;
    case PresentationId::IBB_BAL:
      add_balanced(b, n);
      add_tau_inverses(b);
      add_type_b(b, n);
      b.chain({b.word({eps(1), tau()}), b.word({tau(), eps(1)}), b.word({eps(1)})});
      break;
    case PresentationId::IBB_QUOT:
      add_sigma_squares(b, n);
      b.pair(b.word({tau(), tau()}), b.word({}));
      add_type_b(b, n);
      add_braid(b, n);
      add_eps_sigma_commutation(b, n);
      add_eps_sigma1_chain(b, n);
      add_eps_idempotent(b, /*with_sigma_squares=*/false, n);
      add_eps_tau_chain(b);
      break;
  }
  return RelationTable{id, n, b.take()};
}

Word epsilon_block(int k, int n, EpsilonBlockVariant variant) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  std::vector<GeneratorSymbol> letters;
  for (int i = k + 1; i <= n; ++i) {
    if (variant == EpsilonBlockVariant::Product) {
      letters.push_back(eps(i));
    } else {
      for (int s = i - 1; s >= 1; --s) letters.push_back(sigma(s));
      letters.push_back(eps(1));
      for (int s = 1; s <= i - 1; ++s) letters.push_back(sigma(s));
    }
  }
  return Word(n, std::move(letters));
}

Word normal_form_word(int k, const std::vector<int>& i_seq,
                      const std::vector<int>& j_seq, const Word& x, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  auto check_seq = [&](const std::vector<int>& seq, const char* name) {
    if (static_cast<int>(seq.size()) != k)
      throw std::invalid_argument(std::string(name) + " must have length k");
    for (size_t m = 0; m < seq.size(); ++m) {
      if (seq[m] < 0 || seq[m] > n - 1)
        throw std::invalid_argument(std::string(name) + " entries must lie in 0..n-1");
      if (m > 0 && seq[m] <= seq[m - 1])
        throw std::invalid_argument(std::string(name) + " must be strictly ascending");
    }
  };
  check_seq(i_seq, "i_seq");
  check_seq(j_seq, "j_seq");
  for (const auto& g : x.letters()) {
    switch (g.kind) {
      case Gen::Eps:
        throw std::invalid_argument("x must not contain eps letters");
      case Gen::Sigma:
      case Gen::SigmaInv:
        if (g.index > k - 1)
          throw std::invalid_argument("x uses sigma index invalid at rank k");
        break;
      case Gen::Tau:
      case Gen::TauInv:
        if (k < 1) throw std::invalid_argument("x uses tau but k = 0");
        break;
    }
  }

  std::vector<GeneratorSymbol> letters;
  for (int m = 1; m <= k; ++m)
    for (int s = i_seq[static_cast<size_t>(m - 1)]; s >= m; --s) letters.push_back(sigma(s));
  Word block = epsilon_block(k, n, EpsilonBlockVariant::Product);
  letters.insert(letters.end(), block.letters().begin(), block.letters().end());
  letters.insert(letters.end(), x.letters().begin(), x.letters().end());
  letters.insert(letters.end(), block.letters().begin(), block.letters().end());
  for (int m = k; m >= 1; --m)
    for (int s = m; s <= j_seq[static_cast<size_t>(m - 1)]; ++s) letters.push_back(sigma(s));
  return Word(n, std::move(letters));
}

}  // namespace ibb
