#include "ibb/word.hpp"

#include <sstream>
#include <stdexcept>

#include "ibb/errors.hpp"
#include "ibb/partial_perm.hpp"

namespace ibb {

void Word::validate() const {
  if (rank_ < 0 || rank_ > kMaxRank) throw std::invalid_argument("rank out of range");
  for (const auto& g : letters_) {
    switch (g.kind) {
      case Gen::Sigma:
      case Gen::SigmaInv:
        if (g.index < 1 || g.index > rank_ - 1)
          throw std::invalid_argument("sigma index " + std::to_string(g.index) +
                                      " invalid at rank " + std::to_string(rank_));
        break;
      case Gen::Eps:
        if (g.index < 1 || g.index > rank_)
          throw std::invalid_argument("eps index " + std::to_string(g.index) +
                                      " invalid at rank " + std::to_string(rank_));
        break;
      case Gen::Tau:
      case Gen::TauInv:
        if (rank_ < 1) throw std::invalid_argument("tau needs rank >= 1");
        break;
    }
  }
}

Word Word::formal_inverse() const {
  std::vector<GeneratorSymbol> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    switch (it->kind) {
      case Gen::Sigma:
        out.push_back(sigma_inv(it->index));
        break;
      case Gen::SigmaInv:
        out.push_back(sigma(it->index));
        break;
      case Gen::Tau:
        out.push_back(tau_inv());
        break;
      case Gen::TauInv:
        out.push_back(tau());
        break;
      case Gen::Eps:
        out.push_back(*it);
        break;
    }
  }
  return Word(rank_, std::move(out));
}

Word operator*(const Word& a, const Word& b) {
  if (a.rank() != b.rank()) throw RankMismatchError(a.rank(), b.rank());
  std::vector<GeneratorSymbol> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return Word(a.rank(), std::move(letters));
}

namespace {

bool cancels(const GeneratorSymbol& a, const GeneratorSymbol& b) {
  if (a.kind == Gen::Sigma && b.kind == Gen::SigmaInv) return a.index == b.index;
  if (a.kind == Gen::SigmaInv && b.kind == Gen::Sigma) return a.index == b.index;
  if (a.kind == Gen::Tau && b.kind == Gen::TauInv) return true;
  if (a.kind == Gen::TauInv && b.kind == Gen::Tau) return true;
  return false;
}

}  // namespace

Word free_reduce(const Word& w) {
  std::vector<GeneratorSymbol> stack;
  for (const auto& g : w.letters()) {
    if (!stack.empty() && cancels(stack.back(), g)) {
      stack.pop_back();
    } else {
      stack.push_back(g);
    }
  }
  return Word(w.rank(), std::move(stack));
}

Word parse_word(std::string_view text, int rank) {
  std::vector<GeneratorSymbol> letters;
  size_t pos = 0;
  auto next_token = [&]() -> std::string_view {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '*' || text[pos] == '\t'))
      ++pos;
    size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '*' && text[pos] != '\t')
      ++pos;
    return text.substr(start, pos - start);
  };
  auto parse_index = [](std::string_view tok) -> int {
    if (tok.size() < 2) throw ParseError("missing generator index in token");
    int value = 0;
    for (size_t i = 1; i < tok.size(); ++i) {
      char c = tok[i];
      if (c < '0' || c > '9')
        throw ParseError("bad generator index in token '" + std::string(tok) + "'");
      value = value * 10 + (c - '0');
      if (value > kMaxRank) throw ParseError("generator index too large");
    }
    return value;
  };
  for (std::string_view tok = next_token(); !tok.empty(); tok = next_token()) {
    if (tok == "1") continue;
    if (tok == "t") {
      letters.push_back(tau());
    } else if (tok == "T") {
      letters.push_back(tau_inv());
    } else if (tok == "e") {
      letters.push_back(eps(1));
    } else if (tok[0] == 's') {
      letters.push_back(sigma(parse_index(tok)));
    } else if (tok[0] == 'S') {
      letters.push_back(sigma_inv(parse_index(tok)));
    } else if (tok[0] == 'e') {
      letters.push_back(eps(parse_index(tok)));
    } else {
      throw ParseError("unknown token '" + std::string(tok) + "'");
    }
  }
  try {
    return Word(rank, std::move(letters));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string to_string(const GeneratorSymbol& g) {
  switch (g.kind) {
    case Gen::Sigma:
      return "s" + std::to_string(g.index);
    case Gen::SigmaInv:
      return "S" + std::to_string(g.index);
    case Gen::Tau:
      return "t";
    case Gen::TauInv:
      return "T";
    case Gen::Eps:
      return g.index == 1 ? "e" : "e" + std::to_string(g.index);
  }
  return "?";
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& g : w.letters()) {
    if (!first) os << ' ';
    os << to_string(g);
    first = false;
  }
  return os.str();
}

}  // namespace ibb
