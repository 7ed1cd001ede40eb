#include "ibb/eval.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "ibb/counting.hpp"
#include "ibb/enumeration.hpp"
#include "ibb/errors.hpp"

namespace ibb {

SignedPartialPerm eval_generator(const GeneratorSymbol& g, const EvalContext& ctx) {
  const int n = ctx.rank;
  switch (g.kind) {
    case Gen::Sigma:
    case Gen::SigmaInv: {
      if (g.index < 1 || g.index > n - 1)
        throw std::invalid_argument("sigma index invalid at this rank");
      std::vector<std::optional<Target>> rows(static_cast<size_t>(n));
      for (int j = 1; j <= n; ++j) rows[static_cast<size_t>(j - 1)] = Target{j, 1};
      rows[static_cast<size_t>(g.index - 1)] = Target{g.index + 1, 1};
      rows[static_cast<size_t>(g.index)] = Target{g.index, 1};
      auto image = SignedPartialPerm::from_entries(n, rows);
      return g.kind == Gen::Sigma ? image : inverse_of(image);
    }
    case Gen::Tau:
    case Gen::TauInv: {
      if (!ctx.signed_domain)
        throw std::invalid_argument("tau has no image in the unsigned monoid I_n");
      if (n < 1) throw std::invalid_argument("tau needs rank >= 1");
      std::vector<std::optional<Target>> rows(static_cast<size_t>(n));
      for (int j = 1; j <= n; ++j) rows[static_cast<size_t>(j - 1)] = Target{j, 1};
      rows[0] = Target{1, -1};
      auto image = SignedPartialPerm::from_entries(n, rows);
      return g.kind == Gen::Tau ? image : inverse_of(image);
    }
    case Gen::Eps: {
      if (g.index < 1 || g.index > n)
        throw std::invalid_argument("eps index invalid at this rank");
      std::vector<std::optional<Target>> rows(static_cast<size_t>(n));
      for (int j = 1; j <= n; ++j)
        if (j != g.index) rows[static_cast<size_t>(j - 1)] = Target{j, 1};
      return SignedPartialPerm::from_entries(n, rows);
    }
  }
  throw std::logic_error("unreachable generator kind");
}

SignedPartialPerm eval_word(const Word& w, const EvalContext& ctx) {
  SignedPartialPerm acc = SignedPartialPerm::identity(ctx.rank);
  for (const auto& g : w.letters()) acc = compose(acc, eval_generator(g, ctx));
  return acc;
}

SignedPerm SignedPerm::identity(int n) {
  SignedPerm p;
  p.targets_.resize(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) p.targets_[static_cast<size_t>(j - 1)] = j;
  return p;
}

SignedPerm SignedPerm::generator(const GeneratorSymbol& g, int n) {
  SignedPerm p = identity(n);
  switch (g.kind) {
    case Gen::Sigma:
      p.targets_[static_cast<size_t>(g.index - 1)] = g.index + 1;
      p.targets_[static_cast<size_t>(g.index)] = g.index;
      return p;
    case Gen::SigmaInv:
      return generator(sigma(g.index), n).inverse();
    case Gen::Tau:
      p.targets_[0] = -1;
      return p;
    case Gen::TauInv:
      return generator(tau(), n).inverse();
    case Gen::Eps:
      throw std::invalid_argument("eps letters have no total-permutation image");
  }
  throw std::logic_error("unreachable generator kind");
}

SignedPerm SignedPerm::then(const SignedPerm& other) const {
  if (rank() != other.rank()) throw RankMismatchError(rank(), other.rank());
  SignedPerm out;
  out.targets_.resize(targets_.size());
  for (size_t j = 0; j < targets_.size(); ++j) {
    int mid = targets_[j];
    int hop = other.targets_[static_cast<size_t>(std::abs(mid) - 1)];
    out.targets_[j] = mid > 0 ? hop : -hop;
  }
  return out;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm out;
  out.targets_.resize(targets_.size());
  for (size_t j = 0; j < targets_.size(); ++j) {
    int c = targets_[j];
    out.targets_[static_cast<size_t>(std::abs(c) - 1)] =
        c > 0 ? static_cast<int>(j) + 1 : -(static_cast<int>(j) + 1);
  }
  return out;
}

SignedPartialPerm SignedPerm::to_partial() const {
  std::vector<std::optional<Target>> rows(targets_.size());
  for (size_t j = 0; j < targets_.size(); ++j) {
    int c = targets_[j];
    rows[j] = Target{std::abs(c), c > 0 ? 1 : -1};
  }
  return SignedPartialPerm::from_entries(static_cast<int>(targets_.size()), rows);
}

bool check_diagram(const Word& w, int n) {
  if (w.rank() != n) throw RankMismatchError(w.rank(), n);
  for (const auto& g : w.letters())
    if (g.kind == Gen::Eps)
      throw std::invalid_argument("check_diagram needs an eps-free word");
  SignedPerm total = SignedPerm::identity(n);
  for (const auto& g : w.letters()) total = total.then(SignedPerm::generator(g, n));
  return total.to_partial() == eval_word(w, EvalContext{n, true});
}

Word weyl_lift(const SignedPartialPerm& unit) {
  if (!unit.is_unit()) throw std::invalid_argument("weyl_lift needs a unit");
  const int n = unit.rank();
  std::vector<GeneratorSymbol> out;
  for (int j = 1; j <= n; ++j) {
    if (unit.image_of(j)->sign >= 0) continue;
    for (int i = j - 1; i >= 1; --i) out.push_back(sigma(i));
    out.push_back(tau());
    for (int i = 1; i <= j - 1; ++i) out.push_back(sigma(i));
  }
  std::vector<int> line(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) line[static_cast<size_t>(j - 1)] = unit.image_of(j)->index;
  for (int p = 1; p < n; ++p)
    for (int q = p; q >= 1 && line[static_cast<size_t>(q - 1)] > line[static_cast<size_t>(q)]; --q) {
      std::swap(line[static_cast<size_t>(q - 1)], line[static_cast<size_t>(q)]);
      out.push_back(sigma(q));
    }
  return Word(n, std::move(out));
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["id"] = ibb::to_string(id);
  j["n"] = rank;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& p : pairs) {
    nlohmann::ordered_json e;
    e["lhs"] = ibb::to_string(p.lhs);
    e["rhs"] = ibb::to_string(p.rhs);
    e["image_lhs"] = to_text(p.image_lhs);
    e["image_rhs"] = to_text(p.image_rhs);
    e["equal"] = p.equal;
    arr.push_back(std::move(e));
  }
  j["pairs"] = std::move(arr);
  j["all_equal"] = all_equal;
  return j;
}

VerificationReport verify_presentation(PresentationId id, int n) {
  const bool with_signs = presentation_is_signed(id);
  if (n > enumeration_cap(with_signs)) throw CapExceededError(n, enumeration_cap(with_signs));
  RelationTable table = relations_for(id, n);
  EvalContext ctx{n, with_signs};
  VerificationReport report{id, n, {}, true};
  report.pairs.reserve(table.pairs.size());
  for (const auto& [lhs, rhs] : table.pairs) {
    SignedPartialPerm a = eval_word(lhs, ctx);
    SignedPartialPerm b = eval_word(rhs, ctx);
    bool equal = a == b;
    report.all_equal = report.all_equal && equal;
    report.pairs.push_back(PairCheck{lhs, rhs, std::move(a), std::move(b), equal});
  }
  return report;
}

Word surjectivity_word(const SignedPartialPerm& a) {
  auto [idem, unit] = factorise(a);
  std::vector<GeneratorSymbol> letters;
  for (int j = 1; j <= a.rank(); ++j)
    if (!idem.defined_at(j)) letters.push_back(eps(j));
  Word lifted = weyl_lift(unit);
  letters.insert(letters.end(), lifted.letters().begin(), lifted.letters().end());
  return Word(a.rank(), std::move(letters));
}

bool certify_surjectivity(int n) {
  ElementStream stream(n, /*with_signs=*/true);
  EvalContext ctx{n, true};
  while (auto a = stream.next()) {
    if (eval_word(surjectivity_word(*a), ctx) != *a) return false;
  }
  return true;
}

}  // namespace ibb
