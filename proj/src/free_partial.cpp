#include "ibb/free_partial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ibb/errors.hpp"

namespace ibb {

FreeWord reduce_free(std::vector<FreeLetter> letters) {
  return FreeWord(std::move(letters));
}

FreeWord::FreeWord(std::initializer_list<FreeLetter> letters)
    : FreeWord(std::vector<FreeLetter>(letters)) {}

FreeWord::FreeWord(std::vector<FreeLetter> letters) {
  std::vector<FreeLetter> stack;
  for (const auto& l : letters) {
    if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("exponent must be +-1");
    if (l.index < 1) throw std::invalid_argument("generator index must be positive");
    if (!stack.empty() && stack.back().index == l.index && stack.back().exp == -l.exp) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  letters_ = std::move(stack);
}

FreeWord FreeWord::inverse() const {
  std::vector<FreeLetter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(FreeLetter{it->index, -it->exp});
  return FreeWord(std::move(out));
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<FreeLetter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return FreeWord(std::move(out));
}

FreeWord kill_generators(const FreeWord& w, const std::set<int>& alive) {
  std::vector<FreeLetter> out;
  for (const auto& l : w.letters())
    if (alive.count(l.index)) out.push_back(l);
  return FreeWord(std::move(out));
}

std::string to_string(const FreeWord& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) os << ' ';
    os << 'x' << l.index;
    if (l.exp < 0) os << "^-1";
    first = false;
  }
  return os.str();
}

namespace {

// Leading powers of the target generator commute into the core, so w and
// x_t^m w realize the same map. Stripping them makes the stored form
// canonical: data equality then coincides with equality of realized maps.
FreeWord canonical_conjugator(const FreeWord& w, int target) {
  const auto& ls = w.letters();
  size_t skip = 0;
  while (skip < ls.size() && ls[skip].index == target) ++skip;
  if (skip == 0) return w;
  return FreeWord(std::vector<FreeLetter>(ls.begin() + static_cast<long>(skip), ls.end()));
}

}  // namespace

PartialFreeIso::PartialFreeIso(SignedPartialPerm perm, std::vector<FreeWord> conj)
    : perm_(std::move(perm)), conj_(std::move(conj)) {
  if (!perm_.is_unsigned())
    throw std::invalid_argument("EF_n sits over the unsigned monoid I_n");
  if (static_cast<int>(conj_.size()) != perm_.rank())
    throw std::invalid_argument("need one conjugator slot per source");
  const auto image_vec = perm_.image_indices();
  const std::set<int> image(image_vec.begin(), image_vec.end());
  for (int i = 1; i <= perm_.rank(); ++i) {
    FreeWord& w = conj_[static_cast<size_t>(i - 1)];
    if (!perm_.defined_at(i)) {
      if (!w.empty())
        throw std::invalid_argument("conjugator given outside the domain");
      continue;
    }
    w = canonical_conjugator(w, perm_.image_of(i)->index);
    for (const auto& l : w.letters())
      if (!image.count(l.index))
        throw std::invalid_argument("conjugator uses generator x" +
                                    std::to_string(l.index) +
                                    " outside the image");
  }
}

PartialFreeIso PartialFreeIso::inclusion(const SignedPartialPerm& a) {
  return PartialFreeIso(a, std::vector<FreeWord>(static_cast<size_t>(a.rank())));
}

const FreeWord& PartialFreeIso::conjugator(int i) const {
  if (!perm_.defined_at(i))
    throw std::invalid_argument("source outside the domain");
  return conj_[static_cast<size_t>(i - 1)];
}

FreeWord PartialFreeIso::realized_image(int i) const {
  const FreeWord& w = conjugator(i);
  return w.inverse() * FreeWord{{perm_.image_of(i)->index, 1}} * w;
}

FreeWord PartialFreeIso::apply(const FreeWord& w) const {
  std::vector<FreeLetter> out;
  for (const auto& l : w.letters()) {
    if (!perm_.defined_at(l.index))
      throw std::invalid_argument("apply: letter outside the domain");
    FreeWord image = realized_image(l.index);
    if (l.exp < 0) image = image.inverse();
    out.insert(out.end(), image.letters().begin(), image.letters().end());
  }
  return FreeWord(std::move(out));
}

namespace {

// Splits a reduced word of shape u^-1 x_t u around its middle letter and
// returns u. The composite images built in compose() always have this
// shape; anything else is a broken invariant.
FreeWord extract_conjugator(const FreeWord& w, int expected_target) {
  const auto& ls = w.letters();
  if (ls.size() % 2 == 0)
    throw std::logic_error("composite image is not a conjugate of a generator");
  size_t mid = ls.size() / 2;
  if (ls[mid].index != expected_target || ls[mid].exp != 1)
    throw std::logic_error("composite image has the wrong core generator");
  for (size_t m = 0; m < mid; ++m) {
    const FreeLetter& left = ls[mid - 1 - m];
    const FreeLetter& right = ls[mid + 1 + m];
    if (left.index != right.index || left.exp != -right.exp)
      throw std::logic_error("composite image is not a conjugate of a generator");
  }
  return FreeWord(std::vector<FreeLetter>(ls.begin() + static_cast<long>(mid) + 1, ls.end()));
}

}  // namespace

PartialFreeIso compose(const PartialFreeIso& f, const PartialFreeIso& g) {
  if (f.rank() != g.rank()) throw RankMismatchError(f.rank(), g.rank());
  SignedPartialPerm c = compose(f.perm(), g.perm());
  auto dom_g_vec = g.perm().domain();
  std::set<int> dom_g(dom_g_vec.begin(), dom_g_vec.end());
  auto im_c_vec = c.image_indices();
  std::set<int> im_c(im_c_vec.begin(), im_c_vec.end());

  std::vector<FreeWord> conj(static_cast<size_t>(c.rank()));
  for (int i = 1; i <= c.rank(); ++i) {
    if (!c.defined_at(i)) continue;
    FreeWord surviving = kill_generators(f.realized_image(i), dom_g);
    FreeWord mapped = g.apply(surviving);
    FreeWord trimmed = kill_generators(mapped, im_c);
    conj[static_cast<size_t>(i - 1)] = extract_conjugator(trimmed, c.image_of(i)->index);
  }
  return PartialFreeIso(std::move(c), std::move(conj));
}

SignedPartialPerm project(const PartialFreeIso& f) { return f.perm(); }

std::string to_text(const PartialFreeIso& f) {
  std::ostringstream os;
  bool first = true;
  for (int i : f.perm().domain()) {
    if (!first) os << " ; ";
    os << 'x' << i << " -> " << to_string(f.realized_image(i));
    first = false;
  }
  return os.str();
}

namespace {

std::vector<FreeLetter> parse_free_letters(std::string_view text) {
  std::vector<FreeLetter> letters;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    if (text[pos] != 'x') throw ParseError("expected generator letter 'x<i>'");
    ++pos;
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("expected generator index after 'x'");
    int index = std::stoi(std::string(text.substr(start, pos - start)));
    int exp = 1;
    if (text.substr(pos, 3) == "^-1") {
      exp = -1;
      pos += 3;
    }
    letters.push_back(FreeLetter{index, exp});
  }
  return letters;
}

}  // namespace

PartialFreeIso parse_free_iso(std::string_view text, int n) {
  std::vector<std::optional<Target>> rows(static_cast<size_t>(n));
  std::vector<FreeWord> conj(static_cast<size_t>(n));
  size_t start = 0;
  while (start < text.size()) {
    size_t sep = text.find(" ; ", start);
    std::string_view entry =
        sep == std::string_view::npos ? text.substr(start) : text.substr(start, sep - start);
    start = sep == std::string_view::npos ? text.size() : sep + 3;
    if (entry.empty()) continue;
    size_t arrow = entry.find(" -> ");
    if (arrow == std::string_view::npos || entry[0] != 'x')
      throw ParseError("expected entry of the form 'x<i> -> <word>'");
    int src = 0;
    try {
      src = std::stoi(std::string(entry.substr(1, arrow - 1)));
    } catch (const std::exception&) {
      throw ParseError("bad source index in entry");
    }
    if (src < 1 || src > n) throw ParseError("source index out of range");
    FreeWord realized(parse_free_letters(entry.substr(arrow + 4)));
    const auto& ls = realized.letters();
    if (ls.empty() || ls.size() % 2 == 0)
      throw ParseError("realized image must be a conjugate u^-1 x_t u");
    size_t mid = ls.size() / 2;
    if (ls[mid].exp != 1) throw ParseError("realized image must have a positive core");
    for (size_t m = 0; m < mid; ++m)
      if (ls[mid - 1 - m].index != ls[mid + 1 + m].index ||
          ls[mid - 1 - m].exp != -ls[mid + 1 + m].exp)
        throw ParseError("realized image must be a conjugate u^-1 x_t u");
    rows[static_cast<size_t>(src - 1)] = Target{ls[mid].index, 1};
    conj[static_cast<size_t>(src - 1)] =
        FreeWord(std::vector<FreeLetter>(ls.begin() + static_cast<long>(mid) + 1, ls.end()));
  }
  try {
    return PartialFreeIso(SignedPartialPerm::from_entries(n, rows), std::move(conj));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

nlohmann::ordered_json to_json(const PartialFreeIso& f) {
  nlohmann::ordered_json j;
  j["n"] = f.rank();
  auto arr = nlohmann::ordered_json::array();
  for (int i = 1; i <= f.rank(); ++i) {
    if (!f.perm().defined_at(i)) {
      arr.push_back(nullptr);
      continue;
    }
    nlohmann::ordered_json entry;
    entry["target"] = f.perm().image_of(i)->index;
    auto conj = nlohmann::ordered_json::array();
    for (const auto& l : f.conjugator(i).letters()) conj.push_back({l.index, l.exp});
    entry["conj"] = std::move(conj);
    arr.push_back(std::move(entry));
  }
  j["map"] = std::move(arr);
  return j;
}

PartialFreeIso free_iso_from_json(const nlohmann::json& j) {
  try {
    int n = j.at("n").get<int>();
    const auto& arr = j.at("map");
    if (!arr.is_array() || static_cast<int>(arr.size()) != n)
      throw ParseError("bad EF_n JSON: map size does not match n");
    std::vector<std::optional<Target>> rows(static_cast<size_t>(n));
    std::vector<FreeWord> conj(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
      const auto& entry = arr[static_cast<size_t>(i - 1)];
      if (entry.is_null()) continue;
      rows[static_cast<size_t>(i - 1)] = Target{entry.at("target").get<int>(), 1};
      std::vector<FreeLetter> letters;
      for (const auto& l : entry.at("conj"))
        letters.push_back(FreeLetter{l.at(0).get<int>(), l.at(1).get<int>()});
      conj[static_cast<size_t>(i - 1)] = FreeWord(std::move(letters));
    }
    return PartialFreeIso(SignedPartialPerm::from_entries(n, rows), std::move(conj));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad EF_n JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad EF_n JSON: ") + e.what());
  }
}

}  // namespace ibb
