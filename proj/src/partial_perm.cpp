#include "ibb/partial_perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ibb/errors.hpp"

namespace ibb {

namespace {

void check_rank(int n) {
  if (n < 0 || n > kMaxRank) {
    throw std::invalid_argument("rank must be in 0.." + std::to_string(kMaxRank) +
                                ", got " + std::to_string(n));
  }
}

}  // namespace

SignedPartialPerm::SignedPartialPerm(int n) : n_(n), cells_(static_cast<size_t>(n), 0) {}

SignedPartialPerm SignedPartialPerm::identity(int n) {
  check_rank(n);
  SignedPartialPerm p(n);
  for (int j = 1; j <= n; ++j) p.cells_[static_cast<size_t>(j - 1)] = static_cast<int8_t>(j);
  return p;
}

SignedPartialPerm SignedPartialPerm::empty_map(int n) {
  check_rank(n);
  return SignedPartialPerm(n);
}

SignedPartialPerm SignedPartialPerm::from_entries(
    int n, const std::vector<std::optional<Target>>& rows) {
  check_rank(n);
  if (static_cast<int>(rows.size()) != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " rows, got " +
                                std::to_string(rows.size()));
  }
  SignedPartialPerm p(n);
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  for (int j = 1; j <= n; ++j) {
    const auto& row = rows[static_cast<size_t>(j - 1)];
    if (!row) continue;
    if (row->index < 1 || row->index > n) {
      throw std::invalid_argument("target index out of range at row " + std::to_string(j));
    }
    if (row->sign != 1 && row->sign != -1) {
      throw std::invalid_argument("sign must be +1 or -1 at row " + std::to_string(j));
    }
    if (used[static_cast<size_t>(row->index)]) {
      throw std::invalid_argument("target index " + std::to_string(row->index) +
                                  " used twice");
    }
    used[static_cast<size_t>(row->index)] = true;
    p.cells_[static_cast<size_t>(j - 1)] = static_cast<int8_t>(row->sign * row->index);
  }
  return p;
}

std::optional<Target> SignedPartialPerm::image_of(int j) const {
  if (j < 1 || j > n_) throw std::out_of_range("source index out of range");
  int8_t c = cell(j);
  if (c == 0) return std::nullopt;
  return Target{c > 0 ? c : -c, c > 0 ? 1 : -1};
}

int SignedPartialPerm::domain_size() const {
  int k = 0;
  for (int8_t c : cells_) k += (c != 0);
  return k;
}

std::vector<int> SignedPartialPerm::domain() const {
  std::vector<int> out;
  for (int j = 1; j <= n_; ++j)
    if (defined_at(j)) out.push_back(j);
  return out;
}

std::vector<int> SignedPartialPerm::image_indices() const {
  std::vector<int> out;
  for (int8_t c : cells_)
    if (c != 0) out.push_back(c > 0 ? c : -c);
  std::sort(out.begin(), out.end());
  return out;
}

bool SignedPartialPerm::is_unit() const { return domain_size() == n_; }

bool SignedPartialPerm::is_idempotent() const {
  for (int j = 1; j <= n_; ++j) {
    int8_t c = cell(j);
    if (c != 0 && c != j) return false;
  }
  return true;
}

bool SignedPartialPerm::is_unsigned() const {
  for (int8_t c : cells_)
    if (c < 0) return false;
  return true;
}

SignedPartialPerm compose(const SignedPartialPerm& a, const SignedPartialPerm& b) {
  if (a.n_ != b.n_) throw RankMismatchError(a.n_, b.n_);
  SignedPartialPerm out(a.n_);
  for (int j = 1; j <= a.n_; ++j) {
    int8_t c = a.cell(j);
    if (c == 0) continue;
    int t = c > 0 ? c : -c;
    int8_t d = b.cell(t);
    if (d == 0) continue;
    out.cells_[static_cast<size_t>(j - 1)] = static_cast<int8_t>(c > 0 ? d : -d);
  }
  return out;
}

SignedPartialPerm inverse_of(const SignedPartialPerm& a) {
  SignedPartialPerm out(a.n_);
  for (int j = 1; j <= a.n_; ++j) {
    int8_t c = a.cell(j);
    if (c == 0) continue;
    int t = c > 0 ? c : -c;
    out.cells_[static_cast<size_t>(t - 1)] = static_cast<int8_t>(c > 0 ? j : -j);
  }
  return out;
}

Decomposition factorise(const SignedPartialPerm& a) {
  const int n = a.rank();
  std::vector<std::optional<Target>> idem(static_cast<size_t>(n));
  std::vector<std::optional<Target>> unit(static_cast<size_t>(n));
  std::vector<bool> target_used(static_cast<size_t>(n) + 1, false);
  for (int j = 1; j <= n; ++j) {
    if (auto t = a.image_of(j)) {
      idem[static_cast<size_t>(j - 1)] = Target{j, 1};
      unit[static_cast<size_t>(j - 1)] = *t;
      target_used[static_cast<size_t>(t->index)] = true;
    }
  }
  int next_free = 1;
  for (int j = 1; j <= n; ++j) {
    if (unit[static_cast<size_t>(j - 1)]) continue;
    while (target_used[static_cast<size_t>(next_free)]) ++next_free;
    unit[static_cast<size_t>(j - 1)] = Target{next_free, 1};
    target_used[static_cast<size_t>(next_free)] = true;
  }
  return Decomposition{SignedPartialPerm::from_entries(n, idem),
                       SignedPartialPerm::from_entries(n, unit)};
}

std::string to_text(const SignedPartialPerm& a) {
  std::ostringstream os;
  os << '[';
  for (int j = 1; j <= a.rank(); ++j) {
    if (j > 1) os << ", ";
    os << j << "->";
    if (auto t = a.image_of(j)) {
      os << (t->sign > 0 ? '+' : '-') << t->index;
    } else {
      os << '.';
    }
  }
  os << ']';
  return os.str();
}

SignedPartialPerm parse_element(std::string_view text) {
  auto fail = [&](const std::string& why) -> void {
    throw ParseError("bad element literal: " + why);
  };
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '[') fail("expected '['");
  ++pos;
  std::vector<std::optional<Target>> rows;
  skip_ws();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      skip_ws();
      size_t num_start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (num_start == pos) fail("expected source index");
      int src = std::stoi(std::string(text.substr(num_start, pos - num_start)));
      if (src != static_cast<int>(rows.size()) + 1) fail("source indices must be 1,2,...");
      if (text.substr(pos, 2) != "->") fail("expected '->'");
      pos += 2;
      if (pos < text.size() && text[pos] == '.') {
        rows.emplace_back(std::nullopt);
        ++pos;
      } else {
        if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-'))
          fail("expected '+', '-' or '.'");
        int sign = text[pos] == '+' ? 1 : -1;
        ++pos;
        size_t t_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (t_start == pos) fail("expected target index");
        int tgt = std::stoi(std::string(text.substr(t_start, pos - t_start)));
        rows.emplace_back(Target{tgt, sign});
      }
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      fail("expected ',' or ']'");
    }
  }
  skip_ws();
  if (pos != text.size()) fail("trailing characters");
  try {
    return SignedPartialPerm::from_entries(static_cast<int>(rows.size()), rows);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad element literal: ") + e.what());
  }
}

nlohmann::ordered_json to_json(const SignedPartialPerm& a) {
  nlohmann::ordered_json j;
  j["n"] = a.rank();
  auto rows = nlohmann::ordered_json::array();
  for (int i = 1; i <= a.rank(); ++i) {
    if (auto t = a.image_of(i)) {
      rows.push_back({t->index, t->sign});
    } else {
      rows.push_back(nullptr);
    }
  }
  j["map"] = rows;
  return j;
}

SignedPartialPerm element_from_json(const nlohmann::json& j) {
  try {
    int n = j.at("n").get<int>();
    const auto& rows = j.at("map");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
      throw ParseError("bad element JSON: map size does not match n");
    std::vector<std::optional<Target>> entries;
    for (const auto& row : rows) {
      if (row.is_null()) {
        entries.emplace_back(std::nullopt);
      } else {
        if (!row.is_array() || row.size() != 2)
          throw ParseError("bad element JSON: entry must be null or [target, sign]");
        entries.emplace_back(Target{row[0].get<int>(), row[1].get<int>()});
      }
    }
    return SignedPartialPerm::from_entries(n, entries);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad element JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad element JSON: ") + e.what());
  }
}

std::ostream& operator<<(std::ostream& os, const SignedPartialPerm& a) {
  return os << to_text(a);
}

}  // namespace ibb
