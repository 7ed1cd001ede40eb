#pragma once

#include <map>
#include <random>
#include <set>
#include <vector>

#include "ibb/enumeration.hpp"
#include "ibb/free_partial.hpp"
#include "ibb/partial_perm.hpp"
#include "ibb/word.hpp"

namespace ibb::test {

// Independent oracle: the same element spelled out as an explicit partial
// map on the full signed set {-n..-1, 1..n}. Composition is plain map
// chaining, with no shared code with SignedPartialPerm.
struct NaiveMap {
  int n = 0;
  std::map<int, int> pairs;  // key and value nonzero, magnitudes <= n
};

inline NaiveMap naive_from(const SignedPartialPerm& a) {
  NaiveMap m;
  m.n = a.rank();
  for (int j = 1; j <= a.rank(); ++j) {
    if (auto t = a.image_of(j)) {
      m.pairs[j] = t->sign * t->index;
      m.pairs[-j] = -t->sign * t->index;
    }
  }
  return m;
}

inline NaiveMap naive_compose(const NaiveMap& a, const NaiveMap& b) {
  NaiveMap out;
  out.n = a.n;
  for (const auto& [x, y] : a.pairs) {
    auto it = b.pairs.find(y);
    if (it != b.pairs.end()) out.pairs[x] = it->second;
  }
  return out;
}

inline bool operator==(const NaiveMap& a, const NaiveMap& b) {
  return a.n == b.n && a.pairs == b.pairs;
}

inline Word random_word(std::mt19937_64& rng, int rank, int max_len, bool allow_eps,
                        bool allow_tau) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  int len = len_dist(rng);
  std::vector<GeneratorSymbol> letters;
  std::vector<GeneratorSymbol> pool;
  for (int i = 1; i <= rank - 1; ++i) {
    pool.push_back(sigma(i));
    pool.push_back(sigma_inv(i));
  }
  if (allow_tau && rank >= 1) {
    pool.push_back(tau());
    pool.push_back(tau_inv());
  }
  if (allow_eps)
    for (int i = 1; i <= rank; ++i) pool.push_back(eps(i));
  if (pool.empty()) return Word(rank);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < len; ++i) letters.push_back(pool[pick(rng)]);
  return Word(rank, std::move(letters));
}

inline SignedPartialPerm random_unsigned_perm(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<unsigned> mask_dist(0, (1u << n) - 1);
  unsigned mask = mask_dist(rng);
  std::vector<int> targets;
  for (int t = 1; t <= n; ++t) targets.push_back(t);
  std::shuffle(targets.begin(), targets.end(), rng);
  std::vector<std::optional<Target>> rows(static_cast<size_t>(n));
  size_t next = 0;
  for (int j = 1; j <= n; ++j)
    if ((mask >> (j - 1)) & 1u) rows[static_cast<size_t>(j - 1)] = Target{targets[next++], 1};
  return SignedPartialPerm::from_entries(n, rows);
}

inline FreeWord random_conjugator(std::mt19937_64& rng, const std::vector<int>& alphabet,
                                  int max_len) {
  if (alphabet.empty()) return FreeWord{};
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  std::vector<FreeLetter> letters;
  int len = len_dist(rng);
  for (int i = 0; i < len; ++i)
    letters.push_back(FreeLetter{alphabet[pick(rng)], sign_dist(rng) ? 1 : -1});
  return FreeWord(std::move(letters));
}

inline PartialFreeIso random_free_iso(std::mt19937_64& rng, int n, int max_conj_len) {
  SignedPartialPerm perm = random_unsigned_perm(rng, n);
  std::vector<int> alphabet = perm.image_indices();
  std::vector<FreeWord> conj(static_cast<size_t>(n));
  for (int i : perm.domain())
    conj[static_cast<size_t>(i - 1)] = random_conjugator(rng, alphabet, max_conj_len);
  return PartialFreeIso(std::move(perm), std::move(conj));
}

}  // namespace ibb::test
