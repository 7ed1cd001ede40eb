#include <random>

#include "doctest.h"

#include "ibb/abelian.hpp"
#include "ibb/eval.hpp"
#include "ibb/relations.hpp"
#include "test_support.hpp"

using namespace ibb;

TEST_CASE("additive structure with an absorbing eps class") {
  CHECK(ab_add(AbelianImage::free(0, 0), AbelianImage::free(1, 2)) ==
        AbelianImage::free(1, 2));
  CHECK(ab_add(AbelianImage::absorbed(), AbelianImage::free(5, -3)) ==
        AbelianImage::absorbed());
  CHECK(ab_add(AbelianImage::absorbed(), AbelianImage::absorbed()) ==
        AbelianImage::absorbed());
  CHECK(ab_add(AbelianImage::free(2, -1), AbelianImage::free(-2, 1)) ==
        AbelianImage::free(0, 0));
}

TEST_CASE("abelianize counts tau and sigma degrees, eps absorbs") {
  CHECK(abelianize(Word(3)) == AbelianImage::free(0, 0));
  CHECK(abelianize(parse_word("e2 t", 3)) == AbelianImage::absorbed());
  CHECK(abelianize(parse_word("t s1 S2", 3)) == AbelianImage::free(1, 0));
  CHECK(abelianize(parse_word("T T s1 s2", 3)) == AbelianImage::free(-2, 2));
  // rank 1: no sigma letters exist, the sigma degree stays 0
  CHECK(abelianize(parse_word("t t t", 1)) == AbelianImage::free(3, 0));
}

TEST_CASE("mod-2 reduction") {
  CHECK(to_mod2(AbelianImage::free(3, 2)) == AbelianImageMod2{false, 1, 0});
  CHECK(to_mod2(AbelianImage::free(-3, -4)) == AbelianImageMod2{false, 1, 0});
  CHECK(to_mod2(AbelianImage::absorbed()) == AbelianImageMod2{true, 0, 0});

  Word tt = parse_word("t t", 2);
  CHECK(abelianize(tt) == AbelianImage::free(2, 0));
  CHECK(to_mod2(abelianize(tt)) == AbelianImageMod2{false, 0, 0});
  CHECK(eval_word(tt, EvalContext{2, true}) == SignedPartialPerm::identity(2));
}

TEST_CASE("string forms") {
  CHECK(to_string(AbelianImage::absorbed()) == "eps");
  CHECK(to_string(AbelianImage::free(1, 0)) == "(1, 0)");
  CHECK(to_string(to_mod2(AbelianImage::free(3, -2))) == "(1, 0)");
}

TEST_CASE("abelianize is multiplicative on random splits") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    Word u = test::random_word(rng, n, 8, true, true);
    Word v = test::random_word(rng, n, 8, true, true);
    CHECK(abelianize(u * v) == ab_add(abelianize(u), abelianize(v)));
  }
}

TEST_CASE("abelianize is constant on both sides of every IBB relation") {
  for (int n = 1; n <= 4; ++n) {
    auto table = relations_for(PresentationId::IBB, n);
    for (const auto& [lhs, rhs] : table.pairs)
      CHECK(abelianize(lhs) == abelianize(rhs));
  }
}

TEST_CASE("mod-2 image is invariant under tau^2 and sigma_i^2 insertions") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    Word w = test::random_word(rng, n, 8, true, true);
    std::vector<GeneratorSymbol> letters = w.letters();
    size_t pos = letters.empty() ? 0 : rng() % (letters.size() + 1);
    GeneratorSymbol square = (rng() % 2) ? tau() : sigma(1 + static_cast<int>(rng() % (n - 1)));
    letters.insert(letters.begin() + static_cast<long>(pos), 2, square);
    Word inserted(n, letters);
    CHECK(to_mod2(abelianize(inserted)) == to_mod2(abelianize(w)));
  }
}
