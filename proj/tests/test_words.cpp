#include <random>

#include "doctest.h"

#include "ibb/errors.hpp"
#include "ibb/eval.hpp"
#include "ibb/word.hpp"
#include "test_support.hpp"

using namespace ibb;

TEST_CASE("word grammar parses and prints canonically") {
  Word w = parse_word("t s1 e2 S1", 3);
  CHECK(w.letters() == std::vector<GeneratorSymbol>{tau(), sigma(1), eps(2), sigma_inv(1)});
  CHECK(to_string(w) == "t s1 e2 S1");

  CHECK(parse_word("t*s1*e2*S1", 3) == w);
  CHECK(parse_word("e1", 2) == parse_word("e", 2));
  CHECK(to_string(parse_word("e1", 2)) == "e");
  CHECK(parse_word("", 3) == Word(3));
  CHECK(parse_word("1", 3) == Word(3));
  CHECK(to_string(Word(3)) == "1");
  CHECK(parse_word(to_string(Word(3)), 3) == Word(3));

  CHECK_THROWS_AS(parse_word("q", 3), ParseError);
  CHECK_THROWS_AS(parse_word("s", 3), ParseError);
  CHECK_THROWS_AS(parse_word("s3", 3), ParseError);
  CHECK_THROWS_AS(parse_word("e4", 3), ParseError);
  CHECK_THROWS_AS(parse_word("t", 0), ParseError);
}

TEST_CASE("random words round-trip through the grammar") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = test::random_word(rng, 4, 10, true, true);
    CHECK(parse_word(to_string(w), 4) == w);
  }
}

TEST_CASE("letter validation is rank-aware") {
  CHECK_THROWS_AS(Word(2, {sigma(2)}), std::invalid_argument);
  CHECK_THROWS_AS(Word(2, {eps(3)}), std::invalid_argument);
  CHECK_THROWS_AS(Word(0, {tau()}), std::invalid_argument);
  CHECK_NOTHROW(Word(1, {tau(), eps(1)}));
}

TEST_CASE("formal inverse reverses and inverts letters, fixing eps") {
  Word w = parse_word("t s1 e2", 3);
  CHECK(to_string(w.formal_inverse()) == "e2 S1 T");
  CHECK(Word(3).formal_inverse() == Word(3));
}

TEST_CASE("free_reduce cancels adjacent inverse pairs only") {
  CHECK(free_reduce(parse_word("s1 S1", 2)) == Word(2));
  CHECK(free_reduce(parse_word("e2", 2)) == parse_word("e2", 2));
  CHECK(free_reduce(parse_word("t s2 S2 T", 3)) == Word(3));
  // eps blocks cancellation across it
  CHECK(free_reduce(parse_word("s1 e S1", 2)) == parse_word("s1 e S1", 2));
  CHECK(free_reduce(parse_word("s1 s1", 2)) == parse_word("s1 s1", 2));
}

TEST_CASE("free_reduce is idempotent and preserves the evaluated image") {
  std::mt19937_64 rng(11);
  EvalContext ctx4{4, true};
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    Word w = test::random_word(rng, n, 12, true, true);
    Word r = free_reduce(w);
    CHECK(free_reduce(r) == r);
    EvalContext ctx{n, true};
    CHECK(eval_word(r, ctx) == eval_word(w, ctx));
  }
  (void)ctx4;
}

TEST_CASE("concatenation needs equal ranks") {
  CHECK_THROWS_AS(Word(2) * Word(3), RankMismatchError);
  CHECK(to_string(parse_word("t", 2) * parse_word("s1", 2)) == "t s1");
}
