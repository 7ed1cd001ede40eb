#include <algorithm>
#include <set>

#include "doctest.h"

#include "ibb/counting.hpp"
#include "ibb/enumeration.hpp"
#include "ibb/errors.hpp"
#include "ibb/partial_perm.hpp"
#include "test_support.hpp"

using namespace ibb;

namespace {

SignedPartialPerm make(int n, std::vector<std::optional<Target>> rows) {
  return SignedPartialPerm::from_entries(n, rows);
}

}  // namespace

TEST_CASE("composition follows the left-to-right convention") {
  auto a = make(2, {Target{2, 1}, Target{1, 1}});
  auto b = make(2, {Target{1, -1}, Target{2, 1}});
  CHECK(compose(a, b) == make(2, {Target{2, 1}, Target{1, -1}}));

  auto eps_image = make(2, {std::nullopt, Target{2, 1}});
  auto tau_image = make(2, {Target{1, -1}, Target{2, 1}});
  CHECK(compose(eps_image, tau_image) == eps_image);
  CHECK(compose(tau_image, eps_image) == eps_image);
}

TEST_CASE("identity is neutral for every element of I(B_2)") {
  auto id = SignedPartialPerm::identity(2);
  for (const auto& x : all_elements(2, true)) {
    CHECK(compose(id, x) == x);
    CHECK(compose(x, id) == x);
  }
}

TEST_CASE("composition matches the brute-force signed-set oracle on I(B_2)") {
  auto elems = all_elements(2, true);
  REQUIRE(elems.size() == 17);
  for (const auto& a : elems)
    for (const auto& b : elems)
      CHECK(test::naive_from(compose(a, b)) ==
            test::naive_compose(test::naive_from(a), test::naive_from(b)));
}

TEST_CASE("composition refuses mismatched ranks") {
  CHECK_THROWS_AS(compose(SignedPartialPerm::identity(2), SignedPartialPerm::identity(3)),
                  RankMismatchError);
}

TEST_CASE("inverse_of reverses arrows and keeps signs") {
  auto a = make(2, {Target{2, -1}, std::nullopt});
  CHECK(inverse_of(a) == make(2, {std::nullopt, Target{1, -1}}));

  for (const auto& x : all_elements(2, true)) {
    auto y = inverse_of(x);
    CHECK(compose(compose(x, y), x) == x);
    CHECK(compose(compose(y, x), y) == y);
    if (x.is_idempotent()) CHECK(y == x);
    if (x.is_unit()) {
      CHECK(compose(x, y) == SignedPartialPerm::identity(2));
      CHECK(compose(y, x) == SignedPartialPerm::identity(2));
    }
  }
}

TEST_CASE("the inverse is unique (exhaustive scan at small rank)") {
  for (int n = 0; n <= 2; ++n) {
    auto elems = all_elements(n, true);
    for (const auto& a : elems) {
      int found = 0;
      for (const auto& b : elems) {
        if (compose(compose(a, b), a) == a && compose(compose(b, a), b) == b) {
          ++found;
          CHECK(b == inverse_of(a));
        }
      }
      CHECK(found == 1);
    }
  }
}

TEST_CASE("factorise splits into partial identity times unit") {
  auto id = SignedPartialPerm::identity(3);
  auto d0 = factorise(id);
  CHECK(d0.idem == id);
  CHECK(d0.unit == id);

  auto e = make(3, {std::nullopt, Target{2, 1}, Target{3, 1}});
  auto d1 = factorise(e);
  CHECK(d1.idem == e);
  CHECK(d1.unit == id);

  auto a = make(2, {Target{2, -1}, std::nullopt});
  auto d2 = factorise(a);
  CHECK(d2.idem == make(2, {Target{1, 1}, std::nullopt}));
  CHECK(d2.unit == make(2, {Target{2, -1}, Target{1, 1}}));
  CHECK(compose(d2.idem, d2.unit) == a);
}

TEST_CASE("factorise round-trips over all elements up to rank 4") {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& a : all_elements(n, true)) {
      auto [e, g] = factorise(a);
      CHECK(e.is_idempotent());
      CHECK(g.is_unit());
      CHECK(e.domain() == a.domain());
      CHECK(compose(e, g) == a);
    }
  }
}

TEST_CASE("enumeration at rank 1 lists empty map, identity, negation") {
  auto elems = all_elements(1, true);
  REQUIRE(elems.size() == 3);
  CHECK(elems[0] == SignedPartialPerm::empty_map(1));
  CHECK(elems[1] == SignedPartialPerm::identity(1));
  CHECK(elems[2] == make(1, {Target{1, -1}}));
}

TEST_CASE("enumeration is duplicate-free and matches the counting formula") {
  for (int n = 0; n <= 4; ++n) {
    auto elems = all_elements(n, true);
    std::set<SignedPartialPerm> distinct(elems.begin(), elems.end());
    CHECK(distinct.size() == elems.size());
    CHECK(cardinality_formula(n, true) == BigInt(elems.size()));
  }
  for (int n = 0; n <= 5; ++n) {
    auto elems = all_elements(n, false);
    std::set<SignedPartialPerm> distinct(elems.begin(), elems.end());
    CHECK(distinct.size() == elems.size());
    CHECK(cardinality_formula(n, false) == BigInt(elems.size()));
    for (const auto& e : elems) CHECK(e.is_unsigned());
  }
}

TEST_CASE("unit counts match the Weyl group orders") {
  for (int n = 0; n <= 4; ++n) {
    size_t units = 0;
    for (const auto& e : all_elements(n, true)) units += e.is_unit();
    CHECK(unit_group_order(n, true) == BigInt(units));
  }
  size_t units3 = 0;
  for (const auto& e : all_elements(3, false)) units3 += e.is_unit();
  CHECK(units3 == 6);
  CHECK(unit_group_order(3, false) == 6);
}

TEST_CASE("counting formula values") {
  CHECK(cardinality_formula(0, true) == 1);
  CHECK(cardinality_formula(2, true) == 17);
  CHECK(cardinality_formula(2, false) == 7);
  CHECK(unit_group_order(0, true) == 1);
  CHECK(unit_group_order(2, true) == 8);
  // Large ranks must stay exact, well past 64-bit range.
  CHECK(unit_group_order(64, true) > BigInt(1) << 300);
}

TEST_CASE("enumeration refuses ranks above the caps") {
  CHECK_THROWS_AS(ElementStream(kSignedEnumCap + 1, true), CapExceededError);
  CHECK_THROWS_AS(all_elements(kUnsignedEnumCap + 1, false), CapExceededError);
  CHECK_NOTHROW(ElementStream(kSignedEnumCap + 1, true, kSignedEnumCap + 1));
}

TEST_CASE("idempotents are the partial identities and commute pairwise") {
  for (int n = 0; n <= 4; ++n) {
    std::vector<SignedPartialPerm> idems;
    for (const auto& e : all_elements(n, true))
      if (e.is_idempotent()) idems.push_back(e);
    CHECK(idems.size() == (size_t{1} << n));
    for (const auto& a : idems) {
      CHECK(compose(a, a) == a);
      for (const auto& b : idems) CHECK(compose(a, b) == compose(b, a));
    }
  }
}

TEST_CASE("text form round-trips bit-exactly") {
  CHECK(to_text(make(3, {Target{2, 1}, Target{1, -1}, std::nullopt})) ==
        "[1->+2, 2->-1, 3->.]");
  CHECK(parse_element("[1->+2, 2->-1, 3->.]") ==
        make(3, {Target{2, 1}, Target{1, -1}, std::nullopt}));
  CHECK(to_text(SignedPartialPerm::identity(0)) == "[]");
  CHECK(parse_element("[]") == SignedPartialPerm::identity(0));
  for (const auto& e : all_elements(2, true)) {
    CHECK(parse_element(to_text(e)) == e);
  }
  CHECK_THROWS_AS(parse_element("[2->+1]"), ParseError);
  CHECK_THROWS_AS(parse_element("[1->+1, 2->+1]"), ParseError);
  CHECK_THROWS_AS(parse_element("1->+1"), ParseError);
  CHECK_THROWS_AS(parse_element("[1->5]"), ParseError);
}

TEST_CASE("JSON form round-trips bit-exactly") {
  auto a = make(3, {Target{2, 1}, Target{1, -1}, std::nullopt});
  CHECK(to_json(a).dump() == R"({"n":3,"map":[[2,1],[1,-1],null]})");
  CHECK(element_from_json(nlohmann::json::parse(R"({"n":3,"map":[[2,1],[1,-1],null]})")) == a);
  for (const auto& e : all_elements(2, true)) {
    CHECK(element_from_json(nlohmann::json::parse(to_json(e).dump())) == e);
  }
  CHECK_THROWS_AS(element_from_json(nlohmann::json::parse(R"({"n":2,"map":[null]})")),
                  ParseError);
}

TEST_CASE("structural predicates") {
  auto neg = make(2, {Target{1, -1}, Target{2, 1}});
  CHECK(neg.is_unit());
  CHECK(!neg.is_unsigned());
  CHECK(!neg.is_idempotent());
  CHECK(SignedPartialPerm::empty_map(2).is_idempotent());
  CHECK(SignedPartialPerm::empty_map(2).is_unsigned());
  CHECK(!SignedPartialPerm::empty_map(2).is_unit());
  CHECK(SignedPartialPerm::identity(0).is_unit());
  CHECK_THROWS_AS(make(2, {Target{1, 1}, Target{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make(2, {Target{3, 1}, std::nullopt}), std::invalid_argument);
}
